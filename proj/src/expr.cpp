#include "skewhopf/expr.hpp"

#include <cctype>

namespace skewhopf {

namespace {

struct Parser {
    const std::string& s;
    int line;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, static_cast<int>(i) + 1); }

    static ExprPtr node(Expr::Kind k, ExprPtr a, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->args.push_back(std::move(a));
        if (b) e->args.push_back(std::move(b));
        return e;
    }

    ExprPtr sum() {
        ws();
        ExprPtr acc;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            bool neg = s[i] == '-';
            ++i;
            acc = product();
            if (neg) acc = node(Expr::neg, acc);
        } else {
            acc = product();
        }
        for (;;) {
            ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                char op = s[i++];
                acc = node(op == '+' ? Expr::add : Expr::sub, acc, product());
            } else {
                return acc;
            }
        }
    }
    ExprPtr product() {
        ExprPtr acc = power();
        for (;;) {
            ws();
            if (i < s.size() && (s[i] == '*' || s[i] == '/')) {
                char op = s[i++];
                acc = node(op == '*' ? Expr::mul : Expr::div, acc, power());
            } else {
                return acc;
            }
        }
    }
    ExprPtr power() {
        ExprPtr b = atom();
        ws();
        while (i < s.size() && s[i] == '^') {
            ++i;
            ws();
            bool neg = false;
            if (i < s.size() && s[i] == '(') {
                // allow k^(-1)
                ++i;
                ws();
                if (i < s.size() && s[i] == '-') {
                    neg = true;
                    ++i;
                }
                long e = integer();
                ws();
                if (i >= s.size() || s[i] != ')') fail("expected ')'");
                ++i;
                b = mkpow(b, neg ? -e : e);
            } else {
                if (i < s.size() && s[i] == '-') {
                    neg = true;
                    ++i;
                }
                long e = integer();
                b = mkpow(b, neg ? -e : e);
            }
            ws();
        }
        return b;
    }
    static ExprPtr mkpow(ExprPtr b, long e) {
        auto p = node(Expr::pow, std::move(b));
        p->exponent = e;
        return p;
    }
    long integer() {
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail("expected integer exponent");
        return std::stol(s.substr(st, i - st));
    }
    ExprPtr atom() {
        ws();
        if (i >= s.size()) fail("unexpected end of expression");
        char c = s[i];
        if (c == '(') {
            ++i;
            ExprPtr e = sum();
            ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return e;
        }
        if (c == '-') {
            ++i;
            return node(Expr::neg, atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::num;
            e->value = mpq_class(s.substr(st, i - st));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t st = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::sym;
            e->name = s.substr(st, i - st);
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text, int line) {
    Parser p{text, line};
    ExprPtr e = p.sum();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace skewhopf
