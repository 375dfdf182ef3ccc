#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewhopf {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

// Arithmetic expression tree over rational numbers and identifiers.
struct Expr {
    enum Kind { num, sym, add, sub, mul, div, pow, neg } kind = num;
    mpq_class value;
    std::string name;
    long exponent = 0;
    std::vector<std::shared_ptr<Expr>> args;
};
using ExprPtr = std::shared_ptr<Expr>;

// Grammar: sum of products; '^' binds an integer (possibly negative) exponent.
ExprPtr parse_expr(const std::string& text, int line = 1);

// Folds the tree with user-supplied semantics.
template <class T, class Ops>
T eval_expr(const Expr& e, Ops& ops) {
    switch (e.kind) {
        case Expr::num: return ops.number(e.value);
        case Expr::sym: return ops.symbol(e.name);
        case Expr::add: return ops.add(eval_expr<T>(*e.args[0], ops), eval_expr<T>(*e.args[1], ops));
        case Expr::sub: return ops.sub(eval_expr<T>(*e.args[0], ops), eval_expr<T>(*e.args[1], ops));
        case Expr::mul: return ops.mul(eval_expr<T>(*e.args[0], ops), eval_expr<T>(*e.args[1], ops));
        case Expr::div: return ops.div(eval_expr<T>(*e.args[0], ops), eval_expr<T>(*e.args[1], ops));
        case Expr::pow: return ops.pow(eval_expr<T>(*e.args[0], ops), e.exponent);
        case Expr::neg: return ops.neg(eval_expr<T>(*e.args[0], ops));
    }
    throw std::logic_error("bad expression node");
}

}  // namespace skewhopf
