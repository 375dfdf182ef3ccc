#include "skewhopf/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace skewhopf {

namespace qpoly {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
    if (c == 0) return {};
    QPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw FieldError("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    const mpq_class& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        mpq_class c = r.back() / lb;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    mpq_class inv = 1 / a.back();
    return scale(a, inv);
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 = s0 * a (mod m)
    if (r0.empty()) throw FieldError("inverse of zero");
    return scale(s0, 1 / r0.back());
}

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = deg(p); i >= 0; --i) {
        const mpq_class& c = p[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace qpoly

std::string FieldData::name() const {
    switch (kind) {
        case FieldKind::rationals: return "Q";
        case FieldKind::cyclotomic: return "cyclotomic(" + std::to_string(n) + ")";
        case FieldKind::rational_functions: return "Q(" + var + ")";
    }
    return "?";
}

QPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw FieldError("cyclotomic order must be positive");
    QPoly p(n + 1, mpq_class(0));
    p[n] = 1;
    p[0] = -1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        QPoly q, r;
        qpoly::divmod(p, cyclotomic_polynomial(d), q, r);
        p = q;
    }
    return p;
}

namespace {
std::mutex registry_mutex;
std::map<int, std::unique_ptr<FieldData>>& cyclo_registry() {
    static std::map<int, std::unique_ptr<FieldData>> m;
    return m;
}
std::map<std::string, std::unique_ptr<FieldData>>& ratfun_registry() {
    static std::map<std::string, std::unique_ptr<FieldData>> m;
    return m;
}
}  // namespace

Field rationals() {
    static FieldData q;
    return &q;
}

Field cyclotomic(int n) {
    if (n < 1) throw FieldError("cyclotomic(0) is not a field");
    std::lock_guard<std::mutex> lk(registry_mutex);
    auto& reg = cyclo_registry();
    auto it = reg.find(n);
    if (it != reg.end()) return it->second.get();
    auto fd = std::make_unique<FieldData>();
    fd->kind = FieldKind::cyclotomic;
    fd->n = n;
    fd->var = "z";
    fd->modulus = cyclotomic_polynomial(n);
    Field f = fd.get();
    reg.emplace(n, std::move(fd));
    return f;
}

Field rational_functions(const std::string& var) {
    if (var.empty()) throw FieldError("rational function field needs a variable name");
    std::lock_guard<std::mutex> lk(registry_mutex);
    auto& reg = ratfun_registry();
    auto it = reg.find(var);
    if (it != reg.end()) return it->second.get();
    auto fd = std::make_unique<FieldData>();
    fd->kind = FieldKind::rational_functions;
    fd->var = var;
    Field f = fd.get();
    reg.emplace(var, std::move(fd));
    return f;
}

Scalar::Scalar() : f_(rationals()), q_(0) {}
Scalar::Scalar(long v) : f_(rationals()), q_(v) {}
Scalar::Scalar(const mpq_class& v) : f_(rationals()), q_(v) { q_.canonicalize(); }

Scalar::Scalar(Field f, const mpq_class& v) : f_(rationals()), q_(v) {
    q_.canonicalize();
    if (f != rationals()) lift(f);
}

Scalar::Scalar(Field f, QPoly num, QPoly den) : f_(f), num_(std::move(num)), den_(std::move(den)) {
    for (auto& c : num_) c.canonicalize();
    for (auto& c : den_) c.canonicalize();
    if (f == rationals()) {
        qpoly::trim(num_);
        qpoly::trim(den_);
        if (num_.size() > 1 || den_.size() > 1) throw FieldError("non-constant polynomial in Q");
        q_ = num_.empty() ? mpq_class(0) : num_[0];
        if (!den_.empty()) q_ /= den_[0];
        num_.clear();
        den_.clear();
        return;
    }
    if (f->kind == FieldKind::rational_functions && den_.empty()) den_ = {mpq_class(1)};
    normalize();
}

Scalar Scalar::generator(Field f) {
    if (f->kind == FieldKind::rationals) throw FieldError("Q has no generator");
    return Scalar(f, QPoly{0, 1});
}

void Scalar::lift(Field f) {
    if (f_ == f) return;
    if (f_ != rationals()) throw FieldError("field mismatch: " + f_->name() + " vs " + f->name());
    f_ = f;
    num_.clear();
    den_.clear();
    if (q_ != 0) num_.push_back(q_);
    if (f->kind == FieldKind::rational_functions) den_ = {mpq_class(1)};
    q_ = 0;
}

void Scalar::normalize() {
    if (f_->kind == FieldKind::rationals) return;
    qpoly::trim(num_);
    if (f_->kind == FieldKind::cyclotomic) {
        den_.clear();
        if (qpoly::deg(num_) >= qpoly::deg(f_->modulus)) {
            QPoly q, r;
            qpoly::divmod(num_, f_->modulus, q, r);
            num_ = std::move(r);
        }
        return;
    }
    qpoly::trim(den_);
    if (den_.empty()) {
        if (num_.empty()) {
            den_ = {mpq_class(1)};
            return;
        }
        throw FieldError("zero denominator");
    }
    if (num_.empty()) {
        den_ = {mpq_class(1)};
        return;
    }
    if (den_.size() > 1) {
        QPoly g = qpoly::gcd(num_, den_);
        if (g.size() > 1) {
            QPoly q, r;
            qpoly::divmod(num_, g, q, r);
            num_ = std::move(q);
            qpoly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    mpq_class lc = den_.back();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        for (auto& c : num_) c *= inv;
        for (auto& c : den_) c *= inv;
    }
}

Field Scalar::common(const Scalar& a, const Scalar& b) {
    if (a.f_ == b.f_) return a.f_;
    if (a.f_ == rationals()) return b.f_;
    if (b.f_ == rationals()) return a.f_;
    throw FieldError("field mismatch: " + a.f_->name() + " vs " + b.f_->name());
}

bool Scalar::is_zero() const {
    if (f_ == rationals()) return q_ == 0;
    return num_.empty();
}

bool Scalar::is_rational() const {
    if (f_ == rationals()) return true;
    if (num_.size() > 1) return false;
    return den_.size() <= 1;
}

bool Scalar::is_one() const {
    if (f_ == rationals()) return q_ == 1;
    return num_.size() == 1 && num_[0] == 1 && den_.size() <= 1;
}

Scalar Scalar::in(Field f) const {
    Scalar r(*this);
    r.lift(f);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (f_ == rationals()) {
        r.q_ = -q_;
    } else {
        for (auto& c : r.num_) c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Field f = common(*this, o);
    if (f == rationals()) {
        q_ += o.q_;
        return *this;
    }
    lift(f);
    Scalar b = o.in(f);
    if (f->kind == FieldKind::cyclotomic) {
        num_ = qpoly::add(num_, b.num_);
        return *this;
    }
    if (den_ == b.den_) {
        num_ = qpoly::add(num_, b.num_);
    } else {
        num_ = qpoly::add(qpoly::mul(num_, b.den_), qpoly::mul(b.num_, den_));
        den_ = qpoly::mul(den_, b.den_);
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Field f = common(*this, o);
    if (f == rationals()) {
        q_ *= o.q_;
        return *this;
    }
    if (o.f_ == rationals()) {
        lift(f);
        num_ = qpoly::scale(num_, o.q_);
        if (f->kind == FieldKind::rational_functions && num_.empty()) den_ = {mpq_class(1)};
        return *this;
    }
    lift(f);
    num_ = qpoly::mul(num_, o.num_);
    if (f->kind == FieldKind::rational_functions) den_ = qpoly::mul(den_, o.den_);
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (f_ == rationals()) return Scalar(mpq_class(1 / q_));
    if (f_->kind == FieldKind::cyclotomic) return Scalar(f_, qpoly::inverse_mod(num_, f_->modulus));
    return Scalar(f_, den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (f_ == o.f_) {
        if (f_ == rationals()) return q_ == o.q_;
        return num_ == o.num_ && den_ == o.den_;
    }
    Field f = common(*this, o);
    return in(f) == o.in(f);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(f_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string Scalar::str() const {
    if (f_ == rationals()) return q_.get_str();
    if (f_->kind == FieldKind::cyclotomic) return qpoly::to_string(num_, f_->var);
    std::string n = qpoly::to_string(num_, f_->var);
    if (den_.size() == 1 && den_[0] == 1) return n;
    std::string d = qpoly::to_string(den_, f_->var);
    auto terms = [](const QPoly& p) {
        int c = 0;
        for (const auto& x : p) c += x != 0;
        return c;
    };
    if (terms(num_) > 1) n = "(" + n + ")";
    if (terms(den_) > 1 || (den_.size() > 1 && den_.back() != 1)) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar root_of_unity(Field f, int n) {
    if (n < 1) throw FieldError("root order must be positive");
    if (f->kind == FieldKind::rationals) {
        if (n == 1) return Scalar(1);
        if (n == 2) return Scalar(-1);
        throw FieldError("Q has no primitive " + std::to_string(n) + "-th root of unity");
    }
    if (f->kind != FieldKind::cyclotomic) throw FieldError("roots of unity need a cyclotomic field");
    if (f->n % n) throw FieldError(std::to_string(n) + " does not divide " + std::to_string(f->n));
    return Scalar::generator(f).pow(f->n / n);
}

namespace {

// Recursive-descent parser for scalar expressions in a single field.
struct ScalarParser {
    Field f;
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw FieldError("scalar parse error at column " + std::to_string(i + 1) + ": " + msg + " in '" + s + "'");
    }
    Scalar expr() {
        ws();
        Scalar acc;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                char op = s[i++];
                Scalar t = term();
                if (op == '+') acc += t; else acc -= t;
            } else {
                return acc;
            }
        }
    }
    Scalar term() {
        Scalar acc = power();
        for (;;) {
            ws();
            if (i < s.size() && (s[i] == '*' || s[i] == '/')) {
                char op = s[i++];
                Scalar t = power();
                if (op == '*') acc *= t; else acc /= t;
            } else {
                return acc;
            }
        }
    }
    Scalar power() {
        Scalar b = atom();
        ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            ws();
            bool neg = false;
            if (i < s.size() && s[i] == '-') {
                neg = true;
                ++i;
            }
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (st == i) fail("expected exponent");
            long e = std::stol(s.substr(st, i - st));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    Scalar atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            Scalar v = expr();
            ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return v;
        }
        if (s[i] == '-') {
            ++i;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return Scalar(f, mpq_class(s.substr(st, i - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            size_t st = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string id = s.substr(st, i - st);
            if (f->kind != FieldKind::rationals && id == f->var) return Scalar::generator(f);
            fail("unknown symbol '" + id + "'");
        }
        fail(std::string("unexpected character '") + s[i] + "'");
    }
};

}  // namespace

Scalar parse_scalar(Field f, const std::string& s) {
    ScalarParser p{f, s};
    Scalar v = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return v.in(f);
}

Field parse_field(const std::string& s) {
    if (s == "Q" || s == "rationals") return rationals();
    if (s.rfind("cyclotomic(", 0) == 0 && s.back() == ')') {
        return cyclotomic(std::stoi(s.substr(11, s.size() - 12)));
    }
    if (s.rfind("Q(", 0) == 0 && s.back() == ')') return rational_functions(s.substr(2, s.size() - 3));
    throw FieldError("unknown field '" + s + "'");
}

}  // namespace skewhopf
