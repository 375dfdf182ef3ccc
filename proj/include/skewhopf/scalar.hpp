#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewhopf {

// Dense univariate polynomial over Q, low degree first, no trailing zeros.
using QPoly = std::vector<mpq_class>;

namespace qpoly {
void trim(QPoly& p);
int deg(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly gcd(QPoly a, QPoly b);  // monic
QPoly monic(const QPoly& a);
// s with s*a = g (mod m), g = gcd(a, m)
QPoly inverse_mod(const QPoly& a, const QPoly& m);
std::string to_string(const QPoly& p, const std::string& var);
}  // namespace qpoly

enum class FieldKind { rationals, cyclotomic, rational_functions };

struct FieldData {
    FieldKind kind = FieldKind::rationals;
    int n = 1;            // cyclotomic order
    std::string var;      // "z" for cyclotomic, declared name for Q(var)
    QPoly modulus;        // Phi_n for cyclotomic
    std::string name() const;
};

using Field = const FieldData*;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Field rationals();
Field cyclotomic(int n);
Field rational_functions(const std::string& var);

// Returns Phi_n by dividing z^n - 1 by Phi_d for proper divisors d.
QPoly cyclotomic_polynomial(int n);

class Scalar {
public:
    Scalar();
    Scalar(long v);  // NOLINT: rational constants embed in every field
    Scalar(const mpq_class& v);  // NOLINT
    Scalar(Field f, const mpq_class& v);
    Scalar(Field f, QPoly num, QPoly den = {});

    static Scalar zero(Field f) { return Scalar(f, mpq_class(0)); }
    static Scalar one(Field f) { return Scalar(f, mpq_class(1)); }
    // z in Q(zeta_n) or the variable in Q(q)
    static Scalar generator(Field f);

    Field field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // value lies in Q
    const mpq_class& rational() const { return q_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar in(Field f) const;  // embed a rational constant into f
    void normalize();

    std::string str() const;

private:
    Field f_;
    mpq_class q_;  // used when the field is Q
    QPoly num_, den_;

    static Field common(const Scalar& a, const Scalar& b);
    void lift(Field f);
};

Scalar root_of_unity(Field f, int n);
Scalar parse_scalar(Field f, const std::string& s);
// Field names: "Q", "cyclotomic(n)", "Q(q)".
Field parse_field(const std::string& s);

}  // namespace skewhopf
