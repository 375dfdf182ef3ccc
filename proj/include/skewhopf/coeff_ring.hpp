#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewhopf/report.hpp"
#include "skewhopf/scalar.hpp"

namespace skewhopf {

using Exps = std::vector<int>;

// Degree-reverse-lexicographic "less than"; ties broken by position.
struct DegRevLexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

struct CoeffRingData {
    Field field;
    std::vector<std::string> gens;
    std::vector<bool> laurent;
    size_t ngens() const { return gens.size(); }
    int index_of(const std::string& g) const;
};
using CoeffRing = std::shared_ptr<const CoeffRingData>;

CoeffRing ring_make(Field field, std::vector<std::string> gens, std::vector<bool> laurent = {});
bool same_ring(const CoeffRing& a, const CoeffRing& b);

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RElem {
public:
    using Terms = std::map<Exps, Scalar, DegRevLexLess>;

    RElem() = default;
    explicit RElem(CoeffRing r) : ring_(std::move(r)) {}
    RElem(CoeffRing r, const Scalar& c);

    static RElem zero(const CoeffRing& r) { return RElem(r); }
    static RElem one(const CoeffRing& r) { return RElem(r, Scalar::one(r->field)); }
    static RElem gen(const CoeffRing& r, int i, int power = 1);
    static RElem monomial(const CoeffRing& r, const Exps& e, const Scalar& c);

    const CoeffRing& ring() const { return ring_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    // single term supported on Laurent positions
    bool is_unit() const;
    RElem unit_inverse() const;
    int total_degree() const;

    void add_term(const Exps& e, const Scalar& c);
    RElem operator-() const;
    RElem& operator+=(const RElem& o);
    RElem& operator-=(const RElem& o);
    friend RElem operator+(RElem a, const RElem& b) { return a += b; }
    friend RElem operator-(RElem a, const RElem& b) { return a -= b; }
    friend RElem operator*(const RElem& a, const RElem& b);
    RElem scaled(const Scalar& c) const;
    RElem pow(int e) const;
    bool operator==(const RElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const RElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    CoeffRing ring_;
    Terms terms_;
};

RElem parse_relem(const CoeffRing& r, const std::string& text, int line = 1);

// Ring endomorphism given by generator images.
struct EndoSpec {
    CoeffRing ring;
    std::vector<RElem> images;
    std::vector<std::optional<RElem>> inverse_images;  // filled at Laurent positions

    static EndoSpec identity(const CoeffRing& r);
    static EndoSpec make(const CoeffRing& r, std::vector<RElem> images);
    bool is_identity() const;
};

// Twisted derivation given by generator images.
struct DerivSpec {
    EndoSpec twist;
    std::vector<RElem> images;

    static DerivSpec zero(const EndoSpec& twist);
    static DerivSpec make(const EndoSpec& twist, std::vector<RElem> images);
    bool is_zero() const;
};

RElem endo_apply(const EndoSpec& s, const RElem& p);
RElem deriv_apply(const DerivSpec& d, const RElem& p);
// Same value computed by right-to-left bracketing.
RElem deriv_apply_right(const DerivSpec& d, const RElem& p);

// Checks sigma(1)=1, the unit condition at Laurent positions, and inverse composition.
Report endo_validate(const EndoSpec& s, const EndoSpec* inverse = nullptr);

// Substitutes generator images into a possibly different commutative ring.
RElem ring_map_apply(const CoeffRing& target, const std::vector<RElem>& images, const RElem& p);

}  // namespace skewhopf
