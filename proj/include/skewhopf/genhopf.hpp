#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewhopf/lie.hpp"
#include "skewhopf/report.hpp"
#include "skewhopf/skew_pbw.hpp"

namespace skewhopf {

// Basis element r * x^a of a presentation: (ring exponents, variable exponents).
using PKey = std::pair<Exps, Exps>;
using PTerms = std::vector<std::pair<PKey, Scalar>>;

// A presentation viewed through its standard-monomial basis, with a memoized product.
class PresAlgebra {
public:
    explicit PresAlgebra(Presentation p);

    const Presentation& pres() const { return p_; }
    Field field() const { return p_->ring->field; }
    const std::string& name() const { return p_->name; }

    PKey one() const;
    PKey var_key(int i) const;
    PKey ring_key(int t, int e) const;
    PTerms expand(const SkewPoly& v) const;
    SkewPoly poly(const PKey& k) const;
    const PTerms& product(const PKey& a, const PKey& b) const;
    int degree(const PKey& k) const;
    // every basis key of degree at most d, by degree
    std::vector<PKey> monomials(int d) const;
    std::string key_str(const PKey& k) const;

private:
    Presentation p_;
    mutable std::map<std::pair<PKey, PKey>, PTerms> cache_;
};
using PresAlgebraPtr = std::shared_ptr<const PresAlgebra>;

PresAlgebraPtr pres_algebra(Presentation p);

struct Factor {
    PresAlgebraPtr alg;
    bool op = false;
};
using Factors = std::vector<Factor>;

// Element of a tensor product of presentations; zero factors means the ground field.
class TElem {
public:
    using Terms = std::map<std::vector<PKey>, Scalar>;

    const Terms& terms() const& { return t_; }
    Terms terms() && { return std::move(t_); }
    bool is_zero() const { return t_.empty(); }
    void add(const std::vector<PKey>& k, const Scalar& c);
    TElem& operator+=(const TElem& o);
    TElem& operator-=(const TElem& o);
    friend TElem operator+(TElem a, const TElem& b) { return a += b; }
    friend TElem operator-(TElem a, const TElem& b) { return a -= b; }
    TElem scaled(const Scalar& c) const;
    bool operator==(const TElem& o) const { return t_ == o.t_; }
    bool operator!=(const TElem& o) const { return !(*this == o); }

private:
    Terms t_;
};

TElem tunit(const Factors& fs);
TElem tscalar(const Factors& fs, const Scalar& c);
TElem tpure(const std::vector<PTerms>& parts);
TElem tmul(const Factors& fs, const TElem& a, const TElem& b);
std::string tstr(const Factors& fs, const TElem& v);
// "a @ b + c @ d"; each side is an expression in its factor's presentation
TElem parse_telem(const Factors& fs, Field f, const std::string& text);

// Algebra map given by generator images, extended multiplicatively in the order r x_1^a_1 ... x_n^a_n.
// Anti-maps are algebra maps into an opposite factor.
class GenMap {
public:
    GenMap() = default;
    GenMap(std::string name, PresAlgebraPtr src, Factors target, std::vector<TElem> var_images,
           std::vector<TElem> ring_images, std::vector<std::optional<TElem>> ring_inverse_images = {});

    const std::string& name() const { return name_; }
    const PresAlgebraPtr& src() const { return src_; }
    const Factors& target() const { return target_; }
    const TElem& var_image(int i) const { return vars_[i]; }
    const TElem& ring_image(int t) const { return ring_[t]; }
    TElem apply_key(const PKey& k) const;
    TElem apply(const PTerms& v) const;

private:
    std::string name_;
    PresAlgebraPtr src_;
    Factors target_;
    std::vector<TElem> vars_, ring_, ring_inv_;
    mutable std::map<PKey, TElem> memo_;
};

// images keyed by generator name; a Laurent t^-1 image is derived from a single-term image when absent
GenMap genmap_parse(const std::string& name, PresAlgebraPtr src, Factors target,
                    const std::map<std::string, std::string>& images);

// f applied to factor pos of v; the factor is replaced by f's target factors
TElem apply_on_factor(const TElem& v, size_t pos, const GenMap& f);
Factors splice(const Factors& fs, size_t pos, const Factors& with);
// multiplies factors pos and pos+1, which must share an algebra
TElem mul_adjacent(const Factors& fs, const TElem& v, size_t pos);
// all tensor basis words whose degrees sum to at most d
std::vector<std::vector<PKey>> tensor_monomials(const Factors& fs, int d);
int tensor_degree(const Factors& fs, const std::vector<PKey>& k);

// relations, then F(m1 m2) = F(m1) F(m2) for deg m1 + deg m2 <= d
Report check_generator_map(const GenMap& f, int d);

struct GenHopfSpec {
    std::string name;
    PresAlgebraPtr alg;
    GenMap delta;  // A -> A x A
    GenMap eps;    // A -> k
    GenMap S;      // A -> A^op
};

GenHopfSpec genhopf_make(const std::string& name, Presentation p, const std::map<std::string, std::string>& delta,
                         const std::map<std::string, std::string>& eps,
                         const std::map<std::string, std::string>& antipode);
// Generator-level: relation compatibility plus coalgebra and antipode identities up to degree d.
Report check_hopf_on_generators(const GenHopfSpec& H, int d);

// every variable primitive, S(x) = -x
GenHopfSpec enveloping_hopf(Presentation p);
// u_sl2, uq_sl2, sridharan with f = 0, sridharan_table1 rows with f = 0
GenHopfSpec catalog_hopf(const std::string& name, const std::map<std::string, std::string>& params = {});

}  // namespace skewhopf
