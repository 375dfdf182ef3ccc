#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "skewhopf/coeff_ring.hpp"
#include "skewhopf/report.hpp"

namespace skewhopf {

class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// x_j x_i -> lead * x_i x_j + sum_k linear[k] x_k + constant, for j > i
struct PairRelation {
    RElem lead;
    std::vector<RElem> linear;
    RElem constant;
};

struct PresentationFlags {
    bool quasi_commutative = false;
    bool bijective = false;
};

// Deg-lex on standard monomials: total degree first, then x_1 > x_2 > ...
struct DegLexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

class SkewPoly;

struct PresentationData {
    std::string name;
    CoeffRing ring;
    std::vector<std::string> vars;
    std::vector<EndoSpec> sigma;
    std::vector<DerivSpec> delta;
    std::vector<std::vector<PairRelation>> rel;  // rel[j][i], j > i
    PresentationFlags flags;
    std::vector<std::optional<EndoSpec>> sigma_inverse;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& v) const;
    const PairRelation& relation(int j, int i) const { return rel[j][i]; }

    // x^a * (ring monomial) and x^a * x_i, memoized
    struct Cache {
        mutable std::shared_mutex mu;
        std::map<std::pair<Exps, Exps>, std::map<Exps, RElem, DegLexLess>> mon_ring;
        std::map<std::pair<Exps, int>, std::map<Exps, RElem, DegLexLess>> mon_var;
        bool enabled = true;
    };
    std::unique_ptr<Cache> cache = std::make_unique<Cache>();
};
using Presentation = std::shared_ptr<const PresentationData>;

// Relation data keyed by (j, i) with j > i.
using RelationMap = std::map<std::pair<int, int>, PairRelation>;

// Validates and freezes a presentation. Missing pair relations default to commutation.
Presentation presentation_make(std::string name, CoeffRing ring, std::vector<std::string> vars,
                               std::vector<EndoSpec> sigma, std::vector<DerivSpec> delta, RelationMap relations,
                               PresentationFlags flags, std::vector<std::optional<EndoSpec>> sigma_inverse = {});
bool same_presentation(const Presentation& a, const Presentation& b);

class SkewPoly {
public:
    using Terms = std::map<Exps, RElem, DegLexLess>;

    SkewPoly() = default;
    explicit SkewPoly(Presentation p) : pres_(std::move(p)) {}
    SkewPoly(Presentation p, const RElem& r);

    static SkewPoly var(const Presentation& p, int i, int power = 1);
    static SkewPoly monomial(const Presentation& p, const Exps& a, const RElem& coef);

    const Presentation& pres() const { return pres_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    Terms& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& a, const RElem& c);
    SkewPoly operator-() const;
    SkewPoly& operator+=(const SkewPoly& o);
    SkewPoly& operator-=(const SkewPoly& o);
    friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
    friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
    SkewPoly left_mul(const RElem& r) const;
    SkewPoly scaled(const Scalar& c) const;
    bool operator==(const SkewPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    Presentation pres_;
    Terms terms_;
};

SkewPoly multiply(const SkewPoly& p, const SkewPoly& q);
SkewPoly operator*(const SkewPoly& p, const SkewPoly& q);
SkewPoly pow(const SkewPoly& p, int e);

// Formal words over R and the variables, reduced by literal rewriting.
struct Letter {
    int var = -1;  // -1 means a coefficient letter
    RElem coef;
};
struct Word {
    std::vector<Letter> letters;
};
using WordSum = std::vector<Word>;

WordSum parse_word_sum(const Presentation& p, const std::string& text, int line = 1);
SkewPoly normal_form(const Presentation& p, const WordSum& w);
SkewPoly normal_form(const Presentation& p, const std::string& text);
// Evaluates an expression with the fast product instead of rewriting.
SkewPoly eval_poly(const Presentation& p, const std::string& text, int line = 1);

// Performs one rewrite at letter position pos (pos, pos+1) if a rule applies.
bool rewrite_at(const Presentation& p, const Word& w, size_t pos, WordSum& out);

SkewPoly word_sum_product(const Presentation& p, const RElem& r, int i, const RElem& s, int j);

struct ConfluenceFailure {
    std::string overlap;
    SkewPoly first, second;
};
struct ConfluenceReport {
    bool pass = true;
    size_t overlaps = 0;
    std::vector<ConfluenceFailure> failures;
    Report to_report() const;
};
ConfluenceReport pbw_check(const Presentation& p);

struct LeadingData {
    int dg = 0;
    RElem lc;
    Exps lm;  // empty when p = 0
    SkewPoly lt;
};
LeadingData leading_data(const SkewPoly& p);

// Twisted power sigma^n applied on R.
RElem sigma_power(const Presentation& p, int var, int n, const RElem& r);

}  // namespace skewhopf
