#include "skewhopf/skew_pbw.hpp"

#include <mutex>
#include <set>

#include "skewhopf/expr.hpp"

namespace skewhopf {

bool DegLexLess::operator()(const Exps& a, const Exps& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

int PresentationData::var_index(const std::string& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return static_cast<int>(i);
    return -1;
}

namespace {

// Inverse of sigma when every image is a*t + b in its own generator (or c*t on Laurent ones).
std::optional<EndoSpec> affine_inverse(const EndoSpec& s) {
    const CoeffRing& r = s.ring;
    std::vector<RElem> inv;
    for (size_t i = 0; i < r->ngens(); ++i) {
        const RElem& im = s.images[i];
        Exps ei(r->ngens(), 0);
        ei[i] = 1;
        Exps zero(r->ngens(), 0);
        Scalar a = Scalar::zero(r->field), b = Scalar::zero(r->field);
        for (const auto& [e, c] : im.terms()) {
            if (e == ei) a = c;
            else if (e == zero) b = c;
            else return std::nullopt;
        }
        if (a.is_zero()) return std::nullopt;
        if (r->laurent[i] && !b.is_zero()) return std::nullopt;
        RElem t = RElem::gen(r, static_cast<int>(i));
        inv.push_back((t - RElem(r, b)).scaled(a.inverse()));
    }
    return EndoSpec::make(r, std::move(inv));
}

}  // namespace

Presentation presentation_make(std::string name, CoeffRing ring, std::vector<std::string> vars,
                               std::vector<EndoSpec> sigma, std::vector<DerivSpec> delta, RelationMap relations,
                               PresentationFlags flags, std::vector<std::optional<EndoSpec>> sigma_inverse) {
    const size_t n = vars.size();
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw PresentationError("empty variable name");
        if (!seen.insert(v).second) throw PresentationError("duplicate variable '" + v + "'");
        if (ring->index_of(v) >= 0) throw PresentationError("variable '" + v + "' clashes with a coefficient generator");
    }
    if (sigma.empty()) sigma.assign(n, EndoSpec::identity(ring));
    if (delta.empty())
        for (size_t i = 0; i < n; ++i) delta.push_back(DerivSpec::zero(sigma[i]));
    if (sigma.size() != n || delta.size() != n) throw PresentationError("sigma/delta count does not match variables");
    for (size_t i = 0; i < n; ++i) {
        if (!same_ring(sigma[i].ring, ring) || !same_ring(delta[i].twist.ring, ring))
            throw PresentationError("sigma/delta of " + vars[i] + " act on a different ring");
        if (delta[i].twist.images != sigma[i].images)
            throw PresentationError("delta of " + vars[i] + " is not twisted by its sigma");
    }

    auto d = std::make_shared<PresentationData>();
    d->name = std::move(name);
    d->ring = ring;
    d->vars = std::move(vars);
    d->sigma = std::move(sigma);
    d->delta = std::move(delta);
    d->flags = flags;
    d->rel.assign(n, std::vector<PairRelation>(n));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < j; ++i) {
            d->rel[j][i] = PairRelation{RElem::one(ring), std::vector<RElem>(n, RElem(ring)), RElem(ring)};
        }
    }
    for (auto& [key, r] : relations) {
        auto [j, i] = key;
        if (j <= i || j >= static_cast<int>(n) || i < 0) throw PresentationError("relation indices must satisfy j > i");
        if (!r.lead.ring()) r.lead = RElem(ring);
        if (r.lead.is_zero())
            throw PresentationError("zero leading coefficient in relation " + d->vars[j] + "*" + d->vars[i]);
        if (r.linear.empty()) r.linear.assign(n, RElem(ring));
        if (r.linear.size() != n) throw PresentationError("linear part has wrong length");
        for (auto& a : r.linear)
            if (!a.ring()) a = RElem(ring);
        if (!r.constant.ring()) r.constant = RElem(ring);
        d->rel[j][i] = std::move(r);
    }

    if (flags.quasi_commutative) {
        for (size_t i = 0; i < n; ++i)
            if (!d->delta[i].is_zero())
                throw PresentationError("quasi-commutative flag set but delta of " + d->vars[i] + " is nonzero");
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < j; ++i) {
                const auto& r = d->rel[j][i];
                bool lower = !r.constant.is_zero();
                for (const auto& a : r.linear) lower = lower || !a.is_zero();
                if (lower)
                    throw PresentationError("quasi-commutative flag set but relation " + d->vars[j] + "*" +
                                            d->vars[i] + " has lower terms");
            }
    }

    sigma_inverse.resize(n);
    for (size_t i = 0; i < n; ++i) {
        if (!sigma_inverse[i]) {
            if (d->sigma[i].is_identity()) sigma_inverse[i] = d->sigma[i];
            else sigma_inverse[i] = affine_inverse(d->sigma[i]);
        }
    }
    d->sigma_inverse = std::move(sigma_inverse);
    if (flags.bijective) {
        for (size_t i = 0; i < n; ++i) {
            if (!d->sigma_inverse[i]) throw PresentationError("bijective flag set but sigma of " + d->vars[i] + " has no inverse");
            Report r = endo_validate(d->sigma[i], &*d->sigma_inverse[i]);
            if (!r.pass()) throw PresentationError("sigma of " + d->vars[i] + " is not bijective: " + r.first_failure());
        }
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < j; ++i)
                if (!d->rel[j][i].lead.is_unit())
                    throw PresentationError("bijective flag set but the leading coefficient of " + d->vars[j] + "*" +
                                            d->vars[i] + " is not a unit");
    }
    return d;
}

bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a == b) return true;
    if (!a || !b || !same_ring(a->ring, b->ring) || a->name != b->name || a->vars != b->vars) return false;
    if (a->flags.quasi_commutative != b->flags.quasi_commutative || a->flags.bijective != b->flags.bijective) return false;
    for (size_t v = 0; v < a->nvars(); ++v) {
        if (a->sigma[v].images != b->sigma[v].images || a->delta[v].images != b->delta[v].images) return false;
        for (size_t i = 0; i < v; ++i) {
            const PairRelation &r = a->rel[v][i], &s = b->rel[v][i];
            if (r.lead != s.lead || r.linear != s.linear || r.constant != s.constant) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- SkewPoly

SkewPoly::SkewPoly(Presentation p, const RElem& r) : pres_(std::move(p)) {
    if (!r.is_zero()) terms_.emplace(Exps(pres_->nvars(), 0), r);
}

SkewPoly SkewPoly::var(const Presentation& p, int i, int power) {
    Exps a(p->nvars(), 0);
    a.at(i) = power;
    return monomial(p, a, RElem::one(p->ring));
}

SkewPoly SkewPoly::monomial(const Presentation& p, const Exps& a, const RElem& coef) {
    SkewPoly s(p);
    s.add_term(a, coef);
    return s;
}

void SkewPoly::add_term(const Exps& a, const RElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r(*this);
    for (auto& [a, c] : r.terms_) c = -c;
    return r;
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o) {
    if (!pres_) pres_ = o.pres_;
    if (o.pres_ && pres_ != o.pres_) throw PresentationError("presentation mismatch");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o) { return *this += -o; }

SkewPoly SkewPoly::left_mul(const RElem& r) const {
    SkewPoly out(pres_);
    if (r.is_zero()) return out;
    for (const auto& [a, c] : terms_) out.add_term(a, r * c);
    return out;
}

SkewPoly SkewPoly::scaled(const Scalar& c) const {
    SkewPoly out(pres_);
    if (c.is_zero()) return out;
    for (const auto& [a, x] : terms_) out.terms_.emplace(a, x.scaled(c));
    return out;
}

std::string SkewPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exps& a = it->first;
        const RElem& c = it->second;
        std::string mono;
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += pres_->vars[i];
            if (a[i] != 1) mono += "^" + std::to_string(a[i]);
        }
        std::string t;
        if (mono.empty()) {
            t = c.str();
            if (c.terms().size() > 1 && !out.empty()) t = "(" + t + ")";
        } else if (c == RElem::one(pres_->ring)) {
            t = mono;
        } else if (c == -RElem::one(pres_->ring)) {
            t = "-" + mono;
        } else if (c.terms().size() == 1) {
            t = c.str() + "*" + mono;
        } else {
            t = "(" + c.str() + ")*" + mono;
        }
        if (out.empty()) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

// ---------------------------------------------------------------- fast product

namespace {

using PTerms = SkewPoly::Terms;

int last_var(const Exps& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<int>(i);
    return -1;
}

void add_into(PTerms& acc, const Exps& a, const RElem& c) {
    if (c.is_zero()) return;
    auto it = acc.find(a);
    if (it == acc.end()) {
        acc.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

PTerms mon_ring(const PresentationData& p, const Exps& a, const Exps& b);

// x^a * s for s in R
PTerms mon_relem(const PresentationData& p, const Exps& a, const RElem& s) {
    PTerms out;
    if (last_var(a) < 0) {
        if (!s.is_zero()) out.emplace(a, s);
        return out;
    }
    for (const auto& [e, c] : s.terms()) {
        for (const auto& [m, r] : mon_ring(p, a, e)) add_into(out, m, r.scaled(c));
    }
    return out;
}

PTerms mon_ring(const PresentationData& p, const Exps& a, const Exps& b) {
    auto& cache = *p.cache;
    auto key = std::make_pair(a, b);
    if (cache.enabled) {
        std::shared_lock lk(cache.mu);
        auto it = cache.mon_ring.find(key);
        if (it != cache.mon_ring.end()) return it->second;
    }
    PTerms out;
    RElem t = RElem::monomial(p.ring, b, Scalar::one(p.ring->field));
    int j = last_var(a);
    if (j < 0) {
        out.emplace(a, t);
    } else {
        Exps a1 = a;
        --a1[j];
        for (const auto& [m, r] : mon_relem(p, a1, endo_apply(p.sigma[j], t))) {
            Exps m1 = m;
            ++m1[j];
            add_into(out, m1, r);
        }
        for (const auto& [m, r] : mon_relem(p, a1, deriv_apply(p.delta[j], t))) add_into(out, m, r);
    }
    if (cache.enabled) {
        std::unique_lock lk(cache.mu);
        cache.mon_ring.emplace(key, out);
    }
    return out;
}

PTerms mon_var(const PresentationData& p, const Exps& g, int i);

PTerms poly_var(const PresentationData& p, const PTerms& f, int i) {
    PTerms out;
    for (const auto& [m, c] : f) {
        for (const auto& [m2, c2] : mon_var(p, m, i)) add_into(out, m2, c * c2);
    }
    return out;
}

// x^g * x_i
PTerms mon_var(const PresentationData& p, const Exps& g, int i) {
    int j = last_var(g);
    if (j <= i) {
        Exps m = g;
        ++m[i];
        return PTerms{{m, RElem::one(p.ring)}};
    }
    auto& cache = *p.cache;
    auto key = std::make_pair(g, i);
    if (cache.enabled) {
        std::shared_lock lk(cache.mu);
        auto it = cache.mon_var.find(key);
        if (it != cache.mon_var.end()) return it->second;
    }
    Exps g1 = g;
    --g1[j];
    const PairRelation& rel = p.rel[j][i];
    PTerms out = poly_var(p, poly_var(p, mon_relem(p, g1, rel.lead), i), j);
    for (size_t k = 0; k < rel.linear.size(); ++k) {
        if (rel.linear[k].is_zero()) continue;
        for (const auto& [m, c] : poly_var(p, mon_relem(p, g1, rel.linear[k]), static_cast<int>(k))) add_into(out, m, c);
    }
    for (const auto& [m, c] : mon_relem(p, g1, rel.constant)) add_into(out, m, c);
    if (cache.enabled) {
        std::unique_lock lk(cache.mu);
        cache.mon_var.emplace(key, out);
    }
    return out;
}

}  // namespace

SkewPoly multiply(const SkewPoly& p, const SkewPoly& q) {
    const Presentation& P = p.pres() ? p.pres() : q.pres();
    SkewPoly out(P);
    if (p.is_zero() || q.is_zero()) return out;
    if (p.pres() != q.pres()) throw PresentationError("presentation mismatch");
    for (const auto& [a, r] : p.terms()) {
        for (const auto& [b, s] : q.terms()) {
            PTerms f = mon_relem(*P, a, s);
            for (size_t k = 0; k < b.size(); ++k)
                for (int e = 0; e < b[k]; ++e) f = poly_var(*P, f, static_cast<int>(k));
            for (const auto& [m, c] : f) out.add_term(m, r * c);
        }
    }
    return out;
}

SkewPoly operator*(const SkewPoly& p, const SkewPoly& q) { return multiply(p, q); }

SkewPoly pow(const SkewPoly& p, int e) {
    if (e < 0) throw PresentationError("negative power of a skew polynomial");
    SkewPoly r(p.pres(), RElem::one(p.pres()->ring));
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

// ---------------------------------------------------------------- rewriting

namespace {

Word splice(const Word& w, size_t pos, std::vector<Letter> mid) {
    Word out;
    out.letters.reserve(w.letters.size() + mid.size());
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
    for (auto& l : mid) out.letters.push_back(std::move(l));
    out.letters.insert(out.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
    return out;
}

Letter coef_letter(const RElem& r) { return Letter{-1, r}; }
Letter var_letter(const Presentation& p, int i) { return Letter{i, RElem(p->ring)}; }

}  // namespace

bool rewrite_at(const Presentation& p, const Word& w, size_t pos, WordSum& out) {
    if (pos + 1 >= w.letters.size()) return false;
    const Letter& a = w.letters[pos];
    const Letter& b = w.letters[pos + 1];
    if (a.var < 0 && b.var < 0) {
        out.push_back(splice(w, pos, {coef_letter(a.coef * b.coef)}));
        return true;
    }
    if (a.var >= 0 && b.var < 0) {
        int i = a.var;
        RElem s = endo_apply(p->sigma[i], b.coef);
        RElem d = deriv_apply(p->delta[i], b.coef);
        if (!s.is_zero()) out.push_back(splice(w, pos, {coef_letter(s), var_letter(p, i)}));
        if (!d.is_zero()) out.push_back(splice(w, pos, {coef_letter(d)}));
        return true;
    }
    if (a.var >= 0 && b.var >= 0 && a.var > b.var) {
        int j = a.var, i = b.var;
        const PairRelation& r = p->rel[j][i];
        out.push_back(splice(w, pos, {coef_letter(r.lead), var_letter(p, i), var_letter(p, j)}));
        for (size_t k = 0; k < r.linear.size(); ++k)
            if (!r.linear[k].is_zero())
                out.push_back(splice(w, pos, {coef_letter(r.linear[k]), var_letter(p, static_cast<int>(k))}));
        if (!r.constant.is_zero()) out.push_back(splice(w, pos, {coef_letter(r.constant)}));
        return true;
    }
    return false;
}

SkewPoly normal_form(const Presentation& p, const WordSum& ws) {
    SkewPoly out(p);
    std::vector<Word> stack(ws.rbegin(), ws.rend());
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        for (const auto& l : w.letters)
            if (l.var < 0 && l.coef.is_zero()) dead = true;
        if (dead) continue;
        WordSum next;
        bool stepped = false;
        for (size_t pos = 0; pos + 1 < w.letters.size() && !stepped; ++pos) stepped = rewrite_at(p, w, pos, next);
        if (stepped) {
            for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
            continue;
        }
        Exps a(p->nvars(), 0);
        RElem c = RElem::one(p->ring);
        for (const auto& l : w.letters) {
            if (l.var < 0) c = l.coef;
            else ++a[l.var];
        }
        out.add_term(a, c);
    }
    return out;
}

namespace {

struct WordOps {
    const Presentation& p;
    WordSum constant(const RElem& r) { return WordSum{Word{{coef_letter(r)}}}; }
    WordSum number(const mpq_class& v) { return constant(RElem(p->ring, Scalar(p->ring->field, v))); }
    WordSum symbol(const std::string& name) {
        int v = p->var_index(name);
        if (v >= 0) return WordSum{Word{{var_letter(p, v)}}};
        int g = p->ring->index_of(name);
        if (g >= 0) return constant(RElem::gen(p->ring, g));
        if (p->ring->field->kind != FieldKind::rationals && name == p->ring->field->var)
            return constant(RElem(p->ring, Scalar::generator(p->ring->field)));
        throw PresentationError("undeclared symbol '" + name + "'");
    }
    WordSum add(WordSum a, const WordSum& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    WordSum neg(const WordSum& a) {
        WordSum r;
        for (const auto& w : a) {
            Word x = w;
            x.letters.insert(x.letters.begin(), coef_letter(-RElem::one(p->ring)));
            r.push_back(std::move(x));
        }
        return r;
    }
    WordSum sub(const WordSum& a, const WordSum& b) { return add(a, neg(b)); }
    WordSum mul(const WordSum& a, const WordSum& b) {
        WordSum r;
        for (const auto& x : a)
            for (const auto& y : b) {
                Word w = x;
                w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
                r.push_back(std::move(w));
            }
        return r;
    }
    // a WordSum made only of coefficient letters, folded to an element of R
    std::optional<RElem> as_coef(const WordSum& a) {
        RElem sum(p->ring);
        for (const auto& w : a) {
            RElem prod = RElem::one(p->ring);
            for (const auto& l : w.letters) {
                if (l.var >= 0) return std::nullopt;
                prod = prod * l.coef;
            }
            sum += prod;
        }
        return sum;
    }
    RElem invert(const RElem& r) {
        if (r.is_zero()) throw PresentationError("division by zero");
        if (r.is_constant()) return RElem(p->ring, r.constant_term().inverse());
        return r.unit_inverse();
    }
    WordSum div(const WordSum& a, const WordSum& b) {
        auto c = as_coef(b);
        if (!c) throw PresentationError("division by an expression containing variables");
        return mul(a, constant(invert(*c)));
    }
    WordSum pow(const WordSum& a, long e) {
        if (e < 0) {
            auto c = as_coef(a);
            if (!c) throw PresentationError("negative power of an expression containing variables");
            return constant(invert(*c).pow(static_cast<int>(-e)));
        }
        WordSum r = constant(RElem::one(p->ring));
        for (long k = 0; k < e; ++k) r = mul(r, a);
        return r;
    }
};

struct PolyOps {
    const Presentation& p;
    SkewPoly number(const mpq_class& v) { return SkewPoly(p, RElem(p->ring, Scalar(p->ring->field, v))); }
    SkewPoly symbol(const std::string& name) {
        int v = p->var_index(name);
        if (v >= 0) return SkewPoly::var(p, v);
        int g = p->ring->index_of(name);
        if (g >= 0) return SkewPoly(p, RElem::gen(p->ring, g));
        if (p->ring->field->kind != FieldKind::rationals && name == p->ring->field->var)
            return SkewPoly(p, RElem(p->ring, Scalar::generator(p->ring->field)));
        throw PresentationError("undeclared symbol '" + name + "'");
    }
    SkewPoly add(const SkewPoly& a, const SkewPoly& b) { return a + b; }
    SkewPoly sub(const SkewPoly& a, const SkewPoly& b) { return a - b; }
    SkewPoly mul(const SkewPoly& a, const SkewPoly& b) { return a * b; }
    std::optional<RElem> as_coef(const SkewPoly& a) {
        if (a.is_zero()) return RElem(p->ring);
        if (a.terms().size() != 1 || last_var(a.terms().begin()->first) >= 0) return std::nullopt;
        return a.terms().begin()->second;
    }
    RElem invert(const RElem& r) {
        if (r.is_zero()) throw PresentationError("division by zero");
        if (r.is_constant()) return RElem(p->ring, r.constant_term().inverse());
        return r.unit_inverse();
    }
    SkewPoly div(const SkewPoly& a, const SkewPoly& b) {
        auto c = as_coef(b);
        if (!c) throw PresentationError("division by an expression containing variables");
        return a * SkewPoly(p, invert(*c));
    }
    SkewPoly pow(const SkewPoly& a, long e) {
        if (e < 0) {
            auto c = as_coef(a);
            if (!c) throw PresentationError("negative power of an expression containing variables");
            return SkewPoly(p, invert(*c).pow(static_cast<int>(-e)));
        }
        return skewhopf::pow(a, static_cast<int>(e));
    }
    SkewPoly neg(const SkewPoly& a) { return -a; }
};

}  // namespace

WordSum parse_word_sum(const Presentation& p, const std::string& text, int line) {
    ExprPtr e = parse_expr(text, line);
    WordOps ops{p};
    return eval_expr<WordSum>(*e, ops);
}

SkewPoly normal_form(const Presentation& p, const std::string& text) { return normal_form(p, parse_word_sum(p, text)); }

SkewPoly eval_poly(const Presentation& p, const std::string& text, int line) {
    ExprPtr e = parse_expr(text, line);
    PolyOps ops{p};
    return eval_expr<SkewPoly>(*e, ops);
}

// ---------------------------------------------------------------- Ore word sums

SkewPoly word_sum_product(const Presentation& p, const RElem& r, int i, const RElem& s, int j) {
    if (p->nvars() != 1) throw PresentationError("word_sum_product needs a single-variable presentation");
    if (i < 0 || j < 0) throw PresentationError("negative exponent");
    SkewPoly out(p);
    for (unsigned long mask = 0; mask < (1ul << i); ++mask) {
        RElem v = s;
        int k = 0;
        for (int pos = i - 1; pos >= 0; --pos) {
            if (mask >> pos & 1ul) {
                v = deriv_apply(p->delta[0], v);
                ++k;
            } else {
                v = endo_apply(p->sigma[0], v);
            }
            if (v.is_zero()) break;
        }
        out.add_term(Exps{i + j - k}, r * v);
    }
    return out;
}

// ---------------------------------------------------------------- confluence

Report ConfluenceReport::to_report() const {
    Report r;
    std::string w;
    if (!failures.empty()) {
        const auto& f = failures.front();
        w = "overlap " + f.overlap + ": " + f.first.str() + " != " + f.second.str();
    }
    r.add("pbw_confluence", pass, w).dims = {static_cast<long>(overlaps), static_cast<long>(failures.size())};
    return r;
}

ConfluenceReport pbw_check(const Presentation& p) {
    ConfluenceReport rep;
    const int n = static_cast<int>(p->nvars());
    auto compare = [&](const Word& w, const std::string& label) {
        WordSum a, b;
        rewrite_at(p, w, 0, a);
        rewrite_at(p, w, 1, b);
        SkewPoly na = normal_form(p, a), nb = normal_form(p, b);
        ++rep.overlaps;
        if (na != nb) rep.failures.push_back({label, na, nb});
    };
    for (int k = n - 1; k >= 0; --k)
        for (int j = k - 1; j >= 0; --j)
            for (int i = j - 1; i >= 0; --i) {
                Word w{{var_letter(p, k), var_letter(p, j), var_letter(p, i)}};
                compare(w, p->vars[k] + "*" + p->vars[j] + "*" + p->vars[i]);
            }
    const CoeffRing& R = p->ring;
    for (int j = n - 1; j >= 0; --j)
        for (int i = j - 1; i >= 0; --i)
            for (size_t g = 0; g < R->ngens(); ++g) {
                std::vector<int> powers{1};
                if (R->laurent[g]) powers.push_back(-1);
                for (int e : powers) {
                    Word w{{var_letter(p, j), var_letter(p, i), coef_letter(RElem::gen(R, static_cast<int>(g), e))}};
                    std::string t = R->gens[g] + (e < 0 ? "^-1" : "");
                    compare(w, p->vars[j] + "*" + p->vars[i] + "*" + t);
                }
            }
    rep.pass = rep.failures.empty();
    return rep;
}

LeadingData leading_data(const SkewPoly& p) {
    LeadingData d;
    d.lt = SkewPoly(p.pres());
    if (p.is_zero()) {
        if (p.pres()) d.lc = RElem(p.pres()->ring);
        return d;
    }
    auto it = p.terms().rbegin();
    d.lm = it->first;
    d.lc = it->second;
    for (int x : d.lm) d.dg += x;
    d.lt.add_term(d.lm, d.lc);
    return d;
}

RElem sigma_power(const Presentation& p, int var, int n, const RElem& r) {
    RElem v = r;
    for (int k = 0; k < n; ++k) v = endo_apply(p->sigma[var], v);
    return v;
}

}  // namespace skewhopf
