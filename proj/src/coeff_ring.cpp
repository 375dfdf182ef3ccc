#include "skewhopf/coeff_ring.hpp"

#include <set>

#include "skewhopf/expr.hpp"

namespace skewhopf {

bool DegRevLexLess::operator()(const Exps& a, const Exps& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

int CoeffRingData::index_of(const std::string& g) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == g) return static_cast<int>(i);
    return -1;
}

CoeffRing ring_make(Field field, std::vector<std::string> gens, std::vector<bool> laurent) {
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.empty()) throw RingError("empty generator name");
        if (!seen.insert(g).second) throw RingError("duplicate generator '" + g + "'");
    }
    if (laurent.empty()) laurent.assign(gens.size(), false);
    if (laurent.size() != gens.size()) throw RingError("laurent flags do not match generators");
    auto d = std::make_shared<CoeffRingData>();
    d->field = field;
    d->gens = std::move(gens);
    d->laurent = std::move(laurent);
    return d;
}

bool same_ring(const CoeffRing& a, const CoeffRing& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->gens == b->gens && a->laurent == b->laurent;
}

RElem::RElem(CoeffRing r, const Scalar& c) : ring_(std::move(r)) {
    if (!c.is_zero()) terms_.emplace(Exps(ring_->ngens(), 0), c.in(ring_->field));
}

RElem RElem::gen(const CoeffRing& r, int i, int power) {
    Exps e(r->ngens(), 0);
    e.at(i) = power;
    return monomial(r, e, Scalar::one(r->field));
}

RElem RElem::monomial(const CoeffRing& r, const Exps& e, const Scalar& c) {
    RElem x(r);
    x.add_term(e, c);
    return x;
}

void RElem::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ring_->laurent[i]) throw RingError("negative exponent at non-Laurent generator " + ring_->gens[i]);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c.in(ring_->field));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool RElem::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int x : terms_.begin()->first)
        if (x) return false;
    return true;
}

Scalar RElem::constant_term() const {
    if (!ring_) return Scalar();
    auto it = terms_.find(Exps(ring_->ngens(), 0));
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

bool RElem::is_unit() const {
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] && !ring_->laurent[i]) return false;
    return true;
}

RElem RElem::unit_inverse() const {
    if (!is_unit()) throw RingError("element " + str() + " is not a unit");
    Exps e = terms_.begin()->first;
    for (auto& x : e) x = -x;
    return monomial(ring_, e, terms_.begin()->second.inverse());
}

int RElem::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

RElem RElem::operator-() const {
    RElem r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

RElem& RElem::operator+=(const RElem& o) {
    if (!ring_) ring_ = o.ring_;
    if (o.ring_ && !same_ring(ring_, o.ring_)) throw RingError("coefficient ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RElem& RElem::operator-=(const RElem& o) { return *this += -o; }

RElem operator*(const RElem& a, const RElem& b) {
    const CoeffRing& r = a.ring_ ? a.ring_ : b.ring_;
    RElem out(r);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (!same_ring(a.ring_, b.ring_)) throw RingError("coefficient ring mismatch");
    Exps e(r->ngens());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

RElem RElem::scaled(const Scalar& c) const {
    RElem r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

RElem RElem::pow(int e) const {
    if (e < 0) return unit_inverse().pow(-e);
    RElem r = one(ring_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string RElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exps& e = it->first;
        Scalar c = it->second;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->gens[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        bool neg = false;
        std::string cs;
        if (c.is_rational()) {
            mpq_class q = c.field() == rationals() ? c.rational() : c.num()[0];
            neg = q < 0;
            mpq_class a = abs(q);
            cs = a.get_str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mono.empty()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct RElemOps {
    const CoeffRing& r;
    RElem number(const mpq_class& v) { return RElem(r, Scalar(r->field, v)); }
    RElem symbol(const std::string& name) {
        int i = r->index_of(name);
        if (i >= 0) return RElem::gen(r, i);
        if (r->field->kind != FieldKind::rationals && name == r->field->var)
            return RElem(r, Scalar::generator(r->field));
        throw RingError("undeclared symbol '" + name + "'");
    }
    RElem add(const RElem& a, const RElem& b) { return a + b; }
    RElem sub(const RElem& a, const RElem& b) { return a - b; }
    RElem mul(const RElem& a, const RElem& b) { return a * b; }
    RElem div(const RElem& a, const RElem& b) {
        if (b.is_zero()) throw RingError("division by zero");
        if (b.is_constant()) return a.scaled(b.constant_term().inverse());
        return a * b.unit_inverse();
    }
    RElem pow(const RElem& a, long e) {
        if (e < 0 && a.is_constant()) return RElem(r, a.constant_term().pow(e));
        return a.pow(static_cast<int>(e));
    }
    RElem neg(const RElem& a) { return -a; }
};

}  // namespace

RElem parse_relem(const CoeffRing& r, const std::string& text, int line) {
    ExprPtr e = parse_expr(text, line);
    RElemOps ops{r};
    RElem v = eval_expr<RElem>(*e, ops);
    if (!v.ring()) return RElem(r);
    return v;
}

EndoSpec EndoSpec::identity(const CoeffRing& r) {
    std::vector<RElem> im;
    for (size_t i = 0; i < r->ngens(); ++i) im.push_back(RElem::gen(r, static_cast<int>(i)));
    return make(r, std::move(im));
}

EndoSpec EndoSpec::make(const CoeffRing& r, std::vector<RElem> images) {
    if (images.size() != r->ngens()) throw RingError("endomorphism needs one image per generator");
    EndoSpec s;
    s.ring = r;
    s.inverse_images.resize(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
        if (!images[i].ring()) images[i] = RElem(r);
        if (r->laurent[i]) {
            if (!images[i].is_unit())
                throw RingError("image of Laurent generator " + r->gens[i] + " is not a unit: " + images[i].str());
            s.inverse_images[i] = images[i].unit_inverse();
        }
    }
    s.images = std::move(images);
    return s;
}

bool EndoSpec::is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != RElem::gen(ring, static_cast<int>(i))) return false;
    return true;
}

DerivSpec DerivSpec::zero(const EndoSpec& twist) {
    return make(twist, std::vector<RElem>(twist.ring->ngens(), RElem(twist.ring)));
}

DerivSpec DerivSpec::make(const EndoSpec& twist, std::vector<RElem> images) {
    if (images.size() != twist.ring->ngens()) throw RingError("derivation needs one image per generator");
    for (auto& im : images)
        if (!im.ring()) im = RElem(twist.ring);
    DerivSpec d;
    d.twist = twist;
    d.images = std::move(images);
    return d;
}

bool DerivSpec::is_zero() const {
    for (const auto& im : images)
        if (!im.is_zero()) return false;
    return true;
}

RElem ring_map_apply(const CoeffRing& target, const std::vector<RElem>& images, const RElem& p) {
    RElem out(target);
    std::vector<std::optional<RElem>> inv(images.size());
    for (const auto& [e, c] : p.terms()) {
        RElem m(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                m = m * images[i].pow(e[i]);
            } else if (e[i] < 0) {
                if (!inv[i]) inv[i] = images[i].unit_inverse();
                m = m * inv[i]->pow(-e[i]);
            }
        }
        out += m;
    }
    return out;
}

RElem endo_apply(const EndoSpec& s, const RElem& p) {
    if (p.ring() && !same_ring(p.ring(), s.ring)) throw RingError("endomorphism applied in the wrong ring");
    RElem out(s.ring);
    for (const auto& [e, c] : p.terms()) {
        RElem m(s.ring, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) m = m * s.images[i].pow(e[i]);
            else if (e[i] < 0) m = m * s.inverse_images[i]->pow(-e[i]);
        }
        out += m;
    }
    return out;
}

namespace {

// Splits a monomial into single-generator factors (t or t^-1), left to right.
std::vector<std::pair<int, int>> factors_of(const Exps& e) {
    std::vector<std::pair<int, int>> f;
    for (size_t i = 0; i < e.size(); ++i) {
        int sgn = e[i] > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(e[i]); ++k) f.emplace_back(static_cast<int>(i), sgn);
    }
    return f;
}

struct FactorData {
    RElem value, sigma, delta;
};

FactorData factor_data(const DerivSpec& d, int i, int sgn) {
    const CoeffRing& r = d.twist.ring;
    if (sgn > 0) return {RElem::gen(r, i), d.twist.images[i], d.images[i]};
    RElem tinv = RElem::gen(r, i, -1);
    const RElem& sinv = *d.twist.inverse_images[i];
    // 0 = delta(t t^-1) = sigma(t) delta(t^-1) + delta(t) t^-1
    return {tinv, sinv, -(sinv * d.images[i] * tinv)};
}

}  // namespace

RElem deriv_apply(const DerivSpec& d, const RElem& p) {
    const CoeffRing& r = d.twist.ring;
    RElem out(r);
    for (const auto& [e, c] : p.terms()) {
        RElem val = RElem::one(r), sig = RElem::one(r), del(r);
        for (auto [i, sgn] : factors_of(e)) {
            FactorData f = factor_data(d, i, sgn);
            del = sig * f.delta + del * f.value;
            sig = sig * f.sigma;
            val = val * f.value;
        }
        out += del.scaled(c);
    }
    return out;
}

RElem deriv_apply_right(const DerivSpec& d, const RElem& p) {
    const CoeffRing& r = d.twist.ring;
    RElem out(r);
    for (const auto& [e, c] : p.terms()) {
        auto fs = factors_of(e);
        RElem val = RElem::one(r), del(r);
        for (size_t k = fs.size(); k-- > 0;) {
            FactorData f = factor_data(d, fs[k].first, fs[k].second);
            del = f.sigma * del + f.delta * val;
            val = f.value * val;
        }
        out += del.scaled(c);
    }
    return out;
}

Report endo_validate(const EndoSpec& s, const EndoSpec* inverse) {
    Report rep;
    const CoeffRing& r = s.ring;
    RElem one = RElem::one(r);
    rep.add("sigma(1)=1", endo_apply(s, one) == one, "sigma(1) = " + endo_apply(s, one).str());
    bool units = true;
    std::string wit;
    for (size_t i = 0; i < r->ngens(); ++i) {
        if (!r->laurent[i]) continue;
        if (!s.images[i].is_unit()) {
            units = false;
            wit = r->gens[i];
            break;
        }
        RElem prod = s.images[i] * *s.inverse_images[i];
        if (prod != one) {
            units = false;
            wit = r->gens[i];
            break;
        }
    }
    rep.add("laurent_units", units, wit);
    if (inverse) {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < r->ngens() && ok; ++i) {
            RElem g = RElem::gen(r, static_cast<int>(i));
            if (endo_apply(*inverse, endo_apply(s, g)) != g || endo_apply(s, endo_apply(*inverse, g)) != g) {
                ok = false;
                w = r->gens[i];
            }
        }
        rep.add("bijective", ok, w);
    }
    return rep;
}

}  // namespace skewhopf
