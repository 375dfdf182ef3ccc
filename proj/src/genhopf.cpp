#include "skewhopf/genhopf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "skewhopf/catalog.hpp"

namespace skewhopf {

// ---------------------------------------------------------------- presentation basis

PresAlgebra::PresAlgebra(Presentation p) : p_(std::move(p)) {}

PresAlgebraPtr pres_algebra(Presentation p) { return std::make_shared<const PresAlgebra>(std::move(p)); }

PKey PresAlgebra::one() const { return {Exps(p_->ring->ngens(), 0), Exps(p_->nvars(), 0)}; }

PKey PresAlgebra::var_key(int i) const {
    PKey k = one();
    k.second[i] = 1;
    return k;
}

PKey PresAlgebra::ring_key(int t, int e) const {
    PKey k = one();
    k.first[t] = e;
    return k;
}

PTerms PresAlgebra::expand(const SkewPoly& v) const {
    PTerms out;
    for (const auto& [a, r] : v.terms())
        for (const auto& [e, c] : r.terms()) out.emplace_back(PKey{e, a}, c);
    return out;
}

SkewPoly PresAlgebra::poly(const PKey& k) const {
    return SkewPoly::monomial(p_, k.second, RElem::monomial(p_->ring, k.first, Scalar::one(field())));
}

const PTerms& PresAlgebra::product(const PKey& a, const PKey& b) const {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, expand(multiply(poly(a), poly(b)))).first->second;
}

int PresAlgebra::degree(const PKey& k) const {
    int d = 0;
    for (int e : k.first) d += std::abs(e);
    for (int e : k.second) d += e;
    return d;
}

std::vector<PKey> PresAlgebra::monomials(int d) const {
    const size_t nr = p_->ring->ngens(), nv = p_->nvars();
    std::vector<PKey> out;
    PKey cur = one();
    // slot s < nr is a ring exponent, otherwise a variable exponent
    std::function<void(size_t, int)> rec = [&](size_t s, int left) {
        if (s == nr + nv) {
            out.push_back(cur);
            return;
        }
        if (s < nr) {
            int lo = p_->ring->laurent[s] ? -left : 0;
            for (int e = lo; e <= left; ++e) {
                cur.first[s] = e;
                rec(s + 1, left - std::abs(e));
            }
            cur.first[s] = 0;
        } else {
            for (int e = 0; e <= left; ++e) {
                cur.second[s - nr] = e;
                rec(s + 1, left - e);
            }
            cur.second[s - nr] = 0;
        }
    };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(), [&](const PKey& a, const PKey& b) { return degree(a) < degree(b); });
    return out;
}

std::string PresAlgebra::key_str(const PKey& k) const { return poly(k).str(); }

// ---------------------------------------------------------------- tensor elements

void TElem::add(const std::vector<PKey>& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

TElem& TElem::operator+=(const TElem& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

TElem& TElem::operator-=(const TElem& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

TElem TElem::scaled(const Scalar& c) const {
    TElem r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
}

TElem tscalar(const Factors& fs, const Scalar& c) {
    std::vector<PKey> k;
    for (const auto& f : fs) k.push_back(f.alg->one());
    TElem r;
    r.add(k, c);
    return r;
}

TElem tunit(const Factors& fs) {
    Field f = fs.empty() ? rationals() : fs[0].alg->field();
    return tscalar(fs, Scalar::one(f));
}

TElem tpure(const std::vector<PTerms>& parts) {
    std::vector<std::pair<std::vector<PKey>, Scalar>> acc{{{}, Scalar(1)}};
    for (const auto& part : parts) {
        std::vector<std::pair<std::vector<PKey>, Scalar>> next;
        for (const auto& [k, c] : acc)
            for (const auto& [pk, pc] : part) {
                auto nk = k;
                nk.push_back(pk);
                next.emplace_back(std::move(nk), c * pc);
            }
        acc = std::move(next);
    }
    TElem r;
    for (const auto& [k, c] : acc) r.add(k, c);
    return r;
}

TElem tmul(const Factors& fs, const TElem& a, const TElem& b) {
    TElem r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<PTerms> parts;
            parts.reserve(fs.size());
            for (size_t i = 0; i < fs.size(); ++i)
                parts.push_back(fs[i].op ? fs[i].alg->product(kb[i], ka[i]) : fs[i].alg->product(ka[i], kb[i]));
            r += tpure(parts).scaled(ca * cb);
        }
    return r;
}

std::string tstr(const Factors& fs, const TElem& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        std::string body;
        for (size_t i = 0; i < fs.size(); ++i) body += (i ? " @ " : "") + fs[i].alg->key_str(k[i]);
        if (fs.empty()) s += c.str();
        else if (c.is_one()) s += body;
        else s += "(" + c.str() + ")*(" + body + ")";
    }
    return s;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// top-level summands with their signs; a '-' after '^', '*', '/', '(' or '@' is unary
std::vector<std::pair<int, std::string>> summands(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0, sign = 1;
    std::string cur;
    char prev = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool binary = depth == 0 && (ch == '+' || ch == '-') && prev != 0 && prev != '^' && prev != '*' &&
                      prev != '/' && prev != '(' && prev != '@';
        if (binary) {
            out.emplace_back(sign, trim(cur));
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            prev = ch;
            continue;
        }
        if (depth == 0 && ch == '-' && prev == 0 && trim(cur).empty()) {
            sign = -sign;
            continue;
        }
        cur += ch;
        if (ch != ' ' && ch != '\t') prev = ch;
    }
    out.emplace_back(sign, trim(cur));
    return out;
}

std::vector<std::string> split_at(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace

TElem parse_telem(const Factors& fs, Field f, const std::string& text) {
    TElem r;
    for (const auto& [sign, body] : summands(text)) {
        if (body.empty()) throw PresentationError("empty summand in '" + text + "'");
        auto parts = split_at(body, '@');
        TElem term;
        if (fs.empty()) {
            if (parts.size() != 1) throw PresentationError("scalar expected in '" + text + "'");
            term = tscalar(fs, parse_scalar(f, parts[0]));
        } else {
            if (parts.size() != fs.size())
                throw PresentationError("expected " + std::to_string(fs.size()) + " tensor factors in '" + body + "'");
            std::vector<PTerms> pt;
            for (size_t i = 0; i < fs.size(); ++i) pt.push_back(fs[i].alg->expand(eval_poly(fs[i].alg->pres(), parts[i])));
            term = tpure(pt);
        }
        r += term.scaled(Scalar(f, mpq_class(sign)));
    }
    return r;
}

// ---------------------------------------------------------------- generator maps

GenMap::GenMap(std::string name, PresAlgebraPtr src, Factors target, std::vector<TElem> var_images,
               std::vector<TElem> ring_images, std::vector<std::optional<TElem>> ring_inverse_images)
    : name_(std::move(name)), src_(std::move(src)), target_(std::move(target)), vars_(std::move(var_images)),
      ring_(std::move(ring_images)) {
    const auto& R = src_->pres()->ring;
    if (vars_.size() != src_->pres()->nvars() || ring_.size() != R->ngens())
        throw PresentationError(name_ + ": one image per generator required");
    ring_inv_.resize(ring_.size());
    for (size_t t = 0; t < ring_.size(); ++t) {
        if (!R->laurent[t]) continue;
        if (t < ring_inverse_images.size() && ring_inverse_images[t]) {
            ring_inv_[t] = *ring_inverse_images[t];
            continue;
        }
        // single term of ring monomials inverts termwise
        const auto& img = ring_[t];
        if (img.terms().size() != 1)
            throw PresentationError(name_ + ": image of " + R->gens[t] + " is not a unit monomial");
        const auto& [k, c] = *img.terms().begin();
        std::vector<PKey> inv = k;
        for (size_t i = 0; i < inv.size(); ++i) {
            for (int a : inv[i].second)
                if (a != 0) throw PresentationError(name_ + ": image of " + R->gens[t] + " is not a unit monomial");
            const auto& tr = target_[i].alg->pres()->ring;
            for (size_t s = 0; s < inv[i].first.size(); ++s) {
                if (inv[i].first[s] != 0 && !tr->laurent[s])
                    throw PresentationError(name_ + ": image of " + R->gens[t] + " is not a unit monomial");
                inv[i].first[s] = -inv[i].first[s];
            }
        }
        TElem r;
        r.add(inv, c.inverse());
        ring_inv_[t] = r;
    }
}

TElem GenMap::apply_key(const PKey& k) const {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    PKey rest = k;
    TElem last;
    bool found = false;
    for (size_t i = rest.second.size(); i-- > 0 && !found;)
        if (rest.second[i] > 0) {
            --rest.second[i];
            last = vars_[i];
            found = true;
        }
    for (size_t t = rest.first.size(); t-- > 0 && !found;)
        if (rest.first[t] != 0) {
            if (rest.first[t] > 0) {
                --rest.first[t];
                last = ring_[t];
            } else {
                ++rest.first[t];
                last = ring_inv_[t];
            }
            found = true;
        }
    TElem r = found ? tmul(target_, apply_key(rest), last) : tunit(target_);
    memo_.emplace(k, r);
    return r;
}

TElem GenMap::apply(const PTerms& v) const {
    TElem r;
    for (const auto& [k, c] : v) r += apply_key(k).scaled(c);
    return r;
}

GenMap genmap_parse(const std::string& name, PresAlgebraPtr src, Factors target,
                    const std::map<std::string, std::string>& images) {
    const auto& p = src->pres();
    Field f = src->field();
    auto get = [&](const std::string& g) -> const std::string& {
        auto it = images.find(g);
        if (it == images.end()) throw PresentationError(name + ": no image for generator '" + g + "'");
        return it->second;
    };
    std::vector<TElem> vars, ring;
    std::vector<std::optional<TElem>> inv;
    for (const auto& v : p->vars) vars.push_back(parse_telem(target, f, get(v)));
    for (const auto& g : p->ring->gens) {
        ring.push_back(parse_telem(target, f, get(g)));
        auto it = images.find(g + "^-1");
        inv.push_back(it == images.end() ? std::nullopt : std::optional<TElem>(parse_telem(target, f, it->second)));
    }
    return GenMap(name, std::move(src), std::move(target), std::move(vars), std::move(ring), std::move(inv));
}

Factors splice(const Factors& fs, size_t pos, const Factors& with) {
    Factors out(fs.begin(), fs.begin() + pos);
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), fs.begin() + pos + 1, fs.end());
    return out;
}

TElem apply_on_factor(const TElem& v, size_t pos, const GenMap& f) {
    TElem r;
    for (const auto& [k, c] : v.terms()) {
        TElem img = f.apply_key(k[pos]);
        for (const auto& [ik, ic] : img.terms()) {
            std::vector<PKey> nk(k.begin(), k.begin() + pos);
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), k.begin() + pos + 1, k.end());
            r.add(nk, c * ic);
        }
    }
    return r;
}

TElem mul_adjacent(const Factors& fs, const TElem& v, size_t pos) {
    TElem r;
    for (const auto& [k, c] : v.terms())
        for (const auto& [pk, pc] : fs[pos].alg->product(k[pos], k[pos + 1])) {
            std::vector<PKey> nk(k.begin(), k.begin() + pos);
            nk.push_back(pk);
            nk.insert(nk.end(), k.begin() + pos + 2, k.end());
            r.add(nk, c * pc);
        }
    return r;
}

int tensor_degree(const Factors& fs, const std::vector<PKey>& k) {
    int d = 0;
    for (size_t i = 0; i < fs.size(); ++i) d += fs[i].alg->degree(k[i]);
    return d;
}

std::vector<std::vector<PKey>> tensor_monomials(const Factors& fs, int d) {
    std::vector<std::vector<PKey>> out{{}};
    for (const auto& f : fs) {
        auto mons = f.alg->monomials(d);
        std::vector<std::vector<PKey>> next;
        for (const auto& k : out) {
            int used = 0;
            for (size_t i = 0; i < k.size(); ++i) used += fs[i].alg->degree(k[i]);
            for (const auto& m : mons) {
                if (used + f.alg->degree(m) > d) continue;
                auto nk = k;
                nk.push_back(m);
                next.push_back(std::move(nk));
            }
        }
        out = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------- checks

Report check_generator_map(const GenMap& f, int d) {
    Report rep;
    rep.degree_bound = d;
    const auto& A = *f.src();
    const auto& p = A.pres();
    const auto& R = p->ring;
    const Factors& T = f.target();
    auto img = [&](const SkewPoly& v) { return f.apply(A.expand(v)); };
    auto ring_img = [&](int t, int e) { return f.apply_key(A.ring_key(t, e)); };
    std::string w;
    for (size_t j = 0; j < p->nvars() && w.empty(); ++j)
        for (size_t i = 0; i < j && w.empty(); ++i)
            if (tmul(T, f.var_image(j), f.var_image(i)) != img(SkewPoly::var(p, j) * SkewPoly::var(p, i)))
                w = p->vars[j] + "*" + p->vars[i];
    for (size_t i = 0; i < p->nvars() && w.empty(); ++i)
        for (size_t t = 0; t < R->ngens() && w.empty(); ++t)
            if (tmul(T, f.var_image(i), ring_img(t, 1)) != img(SkewPoly::var(p, i) * SkewPoly(p, RElem::gen(R, t))))
                w = p->vars[i] + "*" + R->gens[t];
    for (size_t t = 0; t < R->ngens() && w.empty(); ++t) {
        for (size_t s = 0; s < t && w.empty(); ++s)
            if (tmul(T, ring_img(t, 1), ring_img(s, 1)) != tmul(T, ring_img(s, 1), ring_img(t, 1)))
                w = R->gens[t] + "*" + R->gens[s];
        if (R->laurent[t] && w.empty()) {
            TElem one = tunit(T);
            if (tmul(T, ring_img(t, 1), ring_img(t, -1)) != one || tmul(T, ring_img(t, -1), ring_img(t, 1)) != one)
                w = R->gens[t] + "*" + R->gens[t] + "^-1";
        }
    }
    rep.add(f.name() + ".relations", w.empty(), w);

    w.clear();
    auto mons = A.monomials(d);
    long pairs = 0;
    for (const auto& a : mons) {
        if (!w.empty()) break;
        for (const auto& b : mons) {
            if (A.degree(a) + A.degree(b) > d) continue;
            ++pairs;
            if (tmul(T, f.apply_key(a), f.apply_key(b)) != f.apply(A.product(a, b))) {
                w = A.key_str(a) + " * " + A.key_str(b);
                break;
            }
        }
    }
    rep.add(f.name() + ".multiplicative", w.empty(), w).dims = {static_cast<long>(mons.size()), pairs};
    return rep;
}

GenHopfSpec genhopf_make(const std::string& name, Presentation p, const std::map<std::string, std::string>& delta,
                         const std::map<std::string, std::string>& eps,
                         const std::map<std::string, std::string>& antipode) {
    auto A = pres_algebra(std::move(p));
    return GenHopfSpec{name, A, genmap_parse("delta", A, {{A, false}, {A, false}}, delta), genmap_parse("epsilon", A, {}, eps),
                       genmap_parse("antipode", A, {{A, true}}, antipode)};
}

Report check_hopf_on_generators(const GenHopfSpec& H, int d) {
    Report rep;
    rep.degree_bound = d;
    const auto& A = *H.alg;
    Report pr = pbw_check(A.pres()).to_report();
    rep.add("pbw", pr.pass(), pr.first_failure());
    rep.merge(check_generator_map(H.delta, d));
    rep.merge(check_generator_map(H.eps, d));
    rep.merge(check_generator_map(H.S, d));

    const Factors AA{{H.alg, false}, {H.alg, false}};
    auto mons = A.monomials(d);
    std::string wc, we, ws;
    for (const auto& m : mons) {
        TElem D = H.delta.apply_key(m);
        TElem single;
        single.add({m}, Scalar::one(A.field()));
        if (wc.empty() && apply_on_factor(D, 0, H.delta) != apply_on_factor(D, 1, H.delta)) wc = A.key_str(m);
        if (we.empty() && (apply_on_factor(D, 0, H.eps) != single || apply_on_factor(D, 1, H.eps) != single))
            we = A.key_str(m);
        if (ws.empty()) {
            Scalar e = Scalar::zero(A.field());
            for (const auto& [k, c] : H.eps.apply_key(m).terms()) e += c;
            TElem target = tscalar({{H.alg, false}}, e);
            Factors left = splice(AA, 0, H.S.target()), right = splice(AA, 1, H.S.target());
            if (mul_adjacent(left, apply_on_factor(D, 0, H.S), 0) != target ||
                mul_adjacent(right, apply_on_factor(D, 1, H.S), 0) != target)
                ws = A.key_str(m);
        }
    }
    long n = static_cast<long>(mons.size());
    rep.add("coassociativity", wc.empty(), wc).dims = {n};
    rep.add("counit", we.empty(), we).dims = {n};
    rep.add("antipode", ws.empty(), ws).dims = {n};
    return rep;
}

GenHopfSpec enveloping_hopf(Presentation p) {
    std::map<std::string, std::string> delta, eps, S;
    for (const auto& v : p->vars) {
        delta[v] = v + " @ 1 + 1 @ " + v;
        eps[v] = "0";
        S[v] = "-" + v;
    }
    if (p->ring->ngens() != 0) throw PresentationError("enveloping_hopf needs a presentation over the ground field");
    std::string name = p->name;
    return genhopf_make(name, std::move(p), delta, eps, S);
}

GenHopfSpec catalog_hopf(const std::string& name, const std::map<std::string, std::string>& params) {
    if (name == "uq_sl2") {
        return genhopf_make(name, catalog(name, params),
                            {{"e", "1 @ e + e @ k"}, {"f", "k^-1 @ f + f @ 1"}, {"k", "k @ k"}},
                            {{"e", "0"}, {"f", "0"}, {"k", "1"}},
                            {{"e", "-e*k^-1"}, {"f", "-k*f"}, {"k", "k^-1"}});
    }
    if (name == "u_sl2" || name == "sridharan" || name == "sridharan_table1") return enveloping_hopf(catalog(name, params));
    throw PresentationError("no Hopf structure registered for '" + name + "'");
}

}  // namespace skewhopf
