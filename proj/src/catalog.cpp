#include "skewhopf/catalog.hpp"

#include "skewhopf/expr.hpp"
#include "skewhopf/lie.hpp"

namespace skewhopf {

namespace {

RElem invert(const RElem& r) {
    if (r.is_zero()) throw PresentationError("zero coefficient where a unit is required");
    if (r.is_constant()) return RElem(r.ring(), r.constant_term().inverse());
    return r.unit_inverse();
}

struct LinOps {
    const CoeffRing& r;
    const std::vector<std::string>& vars;
    LinearForm constant(const RElem& c) { return LinearForm{std::vector<RElem>(vars.size(), RElem(r)), c}; }
    LinearForm number(const mpq_class& v) { return constant(RElem(r, Scalar(r->field, v))); }
    LinearForm symbol(const std::string& name) {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) {
                LinearForm f = constant(RElem(r));
                f.linear[i] = RElem::one(r);
                return f;
            }
        return constant(parse_relem(r, name));
    }
    bool is_const(const LinearForm& f) {
        for (const auto& a : f.linear)
            if (!a.is_zero()) return false;
        return true;
    }
    LinearForm add(LinearForm a, const LinearForm& b) {
        for (size_t i = 0; i < a.linear.size(); ++i) a.linear[i] += b.linear[i];
        a.constant += b.constant;
        return a;
    }
    LinearForm scale(LinearForm a, const RElem& c) {
        for (auto& x : a.linear) x = c * x;
        a.constant = c * a.constant;
        return a;
    }
    LinearForm neg(const LinearForm& a) { return scale(a, -RElem::one(r)); }
    LinearForm sub(const LinearForm& a, const LinearForm& b) { return add(a, neg(b)); }
    LinearForm mul(const LinearForm& a, const LinearForm& b) {
        if (is_const(a)) return scale(b, a.constant);
        if (is_const(b)) return scale(a, b.constant);
        throw PresentationError("relation right-hand side must have degree at most one");
    }
    LinearForm div(const LinearForm& a, const LinearForm& b) {
        if (!is_const(b)) throw PresentationError("division by a variable");
        return scale(a, invert(b.constant));
    }
    LinearForm pow(const LinearForm& a, long e) {
        if (!is_const(a)) {
            if (e == 1) return a;
            throw PresentationError("relation right-hand side must have degree at most one");
        }
        if (e < 0) return constant(invert(a.constant).pow(static_cast<int>(-e)));
        return constant(a.constant.pow(static_cast<int>(e)));
    }
};

}  // namespace

LinearForm parse_linear(const CoeffRing& r, const std::vector<std::string>& vars, const std::string& text) {
    ExprPtr e = parse_expr(text);
    LinOps ops{r, vars};
    return eval_expr<LinearForm>(*e, ops);
}

PresentationBuilder::PresentationBuilder(std::string name, Field field, std::vector<std::string> gens,
                                         std::vector<bool> laurent)
    : name_(std::move(name)), ring_(ring_make(field, std::move(gens), std::move(laurent))) {}

PresentationBuilder& PresentationBuilder::vars(std::vector<std::string> v) {
    vars_ = std::move(v);
    return *this;
}

PresentationBuilder& PresentationBuilder::sigma(const std::string& var, const std::map<std::string, std::string>& m) {
    sigma_[var] = m;
    return *this;
}

PresentationBuilder& PresentationBuilder::delta(const std::string& var, const std::map<std::string, std::string>& m) {
    delta_[var] = m;
    return *this;
}

int PresentationBuilder::index(const std::string& v) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v) return static_cast<int>(i);
    throw PresentationError("unknown variable '" + v + "'");
}

PresentationBuilder& PresentationBuilder::relation(const std::string& u, const std::string& v, const std::string& p,
                                                   const std::string& q, const std::string& rhs) {
    int iu = index(u), iv = index(v);
    if (iu == iv) throw PresentationError("relation between a variable and itself");
    RElem P = parse_relem(ring_, p), Q = parse_relem(ring_, q);
    LinearForm L = parse_linear(ring_, vars_, rhs);
    PairRelation r;
    int j, i;
    RElem scale;
    if (iu < iv) {
        // q v u = p u v - rhs
        i = iu;
        j = iv;
        scale = invert(Q);
        r.lead = scale * P;
        scale = -scale;
    } else {
        // p u v = q v u + rhs
        j = iu;
        i = iv;
        scale = invert(P);
        r.lead = scale * Q;
    }
    for (auto& a : L.linear) r.linear.push_back(scale * a);
    r.constant = scale * L.constant;
    rels_[{j, i}] = std::move(r);
    return *this;
}

PresentationBuilder& PresentationBuilder::flags(PresentationFlags f) {
    flags_ = f;
    return *this;
}

Presentation PresentationBuilder::build() const {
    std::vector<EndoSpec> sig;
    std::vector<DerivSpec> del;
    for (const auto& v : vars_) {
        std::vector<RElem> im;
        for (size_t g = 0; g < ring_->ngens(); ++g) {
            RElem def = RElem::gen(ring_, static_cast<int>(g));
            auto it = sigma_.find(v);
            if (it != sigma_.end()) {
                auto jt = it->second.find(ring_->gens[g]);
                if (jt != it->second.end()) def = parse_relem(ring_, jt->second);
            }
            im.push_back(def);
        }
        for (const auto& [var, m] : sigma_)
            for (const auto& [g, s] : m)
                if (ring_->index_of(g) < 0) throw PresentationError("sigma image for unknown generator '" + g + "'");
        EndoSpec s = EndoSpec::make(ring_, im);
        std::vector<RElem> dim;
        for (size_t g = 0; g < ring_->ngens(); ++g) {
            RElem def(ring_);
            auto it = delta_.find(v);
            if (it != delta_.end()) {
                auto jt = it->second.find(ring_->gens[g]);
                if (jt != it->second.end()) def = parse_relem(ring_, jt->second);
            }
            dim.push_back(def);
        }
        sig.push_back(s);
        del.push_back(DerivSpec::make(s, dim));
    }
    for (const auto& [var, m] : sigma_) (void)index(var);
    for (const auto& [var, m] : delta_) (void)index(var);
    return presentation_make(name_, ring_, vars_, sig, del, rels_, flags_);
}

// ---------------------------------------------------------------- catalog

namespace {

struct Params {
    const CatalogParams& p;
    std::string get(const std::string& k, const std::string& def) const {
        auto it = p.find(k);
        return it == p.end() ? def : it->second;
    }
    int integer(const std::string& k, int def) const {
        auto it = p.find(k);
        if (it == p.end()) return def;
        int v = std::stoi(it->second);
        if (v < 1) throw PresentationError("parameter " + k + " must be positive");
        return v;
    }
    Field field(const std::string& def) const { return parse_field(get("field", def)); }
};

std::vector<std::string> numbered(const std::string& base, int n) {
    if (n == 1) return {base};
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(base + std::to_string(i));
    return v;
}

void require_nonzero(const PresentationBuilder& b, const std::string& s, const std::string& what) {
    if (b.relem(s).is_zero()) throw PresentationError(what + " must be nonzero");
}

Presentation weyl(const Params& P) {
    int n = P.integer("n", 1);
    auto ts = numbered("t", n), xs = numbered("x", n);
    PresentationBuilder b("weyl", P.field("Q"), ts);
    b.vars(xs);
    for (int i = 0; i < n; ++i) b.delta(xs[i], {{ts[i], "1"}});
    b.flags({false, true});
    return b.build();
}

Presentation shift(const Params& P) {
    std::string h = P.get("h", "1");
    PresentationBuilder b("shift", P.field("Q"), {"t"});
    b.vars({"x"});
    b.sigma("x", {{"t", "t - (" + h + ")"}});
    b.flags({false, true});
    return b.build();
}

Presentation mixed(const Params& P) {
    std::string h = P.get("h", "1");
    PresentationBuilder b("mixed", P.field("Q"), {"t"});
    b.vars({"x", "xh"});
    b.delta("x", {{"t", "1"}});
    b.sigma("xh", {{"t", "t - (" + h + ")"}});
    b.relation("xh", "x", "1", "1", "0");
    b.flags({false, true});
    return b.build();
}

Presentation discrete_linear(const Params& P) {
    int n = P.integer("n", 2);
    auto ts = numbered("t", n), xs = numbered("x", n);
    PresentationBuilder b("discrete_linear", P.field("Q"), ts);
    b.vars(xs);
    for (int i = 0; i < n; ++i) b.sigma(xs[i], {{ts[i], ts[i] + " + 1"}});
    b.flags({false, true});
    return b.build();
}

Presentation quantum_affine(const Params& P, int ndef, const std::string& name) {
    int n = P.integer("n", ndef);
    std::string lambda = P.get("lambda", "q^-2");
    auto xs = n == 2 ? std::vector<std::string>{"x", "y"} : numbered("x", n);
    PresentationBuilder b(name, P.field("Q(q)"));
    b.vars(xs);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            std::string l = P.get("lambda" + std::to_string(i + 1) + std::to_string(j + 1), lambda);
            require_nonzero(b, l, "lambda");
            b.relation(xs[j], xs[i], "1", l, "0");
        }
    b.flags({true, true});
    return b.build();
}

Presentation additive_weyl(const Params& P) {
    int n = P.integer("n", 1);
    auto xs = numbered("x", n), ys = numbered("y", n);
    std::vector<std::string> vars = xs;
    vars.insert(vars.end(), ys.begin(), ys.end());
    PresentationBuilder b("additive_weyl", P.field("Q(q)"));
    b.vars(vars);
    for (int i = 0; i < n; ++i) {
        std::string q = P.get("q" + std::to_string(i + 1), P.get("q", "q"));
        require_nonzero(b, q, "q");
        b.relation(ys[i], xs[i], "1", q, "1");
    }
    b.flags({false, true});
    return b.build();
}

Presentation multiplicative_weyl(const Params& P) {
    return quantum_affine(P, 3, "multiplicative_weyl");
}

Presentation q_heisenberg(const Params& P) {
    int n = P.integer("n", 1);
    std::string q = P.get("q", "q");
    auto xs = numbered("x", n), ys = numbered("y", n), zs = numbered("z", n);
    std::vector<std::string> vars = xs;
    vars.insert(vars.end(), ys.begin(), ys.end());
    vars.insert(vars.end(), zs.begin(), zs.end());
    PresentationBuilder b("q_heisenberg", P.field("Q(q)"));
    require_nonzero(b, q, "q");
    b.vars(vars);
    for (int i = 0; i < n; ++i) {
        b.relation(zs[i], ys[i], "1", q, "0");
        b.relation(zs[i], xs[i], "1", "(" + q + ")^-1", ys[i]);
        b.relation(ys[i], xs[i], "1", q, "0");
    }
    b.flags({false, true});
    return b.build();
}

Presentation hayashi(const Params& P) {
    int n = P.integer("n", 1);
    std::string q = P.get("q", "q");
    auto xs = numbered("x", n), ys = numbered("y", n), zs = numbered("z", n);
    std::vector<std::string> vars = xs;
    vars.insert(vars.end(), zs.begin(), zs.end());
    PresentationBuilder b("hayashi", P.field("Q(q)"), ys, std::vector<bool>(n, true));
    require_nonzero(b, q, "q");
    b.vars(vars);
    for (int i = 0; i < n; ++i) {
        // y x = q x y and z y = q y z
        b.sigma(xs[i], {{ys[i], "(" + q + ")^-1*" + ys[i]}});
        b.sigma(zs[i], {{ys[i], "(" + q + ")*" + ys[i]}});
        b.relation(zs[i], xs[i], "1", q, ys[i] + "^-1");
    }
    b.flags({false, true});
    return b.build();
}

Presentation dispin(const Params& P) {
    PresentationBuilder b("dispin", P.field("Q"));
    b.vars({"x", "y", "z"});
    b.relation("y", "z", "1", "1", "z");
    b.relation("z", "x", "1", "-1", "y");
    b.relation("x", "y", "1", "1", "x");
    b.flags({false, true});
    return b.build();
}

Presentation u_sl2(const Params& P) {
    PresentationBuilder b("u_sl2", P.field("Q"));
    b.vars({"x", "y", "h"});
    b.relation("x", "y", "1", "1", "h");
    b.relation("h", "x", "1", "1", "2*x");
    b.relation("h", "y", "1", "1", "-2*y");
    b.flags({false, true});
    return b.build();
}

Presentation uq_sl2(const Params& P) {
    std::string q = P.get("q", "q");
    PresentationBuilder b("uq_sl2", P.field("Q(q)"), {"k"}, {true});
    require_nonzero(b, q, "q");
    b.vars({"f", "e"});
    b.sigma("f", {{"k", "(" + q + ")^2*k"}});
    b.sigma("e", {{"k", "(" + q + ")^-2*k"}});
    b.relation("e", "f", "1", "1", "(k - k^-1)/((" + q + ") - (" + q + ")^-1)");
    b.flags({false, true});
    return b.build();
}

Presentation uq_so3(const Params& P) {
    // q = s^2, so q^(1/2) = s
    PresentationBuilder b("uq_so3", P.field("Q(s)"));
    b.vars({"I1", "I2", "I3"});
    b.relation("I2", "I1", "1", "s^2", "-s*I3");
    b.relation("I3", "I1", "1", "s^-2", "s^-1*I2");
    b.relation("I3", "I2", "1", "s^2", "-s*I1");
    b.flags({false, true});
    return b.build();
}

Presentation diffusion(const Params& P) {
    int n = P.integer("n", 3);
    auto xs = numbered("x", n);
    PresentationBuilder b("diffusion", P.field("Q"));
    b.vars(xs);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
            std::string a = P.get("a" + ij, "1"), bb = P.get("b" + ij, "1");
            std::string ri = P.get("r" + std::to_string(i + 1), std::to_string(i + 1));
            std::string rj = P.get("r" + std::to_string(j + 1), std::to_string(j + 1));
            require_nonzero(b, a, "a" + ij);
            require_nonzero(b, bb, "b" + ij);
            b.relation(xs[i], xs[j], a, bb, "(" + rj + ")*" + xs[i] + " - (" + ri + ")*" + xs[j]);
        }
    b.flags({false, true});
    return b.build();
}

Presentation threedim(const Params& P) {
    std::string c = P.get("case", "e.i");
    std::string al = P.get("alpha", "2"), be = P.get("beta", "3"), ga = P.get("gamma", "5");
    std::string a = P.get("a", "1"), bp = P.get("b", "1");
    PresentationBuilder b("threedim", P.field("Q"));
    b.vars({"x", "y", "z"});
    auto rels = [&](const std::string& yzc, const std::string& yz, const std::string& zxc, const std::string& zx,
                    const std::string& xyc, const std::string& xy) {
        for (const auto& s : {yzc, zxc, xyc}) require_nonzero(b, s, "relation coefficient");
        b.relation("y", "z", "1", yzc, yz);
        b.relation("z", "x", "1", zxc, zx);
        b.relation("x", "y", "1", xyc, xy);
    };
    if (c == "a") rels(al, "0", be, "0", ga, "0");
    else if (c == "b.i") rels("1", "z", be, "y", "1", "x");
    else if (c == "b.ii") rels("1", "z", be, bp, "1", "x");
    else if (c == "b.iii") rels("1", "0", be, "y", "1", "0");
    else if (c == "b.iv") rels("1", "0", be, bp, "1", "0");
    else if (c == "b.v") rels("1", "(" + a + ")*z", be, "0", "1", "x");
    else if (c == "b.vi") rels("1", "z", be, "0", "1", "0");
    else if (c == "c.i") rels(al, "0", be, "y + (" + bp + ")", al, "0");
    else if (c == "c.ii") rels(al, "0", be, bp, al, "0");
    else if (c == "d") {
        auto g = [&](const std::string& k, const std::string& d) { return "(" + P.get(k, d) + ")"; };
        rels(al, g("a1", "1") + "*x + " + g("b1", "0"), al, g("a2", "1") + "*y + " + g("b2", "0"), al,
             g("a3", "1") + "*z + " + g("b3", "0"));
    } else if (c == "e.i") rels("1", "x", "1", "y", "1", "z");
    else if (c == "e.ii") rels("1", "0", "1", "0", "1", "z");
    else if (c == "e.iii") rels("1", "0", "1", "0", "1", bp);
    else if (c == "e.iv") rels("1", "-y", "1", "x + y", "1", "0");
    else if (c == "e.v") rels("1", "(" + a + ")*z", "1", "z", "1", "0");
    else throw PresentationError("unknown threedim case '" + c + "'");
    b.flags({false, true});
    return b.build();
}

Presentation sridharan_table1(const Params& P) {
    int t = P.integer("type", 10);
    Field F = P.field("Q");
    auto [g, f] = sridharan_table1_data(t, parse_scalar(F, P.get("alpha", "2")));
    return sridharan_presentation(g, f, "sridharan_table1");
}

Presentation sridharan(const Params& P) {
    Field F = P.field("Q");
    std::string kind = P.get("g", "abelian");
    int n = P.integer("n", 2);
    LieData g;
    if (kind == "abelian") {
        g = LieData::abelian(F, numbered("x", n));
    } else if (kind == "sl2") {
        g = LieData::abelian(F, {"x", "y", "h"});
        auto v = [&](long a, long b, long c) {
            return std::vector<Scalar>{Scalar(F, mpq_class(a)), Scalar(F, mpq_class(b)), Scalar(F, mpq_class(c))};
        };
        g.set(0, 1, v(0, 0, 1));
        g.set(2, 0, v(2, 0, 0));
        g.set(2, 1, v(0, -2, 0));
    } else if (kind == "heisenberg") {
        g = LieData::abelian(F, {"x", "y", "z"});
        g.set(0, 1, {Scalar::zero(F), Scalar::zero(F), Scalar::one(F)});
    } else {
        throw PresentationError("unknown Lie algebra '" + kind + "'");
    }
    LieCocycle f = LieCocycle::zero(F, g.dim());
    for (size_t j = 0; j < g.dim(); ++j)
        for (size_t i = 0; i < j; ++i) {
            std::string key = "f" + std::to_string(i + 1) + std::to_string(j + 1);
            if (P.p.count(key)) f.set(static_cast<int>(i), static_cast<int>(j), parse_scalar(F, P.get(key, "0")));
        }
    Report r = check_lie(g);
    r.merge(check_cocycle(g, f));
    if (!r.pass()) throw PresentationError("invalid Sridharan data: " + r.first_failure());
    return sridharan_presentation(g, f, "sridharan");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> e = {
        {"weyl", "Weyl algebra A_n over Q[t_1..t_n] (n)"},
        {"shift", "algebra of shift operators Q[t][x; sigma_h] (h)"},
        {"mixed", "mixed algebra Q[t][x; d/dt][xh; sigma_h] (h)"},
        {"discrete_linear", "multidimensional discrete linear systems (n)"},
        {"quantum_plane", "quantum plane yx = lambda xy over Q(q) (lambda)"},
        {"quantum_affine", "quantum affine n-space x_j x_i = lambda x_i x_j (n, lambda)"},
        {"additive_weyl", "additive analogue of the Weyl algebra (n, q1..qn)"},
        {"multiplicative_weyl", "multiplicative analogue of the Weyl algebra (n, lambdaij)"},
        {"q_heisenberg", "q-Heisenberg algebra h_n(q) (n, q)"},
        {"hayashi", "Hayashi algebra over Q(q)[y^+-1] (n, q)"},
        {"dispin", "dispin algebra U(osp(1,2))"},
        {"u_sl2", "enveloping algebra U(sl2)"},
        {"uq_sl2", "quantum group U_q(sl2) over Q(q)[k^+-1] (q)"},
        {"uq_so3", "nonstandard quantum algebra U'_q(so3) over Q(s), q = s^2"},
        {"diffusion", "diffusion algebra (n, aij, bij, ri)"},
        {"threedim", "three-dimensional skew polynomial algebra (case, alpha, beta, gamma, a, b, a1..b3)"},
        {"sridharan", "Sridharan enveloping algebra U_f(g) (g=abelian|sl2|heisenberg, n, fij)"},
        {"sridharan_table1", "three-dimensional Sridharan algebra of the given table type (type, alpha)"},
    };
    return e;
}

Presentation catalog(const std::string& name, const CatalogParams& params) {
    Params P{params};
    if (name == "weyl") return weyl(P);
    if (name == "shift") return shift(P);
    if (name == "mixed") return mixed(P);
    if (name == "discrete_linear") return discrete_linear(P);
    if (name == "quantum_plane") return quantum_affine(P, 2, "quantum_plane");
    if (name == "quantum_affine") return quantum_affine(P, 3, "quantum_affine");
    if (name == "additive_weyl") return additive_weyl(P);
    if (name == "multiplicative_weyl") return multiplicative_weyl(P);
    if (name == "q_heisenberg") return q_heisenberg(P);
    if (name == "hayashi") return hayashi(P);
    if (name == "dispin") return dispin(P);
    if (name == "u_sl2") return u_sl2(P);
    if (name == "uq_sl2") return uq_sl2(P);
    if (name == "uq_so3") return uq_so3(P);
    if (name == "diffusion") return diffusion(P);
    if (name == "threedim") return threedim(P);
    if (name == "sridharan") return sridharan(P);
    if (name == "sridharan_table1") return sridharan_table1(P);
    throw PresentationError("unknown catalog entry '" + name + "'");
}

}  // namespace skewhopf
