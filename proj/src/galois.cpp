#include "skewhopf/galois.hpp"

#include <map>
#include <tuple>

namespace skewhopf {

namespace {

SVec pair_mul(const FinDimAlg& A, const FinDimAlg& H, const SVec& x, const SVec& y) {
    return tensor_mul({&A, &H}, x, y);
}

// a x b for vectors in two spaces
SVec outer(const SVec& a, const SVec& b, size_t nb) {
    SVec r;
    for (const auto& [i, c] : a.entries())
        for (const auto& [j, d] : b.entries()) r.add(i * nb + j, c * d);
    return r;
}

std::string pair_label(const FinDimAlg& A, size_t i, size_t j) { return A.labels()[i] + " * " + A.labels()[j]; }

std::string witness_of(const LinMap& a, const LinMap& b, const std::vector<std::string>& labels) {
    auto d = a.first_difference(b);
    return d ? labels[*d] : std::string();
}

LinMap coinvariant_constraint(const ComoduleAlgebra& C) {
    const size_t nA = C.A.dim(), nH = C.H.dim();
    LinMap K = C.rho;
    for (size_t i = 0; i < nA; ++i) K.cols()[i] -= outer(C.A.basis(i), C.H.alg.unit(), nH);
    return K;
}

std::optional<LinMap> invert(const LinMap& m) {
    auto inv = inverse(m.dense());
    if (!inv) return std::nullopt;
    return LinMap::from_dense(*inv, m.cod(), m.dom());
}

SVec act_on(const ActionSpec& act, const SVec& h, const SVec& a) {
    const size_t nA = act.A.dim();
    SVec r;
    for (const auto& [i, c] : h.entries())
        for (const auto& [j, d] : a.entries()) r += act.action.col(i * nA + j).scaled(c * d);
    return r;
}

Scalar counit(const HopfData& H, const SVec& h) { return H.eps.apply(h).at(0, H.field()); }

}  // namespace

// ---------------------------------------------------------------- comodule algebras

Report check_comodule_algebra(const ComoduleAlgebra& C, Exec exec) {
    Report rep;
    const size_t nA = C.A.dim(), nH = C.H.dim();
    const Space AH{nA, nH};
    LinMap lhs = on_factors(C.rho, AH, 0, 1).after(C.rho);
    LinMap rhs = on_factors(C.H.delta, AH, 1, 1).after(C.rho);
    rep.add("coassociativity", lhs == rhs, witness_of(lhs, rhs, C.A.labels()));
    LinMap cu = on_factors(C.H.eps, AH, 1, 1).after(C.rho);
    LinMap id = LinMap::identity(C.A.field(), Space{nA});
    rep.add("counit", cu == id, witness_of(cu, id, C.A.labels()));
    auto bad = scan_first(nA * nA, exec, [&](size_t ij) {
        size_t i = ij / nA, j = ij % nA;
        return C.rho.apply(C.A.product(i, j)) != pair_mul(C.A, C.H.alg, C.rho.col(i), C.rho.col(j));
    });
    rep.add("multiplicative", !bad, bad ? pair_label(C.A, *bad / nA, *bad % nA) : "");
    rep.add("unit", C.rho.apply(C.A.unit()) == outer(C.A.unit(), C.H.alg.unit(), nH), "1");
    return rep;
}

ComoduleAlgebra regular_comodule(const HopfData& H) { return ComoduleAlgebra{H.name, H.alg, H, H.delta}; }

ComoduleAlgebra trivial_comodule(const FinDimAlg& A, const HopfData& H) {
    LinMap rho(A.field(), Space{A.dim()}, Space{A.dim(), H.dim()});
    for (size_t i = 0; i < A.dim(); ++i) rho.cols()[i] = outer(A.basis(i), H.alg.unit(), H.dim());
    return ComoduleAlgebra{"trivial", A, H, rho};
}

std::vector<SVec> coinvariants(const ComoduleAlgebra& C, Exec exec) {
    return subspace_solve(coinvariant_constraint(C), exec).basis;
}

bool is_subalgebra(const FinDimAlg& A, const std::vector<SVec>& basis) {
    Subspace S(A.field(), A.dim(), basis);
    if (!S.contains(A.unit())) return false;
    for (const auto& a : S.basis())
        for (const auto& b : S.basis())
            if (!S.contains(A.mul(a, b))) return false;
    return true;
}

RelTensor rel_tensor(const FinDimAlg& A, const std::vector<SVec>& B_basis) {
    if (!is_subalgebra(A, B_basis)) {
        Report r;
        r.add("subalgebra", false, "span is not a unital subalgebra");
        throw AxiomError("rel_tensor: B is not a subalgebra", r);
    }
    const size_t n = A.dim();
    const Field f = A.field();
    std::vector<SVec> rels;
    const Subspace B(f, n, B_basis);
    for (const auto& b : B.basis())
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                SVec v = outer(A.mul(A.basis(i), b), A.basis(k), n) - outer(A.basis(i), A.mul(b, A.basis(k)), n);
                if (!v.is_zero()) rels.push_back(std::move(v));
            }
    RelTensor rt;
    rt.dim_a = n;
    rt.q = Quotient(f, n * n, std::move(rels));
    rt.relation_rank = static_cast<long>(rt.q.sub.dim());
    return rt;
}

// ---------------------------------------------------------------- Galois map

GaloisReport galois_check(const ComoduleAlgebra& C, Exec exec) {
    GaloisReport g;
    const size_t nA = C.A.dim(), nH = C.H.dim();
    const Field f = C.A.field();
    g.report.merge(check_comodule_algebra(C, exec), "comodule");
    g.coinvariants = coinvariants(C, exec);
    bool sub = is_subalgebra(C.A, g.coinvariants);
    g.report.add("coinvariants_subalgebra", sub, "not closed").dims = {static_cast<long>(g.coinvariants.size())};
    if (!sub) return g;
    g.rt = rel_tensor(C.A, g.coinvariants);

    const Space AA{nA, nA}, AH{nA, nH};
    LinMap bfull(f, AA, AH), bpfull(f, AA, AH);
    for (size_t i = 0; i < nA; ++i)
        for (size_t j = 0; j < nA; ++j) {
            bfull.cols()[i * nA + j] = pair_mul(C.A, C.H.alg, outer(C.A.basis(i), C.H.alg.unit(), nH), C.rho.col(j));
            bpfull.cols()[i * nA + j] = pair_mul(C.A, C.H.alg, C.rho.col(i), outer(C.A.basis(j), C.H.alg.unit(), nH));
        }
    std::string w;
    for (size_t k = 0; k < g.rt.q.sub.dim() && w.empty(); ++k)
        if (!bfull.apply(g.rt.q.sub.basis()[k]).is_zero() || !bpfull.apply(g.rt.q.sub.basis()[k]).is_zero())
            w = "relation " + std::to_string(k);
    g.report.add("beta_well_defined", w.empty(), w).dims = {g.rt.relation_rank};

    const size_t m = g.rt.dim();
    g.beta = LinMap(f, Space{m}, AH);
    g.beta_prime = LinMap(f, Space{m}, AH);
    for (size_t p = 0; p < m; ++p) {
        g.beta.cols()[p] = bfull.col(g.rt.q.complement[p]);
        g.beta_prime.cols()[p] = bpfull.col(g.rt.q.complement[p]);
    }
    g.rank_beta = rank(g.beta.dense(), exec);
    g.rank_beta_prime = rank(g.beta_prime.dense(), exec);
    const long target = static_cast<long>(nA * nH);
    g.bijective = g.rank_beta == static_cast<long>(m) && g.rank_beta == target;
    g.bijective_prime = g.rank_beta_prime == static_cast<long>(m) && g.rank_beta_prime == target;
    auto deficit = [&](long r) {
        return "rank " + std::to_string(r) + ", domain " + std::to_string(m) + ", codomain " + std::to_string(target);
    };
    Check& cb = g.report.add("beta_bijective", g.bijective, deficit(g.rank_beta));
    cb.rank = g.rank_beta;
    cb.dims = {static_cast<long>(m), target};
    Check& cp = g.report.add("beta_prime_bijective", g.bijective_prime, deficit(g.rank_beta_prime));
    cp.rank = g.rank_beta_prime;
    cp.dims = {static_cast<long>(m), target};
    if (g.bijective) g.beta_inverse = invert(g.beta);

    if (auto Sinv = invert(C.H.S)) {
        LinMap phi(f, AH, AH), phinv(f, AH, AH);
        for (size_t a = 0; a < nA; ++a)
            for (size_t h = 0; h < nH; ++h) {
                phi.cols()[a * nH + h] =
                    pair_mul(C.A, C.H.alg, C.rho.col(a), outer(C.A.unit(), C.H.S.col(h), nH));
                // a0 x S^-1(h) a1
                SVec v;
                for (const auto& [idx, c] : C.rho.col(a).entries())
                    v += outer(C.A.basis(idx / nH), C.H.alg.mul(Sinv->col(h), C.H.alg.basis(idx % nH)), nH).scaled(c);
                phinv.cols()[a * nH + h] = v;
            }
        LinMap id = LinMap::identity(f, AH);
        g.report.add("phi_inverse", phi.after(phinv) == id && phinv.after(phi) == id, "phi is not invertible");
        LinMap conj = phi.after(g.beta);
        g.report.add("phi_conjugation", conj == g.beta_prime,
                     conj.first_difference(g.beta_prime) ? "column " + std::to_string(*conj.first_difference(g.beta_prime))
                                                         : "");
        g.report.add("beta_prime_agrees", g.bijective == g.bijective_prime, "beta and beta' disagree");
    }
    return g;
}

std::optional<size_t> inverse_mismatch(const GaloisReport& g, const LinMap& candidate) {
    if (!g.beta_inverse) return 0;
    for (size_t c = 0; c < candidate.dom().size(); ++c)
        if (g.rt.q.project(candidate.col(c)) != g.beta_inverse->col(c)) return c;
    return std::nullopt;
}

LinMap hopf_galois_inverse(const HopfData& H) {
    const size_t n = H.dim();
    LinMap m(H.field(), Space{n, n}, Space{n, n});
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            SVec v;
            for (const auto& [ij, c] : H.delta.col(b).entries())
                v += outer(H.alg.mul(H.alg.basis(a), H.S.col(ij / n)), H.alg.basis(ij % n), n).scaled(c);
            m.cols()[a * n + b] = v;
        }
    return m;
}

// ---------------------------------------------------------------- gradings

ComoduleAlgebra grading_to_comodule(const FinDimAlg& A, const GroupTable& G, const std::vector<size_t>& deg) {
    const size_t n = A.dim();
    Report rep;
    std::string w;
    if (deg.size() != n) w = "one degree per basis vector required";
    for (size_t i = 0; i < n && w.empty(); ++i)
        for (size_t j = 0; j < n && w.empty(); ++j)
            for (const auto& [k, c] : A.product(i, j).entries())
                if (deg[k] != G.mul(deg[i], deg[j])) {
                    w = pair_label(A, i, j);
                    break;
                }
    for (const auto& [k, c] : A.unit().entries())
        if (w.empty() && deg[k] != G.identity) w = "unit";
    rep.add("grading", w.empty(), w);
    if (!rep.pass()) throw AxiomError("grading does not respect multiplication: " + w, rep);
    HopfData H = group_algebra(G, A.field());
    LinMap rho(A.field(), Space{n}, Space{n, G.size()});
    for (size_t i = 0; i < n; ++i) rho.cols()[i] = SVec::unit(i * G.size() + deg[i], A.field());
    return ComoduleAlgebra{"graded", A, H, rho};
}

Report strongly_graded_check(const FinDimAlg& A, const GroupTable& G, const std::vector<size_t>& deg, Exec exec) {
    Report rep;
    const size_t n = A.dim();
    const Field f = A.field();
    std::vector<SVec> one;
    for (size_t k = 0; k < n; ++k)
        if (deg[k] == G.identity) one.push_back(A.basis(k));
    Subspace A1(f, n, one);
    std::string w;
    for (size_t g = 0; g < G.size() && w.empty(); ++g) {
        std::vector<SVec> span;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (deg[i] == g && deg[j] == G.inverse(g)) span.push_back(A.product(i, j));
        if (!(Subspace(f, n, span) == A1)) w = G.labels[g];
    }
    bool strong = w.empty();
    rep.add("strongly_graded", strong, w).dims = {static_cast<long>(A1.dim())};
    GaloisReport g = galois_check(grading_to_comodule(A, G, deg), exec);
    const Check* b = g.report.find("beta_bijective");
    Check& c = rep.add("galois", g.bijective, b ? b->witness : "no Galois map");
    if (b) {
        c.rank = b->rank;
        c.dims = b->dims;
    }
    rep.add("agreement", strong == g.bijective, "strongly graded and Galois disagree");
    return rep;
}

// ---------------------------------------------------------------- actions and duality

Report check_module_algebra(const ActionSpec& act, Exec exec) {
    Report rep;
    const FinDimAlg& A = act.A;
    const HopfData& H = act.H;
    const size_t nA = A.dim(), nH = H.dim();
    std::string w;
    for (size_t a = 0; a < nA && w.empty(); ++a)
        if (act_on(act, H.alg.unit(), A.basis(a)) != A.basis(a)) w = A.labels()[a];
    rep.add("unit_acts", w.empty(), w);
    auto bad = scan_first(nH * nH * nA, exec, [&](size_t x) {
        size_t h = x / (nH * nA), k = x / nA % nH, a = x % nA;
        return act_on(act, H.alg.basis(h), act.action.col(k * nA + a)) != act_on(act, H.alg.product(h, k), A.basis(a));
    });
    rep.add("module_associativity", !bad,
            bad ? H.alg.labels()[*bad / (nH * nA)] + " . (" + H.alg.labels()[*bad / nA % nH] + " . " +
                      A.labels()[*bad % nA] + ")"
                : "");
    bad = scan_first(nH * nA * nA, exec, [&](size_t x) {
        size_t h = x / (nA * nA), a = x / nA % nA, b = x % nA;
        SVec rhs;
        for (const auto& [ij, c] : H.delta.col(h).entries())
            rhs += A.mul(act_on(act, H.alg.basis(ij / nH), A.basis(a)), act_on(act, H.alg.basis(ij % nH), A.basis(b)))
                       .scaled(c);
        return act_on(act, H.alg.basis(h), A.product(a, b)) != rhs;
    });
    rep.add("measuring", !bad,
            bad ? H.alg.labels()[*bad / (nA * nA)] + " . (" + pair_label(A, *bad / nA % nA, *bad % nA) + ")" : "");
    w.clear();
    for (size_t h = 0; h < nH && w.empty(); ++h)
        if (act_on(act, H.alg.basis(h), A.unit()) != A.unit().scaled(counit(H, H.alg.basis(h)))) w = H.alg.labels()[h];
    rep.add("unit_measuring", w.empty(), w);
    return rep;
}

ActionSpec comodule_to_action(const ComoduleAlgebra& C) {
    const size_t nA = C.A.dim(), nH = C.H.dim();
    HopfData D = dual_hopf(C.H);
    LinMap action(C.A.field(), Space{nH, nA}, Space{nA});
    for (size_t a = 0; a < nA; ++a)
        for (const auto& [idx, c] : C.rho.col(a).entries()) action.cols()[(idx % nH) * nA + a].add(idx / nH, c);
    return ActionSpec{D, C.A, action};
}

ComoduleAlgebra action_to_comodule(const ActionSpec& act) {
    const size_t nA = act.A.dim(), nH = act.H.dim();
    HopfData D = dual_hopf(act.H);
    LinMap rho(act.A.field(), Space{nA}, Space{nA, nH});
    for (size_t k = 0; k < nH; ++k)
        for (size_t a = 0; a < nA; ++a)
            for (const auto& [i, c] : act.action.col(k * nA + a).entries()) rho.cols()[a].add(i * nH + k, c);
    return ComoduleAlgebra{"dual", act.A, D, rho};
}

std::vector<SVec> invariants(const ActionSpec& act) {
    const size_t nA = act.A.dim(), nH = act.H.dim();
    LinMap K(act.A.field(), Space{nA}, Space{nH, nA});
    for (size_t a = 0; a < nA; ++a)
        for (size_t h = 0; h < nH; ++h) {
            SVec v = act.action.col(h * nA + a) - act.A.basis(a).scaled(counit(act.H, act.H.alg.basis(h)));
            for (const auto& [i, c] : v.entries()) K.cols()[a].add(h * nA + i, c);
        }
    return subspace_solve(K).basis;
}

Report dual_correspondence_check(const ComoduleAlgebra& C) {
    Report rep;
    ActionSpec act = comodule_to_action(C);
    rep.merge(check_module_algebra(act), "action");
    ComoduleAlgebra back = action_to_comodule(act);
    rep.add("round_trip", back.rho == C.rho && same_structure(back.H, C.H), "coaction changed");
    auto inv = invariants(act), co = coinvariants(C);
    Subspace a(C.A.field(), C.A.dim(), inv), b(C.A.field(), C.A.dim(), co);
    rep.add("fixed_points_equal_coinvariants", a == b, "subspaces differ").dims = {static_cast<long>(a.dim()),
                                                                                   static_cast<long>(b.dim())};
    return rep;
}

// ---------------------------------------------------------------- smash and crossed products

ComoduleAlgebra smash_product(const ActionSpec& act) {
    const FinDimAlg& R = act.A;
    const HopfData& H = act.H;
    const size_t nR = R.dim(), nH = H.dim(), n = nR * nH;
    const Field f = R.field();
    std::vector<std::string> labels;
    for (size_t r = 0; r < nR; ++r)
        for (size_t h = 0; h < nH; ++h) labels.push_back(R.labels()[r] + "#" + H.alg.labels()[h]);
    std::vector<SVec> table(n * n);
    for (size_t r = 0; r < nR; ++r)
        for (size_t g = 0; g < nH; ++g)
            for (size_t s = 0; s < nR; ++s)
                for (size_t h = 0; h < nH; ++h) {
                    SVec v;
                    for (const auto& [ij, c] : H.delta.col(g).entries()) {
                        SVec left = R.mul(R.basis(r), act.action.col((ij / nH) * nR + s));
                        v += outer(left, H.alg.product(ij % nH, h), nH).scaled(c);
                    }
                    table[(r * nH + g) * n + s * nH + h] = v;
                }
    FinDimAlg A = algebra_make(f, std::move(labels), std::move(table), outer(R.unit(), H.alg.unit(), nH));
    LinMap rho(f, Space{n}, Space{n, nH});
    for (size_t r = 0; r < nR; ++r)
        for (size_t h = 0; h < nH; ++h)
            for (const auto& [ij, c] : H.delta.col(h).entries())
                rho.cols()[r * nH + h].add((r * nH + ij / nH) * nH + ij % nH, c);
    return ComoduleAlgebra{"smash", std::move(A), H, std::move(rho)};
}

LinMap smash_galois_inverse(const ActionSpec& act) {
    const FinDimAlg& R = act.A;
    const HopfData& H = act.H;
    const size_t nR = R.dim(), nH = H.dim(), n = nR * nH;
    LinMap m(R.field(), Space{n, nH}, Space{n, n});
    for (size_t r = 0; r < nR; ++r)
        for (size_t h = 0; h < nH; ++h)
            for (size_t g = 0; g < nH; ++g) {
                SVec v;
                for (const auto& [ij, c] : H.delta.col(g).entries()) {
                    SVec left = outer(R.basis(r), H.alg.mul(H.alg.basis(h), H.S.col(ij / nH)), nH);
                    SVec right = outer(R.unit(), H.alg.basis(ij % nH), nH);
                    v += outer(left, right, n).scaled(c);
                }
                m.cols()[(r * nH + h) * nH + g] = v;
            }
    return m;
}

LinMap group_cocycle(const GroupTable& G, const FinDimAlg& R,
                     const std::vector<std::tuple<size_t, size_t, Scalar>>& values) {
    const size_t n = G.size();
    LinMap s(R.field(), Space{n, n}, Space{R.dim()});
    for (size_t i = 0; i < n * n; ++i) s.cols()[i] = R.unit();
    for (const auto& [g, h, c] : values) s.cols()[g * n + h] = R.unit().scaled(c);
    return s;
}

CrossedResult crossed_product(const HopfData& H, const FinDimAlg& R, const LinMap& action, const LinMap& sigma,
                              Exec exec) {
    CrossedResult out;
    Report& rep = out.report;
    const size_t nR = R.dim(), nH = H.dim();
    const Field f = R.field();
    ActionSpec act{H, R, action};
    auto sig = [&](const SVec& x, const SVec& y) {
        SVec r;
        for (const auto& [i, c] : x.entries())
            for (const auto& [j, d] : y.entries()) r += sigma.col(i * nH + j).scaled(c * d);
        return r;
    };
    auto hb = [&](size_t i) { return H.alg.basis(i); };
    const auto& lab = H.alg.labels();

    Report mod = check_module_algebra(act, exec);
    for (const char* name : {"unit_acts", "measuring", "unit_measuring"}) {
        const Check* c = mod.find(name);
        rep.add(name, c->pass, c->witness);
    }
    std::string w;
    for (size_t h = 0; h < nH && w.empty(); ++h) {
        SVec e = R.unit().scaled(counit(H, hb(h)));
        if (sig(hb(h), H.alg.unit()) != e || sig(H.alg.unit(), hb(h)) != e) w = lab[h];
    }
    rep.add("cocycle_normalized", w.empty(), w);

    HopfData HH = tensor_hopf(H, H);
    out.sigma_inverse = convolution_inverse(sigma, HH.delta, HH.eps, R);
    rep.add("cocycle_invertible", out.sigma_inverse.has_value(), "no convolution inverse");

    // [g1 . sigma(h1, k1)] sigma(g2, h2 k2) = sigma(g1, h1) sigma(g2 h2, k)
    auto bad = scan_first(nH * nH * nH, exec, [&](size_t x) {
        size_t g = x / (nH * nH), h = x / nH % nH, k = x % nH;
        SVec lhs, rhs;
        for (const auto& [gg, cg] : H.delta.col(g).entries())
            for (const auto& [hh, ch] : H.delta.col(h).entries()) {
                size_t g1 = gg / nH, g2 = gg % nH, h1 = hh / nH, h2 = hh % nH;
                for (const auto& [kk, ck] : H.delta.col(k).entries()) {
                    size_t k1 = kk / nH, k2 = kk % nH;
                    SVec t = act_on(act, hb(g1), sig(hb(h1), hb(k1)));
                    lhs += R.mul(t, sig(hb(g2), H.alg.product(h2, k2))).scaled(cg * ch * ck);
                }
                rhs += R.mul(sig(hb(g1), hb(h1)), sig(H.alg.product(g2, h2), hb(k))).scaled(cg * ch);
            }
        return lhs != rhs;
    });
    rep.add("cocycle", !bad,
            bad ? "(" + lab[*bad / (nH * nH)] + ", " + lab[*bad / nH % nH] + ", " + lab[*bad % nH] + ")" : "");

    if (out.sigma_inverse) {
        // g . (h . r) = sigma(g1, h1) (g2 h2 . r) sigma^-1(g3, h3)
        LinMap D2 = delta2(H);
        const LinMap& sinv = *out.sigma_inverse;
        auto sigi = [&](const SVec& x, const SVec& y) {
            SVec r;
            for (const auto& [i, c] : x.entries())
                for (const auto& [j, d] : y.entries()) r += sinv.col(i * nH + j).scaled(c * d);
            return r;
        };
        bad = scan_first(nH * nH * nR, exec, [&](size_t x) {
            size_t g = x / (nH * nR), h = x / nR % nH, r = x % nR;
            SVec lhs = act_on(act, hb(g), act_on(act, hb(h), R.basis(r)));
            SVec rhs;
            for (const auto& [gi, cg] : D2.col(g).entries())
                for (const auto& [hi, ch] : D2.col(h).entries()) {
                    size_t g1 = gi / (nH * nH), g2 = gi / nH % nH, g3 = gi % nH;
                    size_t h1 = hi / (nH * nH), h2 = hi / nH % nH, h3 = hi % nH;
                    SVec mid = act_on(act, H.alg.product(g2, h2), R.basis(r));
                    rhs += R.mul(R.mul(sig(hb(g1), hb(h1)), mid), sigi(hb(g3), hb(h3))).scaled(cg * ch);
                }
            return lhs != rhs;
        });
        rep.add("twisted_module", !bad,
                bad ? "(" + lab[*bad / (nH * nR)] + ", " + lab[*bad / nR % nH] + ", " + R.labels()[*bad % nR] + ")" : "");
    }
    if (!rep.pass()) return out;

    // (r#g)(s#h) = r (g1 . s) sigma(g2, h1) # g3 h2
    const size_t n = nR * nH;
    LinMap D2 = delta2(H);
    std::vector<std::string> labels;
    for (size_t r = 0; r < nR; ++r)
        for (size_t h = 0; h < nH; ++h) labels.push_back(R.labels()[r] + "#" + lab[h]);
    std::vector<SVec> table(n * n);
    for (size_t r = 0; r < nR; ++r)
        for (size_t g = 0; g < nH; ++g)
            for (size_t s = 0; s < nR; ++s)
                for (size_t h = 0; h < nH; ++h) {
                    SVec v;
                    for (const auto& [gi, cg] : D2.col(g).entries())
                        for (const auto& [hi, ch] : H.delta.col(h).entries()) {
                            size_t g1 = gi / (nH * nH), g2 = gi / nH % nH, g3 = gi % nH;
                            size_t h1 = hi / nH, h2 = hi % nH;
                            SVec left = R.mul(R.mul(R.basis(r), act.action.col(g1 * nR + s)), sig(hb(g2), hb(h1)));
                            v += outer(left, H.alg.product(g3, h2), nH).scaled(cg * ch);
                        }
                    table[(r * nH + g) * n + s * nH + h] = v;
                }
    FinDimAlg A(f, std::move(labels), std::move(table), outer(R.unit(), H.alg.unit(), nH));
    Report ar = check_algebra(A, exec);
    rep.merge(ar, "algebra");
    if (!ar.pass()) return out;
    LinMap rho(f, Space{n}, Space{n, nH});
    for (size_t r = 0; r < nR; ++r)
        for (size_t h = 0; h < nH; ++h)
            for (const auto& [ij, c] : H.delta.col(h).entries())
                rho.cols()[r * nH + h].add((r * nH + ij / nH) * nH + ij % nH, c);
    ComoduleAlgebra C{"crossed", std::move(A), H, std::move(rho)};
    rep.merge(check_comodule_algebra(C, exec), "comodule");
    auto co = coinvariants(C, exec);
    rep.add("coinvariants", co.size() == nR, "dimension differs from R").dims = {static_cast<long>(co.size()),
                                                                                 static_cast<long>(nR)};
    out.C = std::move(C);
    return out;
}

// ---------------------------------------------------------------- cleft

Report cleft_check(const ComoduleAlgebra& C, const LinMap& gamma, Exec exec) {
    Report rep;
    const size_t nA = C.A.dim(), nH = C.H.dim();
    const Field f = C.A.field();
    LinMap lhs = C.rho.after(gamma);
    LinMap rhs = on_factors(gamma, Space{nH, nH}, 0, 1).after(C.H.delta);
    rep.add("comodule_map", lhs == rhs, witness_of(lhs, rhs, C.H.alg.labels()));
    // gamma(1) is invertible when gamma is; normalize by its inverse
    SVec u = gamma.apply(C.H.alg.unit());
    LinMap g = gamma;
    if (u != C.A.unit()) {
        Matrix L(f, nA, nA);
        for (size_t j = 0; j < nA; ++j)
            for (const auto& [i, c] : C.A.mul(u, C.A.basis(j)).entries()) L(i, j) = c;
        std::vector<Scalar> b(nA, Scalar::zero(f));
        for (const auto& [i, c] : C.A.unit().entries()) b[i] = c;
        auto x = solve(L, b);
        bool ok = x.has_value();
        if (ok) {
            SVec uinv;
            for (size_t i = 0; i < nA; ++i) uinv.add(i, (*x)[i]);
            ok = C.A.mul(uinv, u) == C.A.unit();
            for (size_t h = 0; h < nH; ++h) g.cols()[h] = C.A.mul(uinv, gamma.col(h));
        }
        rep.add("normalizable", ok, "gamma(1) is not invertible");
    } else {
        rep.add("normalizable", true);
    }
    auto inv = convolution_inverse(g, C.H.delta, C.H.eps, C.A);
    rep.add("convolution_invertible", inv.has_value(), "no convolution inverse").dims = {static_cast<long>(nH),
                                                                                          static_cast<long>(nA)};
    (void)exec;
    return rep;
}

// ---------------------------------------------------------------- Ore extensions

std::vector<SVec> ore_product(const FinDimAlg& R, const LinMap& sigma, const LinMap& delta, size_t a, int i, size_t b,
                              int j) {
    // x^i s as coefficients of x^k
    std::vector<SVec> p{R.basis(b)};
    for (int step = 0; step < i; ++step) {
        std::vector<SVec> next(p.size() + 1);
        for (size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += sigma.apply(p[k]);
            next[k] += delta.apply(p[k]);
        }
        p = std::move(next);
    }
    std::vector<SVec> out(p.size() + j);
    for (size_t k = 0; k < p.size(); ++k) out[k + j] = R.mul(R.basis(a), p[k]);
    return out;
}

namespace {

Report ore_preconditions(const ComoduleAlgebra& Rc, const LinMap& sigma, const LinMap& delta) {
    Report rep;
    const FinDimAlg& R = Rc.A;
    const size_t nR = R.dim(), nH = Rc.H.dim();
    const Space RH{nR, nH};
    LinMap s1 = Rc.rho.after(sigma), s2 = on_factors(sigma, RH, 0, 1).after(Rc.rho);
    rep.add("sigma_colinear", s1 == s2, witness_of(s1, s2, R.labels()));
    LinMap d1 = Rc.rho.after(delta), d2 = on_factors(delta, RH, 0, 1).after(Rc.rho);
    rep.add("delta_colinear", d1 == d2, witness_of(d1, d2, R.labels()));
    std::string w;
    if (sigma.apply(R.unit()) != R.unit()) w = "sigma(1)";
    for (size_t a = 0; a < nR && w.empty(); ++a)
        for (size_t b = 0; b < nR && w.empty(); ++b) {
            SVec ab = R.product(a, b);
            if (sigma.apply(ab) != R.mul(sigma.col(a), sigma.col(b)))
                w = "sigma on " + pair_label(R, a, b);
            else if (delta.apply(ab) != R.mul(sigma.col(a), delta.col(b)) + R.mul(delta.col(a), R.basis(b)))
                w = "delta on " + pair_label(R, a, b);
        }
    rep.add("ore_data", w.empty(), w);
    return rep;
}

}  // namespace

InducedCoaction induced_ore_coaction(const ComoduleAlgebra& Rc, const LinMap& sigma, const LinMap& delta, int d,
                                     Exec exec) {
    InducedCoaction out;
    out.d = d;
    Report& rep = out.report;
    rep.degree_bound = d;
    const FinDimAlg& R = Rc.A;
    const HopfData& H = Rc.H;
    const size_t nR = R.dim(), nH = H.dim();
    const Field f = R.field();
    rep.merge(ore_preconditions(Rc, sigma, delta));
    if (!rep.pass()) return out;

    const size_t n = nR * (d + 1);
    out.dim = n;
    const Space FH{n, nH};
    out.rho = LinMap(f, Space{n}, FH);
    for (int k = 0; k <= d; ++k)
        for (size_t r = 0; r < nR; ++r)
            for (const auto& [idx, c] : Rc.rho.col(r).entries())
                out.rho.cols()[k * nR + r].add((k * nR + idx / nH) * nH + idx % nH, c);
    std::vector<std::string> labels;
    for (int k = 0; k <= d; ++k)
        for (size_t r = 0; r < nR; ++r) labels.push_back(R.labels()[r] + (k ? "*x^" + std::to_string(k) : ""));

    LinMap lhs = on_factors(out.rho, FH, 0, 1).after(out.rho);
    LinMap rhs = on_factors(H.delta, FH, 1, 1).after(out.rho);
    rep.add("coassociativity", lhs == rhs, witness_of(lhs, rhs, labels));
    LinMap cu = on_factors(H.eps, FH, 1, 1).after(out.rho);
    LinMap id = LinMap::identity(f, Space{n});
    rep.add("counit", cu == id, witness_of(cu, id, labels));

    auto fmul = [&](size_t a, size_t b) {
        // product of basis vectors of F_d, assumed to stay inside F_d
        int i = static_cast<int>(a / nR), j = static_cast<int>(b / nR);
        auto coeffs = ore_product(R, sigma, delta, a % nR, i, b % nR, j);
        SVec v;
        for (size_t k = 0; k < coeffs.size(); ++k)
            for (const auto& [r, c] : coeffs[k].entries()) v.add(k * nR + r, c);
        return v;
    };
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (static_cast<int>(a / nR + b / nR) <= d) pairs.emplace_back(a, b);
    auto bad = scan_first(pairs.size(), exec, [&](size_t x) {
        auto [a, b] = pairs[x];
        SVec prod;
        for (const auto& [ia, ca] : out.rho.col(a).entries())
            for (const auto& [ib, cb] : out.rho.col(b).entries()) {
                SVec ab = fmul(ia / nH, ib / nH);
                prod += outer(ab, H.alg.product(ia % nH, ib % nH), nH).scaled(ca * cb);
            }
        return out.rho.apply(fmul(a, b)) != prod;
    });
    rep.add("multiplicative", !bad, bad ? labels[pairs[*bad].first] + " * " + labels[pairs[*bad].second] : "").dims = {
        static_cast<long>(pairs.size())};
    rep.add("unit", out.rho.apply(R.unit()) == outer(R.unit(), H.alg.unit(), nH), "1");

    LinMap K = out.rho;
    for (size_t i = 0; i < n; ++i) K.cols()[i] -= outer(SVec::unit(i, f), H.alg.unit(), nH);
    out.coinvariants = subspace_solve(K, exec).basis;
    std::vector<SVec> expected;
    for (const auto& b : coinvariants(Rc, exec))
        for (int k = 0; k <= d; ++k) {
            SVec v;
            for (const auto& [r, c] : b.entries()) v.add(k * nR + r, c);
            expected.push_back(v);
        }
    Subspace got(f, n, out.coinvariants), want(f, n, expected);
    rep.add("coinvariants", got == want, "coinvariants differ from R^coH[x]").dims = {static_cast<long>(got.dim()),
                                                                                       static_cast<long>(want.dim())};
    return out;
}

Report truncated_galois_check(const ComoduleAlgebra& Rc, const LinMap& sigma, int d, Exec exec) {
    Report rep;
    rep.degree_bound = d;
    const FinDimAlg& R = Rc.A;
    const HopfData& H = Rc.H;
    const size_t nR = R.dim(), nH = H.dim();
    const Field f = R.field();
    GaloisReport gr = galois_check(Rc, exec);
    rep.add("galois_object", gr.bijective && gr.coinvariants.size() == 1, "R is not a Galois object");
    long rs = rank(sigma.dense(), exec);
    Check& inj = rep.add("sigma_injective", rs == static_cast<long>(nR), "rank " + std::to_string(rs));
    inj.rank = rs;
    LinMap zero = LinMap::zero(f, Space{nR}, Space{nR});
    for (const auto& c : ore_preconditions(Rc, sigma, zero).checks)
        if (c.name != "delta_colinear") rep.checks.push_back(c);
    if (!rep.pass()) return rep;

    // sigma^m on basis vectors
    std::vector<LinMap> spow{LinMap::identity(f, Space{nR})};
    for (int m = 1; m <= d; ++m) spow.push_back(sigma.after(spow.back()));

    // truncation basis: r x^i (x) s x^j with i + j <= d
    std::map<std::tuple<size_t, int, size_t, int>, size_t> index;
    std::vector<std::tuple<size_t, int, size_t, int>> words;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            for (size_t r = 0; r < nR; ++r)
                for (size_t s = 0; s < nR; ++s) {
                    index[{r, i, s, j}] = words.size();
                    words.emplace_back(r, i, s, j);
                }
    const size_t N = words.size();
    std::vector<SVec> rels;
    for (const auto& [r, i, s, j] : words)
        for (int m = 1; i + m + j <= d; ++m) {
            SVec v = SVec::unit(index.at({r, i + m, s, j}), f);
            for (const auto& [t, c] : spow[m].col(s).entries()) v.add(index.at({r, i, t, m + j}), -c);
            rels.push_back(std::move(v));
        }
    Quotient Q(f, N, std::move(rels));

    const size_t cod = nR * (d + 1) * nH;
    auto fh = [&](size_t r, int k, size_t h) { return (k * nR + r) * nH + h; };
    LinMap bfull(f, Space{N}, Space{cod});
    for (size_t w = 0; w < N; ++w) {
        auto [r, i, s, j] = words[w];
        SVec v;
        for (const auto& [idx, c] : Rc.rho.col(s).entries()) {
            SVec rs0 = R.mul(R.basis(r), spow[i].col(idx / nH));
            for (const auto& [t, ct] : rs0.entries()) v.add(fh(t, i + j, idx % nH), c * ct);
        }
        bfull.cols()[w] = v;
    }
    std::string wd;
    for (size_t k = 0; k < Q.sub.dim() && wd.empty(); ++k)
        if (!bfull.apply(Q.sub.basis()[k]).is_zero()) wd = "relation " + std::to_string(k);
    rep.add("beta_well_defined", wd.empty(), wd);
    LinMap beta(f, Space{Q.dim()}, Space{cod});
    for (size_t p = 0; p < Q.dim(); ++p) beta.cols()[p] = bfull.col(Q.complement[p]);
    long rb = rank(beta.dense(), exec);
    const long expected = static_cast<long>(nR * nR * (d + 1));
    Check& ci = rep.add("beta_injective", rb == static_cast<long>(Q.dim()) && static_cast<long>(Q.dim()) == expected,
                        "rank " + std::to_string(rb) + " of " + std::to_string(Q.dim()));
    ci.rank = rb;
    ci.dims = {static_cast<long>(Q.dim()), static_cast<long>(cod), expected};

    // preimage of r x^i (x) h is r sigma^i(h[1]) x^i (x) h[2]
    std::string wp;
    for (size_t h = 0; h < nH && wp.empty(); ++h) {
        SVec g = gr.beta_inverse->apply(outer(R.unit(), H.alg.basis(h), nH));
        SVec gl;
        for (const auto& [p, c] : g.entries()) gl.add(gr.rt.q.complement[p], c);
        for (int i = 0; i <= d && wp.empty(); ++i)
            for (size_t r = 0; r < nR && wp.empty(); ++r) {
                SVec pre;
                for (const auto& [idx, c] : gl.entries()) {
                    SVec left = R.mul(R.basis(r), spow[i].col(idx / nR));
                    for (const auto& [t, ct] : left.entries()) pre.add(index.at({t, i, idx % nR, 0}), c * ct);
                }
                if (bfull.apply(pre) != SVec::unit(fh(r, i, h), f))
                    wp = R.labels()[r] + "*x^" + std::to_string(i) + " (x) " + H.alg.labels()[h];
            }
    }
    rep.add("beta_surjective_preimage", wp.empty(), wp).dims = {static_cast<long>(cod)};
    return rep;
}

// ---------------------------------------------------------------- Q(2^(1/4))

QuarticExample quartic_example(Exec exec) {
    QuarticExample ex;
    const Field f = rationals();
    std::vector<std::string> labels{"1", "w", "w^2", "w^3"};
    std::vector<SVec> table(16);
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) {
            size_t e = a + b;
            table[a * 4 + b] = e < 4 ? SVec::unit(e, f) : SVec::unit(e - 4, f).scaled(Scalar(2));
        }
    ex.E = algebra_make(f, labels, table, SVec::unit(0, f));
    ex.H = circle_hopf(f);
    const auto& H = ex.H.alg;
    const size_t one = H.index_of("1"), c = H.index_of("c"), c2 = H.index_of("c^2"), s = H.index_of("s");
    LinMap action(f, Space{4, 4}, Space{4});
    const long cdiag[4] = {1, 0, -1, 0}, sdiag[4] = {0, -1, 0, 1};
    for (size_t a = 0; a < 4; ++a) {
        action.cols()[one * 4 + a] = SVec::unit(a, f);
        action.cols()[c * 4 + a] = SVec::unit(a, f).scaled(Scalar(cdiag[a]));
        action.cols()[c2 * 4 + a] = SVec::unit(a, f).scaled(Scalar(cdiag[a] * cdiag[a]));
        action.cols()[s * 4 + a] = SVec::unit(a, f).scaled(Scalar(sdiag[a]));
    }
    ex.action = ActionSpec{ex.H, ex.E, action};
    ex.report.merge(check_module_algebra(ex.action, exec), "action");
    ex.coaction = action_to_comodule(ex.action);
    ex.report.add("table_round_trip", comodule_to_action(ex.coaction).action == action, "action table changed");
    GaloisReport g = galois_check(ex.coaction, exec);
    ex.report.merge(g.report, "galois");
    ex.report.add("coinvariants_dim", g.coinvariants.size() == 1, "coinvariants larger than Q").dims = {
        static_cast<long>(g.coinvariants.size())};
    ex.report.add("rel_tensor_dim", g.rt.dim() == 16, std::to_string(g.rt.dim())).dims = {static_cast<long>(g.rt.dim())};

    // w must go to a real root of t^4 - 2 inside E; only +-w qualify
    std::vector<LinMap> autos;
    std::string w;
    for (long sign : {1L, -1L}) {
        SVec y = SVec::unit(1, f).scaled(Scalar(sign));
        SVec p = ex.E.unit();
        LinMap phi(f, Space{4}, Space{4});
        for (size_t k = 0; k < 4; ++k) {
            phi.cols()[k] = p;
            p = ex.E.mul(p, y);
        }
        if (p != ex.E.unit().scaled(Scalar(2))) w = "candidate is not a root";
        for (size_t a = 0; a < 4 && w.empty(); ++a)
            for (size_t b = 0; b < 4 && w.empty(); ++b)
                if (phi.apply(ex.E.product(a, b)) != ex.E.mul(phi.col(a), phi.col(b))) w = "not multiplicative";
        if (!inverse(phi.dense())) w = "not bijective";
        autos.push_back(phi);
    }
    ex.report.add("automorphisms", w.empty(), w).dims = {static_cast<long>(autos.size())};
    LinMap K(f, Space{4}, Space{autos.size(), 4});
    for (size_t k = 0; k < autos.size(); ++k)
        for (size_t a = 0; a < 4; ++a)
            for (const auto& [i, v] : (autos[k].col(a) - SVec::unit(a, f)).entries()) K.cols()[a].add(k * 4 + i, v);
    ex.fixed_field = subspace_solve(K, exec).basis;
    Check& fx = ex.report.add("fixed_field_exceeds_base", ex.fixed_field.size() >= 2, "fixed field is Q");
    fx.dims = {static_cast<long>(ex.fixed_field.size())};
    return ex;
}

}  // namespace skewhopf
