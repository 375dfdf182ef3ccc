#include "skewhopf/torsor.hpp"

namespace skewhopf {

namespace {

SVec outer(const SVec& a, const SVec& b, size_t nb) {
    SVec r;
    for (const auto& [i, c] : a.entries())
        for (const auto& [j, d] : b.entries()) r.add(i * nb + j, c * d);
    return r;
}

std::string witness_of(const LinMap& a, const LinMap& b, const std::vector<std::string>& labels) {
    auto d = a.first_difference(b);
    return d ? labels[*d] : std::string();
}

std::vector<std::string> pair_labels(const FinDimAlg& A, const FinDimAlg& B) {
    std::vector<std::string> out;
    for (const auto& a : A.labels())
        for (const auto& b : B.labels()) out.push_back(a + " (x) " + b);
    return out;
}

// (a, b, c) -> (c, b, a)
LinMap reverse3(Field f, size_t n) {
    LinMap r(f, Space{n, n, n}, Space{n, n, n});
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) r.cols()[(a * n + b) * n + c] = SVec::unit((c * n + b) * n + a, f);
    return r;
}

// a (x) z -> 1 (x) ... inserted at position pos of a two-factor space
LinMap insert_unit(const FinDimAlg& T, size_t pos) {
    const size_t n = T.dim();
    LinMap r(T.field(), Space{n, n}, Space{n, n, n});
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            SVec v;
            for (const auto& [u, c] : T.unit().entries()) {
                size_t idx = pos == 0 ? (u * n + a) * n + b : pos == 1 ? (a * n + u) * n + b : (a * n + b) * n + u;
                v.add(idx, c);
            }
            r.cols()[a * n + b] = v;
        }
    return r;
}

Scalar scalar_of(const SVec& v, const SVec& unit, Field f, bool& ok) {
    ok = true;
    if (v.is_zero()) return Scalar::zero(f);
    const auto& [k, u] = *unit.entries().begin();
    Scalar c = v.at(k, f) / u;
    ok = v == unit.scaled(c);
    return c;
}

}  // namespace

// ---------------------------------------------------------------- torsors

Report check_torsor(const TorsorData& t, Exec exec) {
    Report rep;
    const FinDimAlg& T = t.T;
    const size_t n = T.dim();
    const Field f = T.field();
    const Space TTT{n, n, n};
    FinDimAlg Top = opposite(T);
    const std::vector<const FinDimAlg*> algs{&T, &Top, &T};
    auto bad = scan_first(n * n, exec, [&](size_t ij) {
        return t.mu.apply(T.product(ij / n, ij % n)) != tensor_mul(algs, t.mu.col(ij / n), t.mu.col(ij % n));
    });
    rep.add("algebra_map", !bad, bad ? T.labels()[*bad / n] + " * " + T.labels()[*bad % n] : "");
    rep.add("unit", t.mu.apply(T.unit()) == tensor_unit(algs), "1");

    LinMap l = on_factors(t.mu, TTT, 0, 1).after(t.mu), r = on_factors(t.mu, TTT, 2, 1).after(t.mu);
    rep.add("coassociativity", l == r, witness_of(l, r, T.labels()));

    LinMap m = T.mult_map();
    LinMap left = on_factors(m, TTT, 0, 2).after(t.mu), right = on_factors(m, TTT, 1, 2).after(t.mu);
    LinMap one_x(f, Space{n}, Space{n, n}), x_one(f, Space{n}, Space{n, n});
    for (size_t x = 0; x < n; ++x) {
        one_x.cols()[x] = outer(T.unit(), T.basis(x), n);
        x_one.cols()[x] = outer(T.basis(x), T.unit(), n);
    }
    rep.add("collapse_left", left == one_x, witness_of(left, one_x, T.labels()));
    rep.add("collapse_right", right == x_one, witness_of(right, x_one, T.labels()));
    return rep;
}

GrunspanResult grunspan_map(const TorsorData& t, Exec exec) {
    GrunspanResult g;
    Report pre = check_torsor(t, exec);
    g.report.merge(pre, "torsor");
    if (!pre.pass()) return g;
    const FinDimAlg& T = t.T;
    const size_t n = T.dim();
    const Field f = T.field();
    const Space TTT{n, n, n}, T5{n, n, n, n, n};
    // x1, x2_1, x2_2, x2_3, x3
    LinMap five = on_factors(t.mu, TTT, 1, 1).after(t.mu);
    g.theta = LinMap(f, Space{n}, Space{n});
    for (size_t x = 0; x < n; ++x) {
        SVec v;
        for (const auto& [idx, c] : five.col(x).entries()) {
            auto k = T5.split(idx);
            SVec p = T.mul(T.mul(T.mul(T.mul(T.basis(k[0]), T.basis(k[3])), T.basis(k[2])), T.basis(k[1])),
                           T.basis(k[4]));
            v += p.scaled(c);
        }
        g.theta.cols()[x] = v;
    }
    const LinMap& th = g.theta;
    std::string w;
    if (th.apply(T.unit()) != T.unit()) w = "1";
    for (size_t a = 0; a < n && w.empty(); ++a)
        for (size_t b = 0; b < n && w.empty(); ++b)
            if (th.apply(T.product(a, b)) != T.mul(th.col(a), th.col(b))) w = T.labels()[a] + " * " + T.labels()[b];
    g.report.add("theta_endomorphism", w.empty(), w);

    LinMap l59 = on_factors(th, T5, 2, 1).after(on_factors(t.mu, TTT, 0, 1)).after(t.mu);
    LinMap r59 = on_factors(reverse3(f, n).after(t.mu), TTT, 1, 1).after(t.mu);
    g.report.add("grunspan_middle", l59 == r59, witness_of(l59, r59, T.labels()));
    LinMap l60 = on_factors(th, TTT, 0, 1).after(on_factors(th, TTT, 1, 1)).after(on_factors(th, TTT, 2, 1)).after(t.mu);
    LinMap r60 = t.mu.after(th);
    g.report.add("grunspan_equivariant", l60 == r60, witness_of(l60, r60, T.labels()));
    long rk = rank(th.dense(), exec);
    g.autonomous = rk == static_cast<long>(n);
    Check& c = g.report.add("theta_rank", true);
    c.rank = rk;
    c.dims = {static_cast<long>(n)};
    return g;
}

TorsorData hopf_to_torsor(const HopfData& H) {
    const size_t n = H.dim();
    return TorsorData{H.name, H.alg, on_factors(H.S, Space{n, n, n}, 1, 1).after(delta2(H))};
}

TorsorData no_character_torsor(int n, const Scalar& alpha, const Scalar& beta, const Scalar& q) {
    Report rep;
    bool prim = n >= 2 && q.pow(n).is_one();
    for (int k = 1; k < n && prim; ++k)
        if (q.pow(k).is_one()) prim = false;
    rep.add("primitive_root", prim, "q is not a primitive root of the given order");
    rep.add("nonzero_parameters", !alpha.is_zero() && !beta.is_zero(), "alpha and beta must be nonzero");
    if (!rep.pass()) throw AxiomError("no_character_torsor: " + rep.first_failure(), rep);
    const Field f = q.field();
    const size_t N = static_cast<size_t>(n);
    const size_t dim = N * N;
    std::vector<std::string> labels;
    auto mono = [](const char* v, size_t e) { return e == 0 ? std::string() : e == 1 ? std::string(v) : v + ("^" + std::to_string(e)); };
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            std::string s = mono("x", i), y = mono("y", j);
            labels.push_back(s.empty() && y.empty() ? "1" : s.empty() ? y : y.empty() ? s : s + "*" + y);
        }
    std::vector<SVec> table(dim * dim);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            for (size_t k = 0; k < N; ++k)
                for (size_t l = 0; l < N; ++l) {
                    // y^j x^k = q^(-jk) x^k y^j
                    Scalar c = q.pow(-static_cast<long>(j * k));
                    size_t a = i + k, b = j + l;
                    if (a >= N) a -= N, c *= alpha;
                    if (b >= N) b -= N, c *= beta;
                    table[(i * N + j) * dim + k * N + l] = SVec::unit(a * N + b, f).scaled(c);
                }
    FinDimAlg T = algebra_make(f, labels, table, SVec::unit(0, f));
    FinDimAlg Top = opposite(T);
    const std::vector<const FinDimAlg*> algs{&T, &Top, &T};
    auto gen = [&](size_t idx, const Scalar& inv) {
        // g (x) g^-1 (x) g with g^-1 = inv * g^(n-1)
        SVec g = T.basis(idx);
        SVec ginv = T.unit();
        for (size_t k = 1; k < N; ++k) ginv = T.mul(ginv, g);
        ginv = ginv.scaled(inv);
        return outer(outer(g, ginv, dim), g, dim);
    };
    SVec mx = gen(N, alpha.inverse()), my = gen(1, beta.inverse());
    LinMap mu(f, Space{dim}, Space{dim, dim, dim});
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            SVec v = tensor_unit(algs);
            for (size_t k = 0; k < i; ++k) v = tensor_mul(algs, v, mx);
            for (size_t k = 0; k < j; ++k) v = tensor_mul(algs, v, my);
            mu.cols()[i * N + j] = v;
        }
    return TorsorData{"no_character_" + std::to_string(n), std::move(T), std::move(mu)};
}

DescentResult descent_datum(const TorsorData& t) {
    DescentResult out;
    const FinDimAlg& T = t.T;
    const size_t n = T.dim();
    const Field f = T.field();
    const Space TT{n, n}, TTT{n, n, n};
    out.D = LinMap(f, TT, TTT);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            SVec v;
            for (const auto& [idx, c] : t.mu.col(y).entries()) {
                auto k = TTT.split(idx);
                for (const auto& [p, d] : T.product(x, k[0]).entries()) v.add((p * n + k[1]) * n + k[2], c * d);
            }
            out.D.cols()[x * n + y] = v;
        }
    const LinMap& D = out.D;
    auto labels = pair_labels(T, T);
    LinMap l = on_factors(D, TTT, 1, 2).after(D);
    LinMap r = on_factors(insert_unit(T, 0), TTT, 1, 2).after(D);
    out.report.add("descent_coassociative", l == r, witness_of(l, r, labels));
    LinMap g = on_factors(T.mult_map(), TTT, 0, 2).after(D);
    LinMap id = LinMap::identity(f, TT);
    out.report.add("descent_unit", g == id, witness_of(g, id, labels));
    std::string w;
    for (size_t a = 0; a < n && w.empty(); ++a)
        for (size_t x = 0; x < n && w.empty(); ++x)
            for (size_t y = 0; y < n && w.empty(); ++y) {
                SVec lhs = D.apply(outer(T.product(a, x), T.basis(y), n));
                SVec rhs;
                for (const auto& [idx, c] : D.col(x * n + y).entries())
                    rhs += outer(T.mul(T.basis(a), T.basis(idx / (n * n))), T.basis(idx % (n * n)), n * n).scaled(c);
                if (lhs != rhs) w = T.labels()[a] + " . " + labels[x * n + y];
            }
    out.report.add("left_module_map", w.empty(), w);
    return out;
}

Reconstruction reconstruct_hopf(const TorsorData& t, Exec exec) {
    Reconstruction out;
    Report& rep = out.report;
    const FinDimAlg& T = t.T;
    const size_t n = T.dim();
    const Field f = T.field();
    DescentResult dd = descent_datum(t);
    rep.merge(dd.report, "descent");
    LinMap K = dd.D - insert_unit(T, 0);
    Subspace Hs(f, n * n, subspace_solve(K, exec).basis);
    out.basis = Hs.basis();
    const size_t m = Hs.dim();
    FinDimAlg Top = opposite(T);
    const std::vector<const FinDimAlg*> algs{&Top, &T};
    auto coords = [&](const SVec& v) -> std::optional<SVec> {
        auto c = Hs.coords(v);
        if (!c) return std::nullopt;
        SVec r;
        for (size_t i = 0; i < c->size(); ++i) r.add(i, (*c)[i]);
        return r;
    };

    std::vector<std::string> labels;
    for (size_t i = 0; i < m; ++i) labels.push_back("h" + std::to_string(i));
    std::vector<SVec> table(m * m);
    std::string w;
    for (size_t i = 0; i < m && w.empty(); ++i)
        for (size_t j = 0; j < m && w.empty(); ++j) {
            auto c = coords(tensor_mul(algs, out.basis[i], out.basis[j]));
            if (!c) w = labels[i] + " * " + labels[j];
            else table[i * m + j] = *c;
        }
    auto unit = coords(tensor_unit(algs));
    if (!unit) w = "1";
    rep.add("closure", w.empty(), w).dims = {static_cast<long>(m)};
    if (!w.empty()) return out;
    FinDimAlg Halg(f, labels, table, *unit);
    Report ar = check_algebra(Halg, exec);
    rep.merge(ar, "algebra");

    // Delta(x (x) y) = x (x) mu(y), split back into H x H
    const size_t nn = n * n;
    LinMap lift_mu = on_factors(t.mu, Space{n, n}, 1, 1);
    LinMap delta(f, Space{m}, Space{m, m});
    w.clear();
    for (size_t i = 0; i < m && w.empty(); ++i) {
        SVec v = lift_mu.apply(out.basis[i]);
        std::vector<SVec> cols(nn);
        for (const auto& [idx, c] : v.entries()) cols[idx % nn].add(idx / nn, c);
        std::vector<SVec> u(m);
        for (size_t q = 0; q < nn && w.empty(); ++q) {
            if (cols[q].is_zero()) continue;
            auto c = coords(cols[q]);
            if (!c) w = labels[i];
            else
                for (const auto& [k, ck] : c->entries()) u[k].add(q, ck);
        }
        SVec d;
        for (size_t k = 0; k < m && w.empty(); ++k) {
            if (u[k].is_zero()) continue;
            auto c = coords(u[k]);
            if (!c) w = labels[i];
            else
                for (const auto& [j, cj] : c->entries()) d.add(k * m + j, cj);
        }
        delta.cols()[i] = d;
    }
    rep.add("delta_membership", w.empty(), w);
    LinMap eps(f, Space{m}, Space{});
    w.clear();
    for (size_t i = 0; i < m && w.empty(); ++i) {
        bool ok = true;
        Scalar e = scalar_of(T.mult_map().apply(out.basis[i]), T.unit(), f, ok);
        if (!ok) w = labels[i];
        if (!e.is_zero()) eps.cols()[i].add(0, e);
    }
    rep.add("counit_scalar", w.empty(), w);
    if (!rep.pass()) return out;

    auto S = convolution_inverse(LinMap::identity(f, Space{m}), delta, eps, Halg);
    rep.add("antipode_exists", S.has_value(), "identity is not convolution invertible");
    if (!S) return out;
    out.H = HopfData{t.name + "_reconstructed", Halg, delta, eps, *S};
    rep.merge(check_hopf(out.H, exec), "hopf");

    LinMap rho(f, Space{n}, Space{n, m});
    w.clear();
    for (size_t x = 0; x < n && w.empty(); ++x) {
        std::vector<SVec> slices(n);
        for (const auto& [idx, c] : t.mu.col(x).entries()) slices[idx / nn].add(idx % nn, c);
        for (size_t a = 0; a < n && w.empty(); ++a) {
            if (slices[a].is_zero()) continue;
            auto c = coords(slices[a]);
            if (!c) w = T.labels()[x];
            else
                for (const auto& [k, ck] : c->entries()) rho.cols()[x].add(a * m + k, ck);
        }
    }
    rep.add("coaction_membership", w.empty(), w);
    if (!w.empty()) return out;
    out.C = ComoduleAlgebra{t.name, T, out.H, rho};
    out.galois = galois_check(out.C, exec);
    rep.merge(out.galois->report, "galois");
    rep.add("coinvariants_trivial", out.galois->coinvariants.size() == 1, "coinvariants larger than the field").dims = {
        static_cast<long>(out.galois->coinvariants.size())};
    return out;
}

namespace {

struct GaloisTorsorParts {
    GaloisReport g;
    std::vector<SVec> gamma;  // gamma(h) inside T x T
};

GaloisTorsorParts galois_parts(const ComoduleAlgebra& C, Exec exec) {
    GaloisTorsorParts p{galois_check(C, exec), {}};
    Report pre;
    pre.add("galois", p.g.bijective, "beta is not bijective");
    pre.add("coinvariants_trivial", p.g.coinvariants.size() == 1, "coinvariants larger than the field");
    if (!pre.pass()) throw AxiomError("galois_to_torsor: " + pre.first_failure(), pre);
    const size_t nT = C.A.dim(), nH = C.H.dim();
    for (size_t h = 0; h < nH; ++h) {
        SVec q = p.g.beta_inverse->apply(outer(C.A.unit(), C.H.alg.basis(h), nH));
        SVec l;
        for (const auto& [i, c] : q.entries()) l.add(p.g.rt.q.complement[i], c);
        p.gamma.push_back(l);
    }
    (void)nT;
    return p;
}

}  // namespace

TorsorData galois_to_torsor(const ComoduleAlgebra& C, Exec exec) {
    auto p = galois_parts(C, exec);
    const size_t n = C.A.dim(), nH = C.H.dim();
    LinMap mu(C.A.field(), Space{n}, Space{n, n, n});
    for (size_t x = 0; x < n; ++x)
        for (const auto& [idx, c] : C.rho.col(x).entries())
            mu.cols()[x] += outer(C.A.basis(idx / nH), p.gamma[idx % nH], n * n).scaled(c);
    return TorsorData{C.name, C.A, mu};
}

Report galois_torsor_check(const ComoduleAlgebra& C, Exec exec) {
    Report rep;
    auto p = galois_parts(C, exec);
    TorsorData t = galois_to_torsor(C, exec);
    GrunspanResult g = grunspan_map(t, exec);
    rep.merge(g.report);
    if (!g.report.pass()) return rep;
    const FinDimAlg& T = C.A;
    const size_t n = T.dim(), nH = C.H.dim();
    LinMap closed(T.field(), Space{n}, Space{n});
    for (size_t x = 0; x < n; ++x)
        for (const auto& [idx, c] : C.rho.col(x).entries()) {
            SVec x0 = T.basis(idx / nH);
            for (const auto& [h, s] : C.H.S.col(idx % nH).entries())
                for (const auto& [pq, d] : p.gamma[h].entries())
                    closed.cols()[x] += T.mul(T.mul(x0, T.basis(pq % n)), T.basis(pq / n)).scaled(c * s * d);
        }
    rep.add("theta_closed_form", closed == g.theta, witness_of(closed, g.theta, T.labels()));
    return rep;
}

// ---------------------------------------------------------------- Hopf Galois systems

HGSData hopf_hgs(const HopfData& H) { return HGSData{H, H, H.alg, H.alg, H.delta, H.delta, H.delta, H.delta, H.S}; }

Report check_hgs(const HGSData& s, Exec exec) {
    Report rep;
    const size_t nA = s.A.dim(), nB = s.B.dim(), nZ = s.Z.dim(), nT = s.T.dim();
    const Field f = s.Z.field();
    rep.merge(check_hopf(s.A, exec), "A");
    rep.merge(check_hopf(s.B, exec), "B");
    rep.merge(check_algebra(s.Z, exec), "Z");
    rep.merge(check_algebra(s.T, exec), "T");

    auto algebra_map = [&](const std::string& name, const LinMap& m, const FinDimAlg& src,
                           const std::vector<const FinDimAlg*>& tgt) {
        std::string w;
        if (m.apply(src.unit()) != tensor_unit(tgt)) w = "1";
        const size_t n = src.dim();
        auto bad = scan_first(n * n, exec, [&](size_t ij) {
            return m.apply(src.product(ij / n, ij % n)) != tensor_mul(tgt, m.col(ij / n), m.col(ij % n));
        });
        if (w.empty() && bad) w = src.labels()[*bad / n] + " * " + src.labels()[*bad % n];
        rep.add(name + ".algebra_map", w.empty(), w);
    };
    algebra_map("alpha", s.alpha, s.Z, {&s.A.alg, &s.Z});
    algebra_map("beta", s.beta, s.Z, {&s.Z, &s.B.alg});
    algebra_map("gamma", s.gamma, s.A.alg, {&s.Z, &s.T});
    algebra_map("delta", s.delta, s.B.alg, {&s.T, &s.Z});

    auto eq = [&](const std::string& name, const LinMap& l, const LinMap& r, const std::vector<std::string>& labels) {
        rep.add(name, l == r, witness_of(l, r, labels)).dims = {static_cast<long>(l.dom().size())};
    };
    const auto& zl = s.Z.labels();
    const Space AZ{nA, nZ}, ZB{nZ, nB}, ZT{nZ, nT}, TZ{nT, nZ};
    eq("alpha.coassociativity", on_factors(s.A.delta, AZ, 0, 1).after(s.alpha), on_factors(s.alpha, AZ, 1, 1).after(s.alpha), zl);
    eq("alpha.counit", on_factors(s.A.eps, AZ, 0, 1).after(s.alpha), LinMap::identity(f, Space{nZ}), zl);
    eq("beta.coassociativity", on_factors(s.B.delta, ZB, 1, 1).after(s.beta), on_factors(s.beta, ZB, 0, 1).after(s.beta), zl);
    eq("beta.counit", on_factors(s.B.eps, ZB, 1, 1).after(s.beta), LinMap::identity(f, Space{nZ}), zl);
    eq("bicomodule", on_factors(s.alpha, ZB, 0, 1).after(s.beta), on_factors(s.beta, AZ, 1, 1).after(s.alpha), zl);

    eq("exchange", on_factors(s.gamma, AZ, 0, 1).after(s.alpha), on_factors(s.delta, ZB, 1, 1).after(s.beta), zl);
    eq("gamma_colinear", on_factors(s.gamma, Space{nA, nA}, 1, 1).after(s.A.delta),
       on_factors(s.alpha, ZT, 0, 1).after(s.gamma), s.A.alg.labels());
    eq("delta_colinear", on_factors(s.delta, Space{nB, nB}, 0, 1).after(s.B.delta),
       on_factors(s.beta, TZ, 1, 1).after(s.delta), s.B.alg.labels());
    LinMap mZ = s.Z.mult_map();
    LinMap uA(f, Space{nA}, Space{nZ}), uB(f, Space{nB}, Space{nZ});
    for (size_t a = 0; a < nA; ++a) uA.cols()[a] = s.Z.unit().scaled(s.A.eps.col(a).at(0, f));
    for (size_t b = 0; b < nB; ++b) uB.cols()[b] = s.Z.unit().scaled(s.B.eps.col(b).at(0, f));
    eq("gamma_antipode", mZ.after(on_factors(s.S, ZT, 1, 1)).after(s.gamma), uA, s.A.alg.labels());
    eq("delta_antipode", mZ.after(on_factors(s.S, TZ, 0, 1)).after(s.delta), uB, s.B.alg.labels());

    const Space ZZ{nZ, nZ}, ZZZ{nZ, nZ, nZ};
    LinMap beta_l = on_factors(mZ, Space{nA, nZ, nZ}, 1, 2).after(on_factors(s.alpha, ZZ, 0, 1));
    LinMap eta_l = on_factors(mZ, ZZZ, 1, 2)
                       .after(on_factors(s.S, Space{nZ, nT, nZ}, 1, 1))
                       .after(on_factors(s.gamma, AZ, 0, 1));
    LinMap beta_r = on_factors(mZ, Space{nZ, nZ, nB}, 0, 2).after(on_factors(s.beta, ZZ, 1, 1));
    LinMap eta_r = on_factors(mZ, ZZZ, 0, 2)
                       .after(on_factors(s.S, Space{nZ, nT, nZ}, 1, 1))
                       .after(on_factors(s.delta, ZB, 1, 1));
    auto zz = pair_labels(s.Z, s.Z), az = pair_labels(s.A.alg, s.Z), zb = pair_labels(s.Z, s.B.alg);
    eq("eta_l_beta_l", eta_l.after(beta_l), LinMap::identity(f, ZZ), zz);
    eq("beta_l_eta_l", beta_l.after(eta_l), LinMap::identity(f, AZ), az);
    eq("eta_r_beta_r", eta_r.after(beta_r), LinMap::identity(f, ZZ), zz);
    eq("beta_r_eta_r", beta_r.after(eta_r), LinMap::identity(f, ZB), zb);
    return rep;
}

namespace {

TElem single(const std::vector<PKey>& k, Field f) {
    TElem t;
    t.add(k, Scalar::one(f));
    return t;
}

Scalar counit_of(const GenMap& eps, const PKey& k, Field f) {
    Scalar e = Scalar::zero(f);
    for (const auto& [key, c] : eps.apply_key(k).terms()) e += c;
    return e;
}

}  // namespace

Report check_hgs(const GenHGS& s, int d) {
    Report rep;
    rep.degree_bound = d;
    const Field f = s.Z->field();
    rep.merge(check_hopf_on_generators(s.A, d), "A");
    rep.merge(check_hopf_on_generators(s.B, d), "B");
    Report zp = pbw_check(s.Z->pres()).to_report(), tp = pbw_check(s.T->pres()).to_report();
    rep.add("Z.pbw", zp.pass(), zp.first_failure());
    rep.add("T.pbw", tp.pass(), tp.first_failure());
    for (const GenMap* m : {&s.alpha, &s.beta, &s.gamma, &s.delta, &s.S}) rep.merge(check_generator_map(*m, d));

    const Factor Zf{s.Z, false}, Tf{s.T, false}, Af{s.A.alg, false}, Bf{s.B.alg, false};
    std::string wa, wb, wac, wbc, wbi, wx;
    auto zmons = s.Z->monomials(d);
    for (const auto& z : zmons) {
        const std::string ks = s.Z->key_str(z);
        TElem a = s.alpha.apply_key(z), b = s.beta.apply_key(z);
        if (wa.empty() && apply_on_factor(a, 0, s.A.delta) != apply_on_factor(a, 1, s.alpha)) wa = ks;
        if (wac.empty() && apply_on_factor(a, 0, s.A.eps) != single({z}, f)) wac = ks;
        if (wb.empty() && apply_on_factor(b, 1, s.B.delta) != apply_on_factor(b, 0, s.beta)) wb = ks;
        if (wbc.empty() && apply_on_factor(b, 1, s.B.eps) != single({z}, f)) wbc = ks;
        if (wbi.empty() && apply_on_factor(b, 0, s.alpha) != apply_on_factor(a, 1, s.beta)) wbi = ks;
        if (wx.empty() && apply_on_factor(a, 0, s.gamma) != apply_on_factor(b, 1, s.delta)) wx = ks;
    }
    const long nz = static_cast<long>(zmons.size());
    rep.add("alpha.coassociativity", wa.empty(), wa).dims = {nz};
    rep.add("alpha.counit", wac.empty(), wac).dims = {nz};
    rep.add("beta.coassociativity", wb.empty(), wb).dims = {nz};
    rep.add("beta.counit", wbc.empty(), wbc).dims = {nz};
    rep.add("bicomodule", wbi.empty(), wbi).dims = {nz};
    rep.add("exchange", wx.empty(), wx).dims = {nz};

    const Factors ZZ{Zf, Zf}, ZZZ{Zf, Zf, Zf};
    std::string wgc, wga;
    auto amons = s.A.alg->monomials(d);
    for (const auto& a : amons) {
        TElem g = s.gamma.apply_key(a);
        if (wgc.empty() && apply_on_factor(s.A.delta.apply_key(a), 1, s.gamma) != apply_on_factor(g, 0, s.alpha))
            wgc = s.A.alg->key_str(a);
        if (wga.empty() && mul_adjacent(ZZ, apply_on_factor(g, 1, s.S), 0) != tscalar({Zf}, counit_of(s.A.eps, a, f)))
            wga = s.A.alg->key_str(a);
    }
    std::string wdc, wda;
    auto bmons = s.B.alg->monomials(d);
    for (const auto& b : bmons) {
        TElem g = s.delta.apply_key(b);
        if (wdc.empty() && apply_on_factor(s.B.delta.apply_key(b), 0, s.delta) != apply_on_factor(g, 1, s.beta))
            wdc = s.B.alg->key_str(b);
        if (wda.empty() && mul_adjacent(ZZ, apply_on_factor(g, 0, s.S), 0) != tscalar({Zf}, counit_of(s.B.eps, b, f)))
            wda = s.B.alg->key_str(b);
    }
    rep.add("gamma_colinear", wgc.empty(), wgc).dims = {static_cast<long>(amons.size())};
    rep.add("gamma_antipode", wga.empty(), wga).dims = {static_cast<long>(amons.size())};
    rep.add("delta_colinear", wdc.empty(), wdc).dims = {static_cast<long>(bmons.size())};
    rep.add("delta_antipode", wda.empty(), wda).dims = {static_cast<long>(bmons.size())};

    auto beta_l = [&](const TElem& v) { return mul_adjacent({Af, Zf, Zf}, apply_on_factor(v, 0, s.alpha), 1); };
    auto eta_l = [&](const TElem& v) {
        return mul_adjacent(ZZZ, apply_on_factor(apply_on_factor(v, 0, s.gamma), 1, s.S), 1);
    };
    auto beta_r = [&](const TElem& v) { return mul_adjacent({Zf, Zf, Bf}, apply_on_factor(v, 1, s.beta), 0); };
    auto eta_r = [&](const TElem& v) {
        return mul_adjacent(ZZZ, apply_on_factor(apply_on_factor(v, 1, s.delta), 1, s.S), 0);
    };
    auto sweep = [&](const std::string& name, const Factors& fs, auto&& roundtrip) {
        auto mons = tensor_monomials(fs, d);
        std::string w;
        for (const auto& k : mons) {
            TElem v = single(k, f);
            if (roundtrip(v) != v) {
                w = tstr(fs, v);
                break;
            }
        }
        rep.add(name, w.empty(), w).dims = {static_cast<long>(mons.size())};
    };
    sweep("eta_l_beta_l", ZZ, [&](const TElem& v) { return eta_l(beta_l(v)); });
    sweep("beta_l_eta_l", Factors{Af, Zf}, [&](const TElem& v) { return beta_l(eta_l(v)); });
    sweep("eta_r_beta_r", ZZ, [&](const TElem& v) { return eta_r(beta_r(v)); });
    sweep("beta_r_eta_r", Factors{Zf, Bf}, [&](const TElem& v) { return beta_r(eta_r(v)); });
    return rep;
}

SridharanSystem sridharan_build(const LieData& g, const LieCocycle& f) {
    Report pre;
    pre.merge(check_lie(g), "lie");
    pre.merge(check_cocycle(g, f), "cocycle");
    if (!pre.pass()) throw AxiomError("sridharan_build: " + pre.first_failure(), pre);
    LieCocycle minus = f;
    for (auto& row : minus.values)
        for (auto& v : row) v = -v;
    SridharanSystem out;
    out.uf = sridharan_presentation(g, f, "U_f");
    out.uminus = sridharan_presentation(g, minus, "U_-f");
    out.pbw.merge(pbw_check(out.uf).to_report(), "U_f");
    out.pbw.merge(pbw_check(out.uminus).to_report(), "U_-f");
    GenHopfSpec U = enveloping_hopf(sridharan_presentation(g, LieCocycle::zero(g.field, g.dim()), "U"));
    PresAlgebraPtr Z = pres_algebra(out.uf), T = pres_algebra(out.uminus);
    std::map<std::string, std::string> prim, neg;
    for (const auto& x : g.names) {
        prim[x] = x + " @ 1 + 1 @ " + x;
        neg[x] = "-" + x;
    }
    GenHGS& s = out.hgs;
    s.name = "sridharan";
    s.A = U;
    s.B = U;
    s.Z = Z;
    s.T = T;
    s.alpha = genmap_parse("alpha", Z, {{U.alg, false}, {Z, false}}, prim);
    s.beta = genmap_parse("beta", Z, {{Z, false}, {U.alg, false}}, prim);
    s.gamma = genmap_parse("gamma", U.alg, {{Z, false}, {T, false}}, prim);
    s.delta = genmap_parse("delta", U.alg, {{T, false}, {Z, false}}, prim);
    s.S = genmap_parse("S", T, {{Z, true}}, neg);
    return out;
}

}  // namespace skewhopf
