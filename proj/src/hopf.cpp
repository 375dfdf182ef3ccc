#include "skewhopf/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <regex>

namespace skewhopf {

// ---------------------------------------------------------------- groups

size_t GroupTable::inverse(size_t i) const {
    for (size_t j = 0; j < size(); ++j)
        if (mul(i, j) == identity) return j;
    throw std::logic_error("group element without inverse");
}

int GroupTable::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

GroupTable group_make(std::vector<std::string> labels, std::vector<size_t> table) {
    GroupTable G{std::move(labels), std::move(table), 0};
    const size_t n = G.size();
    if (G.table.size() != n * n) throw DimensionError("Cayley table is not square");
    for (size_t v : G.table)
        if (v >= n) throw AxiomError("Cayley table leaves the group", {});
    bool found = false;
    for (size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = G.mul(e, i) == i && G.mul(i, e) == i;
        if (ok) {
            G.identity = e;
            found = true;
        }
    }
    Report r;
    r.add("identity", found, "no two-sided identity");
    std::string w;
    for (size_t i = 0; i < n && w.empty(); ++i)
        for (size_t j = 0; j < n && w.empty(); ++j)
            for (size_t k = 0; k < n; ++k)
                if (G.mul(G.mul(i, j), k) != G.mul(i, G.mul(j, k))) {
                    w = "(" + G.labels[i] + "," + G.labels[j] + "," + G.labels[k] + ")";
                    break;
                }
    r.add("associativity", w.empty(), w);
    w.clear();
    if (found)
        for (size_t i = 0; i < n && w.empty(); ++i) {
            bool has = false;
            for (size_t j = 0; j < n; ++j) has = has || (G.mul(i, j) == G.identity && G.mul(j, i) == G.identity);
            if (!has) w = G.labels[i];
        }
    r.add("inverses", w.empty(), w);
    if (!r.pass()) throw AxiomError("not a group: " + r.first_failure(), r);
    return G;
}

GroupTable cyclic_group(int n, const std::string& gen) {
    if (n < 1) throw DimensionError("cyclic group order must be positive");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? gen : gen + "^" + std::to_string(i));
    std::vector<size_t> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    return group_make(std::move(labels), std::move(t));
}

GroupTable symmetric_group3() {
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    std::vector<size_t> t(36);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            Perm c;
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i * 6 + j] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    return group_make(labels, t);
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
    const size_t n = a.size(), m = b.size();
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    std::vector<size_t> t(n * m * n * m);
    for (size_t i = 0; i < n * m; ++i)
        for (size_t j = 0; j < n * m; ++j) t[i * n * m + j] = a.mul(i / m, j / m) * m + b.mul(i % m, j % m);
    return group_make(std::move(labels), std::move(t));
}

GroupTable parse_group(const std::string& name) {
    auto x = name.find('x');
    if (x != std::string::npos) return product_group(parse_group(name.substr(0, x)), parse_group(name.substr(x + 1)));
    if (name == "S3") return symmetric_group3();
    static const std::regex cyc("Z([0-9]+)");
    std::smatch m;
    if (std::regex_match(name, m, cyc)) return cyclic_group(std::stoi(m[1]));
    throw std::invalid_argument("unknown group '" + name + "' (use Zn, S3 or products AxB)");
}

// ---------------------------------------------------------------- axioms

namespace {

std::string label_of(const HopfData& H, size_t i) { return H.alg.labels()[i]; }

std::vector<const FinDimAlg*> pair_of(const FinDimAlg& A) { return {&A, &A}; }

}  // namespace

LinMap delta2(const HopfData& H) { return on_factors(H.delta, Space{H.dim(), H.dim()}, 0, 1).after(H.delta); }

Report check_bialgebra(const HopfData& H, Exec exec) {
    Report rep;
    const size_t n = H.dim();
    const Field F = H.field();
    const Space hh{n, n};
    const long ln = static_cast<long>(n);
    auto wit = [&](std::optional<size_t> i) { return i ? label_of(H, *i) : std::string(); };

    auto coassoc = scan_first(n, exec, [&](size_t i) {
        const SVec& d = H.delta.col(i);
        return apply_on_factors(d, hh, 0, 1, H.delta) != apply_on_factors(d, hh, 1, 1, H.delta);
    });
    rep.add("coassociativity", !coassoc, wit(coassoc)).dims = {ln, ln, ln};

    auto counit = scan_first(n, exec, [&](size_t i) {
        const SVec& d = H.delta.col(i);
        SVec e = SVec::unit(i, F);
        return apply_on_factors(d, hh, 0, 1, H.eps) != e || apply_on_factors(d, hh, 1, 1, H.eps) != e;
    });
    rep.add("counit", !counit, wit(counit)).dims = {ln};

    auto algs = pair_of(H.alg);
    std::string w;
    auto dmul = scan_first(n, exec, [&](size_t i) {
        for (size_t j = 0; j < n; ++j)
            if (H.delta.apply(H.alg.product(i, j)) != tensor_mul(algs, H.delta.col(i), H.delta.col(j))) return true;
        return false;
    });
    if (dmul) {
        for (size_t j = 0; j < n; ++j)
            if (H.delta.apply(H.alg.product(*dmul, j)) != tensor_mul(algs, H.delta.col(*dmul), H.delta.col(j))) {
                w = "(" + label_of(H, *dmul) + "," + label_of(H, j) + ")";
                break;
            }
    }
    bool unit_ok = H.delta.apply(H.alg.unit()) == tensor_unit(algs);
    if (!dmul && !unit_ok) w = "1";
    rep.add("delta_multiplicative", !dmul && unit_ok, w).dims = {ln, ln};

    w.clear();
    auto emul = scan_first(n, exec, [&](size_t i) {
        for (size_t j = 0; j < n; ++j) {
            Scalar lhs = H.eps.apply(H.alg.product(i, j)).at(0, F);
            Scalar rhs = H.eps.col(i).at(0, F) * H.eps.col(j).at(0, F);
            if (lhs != rhs) return true;
        }
        return false;
    });
    if (emul) w = label_of(H, *emul);
    bool eunit = H.eps.apply(H.alg.unit()).at(0, F).is_one();
    if (!emul && !eunit) w = "1";
    rep.add("counit_multiplicative", !emul && eunit, w);
    return rep;
}

Report check_antipode(const HopfData& H, Exec exec) {
    Report rep;
    const size_t n = H.dim();
    const Field F = H.field();
    LinMap id = LinMap::identity(F, H.space());
    LinMap ue = H.alg.unit_map().after(H.eps);
    LinMap left = convolution(H.S, id, H.delta, H.alg);
    LinMap right = convolution(id, H.S, H.delta, H.alg);
    auto d1 = left.first_difference(ue);
    auto d2 = right.first_difference(ue);
    rep.add("antipode_left", !d1, d1 ? label_of(H, *d1) : "").dims = {static_cast<long>(n)};
    rep.add("antipode_right", !d2, d2 ? label_of(H, *d2) : "").dims = {static_cast<long>(n)};
    std::string w;
    auto anti = scan_first(n, exec, [&](size_t i) {
        for (size_t j = 0; j < n; ++j)
            if (H.S.apply(H.alg.product(i, j)) != H.alg.mul(H.S.col(j), H.S.col(i))) return true;
        return false;
    });
    if (anti) w = label_of(H, *anti);
    rep.add("antipode_antimultiplicative", !anti, w);
    return rep;
}

Report check_hopf(const HopfData& H, Exec exec) {
    Report r = check_algebra(H.alg, exec);
    r.merge(check_bialgebra(H, exec));
    r.merge(check_antipode(H, exec));
    return r;
}

HopfData hopf_make(std::string name, FinDimAlg alg, LinMap delta, LinMap eps, LinMap S) {
    const size_t n = alg.dim();
    if (delta.dom().size() != n || delta.cod().size() != n * n) throw DimensionError("comultiplication has the wrong shape");
    if (eps.dom().size() != n || eps.cod().size() != 1) throw DimensionError("counit has the wrong shape");
    if (S.dom().size() != n || S.cod().size() != n) throw DimensionError("antipode has the wrong shape");
    HopfData H{std::move(name), std::move(alg), std::move(delta), std::move(eps), std::move(S)};
    Report r = check_hopf(H);
    if (!r.pass()) throw AxiomError("Hopf axioms fail: " + r.first_failure(), r);
    return H;
}

LinMap extend_on_words(const FinDimAlg& src, const std::vector<std::vector<int>>& words,
                       const std::vector<const FinDimAlg*>& target, const std::vector<SVec>& images, bool anti) {
    Space cod = space_of(target);
    LinMap m(src.field(), Space{src.dim()}, cod);
    for (size_t i = 0; i < src.dim(); ++i) {
        SVec v = tensor_unit(target);
        std::vector<int> w = words[i];
        if (anti) std::reverse(w.begin(), w.end());
        for (int g : w) v = tensor_mul(target, v, images[g]);
        m.cols()[i] = std::move(v);
    }
    return m;
}

// ---------------------------------------------------------------- builtins

HopfData group_algebra(const GroupTable& G, Field f) {
    const size_t n = G.size();
    std::vector<SVec> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i * n + j] = SVec::unit(G.mul(i, j), f);
    FinDimAlg A(f, G.labels, std::move(table), SVec::unit(G.identity, f));
    LinMap delta(f, Space{n}, Space{n, n}), eps(f, Space{n}, Space{}), S(f, Space{n}, Space{n});
    for (size_t i = 0; i < n; ++i) {
        delta.cols()[i] = SVec::unit(i * n + i, f);
        eps.cols()[i] = SVec::unit(0, f);
        S.cols()[i] = SVec::unit(G.inverse(i), f);
    }
    return HopfData{"k[" + std::to_string(n) + "]", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

HopfData dual_group_algebra(const GroupTable& G, Field f) {
    const size_t n = G.size();
    std::vector<std::string> labels;
    for (const auto& l : G.labels) labels.push_back("p_" + l);
    std::vector<SVec> table(n * n);
    SVec unit;
    for (size_t i = 0; i < n; ++i) {
        table[i * n + i] = SVec::unit(i, f);
        unit.add(i, Scalar::one(f));
    }
    FinDimAlg A(f, std::move(labels), std::move(table), std::move(unit));
    LinMap delta(f, Space{n}, Space{n, n}), eps(f, Space{n}, Space{}), S(f, Space{n}, Space{n});
    for (size_t x = 0; x < n; ++x) {
        for (size_t y = 0; y < n; ++y) delta.cols()[x].add(y * n + G.mul(G.inverse(y), x), Scalar::one(f));
        if (x == G.identity) eps.cols()[x] = SVec::unit(0, f);
        S.cols()[x] = SVec::unit(G.inverse(x), f);
    }
    return HopfData{"k^G", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

HopfData dual_hopf(const HopfData& H) {
    const size_t n = H.dim();
    const Field f = H.field();
    std::vector<std::string> labels;
    for (const auto& l : H.alg.labels()) labels.push_back("f_" + l);
    // (e^i e^j)(e_k) = coefficient of e_i (x) e_j in Delta(e_k)
    std::vector<SVec> table(n * n);
    for (size_t k = 0; k < n; ++k)
        for (const auto& [ij, c] : H.delta.col(k).entries()) table[ij].add(k, c);
    SVec unit;
    for (size_t k = 0; k < n; ++k) unit.add(k, H.eps.col(k).at(0, f));
    FinDimAlg A(f, std::move(labels), std::move(table), std::move(unit));
    LinMap delta(f, Space{n}, Space{n, n}), eps(f, Space{n}, Space{}), S(f, Space{n}, Space{n});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : H.alg.product(i, j).entries()) delta.cols()[k].add(i * n + j, c);
    for (const auto& [k, c] : H.alg.unit().entries()) eps.cols()[k].add(0, c);
    for (size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : H.S.col(i).entries()) S.cols()[k].add(i, c);
    return HopfData{H.name + "*", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

namespace {

std::string power_label(const std::string& v, int e) {
    if (e == 0) return "";
    return e == 1 ? v : v + "^" + std::to_string(e);
}

}  // namespace

HopfData taft(int n, const Scalar& omega) {
    if (n < 2) throw DimensionError("Taft algebras need n >= 2");
    const Field f = omega.field();
    if (!omega.pow(n).is_one()) throw AxiomError("omega is not an n-th root of unity", {});
    for (int k = 1; k < n; ++k)
        if (omega.pow(k).is_one()) throw AxiomError("omega is not a primitive n-th root of unity", {});
    const size_t N = static_cast<size_t>(n) * n;
    auto idx = [n](int i, int j) { return static_cast<size_t>(i * n + j); };
    std::vector<std::string> labels(N);
    std::vector<std::vector<int>> words(N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string l = power_label("g", i) + power_label("x", j);
            labels[idx(i, j)] = l.empty() ? "1" : l;
            words[idx(i, j)].assign(i, 0);
            words[idx(i, j)].insert(words[idx(i, j)].end(), j, 1);
        }
    // x^j g^k = omega^{jk} g^k x^j
    std::vector<SVec> table(N * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j + l >= n) continue;
                    table[idx(i, j) * N + idx(k, l)] = SVec::unit(idx((i + k) % n, j + l), f).scaled(omega.pow(j * k));
                }
    FinDimAlg A(f, labels, std::move(table), SVec::unit(0, f));
    const size_t g = idx(1, 0), x = idx(0, 1), ginv = idx(n - 1, 0);
    auto pair = pair_of(A);
    SVec dg = SVec::unit(g * N + g, f);
    SVec dx = SVec::unit(x * N + 0, f) + SVec::unit(g * N + x, f);
    LinMap delta = extend_on_words(A, words, pair, {dg, dx}, false);
    std::vector<const FinDimAlg*> none;
    LinMap eps = extend_on_words(A, words, none, {SVec::unit(0, f), SVec()}, false);
    SVec sx = A.mul(SVec::unit(ginv, f), SVec::unit(x, f)).scaled(Scalar(-1));
    LinMap S = extend_on_words(A, words, {&A}, {SVec::unit(ginv, f), sx}, true);
    return HopfData{"taft(" + std::to_string(n) + ")", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

HopfData sweedler() {
    HopfData H = taft(2, Scalar(-1));
    H.name = "sweedler";
    return H;
}

HopfData circle_hopf(Field f) {
    // basis 1, c, c^2, s with cs = 0, s^2 = 1 - c^2, c^3 = c
    const std::vector<std::string> labels = {"1", "c", "c^2", "s"};
    auto v = [f](std::initializer_list<std::pair<Index, long>> t) {
        SVec r;
        for (auto [i, c] : t) r.add(i, Scalar(f, mpq_class(c)));
        return r;
    };
    std::vector<SVec> table(16);
    const Index one = 0, c = 1, c2 = 2, s = 3;
    for (Index i = 0; i < 4; ++i) {
        table[one * 4 + i] = SVec::unit(i, f);
        table[i * 4 + one] = SVec::unit(i, f);
    }
    table[c * 4 + c] = v({{c2, 1}});
    table[c * 4 + c2] = table[c2 * 4 + c] = v({{c, 1}});
    table[c2 * 4 + c2] = v({{c2, 1}});
    table[c * 4 + s] = table[s * 4 + c] = SVec();
    table[c2 * 4 + s] = table[s * 4 + c2] = SVec();
    table[s * 4 + s] = v({{one, 1}, {c2, -1}});
    FinDimAlg A(f, labels, std::move(table), SVec::unit(one, f));
    const std::vector<std::vector<int>> words = {{}, {0}, {0, 0}, {1}};
    auto pair = pair_of(A);
    SVec dc = v({{c * 4 + c, 1}, {s * 4 + s, -1}});
    SVec ds = v({{c * 4 + s, 1}, {s * 4 + c, 1}});
    LinMap delta = extend_on_words(A, words, pair, {dc, ds}, false);
    std::vector<const FinDimAlg*> none;
    LinMap eps = extend_on_words(A, words, none, {SVec::unit(0, f), SVec()}, false);
    LinMap S = extend_on_words(A, words, {&A}, {SVec::unit(c, f), v({{s, -1}})}, true);
    return HopfData{"circle", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

HopfData tensor_hopf(const HopfData& H, const HopfData& L) {
    FinDimAlg A = tensor_alg(H.alg, L.alg);
    const size_t n = H.dim(), m = L.dim();
    const Field f = H.field();
    // (h1 (x) h2) (x) (l1 (x) l2) -> (h1 (x) l1) (x) (h2 (x) l2)
    LinMap mid = on_factors(LinMap::twist(f, Space{n}, Space{m}), Space{n, n, m, m}, 1, 2);
    LinMap delta = mid.after(tensor(H.delta, L.delta));
    delta = LinMap::from_columns(f, Space{n * m}, Space{n * m, n * m}, delta.cols());
    LinMap eps = LinMap::from_columns(f, Space{n * m}, Space{}, tensor(H.eps, L.eps).cols());
    LinMap S = LinMap::from_columns(f, Space{n * m}, Space{n * m}, tensor(H.S, L.S).cols());
    return HopfData{H.name + "(x)" + L.name, std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

const std::vector<BuiltinInfo>& builtin_hopf_entries() {
    static const std::vector<BuiltinInfo> e = {
        {"group", "group algebra kG (group=Zn|S3|AxB)"},
        {"dual_group", "dual group algebra k^G (group)"},
        {"taft", "Taft algebra T_{n^2} over cyclotomic(n) with omega = z^k (n, k)"},
        {"sweedler", "Sweedler algebra, taft(2, -1)"},
        {"circle", "circle Hopf algebra on {1, c, c^2, s}"},
        {"tensor", "tensor product of two group algebras (left, right)"},
    };
    return e;
}

HopfData builtin_hopf(const std::string& name, const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& k, const std::string& def) {
        auto it = params.find(k);
        return it == params.end() ? def : it->second;
    };
    Field f = parse_field(get("field", "Q"));
    HopfData H;
    if (name == "group") H = group_algebra(parse_group(get("group", "Z2")), f);
    else if (name == "dual_group") H = dual_group_algebra(parse_group(get("group", "Z2")), f);
    else if (name == "taft") {
        int n = std::stoi(get("n", "2"));
        int k = std::stoi(get("k", "1"));
        Field F = params.count("field") ? f : (n == 2 ? rationals() : cyclotomic(n));
        Scalar w = root_of_unity(F, n).pow(k);
        H = taft(n, w);
    } else if (name == "sweedler") H = sweedler();
    else if (name == "circle") H = circle_hopf(f);
    else if (name == "tensor")
        H = tensor_hopf(group_algebra(parse_group(get("left", "Z2")), f), group_algebra(parse_group(get("right", "Z2")), f));
    else throw std::invalid_argument("unknown Hopf algebra '" + name + "'");
    if (get("dual", "false") == "true") H = dual_hopf(H);
    return H;
}

// ---------------------------------------------------------------- quotients

std::vector<SVec> ideal_closure(const FinDimAlg& A, std::vector<SVec> gens) {
    Subspace I(A.field(), A.dim(), gens);
    for (;;) {
        std::vector<SVec> span = I.basis();
        size_t before = span.size();
        for (const auto& b : I.basis())
            for (size_t i = 0; i < A.dim(); ++i) {
                span.push_back(A.mul(A.basis(i), b));
                span.push_back(A.mul(b, A.basis(i)));
            }
        I = Subspace(A.field(), A.dim(), std::move(span));
        if (I.dim() == before) return I.basis();
    }
}

HopfData quotient_hopf(const HopfData& H, const std::vector<SVec>& ideal_basis) {
    const size_t n = H.dim();
    const Field f = H.field();
    Quotient Q(f, n, ideal_basis);
    const Subspace& I = Q.sub;
    Report rep;
    std::string w;
    for (size_t k = 0; k < I.dim() && w.empty(); ++k)
        for (size_t i = 0; i < n; ++i)
            if (!I.contains(H.alg.mul(H.alg.basis(i), I.basis()[k])) ||
                !I.contains(H.alg.mul(I.basis()[k], H.alg.basis(i)))) {
                w = "generator " + std::to_string(k) + " times " + H.alg.labels()[i];
                break;
            }
    rep.add("two_sided_ideal", w.empty(), w);
    std::vector<SVec> span;
    for (const auto& b : I.basis())
        for (size_t j = 0; j < n; ++j) {
            SVec left, right;
            for (const auto& [i, c] : b.entries()) {
                left.add(i * n + j, c);
                right.add(j * n + i, c);
            }
            span.push_back(std::move(left));
            span.push_back(std::move(right));
        }
    Subspace IH(f, n * n, std::move(span));
    w.clear();
    for (size_t k = 0; k < I.dim() && w.empty(); ++k) {
        if (!IH.contains(H.delta.apply(I.basis()[k]))) w = "delta of generator " + std::to_string(k);
        else if (!H.eps.apply(I.basis()[k]).is_zero()) w = "counit of generator " + std::to_string(k);
        else if (!I.contains(H.S.apply(I.basis()[k]))) w = "antipode of generator " + std::to_string(k);
    }
    rep.add("hopf_ideal", w.empty(), w);
    if (!rep.pass()) throw AxiomError("not a Hopf ideal: " + rep.first_failure(), rep);

    const size_t m = Q.dim();
    std::vector<std::string> labels;
    for (Index i : Q.complement) labels.push_back(H.alg.labels()[i]);
    std::vector<SVec> table(m * m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) table[a * m + b] = Q.project(H.alg.product(Q.complement[a], Q.complement[b]));
    FinDimAlg A(f, std::move(labels), std::move(table), Q.project(H.alg.unit()));
    LinMap delta(f, Space{m}, Space{m, m}), eps(f, Space{m}, Space{}), S(f, Space{m}, Space{m});
    for (size_t a = 0; a < m; ++a) {
        Index src = Q.complement[a];
        // (pi x pi) Delta, reducing each factor modulo I
        for (const auto& [ij, c] : H.delta.col(src).entries()) {
            SVec l = Q.project(SVec::unit(ij / n, f)), r = Q.project(SVec::unit(ij % n, f));
            for (const auto& [x, cx] : l.entries())
                for (const auto& [y, cy] : r.entries()) delta.cols()[a].add(x * m + y, c * cx * cy);
        }
        eps.cols()[a] = H.eps.col(src);
        S.cols()[a] = Q.project(H.S.col(src));
    }
    return HopfData{H.name + "/I", std::move(A), std::move(delta), std::move(eps), std::move(S)};
}

// ---------------------------------------------------------------- integrals

IntegralReport integrals(const HopfData& H, Exec exec) {
    const size_t n = H.dim();
    const Field f = H.field();
    IntegralReport out;
    LinMap left(f, Space{n}, Space{n, n}), right(f, Space{n}, Space{n, n});
    for (size_t l = 0; l < n; ++l)
        for (size_t h = 0; h < n; ++h) {
            Scalar e = H.eps.col(h).at(0, f);
            SVec hl = H.alg.product(h, l) - SVec::unit(l, f).scaled(e);
            SVec lh = H.alg.product(l, h) - SVec::unit(l, f).scaled(e);
            for (const auto& [k, c] : hl.entries()) left.cols()[l].add(h * n + k, c);
            for (const auto& [k, c] : lh.entries()) right.cols()[l].add(h * n + k, c);
        }
    SubspaceResult L = subspace_solve(left, exec), R = subspace_solve(right, exec);
    out.left = L.basis;
    out.right = R.basis;
    std::string w;
    for (const auto& lam : out.left)
        for (size_t h = 0; h < n && w.empty(); ++h)
            if (H.alg.mul(H.alg.basis(h), lam) != lam.scaled(H.eps.col(h).at(0, f))) w = H.alg.labels()[h];
    for (const auto& lam : out.right)
        for (size_t h = 0; h < n && w.empty(); ++h)
            if (H.alg.mul(lam, H.alg.basis(h)) != lam.scaled(H.eps.col(h).at(0, f))) w = H.alg.labels()[h];
    out.report.add("integrals_reverified", w.empty(), w);
    auto& cl = out.report.add("left_integrals_one_dimensional", out.left.size() == 1,
                              "dimension " + std::to_string(out.left.size()));
    cl.rank = L.rank;
    cl.dims = {static_cast<long>(out.left.size())};
    auto& cr = out.report.add("right_integrals_one_dimensional", out.right.size() == 1,
                              "dimension " + std::to_string(out.right.size()));
    cr.rank = R.rank;
    cr.dims = {static_cast<long>(out.right.size())};
    out.unimodular = Subspace(f, n, out.left) == Subspace(f, n, out.right);
    out.semisimple = !out.left.empty() && !H.eps.apply(out.left[0]).is_zero();
    return out;
}

std::optional<int> antipode_order(const HopfData& H, int max_iter) {
    LinMap id = LinMap::identity(H.field(), H.space());
    LinMap p = H.S;
    for (int k = 1; k <= max_iter; ++k) {
        if (p == id) return k;
        p = H.S.after(p);
    }
    return std::nullopt;
}

bool is_grouplike(const HopfData& H, const SVec& c) {
    if (c.is_zero()) return false;
    const size_t n = H.dim();
    SVec cc;
    for (const auto& [i, a] : c.entries())
        for (const auto& [j, b] : c.entries()) cc.add(i * n + j, a * b);
    return H.delta.apply(c) == cc;
}

bool is_skew_primitive(const HopfData& H, const SVec& x, const SVec& g, const SVec& h) {
    if (!is_grouplike(H, g) || !is_grouplike(H, h)) throw std::invalid_argument("skew-primitive test needs grouplike g and h");
    const size_t n = H.dim();
    SVec rhs;
    for (const auto& [i, a] : x.entries()) {
        for (const auto& [j, b] : g.entries()) rhs.add(i * n + j, a * b);
        for (const auto& [j, b] : h.entries()) rhs.add(j * n + i, a * b);
    }
    return H.delta.apply(x) == rhs;
}

bool same_structure(const HopfData& a, const HopfData& b) {
    return a.dim() == b.dim() && a.alg.table() == b.alg.table() && a.alg.unit() == b.alg.unit() &&
           a.delta == b.delta && a.eps == b.eps && a.S == b.S;
}

}  // namespace skewhopf
