#include "skewhopf/lie.hpp"

namespace skewhopf {

LieData LieData::abelian(Field f, std::vector<std::string> names) {
    LieData g;
    g.field = f;
    size_t n = names.size();
    g.names = std::move(names);
    g.bracket.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(f))));
    return g;
}

void LieData::set(int i, int j, const std::vector<Scalar>& v) {
    bracket[i][j] = v;
    for (size_t k = 0; k < v.size(); ++k) bracket[j][i][k] = -v[k];
}

std::vector<Scalar> LieData::apply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    size_t n = dim();
    std::vector<Scalar> out(n, Scalar::zero(field));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (size_t k = 0; k < n; ++k) out[k] += c * bracket[i][j][k];
        }
    }
    return out;
}

LieCocycle LieCocycle::zero(Field f, size_t n) {
    LieCocycle c;
    c.values.assign(n, std::vector<Scalar>(n, Scalar::zero(f)));
    return c;
}

void LieCocycle::set(int i, int j, const Scalar& v) {
    values[i][j] = v;
    values[j][i] = -v;
}

Scalar LieCocycle::apply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    Scalar s = Scalar::zero(values.empty() ? rationals() : values[0][0].field());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * values[i][j];
    return s;
}

namespace {

std::vector<Scalar> unit_vec(const LieData& g, size_t i) {
    std::vector<Scalar> v(g.dim(), Scalar::zero(g.field));
    v[i] = Scalar::one(g.field);
    return v;
}

}  // namespace

Report check_lie(const LieData& g) {
    Report rep;
    const size_t n = g.dim();
    bool anti = true;
    std::string w;
    for (size_t i = 0; i < n && anti; ++i)
        for (size_t j = 0; j < n && anti; ++j)
            for (size_t k = 0; k < n; ++k)
                if (g.bracket[i][j][k] != -g.bracket[j][i][k]) {
                    anti = false;
                    w = "[" + g.names[i] + "," + g.names[j] + "]";
                    break;
                }
    rep.add("antisymmetry", anti, w);
    bool jac = true;
    w.clear();
    for (size_t i = 0; i < n && jac; ++i)
        for (size_t j = i + 1; j < n && jac; ++j)
            for (size_t k = j + 1; k < n && jac; ++k) {
                auto x = unit_vec(g, i), y = unit_vec(g, j), z = unit_vec(g, k);
                auto a = g.apply(g.apply(x, y), z);
                auto b = g.apply(g.apply(z, x), y);
                auto c = g.apply(g.apply(y, z), x);
                for (size_t t = 0; t < n; ++t)
                    if (!(a[t] + b[t] + c[t]).is_zero()) {
                        jac = false;
                        w = "(" + g.names[i] + "," + g.names[j] + "," + g.names[k] + ")";
                        break;
                    }
            }
    rep.add("jacobi", jac, w);
    return rep;
}

Report check_cocycle(const LieData& g, const LieCocycle& f) {
    Report rep;
    const size_t n = g.dim();
    bool alt = true;
    std::string w;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (f.values[i][j] != -f.values[j][i]) {
                alt = false;
                w = "f(" + g.names[i] + "," + g.names[j] + ")";
            }
    rep.add("alternating", alt, w);
    bool ok = true;
    w.clear();
    for (size_t i = 0; i < n && ok; ++i)
        for (size_t j = i + 1; j < n && ok; ++j)
            for (size_t k = j + 1; k < n && ok; ++k) {
                auto x = unit_vec(g, i), y = unit_vec(g, j), z = unit_vec(g, k);
                Scalar s = f.apply(x, g.apply(y, z)) + f.apply(y, g.apply(z, x)) + f.apply(z, g.apply(x, y));
                if (!s.is_zero()) {
                    ok = false;
                    w = "(" + g.names[i] + "," + g.names[j] + "," + g.names[k] + ")";
                }
            }
    rep.add("cocycle", ok, w);
    return rep;
}

Presentation sridharan_presentation(const LieData& g, const LieCocycle& f, const std::string& name) {
    CoeffRing R = ring_make(g.field, {});
    const size_t n = g.dim();
    RelationMap rels;
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < j; ++i) {
            PairRelation r;
            r.lead = RElem::one(R);
            for (size_t k = 0; k < n; ++k) r.linear.push_back(RElem(R, g.bracket[j][i][k]));
            r.constant = RElem(R, f.values[j][i]);
            rels[{static_cast<int>(j), static_cast<int>(i)}] = r;
        }
    return presentation_make(name, R, g.names, {}, {}, std::move(rels), PresentationFlags{false, true});
}

std::pair<LieData, LieCocycle> sridharan_table1_data(int type, const Scalar& alpha) {
    Field F = alpha.field();
    LieData g = LieData::abelian(F, {"x", "y", "z"});
    LieCocycle f = LieCocycle::zero(F, 3);
    auto v = [&](long a, long b, long c) {
        return std::vector<Scalar>{Scalar(F, mpq_class(a)), Scalar(F, mpq_class(b)), Scalar(F, mpq_class(c))};
    };
    const int X = 0, Y = 1, Z = 2;
    switch (type) {
        case 1: break;
        case 2: g.set(Y, Z, v(1, 0, 0)); break;
        case 3: g.set(X, Y, v(1, 0, 0)); break;
        case 4:
            g.set(Y, Z, {Scalar::zero(F), alpha, Scalar::zero(F)});
            g.set(Z, X, v(-1, 0, 0));
            break;
        case 5:
            g.set(Y, Z, v(0, -1, 0));
            g.set(Z, X, v(-1, -1, 0));
            break;
        case 6:
            g.set(X, Y, v(0, 0, 1));
            g.set(Y, Z, v(0, -2, 0));
            g.set(Z, X, v(-2, 0, 0));
            break;
        case 7: f.set(X, Y, Scalar::one(F)); break;
        case 8:
            f.set(X, Y, Scalar::one(F));
            g.set(Y, Z, v(1, 0, 0));
            break;
        case 9:
            g.set(X, Y, v(1, 0, 0));
            f.set(Y, Z, Scalar::one(F));
            break;
        case 10:
            f.set(X, Y, Scalar::one(F));
            g.set(Y, Z, v(0, 1, 0));
            g.set(Z, X, v(1, 0, 0));
            break;
        default: throw PresentationError("table type must be between 1 and 10");
    }
    if (type == 4 && alpha.is_zero()) throw PresentationError("alpha must be nonzero");
    return {g, f};
}

}  // namespace skewhopf
