#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "skewhopf/findim.hpp"
#include "skewhopf/skew_pbw.hpp"

namespace prop {

using namespace skewhopf;

// Seeded source of random test data; every property names its seed.
class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Scalar rational(int h = 5) {
        int d = uniform(1, h);
        return Scalar(mpq_class(uniform(-h, h), d));
    }
    Scalar nonzero(int h = 5) {
        Scalar s = rational(h);
        while (s.is_zero()) s = rational(h);
        return s;
    }
    // small element of any supported field
    Scalar scalar(Field f) {
        if (f->kind == FieldKind::rationals) return rational();
        Scalar g = Scalar::generator(f), s = Scalar::zero(f);
        int deg = f->kind == FieldKind::cyclotomic ? static_cast<int>(f->modulus.size()) - 2 : 2;
        for (int i = 0; i <= deg; ++i) s += g.pow(i) * rational().in(f);
        if (f->kind == FieldKind::rational_functions && coin()) s /= g + rational().in(f) + Scalar(7).in(f);
        return s;
    }

    Matrix matrix(size_t r, size_t c, int h = 3, double zero = 0.3) {
        Matrix m(rationals(), r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = coin(zero) ? Scalar(0) : Scalar(uniform(-h, h));
        return m;
    }
    // rank-deficient on purpose: some rows are combinations of others
    Matrix low_rank(size_t r, size_t c) {
        Matrix m = matrix(r, c);
        for (size_t i = 1; i < r; ++i)
            if (coin(0.4)) {
                size_t a = static_cast<size_t>(uniform(0, static_cast<int>(i) - 1));
                Scalar k(uniform(-2, 2));
                for (size_t j = 0; j < c; ++j) m(i, j) = m(a, j) * k;
            }
        return m;
    }

    SVec svec(size_t n, Field f, double density = 0.5) {
        SVec v;
        for (size_t i = 0; i < n; ++i)
            if (coin(density)) v.add(i, scalar(f));
        return v;
    }

    RElem relem(const CoeffRing& R, int max_deg) {
        RElem r(R);
        int terms = uniform(0, 3);
        for (int t = 0; t < terms; ++t) {
            Exps e(R->ngens(), 0);
            for (size_t g = 0; g < R->ngens(); ++g) e[g] = uniform(R->laurent[g] ? -max_deg : 0, max_deg);
            r.add_term(e, scalar(R->field));
        }
        return r;
    }

    SkewPoly poly(const Presentation& p, int max_deg, int terms = 3) {
        SkewPoly s(p);
        for (int t = 0; t < terms; ++t) {
            Exps e(p->nvars(), 0);
            int budget = uniform(0, max_deg);
            for (int k = 0; k < budget; ++k) ++e[static_cast<size_t>(uniform(0, static_cast<int>(p->nvars()) - 1))];
            s.add_term(e, relem(p->ring, 1));
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace prop

namespace doctest {
template <>
struct StringMaker<skewhopf::Scalar> {
    static String convert(const skewhopf::Scalar& s) { return s.str().c_str(); }
};
}  // namespace doctest
