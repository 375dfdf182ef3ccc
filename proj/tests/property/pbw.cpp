#include <doctest.h>

#include "gen.hpp"
#include "skewhopf/catalog.hpp"
#include "skewhopf/lie.hpp"

using namespace prop;

TEST_CASE("multiplication is associative on random elements") {
    for (const char* name : {"weyl", "shift", "uq_sl2", "u_sl2", "q_heisenberg", "hayashi", "dispin", "threedim", "diffusion"}) {
        auto p = catalog(name);
        Gen g(301);
        for (int k = 0; k < 6; ++k) {
            SkewPoly a = g.poly(p, 2), b = g.poly(p, 2), c = g.poly(p, 2);
            CAPTURE(name);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
        }
    }
}

TEST_CASE("rewriting a word gives the fast product") {
    for (const char* name : {"weyl", "uq_sl2", "q_heisenberg", "additive_weyl", "multiplicative_weyl"}) {
        auto p = catalog(name);
        Gen g(302);
        for (int k = 0; k < 8; ++k) {
            std::string w;
            for (int len = g.uniform(1, 5); len > 0; --len) {
                const auto& R = p->ring;
                if (R->ngens() && g.coin(0.4)) w += (w.empty() ? "" : "*") + R->gens[static_cast<size_t>(g.uniform(0, static_cast<int>(R->ngens()) - 1))];
                else w += (w.empty() ? "" : "*") + p->vars[static_cast<size_t>(g.uniform(0, static_cast<int>(p->nvars()) - 1))];
            }
            CAPTURE(name);
            CAPTURE(w);
            CHECK(normal_form(p, w) == eval_poly(p, w));
        }
    }
}

TEST_CASE("Ore product formula on the shift algebra") {
    auto p = catalog("shift", {{"h", "3"}});
    Gen g(303);
    for (int k = 0; k < 40; ++k) {
        RElem r = g.relem(p->ring, 3), s = g.relem(p->ring, 3);
        int i = g.uniform(0, 5), j = g.uniform(0, 5);
        SkewPoly a = SkewPoly::monomial(p, {i}, r), b = SkewPoly::monomial(p, {j}, s);
        CHECK(multiply(a, b) == word_sum_product(p, r, i, s, j));
    }
}

TEST_CASE("Sridharan presentations are confluent exactly for Lie data with a cocycle") {
    Gen g(304);
    int yes = 0;
    for (int k = 0; k < 25; ++k) {
        size_t n = static_cast<size_t>(g.uniform(2, 3));
        std::vector<std::string> names;
        for (size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
        LieData L = LieData::abelian(rationals(), names);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (g.coin(0.5)) {
                    std::vector<Scalar> v(n);
                    for (auto& c : v) c = Scalar(g.coin(0.6) ? 0 : g.uniform(-1, 1));
                    L.set(static_cast<int>(i), static_cast<int>(j), v);
                }
        LieCocycle f = LieCocycle::zero(rationals(), n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) f.set(static_cast<int>(i), static_cast<int>(j), Scalar(g.uniform(-1, 1)));
        bool expected = check_lie(L).pass() && check_cocycle(L, f).pass();
        yes += expected;
        CHECK(pbw_check(sridharan_presentation(L, f)).pass == expected);
    }
    CHECK(yes > 0);
    CHECK(yes < 25);
}
