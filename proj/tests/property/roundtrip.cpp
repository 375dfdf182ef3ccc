#include <doctest.h>

#include "gen.hpp"
#include "skewhopf/catalog.hpp"
#include "skewhopf/fileformat.hpp"
#include "skewhopf/hopf.hpp"

using namespace prop;

TEST_CASE("presentations survive writing and reading with random parameters") {
    Gen g(501);
    for (int k = 0; k < 12; ++k) {
        std::string n = std::to_string(g.uniform(1, 3));
        std::vector<std::pair<std::string, CatalogParams>> cases = {
            {"weyl", {{"n", n}}}, {"shift", {{"h", g.nonzero().str()}}}, {"quantum_affine", {{"n", n}, {"lambda", g.nonzero().str()}}},
            {"q_heisenberg", {{"n", n}}}, {"hayashi", {{"n", n}}}};
        for (const auto& [name, params] : cases) {
            auto p = catalog(name, params);
            CAPTURE(name);
            auto q = load_presentation(toml_parse(write_presentation(p)));
            CHECK(same_presentation(p, q));
        }
    }
}

TEST_CASE("linear combinations survive writing and parsing") {
    Gen g(502);
    std::vector<std::string> a = {"1", "g", "x", "gx"}, b = {"e", "s", "s2"};
    std::vector<const std::vector<std::string>*> fs = {&a, &b};
    Space s{a.size(), b.size()};
    for (Field f : {rationals(), cyclotomic(3)}) {
        for (int k = 0; k < 30; ++k) {
            SVec v = g.svec(s.size(), f, 0.4);
            CHECK(parse_combination(f, fs, write_combination(fs, s, v)) == v);
        }
    }
}

TEST_CASE("finite Hopf algebras survive writing and reading") {
    Gen g(503);
    for (int k = 0; k < 4; ++k) {
        int n = g.uniform(2, 4);
        HopfData H = taft(n, root_of_unity(cyclotomic(n), n));
        auto d = toml_parse(write_finite_hopf(H, "H"));
        HopfData back = load_finite_hopf(d, "H");
        CHECK(back.alg.labels() == H.alg.labels());
        CHECK(back.delta == H.delta);
        CHECK(back.S == H.S);
        CHECK(check_hopf(back).pass());
    }
}
