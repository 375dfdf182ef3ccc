#include <doctest.h>

#include "skewhopf/fileformat.hpp"

using namespace skewhopf;

TEST_CASE("TOML subset") {
    auto d = toml_parse(
        "# comment\n"
        "name = \"x\"  # trailing\n"
        "[a.\"b c\"]\n"
        "n = -12\n"
        "flag = true\n"
        "list = [\"p\", \"q\",\n   \"r\"]\n"
        "dotted.key = \"v\"\n"
        "\"x*y\" = \"quoted \\\"key\\\"\"\n");
    CHECK(d.require({}).require("name") == "x");
    const TomlTable& t = d.require({"a", "b c"});
    CHECK(t.find("n")->integer == -12);
    CHECK(t.find("flag")->boolean);
    CHECK(t.find("list")->as_strings() == std::vector<std::string>{"p", "q", "r"});
    CHECK(t.get("dotted.key", "") == "v");
    CHECK(t.get("x*y", "") == "quoted \"key\"");
    CHECK(d.children({"a"}) == std::vector<std::string>{"b c"});
}

TEST_CASE("TOML errors carry positions") {
    auto err = [](const std::string& s) {
        try {
            toml_parse(s);
        } catch (const FormatError& e) {
            return std::make_pair(e.line, e.col);
        }
        return std::make_pair(0, 0);
    };
    CHECK(err("a = 1\na = 2\n") == std::make_pair(2, 1));
    CHECK(err("ok = 1\nb = \"open\n").first == 2);
    CHECK(err("[x]\n[x]\n").first == 2);
    CHECK(err("k = 1 2\n") == std::make_pair(1, 7));
    CHECK(err("k =\n").first == 1);
}

TEST_CASE("linear combinations") {
    Field Q = rationals();
    std::vector<std::string> A{"1", "x", "g"}, B{"a", "b"};
    auto v = parse_combination(Q, {&A, &B}, "2 x @ b - g @ a + 1/2 1 @ a");
    Space s{3, 2};
    CHECK(v.at(s.flat({1, 1}), Q) == Scalar(2));
    CHECK(v.at(s.flat({2, 0}), Q) == Scalar(-1));
    CHECK(v.at(s.flat({0, 0}), Q) == Scalar(mpq_class(1, 2)));
    CHECK(parse_combination(Q, {&A, &B}, write_combination({&A, &B}, s, v)) == v);
    CHECK(parse_combination(Q, {&A}, "-x + 3*g") == SVec::unit(2, Q).scaled(Scalar(3)) - SVec::unit(1, Q));
    CHECK(parse_combination(Q, {}, "-3/4") == SVec::unit(0, Q).scaled(Scalar(mpq_class(-3, 4))));
    CHECK(parse_combination(Q, {&A}, "0").is_zero());
    CHECK_THROWS_AS(parse_combination(Q, {&A}, "y"), FormatError);
    CHECK_THROWS_AS(parse_combination(Q, {&A, &B}, "x"), FormatError);
}

TEST_CASE("non-rational coefficients round trip") {
    Field F = cyclotomic(3);
    std::vector<std::string> A{"1", "x"};
    SVec v;
    v.add(1, Scalar::generator(F) + Scalar(2).in(F));
    v.add(0, Scalar::generator(F).pow(2));
    CHECK(parse_combination(F, {&A}, write_combination({&A}, Space{2}, v)) == v);
}

TEST_CASE("presentation files") {
    auto d = toml_parse(
        "name = \"weyl1\"\n[field]\nname = \"Q\"\n[coefficients]\ngens = [\"t\"]\n"
        "[variables]\nnames = [\"x\"]\n[delta.x]\nt = \"1\"\n");
    auto p = load_presentation(d);
    CHECK(normal_form(p, "x*t").str() == "t*x + 1");
    CHECK(same_presentation(p, load_presentation(toml_parse(write_presentation(p)))));
    auto c = load_presentation(toml_parse("catalog = \"quantum_plane\"\n[params]\nlambda = \"3\"\n"));
    CHECK(same_presentation(c, catalog("quantum_plane", {{"lambda", "3"}})));
}

TEST_CASE("relations with linear parts") {
    auto d = toml_parse(
        "[variables]\nnames = [\"x\", \"y\"]\n"
        "[relation.\"y*x\"]\nlead = \"2\"\nlinear.x = \"1\"\nconst = \"5\"\n");
    auto p = load_presentation(d);
    CHECK(normal_form(p, "y*x") == eval_poly(p, "2*x*y + x + 5"));
}

TEST_CASE("torsor multiplication extends from generators") {
    auto H = sweedler();
    auto t = hopf_to_torsor(H);
    FinDimAlg op = opposite(H.alg);
    std::map<size_t, SVec> gens;
    for (const char* g : {"g", "x"}) {
        size_t i = H.alg.index_of(g);
        gens[i] = t.mu.col(i);
    }
    CHECK(extend_from_generators(H.alg, {&H.alg, &op, &H.alg}, gens) == t.mu);
}

TEST_CASE("torsor sections") {
    auto d = toml_parse(
        "[algebra.T]\nbasis = [\"1\", \"g\"]\n[algebra.T.mul]\n\"1 1\" = \"1\"\n\"1 g\" = \"g\"\n\"g 1\" = \"g\"\n\"g g\" = \"1\"\n"
        "[torsor]\nalgebra = \"T\"\n[torsor.mu]\ng = \"g @ g @ g\"\n");
    auto t = load_torsor(d);
    CHECK(check_torsor(t).pass());
    CHECK(t.mu == hopf_to_torsor(group_algebra(cyclic_group(2))).mu);
}

TEST_CASE("finite Hopf files round trip") {
    for (const auto& e : builtin_hopf_entries()) {
        auto H = builtin_hopf(e.name);
        CAPTURE(e.name);
        CHECK(same_structure(H, load_finite_hopf(toml_parse(write_finite_hopf(H, "H")), "H")));
    }
}
