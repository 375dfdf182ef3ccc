#include <doctest.h>

#include "skewhopf/catalog.hpp"

using namespace skewhopf;

TEST_CASE("Weyl algebra commutation") {
    auto w = catalog("weyl");
    CHECK(normal_form(w, "x*t").str() == "t*x + 1");
    // x^n t = t x^n + n x^(n-1)
    CHECK(normal_form(w, "x^3*t") == eval_poly(w, "t*x^3 + 3*x^2"));
    // x t^2 = t^2 x + 2t
    CHECK(normal_form(w, "x*t^2") == eval_poly(w, "t^2*x + 2*t"));
    CHECK(normal_form(w, "x^2*t^2") == eval_poly(w, "x^2*t^2"));
}

TEST_CASE("shift operators") {
    auto s = catalog("shift", {{"h", "1"}});
    // x p(t) = p(t - h) x
    CHECK(normal_form(s, "x*t") == eval_poly(s, "t*x - x"));
    CHECK(normal_form(s, "x^2*t") == eval_poly(s, "t*x^2 - 2*x^2"));
    CHECK(normal_form(s, "x*t^2") == eval_poly(s, "t^2*x - 2*t*x + x"));
}

TEST_CASE("quantum plane and U_q(sl2) relations") {
    auto u = catalog("uq_sl2");
    CHECK(normal_form(u, "e*k") == eval_poly(u, "(1/q^2)*k*e"));
    CHECK(normal_form(u, "f*k") == eval_poly(u, "(q^2)*k*f"));
    CHECK(normal_form(u, "e*f - f*e") == eval_poly(u, "(q/(q^2 - 1))*k - (q/(q^2 - 1))*k^-1"));
}

TEST_CASE("U(sl2) bracket") {
    auto u = catalog("u_sl2");
    const auto& vars = u->vars;
    REQUIRE(vars.size() == 3);
    for (const auto& a : vars)
        for (const auto& b : vars) CHECK(normal_form(u, a + "*" + b) == eval_poly(u, a + "*" + b));
}

TEST_CASE("rewriting and fast product agree on longer words") {
    for (const char* name : {"weyl", "uq_sl2", "u_sl2", "q_heisenberg", "hayashi", "dispin"}) {
        auto p = catalog(name);
        std::string w;
        for (size_t i = p->nvars(); i-- > 0;) w += (w.empty() ? "" : "*") + p->vars[i] + "^2";
        CAPTURE(name);
        CHECK(normal_form(p, w) == eval_poly(p, w));
    }
}

TEST_CASE("catalog presentations are confluent") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.name);
        CHECK(pbw_check(catalog(e.name)).pass);
    }
}

TEST_CASE("leading data") {
    auto w = catalog("weyl");
    auto lt = leading_data(normal_form(w, "x^2*t + x"));
    CHECK(lt.dg == 2);
    CHECK(lt.lm == Exps{2});
}

TEST_CASE("builder rejects bad input") {
    PresentationBuilder b("bad", rationals(), {"t"});
    b.vars({"x"});
    CHECK_THROWS(b.sigma("y", {{"t", "t"}}).build());
}
