#include <doctest.h>

#include "skewhopf/torsor.hpp"

using namespace skewhopf;

TEST_CASE("Grunspan map of a commutative Hopf algebra is the identity") {
    for (const auto& H : {group_algebra(cyclic_group(3)), circle_hopf(), dual_group_algebra(symmetric_group3())}) {
        auto g = grunspan_map(hopf_to_torsor(H));
        CAPTURE(H.name);
        CHECK(g.report.pass());
        CHECK(g.theta == LinMap::identity(H.field(), H.space()));
    }
}

TEST_CASE("Grunspan map of Sweedler is S^2, not the identity") {
    auto sw = sweedler();
    auto g = grunspan_map(hopf_to_torsor(sw));
    CHECK(g.theta == sw.S.after(sw.S));
    CHECK(g.theta != LinMap::identity(sw.field(), sw.space()));
}

TEST_CASE("the coproduct without an antipode is not a torsor structure") {
    auto sw = sweedler();
    TorsorData bad{"bad", sw.alg, delta2(sw)};
    Report r = check_torsor(bad);
    CHECK(!r.pass());
    CHECK(!r.find("algebra_map")->pass);
}

TEST_CASE("no-character torsors") {
    auto t = no_character_torsor(2, Scalar(1), Scalar(1), Scalar(-1));
    CHECK(t.T.dim() == 4);
    auto r = reconstruct_hopf(t);
    CHECK(r.report.pass());
    CHECK(r.H.dim() == 4);
    CHECK_THROWS_AS(no_character_torsor(2, Scalar(1), Scalar(0), Scalar(-1)), AxiomError);
}

TEST_CASE("galois_to_torsor of a regular comodule equals hopf_to_torsor") {
    for (const auto& H : {group_algebra(cyclic_group(2)), sweedler()}) {
        CHECK(galois_to_torsor(regular_comodule(H)).mu == hopf_to_torsor(H).mu);
        CHECK(galois_torsor_check(regular_comodule(H)).pass());
    }
}

TEST_CASE("galois_to_torsor refuses a non-Galois comodule") {
    auto H = group_algebra(cyclic_group(2));
    CHECK_THROWS_AS(galois_to_torsor(trivial_comodule(H.alg, H)), AxiomError);
}

TEST_CASE("descent datum of a Hopf torsor") {
    auto d = descent_datum(hopf_to_torsor(taft(3, root_of_unity(cyclotomic(3), 3))));
    CHECK(d.report.pass());
}

TEST_CASE("Hopf Galois systems") {
    auto sw = sweedler();
    auto s = hopf_hgs(sw);
    CHECK(check_hgs(s).pass());
    s.S = LinMap::zero(sw.field(), sw.space(), sw.space());
    Report r = check_hgs(s);
    CHECK(!r.find("gamma_antipode")->pass);
}

TEST_CASE("Sridharan systems need a Lie bracket") {
    LieData g = LieData::abelian(rationals(), {"x", "y", "z"});
    // [y, x] = z, [z, x] = x
    g.set(1, 0, {Scalar(0), Scalar(0), Scalar(1)});
    g.set(2, 0, {Scalar(1), Scalar(0), Scalar(0)});
    CHECK_THROWS_AS(sridharan_build(g, LieCocycle::zero(rationals(), 3)), AxiomError);
}
