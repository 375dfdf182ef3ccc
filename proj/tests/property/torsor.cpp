#include <doctest.h>

#include "gen.hpp"
#include "skewhopf/torsor.hpp"

using namespace prop;

TEST_CASE("the Grunspan map of a Hopf torsor is the squared antipode") {
    Gen g(601);
    std::vector<HopfData> hs = {sweedler(), group_algebra(cyclic_group(g.uniform(2, 5))),
                                taft(3, root_of_unity(cyclotomic(3), 3)), builtin_hopf("dual_group", {{"group", "S3"}})};
    for (const auto& H : hs) {
        CAPTURE(H.name);
        auto t = hopf_to_torsor(H);
        CHECK(check_torsor(t).pass());
        auto r = grunspan_map(t);
        CHECK(r.report.pass());
        CHECK(r.theta == H.S.after(H.S));
    }
}

TEST_CASE("torsors without characters rebuild a Hopf algebra of the same dimension") {
    Gen g(602);
    for (int k = 0; k < 4; ++k) {
        int n = g.uniform(2, 3);
        Field F = cyclotomic(n);
        Scalar alpha = Scalar(g.uniform(2, 5)).in(F), beta = Scalar(g.uniform(2, 5)).in(F);
        auto t = no_character_torsor(n, alpha, beta, root_of_unity(F, n));
        CHECK(check_torsor(t).pass());
        auto rec = reconstruct_hopf(t);
        CHECK(rec.report.pass());
        CHECK(rec.H.dim() == t.T.dim());
        CHECK(check_hopf(rec.H).pass());
    }
}
