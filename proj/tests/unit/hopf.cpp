#include <doctest.h>

#include "skewhopf/hopf.hpp"

using namespace skewhopf;

TEST_CASE("group tables") {
    auto S3 = symmetric_group3();
    CHECK(S3.size() == 6);
    size_t nonabelian = 0;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) nonabelian += S3.mul(i, j) != S3.mul(j, i);
    CHECK(nonabelian > 0);
    auto Z = product_group(cyclic_group(2), cyclic_group(3));
    CHECK(Z.size() == 6);
    CHECK(parse_group("Z2xZ3").size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(Z.mul(i, Z.inverse(i)) == Z.identity);
}

TEST_CASE("antipode orders") {
    CHECK(antipode_order(group_algebra(symmetric_group3())) == 2);
    CHECK(antipode_order(sweedler()) == 4);
    CHECK(antipode_order(taft(3, root_of_unity(cyclotomic(3), 3))) == 6);
    CHECK(antipode_order(circle_hopf()) == 2);
    CHECK(antipode_order(group_algebra(cyclic_group(1))) == 1);
}

TEST_CASE("a wrong antipode is caught with a witness") {
    HopfData bad = sweedler();
    bad.S = LinMap::identity(bad.field(), bad.space());
    Report r = check_antipode(bad);
    CHECK(!r.pass());
    CHECK(r.first_failure().find("x") != std::string::npos);
}

TEST_CASE("duals") {
    auto sw = sweedler();
    CHECK(same_structure(dual_hopf(dual_hopf(sw)), sw));
    CHECK(check_hopf(dual_hopf(sw)).pass());
    auto d = dual_hopf(group_algebra(cyclic_group(3)));
    CHECK(check_hopf(d).pass());
    CHECK(d.alg.is_commutative());
}

TEST_CASE("grouplike and skew primitive elements of Sweedler") {
    auto sw = sweedler();
    Field Q = rationals();
    SVec g = SVec::unit(sw.alg.index_of("g"), Q), x = SVec::unit(sw.alg.index_of("x"), Q), one = sw.alg.unit();
    CHECK(is_grouplike(sw, g));
    CHECK(!is_grouplike(sw, x));
    CHECK(is_skew_primitive(sw, x, one, g));
    CHECK(!is_skew_primitive(sw, x, g, one));
}

TEST_CASE("Hopf quotients") {
    auto z4 = group_algebra(cyclic_group(4));
    Field Q = rationals();
    SVec v = SVec::unit(z4.alg.index_of("g^2"), Q) - z4.alg.unit();
    auto q = quotient_hopf(z4, ideal_closure(z4.alg, {v}));
    CHECK(q.dim() == 2);
    CHECK(check_hopf(q).pass());
    auto sw = sweedler();
    auto q2 = quotient_hopf(sw, ideal_closure(sw.alg, {SVec::unit(sw.alg.index_of("x"), Q)}));
    CHECK(q2.dim() == 2);
    CHECK(check_hopf(q2).pass());
}

TEST_CASE("integrals of the circle algebra and kS3") {
    auto c = integrals(circle_hopf());
    CHECK(c.left.size() == 1);
    CHECK(c.unimodular);
    CHECK(c.semisimple);
    auto s = integrals(group_algebra(symmetric_group3()));
    CHECK(s.unimodular);
    CHECK(s.semisimple);
    auto t = integrals(taft(3, root_of_unity(cyclotomic(3), 3)));
    CHECK(!t.unimodular);
    CHECK(!t.semisimple);
}

TEST_CASE("builtin parameters") {
    CHECK(builtin_hopf("group", {{"group", "S3"}}).dim() == 6);
    CHECK(builtin_hopf("taft", {{"n", "3"}}).dim() == 9);
    CHECK(builtin_hopf("tensor", {{"left", "Z2"}, {"right", "Z3"}}).dim() == 6);
    CHECK_THROWS(builtin_hopf("no_such_algebra"));
}
