#include <doctest.h>

#include "skewhopf/coeff_ring.hpp"

using namespace skewhopf;

TEST_CASE("Laurent generators invert") {
    auto R = ring_make(rationals(), {"k", "t"}, {true, false});
    RElem k = RElem::gen(R, 0), ki = RElem::gen(R, 0, -1);
    CHECK(k * ki == RElem::one(R));
    CHECK(k.is_unit());
    CHECK(k.unit_inverse() == ki);
    CHECK(!RElem::gen(R, 1).is_unit());
    CHECK_THROWS(RElem::gen(R, 1, -1));
}

TEST_CASE("parse and print ring elements") {
    auto R = ring_make(rational_functions("q"), {"k"}, {true});
    RElem a = parse_relem(R, "(q^2)*k + k^-1 - 3");
    CHECK(parse_relem(R, a.str()) == a);
    CHECK(a.total_degree() == 1);
    CHECK(parse_relem(R, "k*k^-1") == RElem::one(R));
}

TEST_CASE("endomorphisms and twisted derivations") {
    auto R = ring_make(rationals(), {"t"});
    RElem t = RElem::gen(R, 0);
    // sigma(t) = t + 1, so sigma(t^2) = t^2 + 2t + 1
    EndoSpec s = EndoSpec::make(R, {t + RElem::one(R)});
    CHECK(endo_apply(s, t * t) == t * t + t.scaled(Scalar(2)) + RElem::one(R));
    // d/dt: delta(t^3) = 3 t^2
    DerivSpec d = DerivSpec::make(EndoSpec::identity(R), {RElem::one(R)});
    CHECK(deriv_apply(d, t * t * t) == (t * t).scaled(Scalar(3)));
    CHECK(deriv_apply_right(d, t * t * t) == deriv_apply(d, t * t * t));
    // sigma-derivation with sigma(t) = 2t, delta(t) = 1: delta(t^2) = sigma(t) delta(t) + delta(t) t = 3t
    EndoSpec s2 = EndoSpec::make(R, {t.scaled(Scalar(2))});
    DerivSpec d2 = DerivSpec::make(s2, {RElem::one(R)});
    CHECK(deriv_apply(d2, t * t) == t.scaled(Scalar(3)));
    CHECK(deriv_apply_right(d2, t * t) == t.scaled(Scalar(3)));
}

TEST_CASE("Laurent generators need unit images") {
    auto R = ring_make(rationals(), {"k"}, {true});
    RElem k = RElem::gen(R, 0);
    CHECK(endo_validate(EndoSpec::make(R, {k.scaled(Scalar(3))})).pass());
    CHECK_THROWS(EndoSpec::make(R, {k + RElem::one(R)}));
}
