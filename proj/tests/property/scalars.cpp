#include <doctest.h>

#include "gen.hpp"

using namespace prop;

TEST_CASE("field axioms on random elements") {
    for (Field f : {rationals(), cyclotomic(5), cyclotomic(12), rational_functions("q")}) {
        Gen g(101);
        for (int k = 0; k < 40; ++k) {
            Scalar a = g.scalar(f), b = g.scalar(f), c = g.scalar(f);
            CAPTURE(f->name());
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(parse_scalar(f, a.str()) == a);
        }
    }
}

TEST_CASE("powers agree with repeated products") {
    Gen g(7);
    Field f = cyclotomic(7);
    for (int k = 0; k < 20; ++k) {
        Scalar a = g.scalar(f);
        if (a.is_zero()) continue;
        int e = g.uniform(-4, 6);
        Scalar r = Scalar::one(f);
        for (int i = 0; i < std::abs(e); ++i) r *= a;
        if (e < 0) r = r.inverse();
        CHECK(a.pow(e) == r);
    }
}

TEST_CASE("normalizing a stored scalar changes nothing") {
    Gen g(103);
    for (Field f : {rationals(), cyclotomic(9), rational_functions("q")})
        for (int k = 0; k < 30; ++k) {
            Scalar a = g.scalar(f) * g.scalar(f), b = a;
            b.normalize();
            CHECK(b == a);
            CHECK(b.str() == a.str());
        }
}

TEST_CASE("roots of unity have exact order") {
    for (int m : {1, 2, 4, 6, 8, 12, 15})
        for (int n = 1; n <= m; ++n) {
            if (m % n) continue;
            Scalar w = root_of_unity(cyclotomic(m), n);
            CHECK(w.pow(n).is_one());
            for (int k = 1; k < n; ++k) CHECK_FALSE(w.pow(k).is_one());
        }
}
