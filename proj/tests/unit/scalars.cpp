#include <doctest.h>

#include "skewhopf/scalar.hpp"

using namespace skewhopf;

TEST_CASE("rational arithmetic is exact") {
    Scalar a = Scalar(mpq_class(1, 3)), b = Scalar(mpq_class(1, 6));
    CHECK(a + b == Scalar(mpq_class(1, 2)));
    CHECK(a * b == Scalar(mpq_class(1, 18)));
    CHECK((a - a).is_zero());
    CHECK(Scalar(mpq_class(-2, 7)).inverse() == Scalar(mpq_class(-7, 2)));
    CHECK(Scalar(2).pow(-3) == Scalar(mpq_class(1, 8)));
    CHECK_THROWS_AS(Scalar(0).inverse(), FieldError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == QPoly{-1, 1});
    CHECK(cyclotomic_polynomial(3) == QPoly{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == QPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == QPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == QPoly{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity in cyclotomic fields") {
    Field F = cyclotomic(3);
    Scalar z = Scalar::generator(F);
    CHECK(z.pow(3).is_one());
    CHECK(!z.is_one());
    CHECK((z * z + z + Scalar::one(F)).is_zero());
    CHECK(z.inverse() == z * z);
    Scalar w = root_of_unity(F, 3);
    CHECK(w.pow(3).is_one());
    CHECK(!w.is_one());

    Field F5 = cyclotomic(5);
    Scalar u = Scalar::generator(F5);
    CHECK(u.pow(5).is_one());
    Scalar s = Scalar::one(F5);
    for (int i = 1; i < 5; ++i) s += u.pow(i);
    CHECK(s.is_zero());
}

TEST_CASE("rational functions in q") {
    Field F = rational_functions("q");
    Scalar q = Scalar::generator(F);
    Scalar one = Scalar::one(F);
    CHECK((q * q - one) / (q - one) == q + one);
    CHECK((q - q.inverse()) * q == q * q - one);
    CHECK(!(q.pow(2)).is_rational());
    CHECK((q / q).is_one());
}

TEST_CASE("parsing scalars and fields") {
    CHECK(parse_field("Q") == rationals());
    CHECK(parse_field("cyclotomic(3)") == cyclotomic(3));
    CHECK(parse_field("Q(q)") == rational_functions("q"));
    Field F = rational_functions("q");
    Scalar q = Scalar::generator(F);
    CHECK(parse_scalar(F, "q^2 - 1") == q * q - Scalar::one(F));
    CHECK(parse_scalar(F, "1/(q - 1)") == (q - Scalar::one(F)).inverse());
    CHECK(parse_scalar(rationals(), "-3/4") == Scalar(mpq_class(-3, 4)));
    CHECK(parse_scalar(F, parse_scalar(F, "(q^2 + 1)/(q - 2)").str()) == parse_scalar(F, "(q^2 + 1)/(q - 2)"));
}
