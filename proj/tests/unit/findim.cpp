#include <doctest.h>

#include "skewhopf/findim.hpp"

using namespace skewhopf;

namespace {
Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rationals(), rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Scalar(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("rank, kernel and solve") {
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    // kernel spanned by (-1, -1, 1)
    CHECK(k[0][0] == -k[0][2]);
    CHECK(k[0][1] == -k[0][2]);
    auto x = solve(m, {Scalar(6), Scalar(12), Scalar(2)});
    REQUIRE(x);
    CHECK(Scalar(1) * (*x)[0] + Scalar(2) * (*x)[1] + Scalar(3) * (*x)[2] == Scalar(6));
    CHECK(!solve(m, {Scalar(1), Scalar(0), Scalar(0)}));
}

TEST_CASE("inverse of a Hilbert matrix") {
    Matrix h(rationals(), 3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) h(i, j) = Scalar(mpq_class(1, static_cast<long>(i + j + 1)));
    auto inv = inverse(h);
    REQUIRE(inv);
    CHECK((*inv)(0, 0) == Scalar(9));
    CHECK((*inv)(1, 1) == Scalar(192));
    CHECK((*inv)(2, 2) == Scalar(180));
    CHECK((*inv)(0, 2) == Scalar(30));
    CHECK(h * *inv == Matrix::identity(rationals(), 3));
    CHECK(!inverse(from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("serial and parallel elimination agree") {
    Matrix m = from_rows({{0, 2, 1, 4}, {1, 1, 0, 3}, {2, 4, 1, 10}, {1, 3, 1, 7}});
    auto a = row_reduce(m, Exec::serial), b = row_reduce(m, Exec::parallel);
    CHECK(a.rank == 2);
    CHECK(a.rank == b.rank);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rref == b.rref);
}

TEST_CASE("subspaces and quotients") {
    Field Q = rationals();
    SVec a = SVec::unit(0, Q) + SVec::unit(1, Q), b = SVec::unit(1, Q) - SVec::unit(2, Q);
    Subspace s(Q, 3, {a, b, a + b});
    CHECK(s.dim() == 2);
    CHECK(s.contains(SVec::unit(0, Q) + SVec::unit(2, Q)));
    CHECK(!s.contains(SVec::unit(0, Q)));
    Quotient q(Q, 3, {a, b});
    CHECK(q.dim() == 1);
    CHECK(q.project(a).is_zero());
}

TEST_CASE("tensor index arithmetic") {
    Space s{2, 3, 4};
    CHECK(s.size() == 24);
    CHECK(s.flat({1, 2, 3}) == 23);
    CHECK(s.split(13) == std::vector<size_t>{1, 0, 1});
    LinMap t = LinMap::twist(rationals(), Space{2}, Space{3});
    CHECK(t.apply(SVec::unit(Space{2, 3}.flat({1, 2}), rationals())) == SVec::unit(Space{3, 2}.flat({2, 1}), rationals()));
}

TEST_CASE("algebras: tensor products and opposites") {
    Field Q = rationals();
    // dual numbers k[e]/(e^2)
    auto D = algebra_make(Q, {"1", "e"}, {SVec::unit(0, Q), SVec::unit(1, Q), SVec::unit(1, Q), SVec()}, SVec::unit(0, Q));
    CHECK(D.is_commutative());
    auto DD = tensor_alg(D, D);
    CHECK(DD.dim() == 4);
    CHECK(check_algebra(DD).pass());
    SVec e1 = SVec::unit(Space{2, 2}.flat({1, 0}), Q), e2 = SVec::unit(Space{2, 2}.flat({0, 1}), Q);
    CHECK(DD.mul(e1, e2) == SVec::unit(3, Q));
    CHECK(DD.mul(e1, e1).is_zero());
    CHECK(tensor_mul({&D, &D}, e1, e2) == DD.mul(e1, e2));
    CHECK_THROWS_AS(algebra_make(Q, {"1", "e"}, {SVec::unit(0, Q), SVec::unit(1, Q), SVec::unit(0, Q), SVec()}, SVec::unit(0, Q)),
                    AxiomError);
}

TEST_CASE("convolution inverse of the identity of kZ2 is the antipode") {
    Field Q = rationals();
    auto A = algebra_make(Q, {"1", "g"}, {SVec::unit(0, Q), SVec::unit(1, Q), SVec::unit(1, Q), SVec::unit(0, Q)}, SVec::unit(0, Q));
    LinMap delta(Q, Space{2}, Space{2, 2});
    delta.cols()[0] = SVec::unit(0, Q);
    delta.cols()[1] = SVec::unit(3, Q);
    LinMap eps(Q, Space{2}, Space{});
    eps.cols()[0] = SVec::unit(0, Q);
    eps.cols()[1] = SVec::unit(0, Q);
    auto inv = convolution_inverse(LinMap::identity(Q, Space{2}), delta, eps, A);
    REQUIRE(inv);
    CHECK(*inv == LinMap::identity(Q, Space{2}));
}

TEST_CASE("scan_first finds the smallest index in both modes") {
    for (Exec e : {Exec::serial, Exec::parallel}) {
        CHECK(scan_first(1000, e, [](size_t i) { return i % 97 == 96 || i == 500; }) == size_t(96));
        CHECK(!scan_first(50, e, [](size_t) { return false; }));
    }
}
