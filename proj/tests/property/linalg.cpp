#include <doctest.h>

#include "gen.hpp"

using namespace prop;

TEST_CASE("rank plus nullity") {
    Gen g(202);
    for (int k = 0; k < 40; ++k) {
        size_t r = static_cast<size_t>(g.uniform(1, 7)), c = static_cast<size_t>(g.uniform(1, 7));
        Matrix m = g.low_rank(r, c);
        auto ker = kernel(m);
        CHECK(rank(m) + static_cast<long>(ker.size()) == static_cast<long>(c));
        for (const auto& v : ker)
            for (size_t i = 0; i < r; ++i) {
                Scalar s(0);
                for (size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("serial and parallel elimination are identical") {
    Gen g(203);
    for (int k = 0; k < 30; ++k) {
        Matrix m = g.low_rank(static_cast<size_t>(g.uniform(1, 9)), static_cast<size_t>(g.uniform(1, 9)));
        auto a = row_reduce(m, Exec::serial), b = row_reduce(m, Exec::parallel);
        CHECK(a.rank == b.rank);
        CHECK(a.pivots == b.pivots);
        CHECK(a.rref == b.rref);
    }
}

TEST_CASE("solve and inverse") {
    Gen g(204);
    for (int k = 0; k < 30; ++k) {
        size_t n = static_cast<size_t>(g.uniform(1, 6));
        Matrix m = g.matrix(n, n, 4, 0.1);
        std::vector<Scalar> x(n);
        for (auto& v : x) v = g.rational();
        std::vector<Scalar> b(n, Scalar(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) b[i] += m(i, j) * x[j];
        auto y = solve(m, b);
        REQUIRE(y);
        for (size_t i = 0; i < n; ++i) {
            Scalar s(0);
            for (size_t j = 0; j < n; ++j) s += m(i, j) * (*y)[j];
            CHECK(s == b[i]);
        }
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == static_cast<long>(n)));
        if (inv) CHECK(m * *inv == Matrix::identity(rationals(), n));
    }
}

TEST_CASE("subspace coordinates rebuild the vector") {
    Gen g(205);
    Field Q = rationals();
    for (int k = 0; k < 30; ++k) {
        size_t n = static_cast<size_t>(g.uniform(2, 8));
        std::vector<SVec> span;
        for (int i = g.uniform(1, 4); i > 0; --i) span.push_back(g.svec(n, Q));
        Subspace s(Q, n, span);
        SVec v;
        for (const auto& w : span) v += w.scaled(g.rational());
        auto c = s.coords(v);
        REQUIRE(c);
        SVec back;
        for (size_t i = 0; i < s.dim(); ++i) back += s.basis()[i].scaled((*c)[i]);
        CHECK(back == v);
        CHECK(s.reduce(v).is_zero());
        Quotient q(Q, n, span);
        CHECK(q.dim() + s.dim() == n);
        CHECK(q.project(v).is_zero());
    }
}

TEST_CASE("tensor products of random algebras stay associative") {
    Gen g(206);
    Field Q = rationals();
    // k[e]/(e^m) for random m, and group algebras of random cyclic groups
    auto truncated = [&](size_t m) {
        std::vector<std::string> labels;
        for (size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
        std::vector<SVec> table(m * m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (i + j < m) table[i * m + j] = SVec::unit(i + j, Q);
        return algebra_make(Q, labels, table, SVec::unit(0, Q));
    };
    for (int k = 0; k < 6; ++k) {
        auto A = truncated(static_cast<size_t>(g.uniform(1, 4)));
        auto B = truncated(static_cast<size_t>(g.uniform(1, 4)));
        auto AB = tensor_alg(A, B);
        CHECK(check_algebra(AB, Exec::serial).pass());
        CHECK(check_algebra(opposite(AB)).pass());
        for (int t = 0; t < 5; ++t) {
            SVec a = g.svec(AB.dim(), Q), b = g.svec(AB.dim(), Q);
            CHECK(tensor_mul({&A, &B}, a, b) == AB.mul(a, b));
        }
    }
}
