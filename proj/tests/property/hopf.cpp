#include <doctest.h>

#include "gen.hpp"
#include "skewhopf/hopf.hpp"

using namespace prop;

namespace {

void same_report(const Report& a, const Report& b) {
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].pass == b.checks[i].pass);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
}

}  // namespace

TEST_CASE("products of cyclic group algebras are Hopf algebras") {
    Gen g(401);
    for (int k = 0; k < 6; ++k) {
        int n = g.uniform(1, 4), m = g.uniform(1, 3);
        auto H = tensor_hopf(group_algebra(cyclic_group(n, "a")), group_algebra(cyclic_group(m, "b")));
        CHECK(H.dim() == static_cast<size_t>(n * m));
        CHECK(check_hopf(H).pass());
        CHECK(check_hopf(dual_hopf(H)).pass());
        CHECK(antipode_order(H) == std::optional<int>(std::max(n, m) <= 2 ? 1 : 2));
    }
}

TEST_CASE("serial and parallel checks report the same thing") {
    HopfData bad = sweedler();
    bad.S = LinMap::identity(bad.field(), bad.space());
    for (const HopfData& H : {sweedler(), taft(3, root_of_unity(cyclotomic(3), 3)), bad, circle_hopf()}) {
        CAPTURE(H.name);
        same_report(check_hopf(H, Exec::serial), check_hopf(H, Exec::parallel));
        auto a = integrals(H, Exec::serial), b = integrals(H, Exec::parallel);
        CHECK(a.left.size() == b.left.size());
        CHECK(a.semisimple == b.semisimple);
    }
}

TEST_CASE("coproduct is multiplicative and antipode antimultiplicative on random elements") {
    Field F = cyclotomic(4);
    std::vector<HopfData> hs = {sweedler(), taft(4, root_of_unity(F, 4)), builtin_hopf("dual_group", {{"group", "S3"}}),
                                tensor_hopf(sweedler(), group_algebra(cyclic_group(2)))};
    Gen g(402);
    for (const auto& H : hs) {
        const FinDimAlg& A = H.alg;
        std::vector<const FinDimAlg*> AA = {&A, &A};
        for (int k = 0; k < 8; ++k) {
            SVec a = g.svec(H.dim(), H.field() == F ? F : rationals()), b = g.svec(H.dim(), H.field() == F ? F : rationals());
            CAPTURE(H.name);
            CHECK(H.delta.apply(A.mul(a, b)) == tensor_mul(AA, H.delta.apply(a), H.delta.apply(b)));
            CHECK(H.eps.apply(A.mul(a, b)) == tensor_mul({}, H.eps.apply(a), H.eps.apply(b)));
            CHECK(H.S.apply(A.mul(a, b)) == A.mul(H.S.apply(b), H.S.apply(a)));
        }
    }
}

TEST_CASE("group algebras of random cyclic groups have grouplike basis") {
    Gen g(403);
    for (int k = 0; k < 5; ++k) {
        auto H = group_algebra(cyclic_group(g.uniform(2, 6)));
        for (size_t i = 0; i < H.dim(); ++i) CHECK(is_grouplike(H, H.alg.basis(i)));
        auto I = integrals(H);
        CHECK(I.semisimple);
        CHECK(I.unimodular);
        CHECK(I.left.size() == 1);
    }
}
