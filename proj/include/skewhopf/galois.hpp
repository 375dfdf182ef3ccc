#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewhopf/findim.hpp"
#include "skewhopf/hopf.hpp"

namespace skewhopf {

// Right H-comodule algebra; rho: A -> A x H.
struct ComoduleAlgebra {
    std::string name;
    FinDimAlg A;
    HopfData H;
    LinMap rho;
};

Report check_comodule_algebra(const ComoduleAlgebra& C, Exec exec = Exec::parallel);
// (H, H, Delta)
ComoduleAlgebra regular_comodule(const HopfData& H);
// rho(a) = a x 1
ComoduleAlgebra trivial_comodule(const FinDimAlg& A, const HopfData& H);
std::vector<SVec> coinvariants(const ComoduleAlgebra& C, Exec exec = Exec::parallel);
// true when the span is closed under products and contains 1
bool is_subalgebra(const FinDimAlg& A, const std::vector<SVec>& basis);

// A x_B A as a quotient of A x A by span{ab x c - a x bc}.
struct RelTensor {
    size_t dim_a = 0;
    Quotient q;
    long relation_rank = 0;
    size_t dim() const { return q.dim(); }
};
RelTensor rel_tensor(const FinDimAlg& A, const std::vector<SVec>& B_basis);

struct GaloisReport {
    std::vector<SVec> coinvariants;
    RelTensor rt;
    LinMap beta, beta_prime;            // A x_B A -> A x H
    std::optional<LinMap> beta_inverse;  // A x H -> A x_B A
    long rank_beta = 0, rank_beta_prime = 0;
    bool bijective = false, bijective_prime = false;
    Report report;
};
GaloisReport galois_check(const ComoduleAlgebra& C, Exec exec = Exec::parallel);
// a map A x H -> A x A agrees with the computed inverse after projecting to A x_B A
std::optional<size_t> inverse_mismatch(const GaloisReport& g, const LinMap& candidate);
// a x b -> a S(b1) x b2
LinMap hopf_galois_inverse(const HopfData& H);

// rho(a) = a x g on A_g; deg gives the group element of each basis vector
ComoduleAlgebra grading_to_comodule(const FinDimAlg& A, const GroupTable& G, const std::vector<size_t>& deg);
// A_g A_{g^-1} = A_1 for every g, compared against the Galois map
Report strongly_graded_check(const FinDimAlg& A, const GroupTable& G, const std::vector<size_t>& deg,
                             Exec exec = Exec::parallel);

// Left H-module algebra; action: H x A -> A.
struct ActionSpec {
    HopfData H;
    FinDimAlg A;
    LinMap action;
};
Report check_module_algebra(const ActionSpec& act, Exec exec = Exec::parallel);
// f . a = f(a1) a0 over dual_hopf(H)
ActionSpec comodule_to_action(const ComoduleAlgebra& C);
// rho(a) = sum_k e_k . a x e^k over dual_hopf(H)
ComoduleAlgebra action_to_comodule(const ActionSpec& act);
std::vector<SVec> invariants(const ActionSpec& act);
// round trip, fixed points = coinvariants
Report dual_correspondence_check(const ComoduleAlgebra& C);

// R # H on basis r#h, rho(r#h) = (r#h1) x h2
ComoduleAlgebra smash_product(const ActionSpec& act);
// (r#h) x g -> (r#h S(g1)) x (1#g2)
LinMap smash_galois_inverse(const ActionSpec& act);

struct CrossedResult {
    std::optional<ComoduleAlgebra> C;
    std::optional<LinMap> sigma_inverse;
    Report report;
};
// sigma: H x H -> R; action need only measure and twist by sigma
CrossedResult crossed_product(const HopfData& H, const FinDimAlg& R, const LinMap& action, const LinMap& sigma,
                              Exec exec = Exec::parallel);
// sigma on a group algebra given by its values; unspecified pairs are 1
LinMap group_cocycle(const GroupTable& G, const FinDimAlg& R, const std::vector<std::tuple<size_t, size_t, Scalar>>& values);

Report cleft_check(const ComoduleAlgebra& C, const LinMap& gamma, Exec exec = Exec::parallel);

// Coaction of R extended to F_d = span{r x^k : k <= d} in R[x; sigma, delta].
struct InducedCoaction {
    int d = 0;
    size_t dim = 0;
    LinMap rho;  // F_d -> F_d x H, when built
    std::vector<SVec> coinvariants;
    Report report;
};
// basis index of r x^k in F_d is k * dim R + r
InducedCoaction induced_ore_coaction(const ComoduleAlgebra& R, const LinMap& sigma, const LinMap& delta, int d,
                                     Exec exec = Exec::parallel);
// (r x^a)(s x^b) in R[x; sigma, delta] as coefficients of x^k
std::vector<SVec> ore_product(const FinDimAlg& R, const LinMap& sigma, const LinMap& delta, size_t a, int i, size_t b,
                              int j);
Report truncated_galois_check(const ComoduleAlgebra& R, const LinMap& sigma, int d, Exec exec = Exec::parallel);

struct QuarticExample {
    FinDimAlg E;
    HopfData H;
    ActionSpec action;
    ComoduleAlgebra coaction;
    std::vector<SVec> fixed_field;
    Report report;
};
// E = Q[w]/(w^4 - 2) with the circle Hopf algebra acting
QuarticExample quartic_example(Exec exec = Exec::parallel);

}  // namespace skewhopf
