#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewhopf/galois.hpp"
#include "skewhopf/genhopf.hpp"
#include "skewhopf/lie.hpp"

namespace skewhopf {

// mu: T -> T x T x T, middle factor read in T^op.
struct TorsorData {
    std::string name;
    FinDimAlg T;
    LinMap mu;
};

// algebra map into T x T^op x T, (mu x id x id)mu = (id x id x mu)mu, both collapse laws
Report check_torsor(const TorsorData& t, Exec exec = Exec::parallel);

struct GrunspanResult {
    LinMap theta;
    bool autonomous = false;
    Report report;
};
// theta(x) = x1 x2_3 x2_2 x2_1 x3, with its endomorphism and Grunspan laws
GrunspanResult grunspan_map(const TorsorData& t, Exec exec = Exec::parallel);

// mu = (id x S x id) Delta_2
TorsorData hopf_to_torsor(const HopfData& H);
// x^n = alpha, y^n = beta, xy = q yx on basis x^i y^j (index i*n + j)
TorsorData no_character_torsor(int n, const Scalar& alpha, const Scalar& beta, const Scalar& q);

// D(x (x) y) = x y1 (x) y2 (x) y3
struct DescentResult {
    LinMap D;
    Report report;
};
DescentResult descent_datum(const TorsorData& t);

struct Reconstruction {
    std::vector<SVec> basis;  // inside T x T
    HopfData H;
    ComoduleAlgebra C;
    std::optional<GaloisReport> galois;
    Report report;
};
// H = {z : D(z) = 1 (x) z} inside T^op x T
Reconstruction reconstruct_hopf(const TorsorData& t, Exec exec = Exec::parallel);

// mu(x) = x0 (x) gamma(x1) with gamma(h) = beta^-1(1 (x) h); throws AxiomError unless C is a Galois object
TorsorData galois_to_torsor(const ComoduleAlgebra& C, Exec exec = Exec::parallel);
// torsor laws of galois_to_torsor(C) and theta against x0 S(x1)^[2] S(x1)^[1]
Report galois_torsor_check(const ComoduleAlgebra& C, Exec exec = Exec::parallel);

// Finite Hopf Galois system (A, B, Z, T).
struct HGSData {
    HopfData A, B;
    FinDimAlg Z, T;
    LinMap alpha;  // Z -> A x Z
    LinMap beta;   // Z -> Z x B
    LinMap gamma;  // A -> Z x T
    LinMap delta;  // B -> T x Z
    LinMap S;      // T -> Z
};
// all of A, B, Z, T = H with every map Delta and S = S_H
HGSData hopf_hgs(const HopfData& H);
Report check_hgs(const HGSData& s, Exec exec = Exec::parallel);

// Presentation-level system, checked on monomials of bounded degree.
struct GenHGS {
    std::string name;
    GenHopfSpec A, B;
    PresAlgebraPtr Z, T;
    GenMap alpha, beta, gamma, delta;
    GenMap S;  // T -> Z^op
};
Report check_hgs(const GenHGS& s, int d);

struct SridharanSystem {
    Presentation uf, uminus;
    Report pbw;
    GenHGS hgs;
};
// (U(g), U(g), U_f(g), U_-f(g)) with every map x -> x (x) 1 + 1 (x) x and S(x) = -x
SridharanSystem sridharan_build(const LieData& g, const LieCocycle& f);

}  // namespace skewhopf
