#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewhopf/findim.hpp"

namespace skewhopf {

// Finite group by its Cayley table.
struct GroupTable {
    std::vector<std::string> labels;
    std::vector<size_t> table;  // table[i*n + j] = index of g_i g_j
    size_t identity = 0;

    size_t size() const { return labels.size(); }
    size_t mul(size_t i, size_t j) const { return table[i * size() + j]; }
    size_t inverse(size_t i) const;
    int index_of(const std::string& label) const;
};

// Validates closure, associativity, identity and inverses.
GroupTable group_make(std::vector<std::string> labels, std::vector<size_t> table);
GroupTable cyclic_group(int n, const std::string& gen = "g");
GroupTable symmetric_group3();
GroupTable product_group(const GroupTable& a, const GroupTable& b);
// "Z4", "S3", "Z2xZ3"
GroupTable parse_group(const std::string& name);

struct HopfData {
    std::string name;
    FinDimAlg alg;
    LinMap delta;  // H -> H x H
    LinMap eps;    // H -> k
    LinMap S;      // H -> H

    Field field() const { return alg.field(); }
    size_t dim() const { return alg.dim(); }
    Space space() const { return Space{alg.dim()}; }
};

Report check_bialgebra(const HopfData& H, Exec exec = Exec::parallel);
Report check_antipode(const HopfData& H, Exec exec = Exec::parallel);
Report check_hopf(const HopfData& H, Exec exec = Exec::parallel);
// Throws AxiomError unless both suites pass.
HopfData hopf_make(std::string name, FinDimAlg alg, LinMap delta, LinMap eps, LinMap S);

// (Delta x id) Delta
LinMap delta2(const HopfData& H);
// Extends generator images to basis words; anti reverses the order of factors.
LinMap extend_on_words(const FinDimAlg& src, const std::vector<std::vector<int>>& words,
                       const std::vector<const FinDimAlg*>& target, const std::vector<SVec>& images, bool anti);

HopfData group_algebra(const GroupTable& G, Field f = rationals());
HopfData dual_group_algebra(const GroupTable& G, Field f = rationals());
HopfData dual_hopf(const HopfData& H);
// Taft algebra on g^i x^j; omega must be a primitive n-th root of unity
HopfData taft(int n, const Scalar& omega);
HopfData sweedler();
// commutative basis {1, c, c^2, s}
HopfData circle_hopf(Field f = rationals());
HopfData tensor_hopf(const HopfData& H, const HopfData& L);

struct BuiltinInfo {
    std::string name;
    std::string summary;
};
const std::vector<BuiltinInfo>& builtin_hopf_entries();
HopfData builtin_hopf(const std::string& name, const std::map<std::string, std::string>& params = {});

// Smallest two-sided ideal containing the generators.
std::vector<SVec> ideal_closure(const FinDimAlg& A, std::vector<SVec> gens);
HopfData quotient_hopf(const HopfData& H, const std::vector<SVec>& ideal_basis);

struct IntegralReport {
    std::vector<SVec> left, right;
    bool unimodular = false;
    bool semisimple = false;
    Report report;
};
IntegralReport integrals(const HopfData& H, Exec exec = Exec::parallel);

std::optional<int> antipode_order(const HopfData& H, int max_iter = 64);

bool is_grouplike(const HopfData& H, const SVec& c);
// Delta(x) = x (x) g + h (x) x; throws when g or h is not grouplike
bool is_skew_primitive(const HopfData& H, const SVec& x, const SVec& g, const SVec& h);

// Structure constants agree after the canonical relabeling.
bool same_structure(const HopfData& a, const HopfData& b);

}  // namespace skewhopf
