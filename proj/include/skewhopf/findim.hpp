#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewhopf/report.hpp"
#include "skewhopf/scalar.hpp"

namespace skewhopf {

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AxiomError : public std::runtime_error {
public:
    AxiomError(const std::string& what, Report r) : std::runtime_error(what), report(std::move(r)) {}
    Report report;
};

enum class Exec { serial, parallel };

constexpr size_t kDenseLimit = 4096;

using Index = std::uint64_t;

// Smallest i < n with bad(i), scanning in parallel when requested.
std::optional<size_t> scan_first(size_t n, Exec exec, const std::function<bool(size_t)>& bad);

// Sparse vector keyed by flat tensor index.
class SVec {
public:
    using Map = std::map<Index, Scalar>;

    SVec() = default;
    static SVec unit(Index i, Field f) {
        SVec v;
        v.m_.emplace(i, Scalar::one(f));
        return v;
    }

    const Map& entries() const& { return m_; }
    Map entries() && { return std::move(m_); }
    bool is_zero() const { return m_.empty(); }
    Scalar at(Index i, Field f) const;
    void add(Index i, const Scalar& c);
    SVec& operator+=(const SVec& o);
    SVec& operator-=(const SVec& o);
    friend SVec operator+(SVec a, const SVec& b) { return a += b; }
    friend SVec operator-(SVec a, const SVec& b) { return a -= b; }
    SVec scaled(const Scalar& c) const;
    bool operator==(const SVec& o) const { return m_ == o.m_; }
    bool operator!=(const SVec& o) const { return !(*this == o); }

private:
    Map m_;
};

// Ordered tensor word of finite dimensions.
struct Space {
    std::vector<size_t> dims;

    Space() = default;
    Space(std::initializer_list<size_t> d) : dims(d) {}
    explicit Space(std::vector<size_t> d) : dims(std::move(d)) {}
    size_t size() const;
    size_t factors() const { return dims.size(); }
    Index flat(const std::vector<size_t>& idx) const;
    std::vector<size_t> split(Index i) const;
    Space concat(const Space& o) const;
    Space slice(size_t first, size_t count) const;
    bool operator==(const Space& o) const { return dims == o.dims; }
    std::string str() const;
};

class Matrix;

// Linear map given by the sparse images of domain basis vectors.
class LinMap {
public:
    LinMap() = default;
    LinMap(Field f, Space dom, Space cod);

    static LinMap identity(Field f, const Space& s);
    static LinMap zero(Field f, const Space& dom, const Space& cod);
    static LinMap from_columns(Field f, Space dom, Space cod, std::vector<SVec> cols);
    static LinMap from_dense(const Matrix& m, Space dom, Space cod);
    // swaps two adjacent blocks of factors: (A x B) -> (B x A)
    static LinMap twist(Field f, const Space& a, const Space& b);

    Field field() const { return f_; }
    const Space& dom() const { return dom_; }
    const Space& cod() const { return cod_; }
    const SVec& col(size_t i) const { return cols_[i]; }
    std::vector<SVec>& cols() { return cols_; }
    const std::vector<SVec>& cols() const { return cols_; }

    SVec apply(const SVec& v) const;
    LinMap after(const LinMap& inner) const;  // this o inner
    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap scaled(const Scalar& c) const;
    bool operator==(const LinMap& o) const;
    bool operator!=(const LinMap& o) const { return !(*this == o); }
    // first domain basis index where the two maps differ
    std::optional<size_t> first_difference(const LinMap& o) const;
    Matrix dense() const;

private:
    Field f_ = rationals();
    Space dom_, cod_;
    std::vector<SVec> cols_;
};

LinMap tensor(const LinMap& f, const LinMap& g);

// Applies f to the factors [first, first+count) of v in space s.
SVec apply_on_factors(const SVec& v, const Space& s, size_t first, size_t count, const LinMap& f);
Space replace_factors(const Space& s, size_t first, size_t count, const Space& with);
// Lifts f to id x .. x f x .. x id as a map on space s.
LinMap on_factors(const LinMap& f, const Space& s, size_t first, size_t count);

// Dense exact matrix; only used for elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, size_t rows, size_t cols);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Field field() const { return f_; }
    Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    Matrix operator*(const Matrix& o) const;
    static Matrix identity(Field f, size_t n);
    // rows stacked below
    void append_rows(const Matrix& o);
    std::string str() const;

private:
    Field f_ = rationals();
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;  // pivot column per row
    long rank = 0;
};

// Fraction-free forward elimination, then one division per pivot.
Echelon row_reduce(Matrix m, Exec exec = Exec::parallel);
long rank(const Matrix& m, Exec exec = Exec::parallel);
std::vector<std::vector<Scalar>> kernel(const Matrix& m, Exec exec = Exec::parallel);
// some solution of m x = b, when one exists
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
std::optional<Matrix> inverse(const Matrix& m);

// Subspace with an echelon basis for coordinates and membership.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, size_t ambient, std::vector<SVec> spanning);

    size_t dim() const { return basis_.size(); }
    size_t ambient() const { return n_; }
    const std::vector<SVec>& basis() const& { return basis_; }
    std::vector<SVec> basis() && { return std::move(basis_); }
    // coordinates with respect to basis(), or none when v is outside
    std::optional<std::vector<Scalar>> coords(const SVec& v) const;
    bool contains(const SVec& v) const { return coords(v).has_value(); }
    bool contains(const Subspace& o) const;
    const std::vector<Index>& pivots() const { return pivots_; }
    // v minus its component along the basis; zero iff v lies inside
    SVec reduce(const SVec& v) const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && dim() == o.dim() && contains(o); }

private:
    Field f_ = rationals();
    size_t n_ = 0;
    std::vector<SVec> basis_;  // reduced echelon form
    std::vector<Index> pivots_;
};

struct SubspaceResult {
    std::vector<SVec> basis;
    long rank = 0;
};
// Quotient of an ambient space by a subspace, with the standard complement as basis.
struct Quotient {
    Subspace sub;
    std::vector<Index> complement;
    std::map<Index, size_t> position;

    Quotient() = default;
    Quotient(Field f, size_t ambient, std::vector<SVec> relations);
    size_t dim() const { return complement.size(); }
    SVec project(const SVec& v) const;
    SVec lift(size_t i, Field f) const { return SVec::unit(complement[i], f); }
};

// Kernel of a linear map with its rank.
SubspaceResult subspace_solve(const LinMap& constraint, Exec exec = Exec::parallel);

// ---------------------------------------------------------------- algebras

class FinDimAlg {
public:
    FinDimAlg() = default;
    FinDimAlg(Field f, std::vector<std::string> labels, std::vector<SVec> table, SVec unit);

    Field field() const { return f_; }
    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const SVec& unit() const { return unit_; }
    const SVec& product(size_t i, size_t j) const { return table_[i * dim() + j]; }
    const std::vector<SVec>& table() const { return table_; }
    SVec basis(size_t i) const { return SVec::unit(i, f_); }
    int index_of(const std::string& label) const;

    SVec mul(const SVec& a, const SVec& b) const;
    LinMap mult_map() const;
    LinMap unit_map() const;
    bool is_commutative() const;
    std::string str(const SVec& v) const;

private:
    Field f_ = rationals();
    std::vector<std::string> labels_;
    std::vector<SVec> table_;
    SVec unit_;
};

// Validates associativity and the unit; throws AxiomError with the failing report.
FinDimAlg algebra_make(Field f, std::vector<std::string> labels, std::vector<SVec> table, SVec unit);
Report check_algebra(const FinDimAlg& A, Exec exec = Exec::parallel);
std::optional<std::tuple<size_t, size_t, size_t>> associator_scan(const FinDimAlg& A, Exec exec);

FinDimAlg tensor_alg(const FinDimAlg& A, const FinDimAlg& B);
FinDimAlg opposite(const FinDimAlg& A);
FinDimAlg ground_field_alg(Field f);

// Product in A_1 x ... x A_k computed factorwise without building the table.
SVec tensor_mul(const std::vector<const FinDimAlg*>& algs, const SVec& a, const SVec& b);
SVec tensor_unit(const std::vector<const FinDimAlg*>& algs);
Space space_of(const std::vector<const FinDimAlg*>& algs);
std::string tensor_str(const std::vector<const FinDimAlg*>& algs, const SVec& v);

// m_A o (f x g) o Delta_C
LinMap convolution(const LinMap& f, const LinMap& g, const LinMap& delta_c, const FinDimAlg& A);
std::optional<LinMap> convolution_inverse(const LinMap& f, const LinMap& delta_c, const LinMap& eps_c,
                                          const FinDimAlg& A);

}  // namespace skewhopf
