#include "skewhopf/findim.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace skewhopf {

std::optional<size_t> scan_first(size_t n, Exec exec, const std::function<bool(size_t)>& bad) {
    std::vector<char> hit(n, 0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long i = 0; i < static_cast<long>(n); ++i) hit[i] = bad(static_cast<size_t>(i)) ? 1 : 0;
    for (size_t i = 0; i < n; ++i)
        if (hit[i]) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- SVec

Scalar SVec::at(Index i, Field f) const {
    auto it = m_.find(i);
    return it == m_.end() ? Scalar::zero(f) : it->second;
}

void SVec::add(Index i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m_.find(i);
    if (it == m_.end()) {
        m_.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

SVec& SVec::operator+=(const SVec& o) {
    for (const auto& [i, c] : o.m_) add(i, c);
    return *this;
}

SVec& SVec::operator-=(const SVec& o) {
    for (const auto& [i, c] : o.m_) add(i, -c);
    return *this;
}

SVec SVec::scaled(const Scalar& c) const {
    SVec r;
    if (c.is_zero()) return r;
    for (const auto& [i, x] : m_) r.m_.emplace_hint(r.m_.end(), i, x * c);
    return r;
}

// ---------------------------------------------------------------- Space

size_t Space::size() const {
    size_t n = 1;
    for (size_t d : dims) n *= d;
    return n;
}

Index Space::flat(const std::vector<size_t>& idx) const {
    Index r = 0;
    for (size_t k = 0; k < dims.size(); ++k) r = r * dims[k] + idx[k];
    return r;
}

std::vector<size_t> Space::split(Index i) const {
    std::vector<size_t> idx(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        idx[k] = i % dims[k];
        i /= dims[k];
    }
    return idx;
}

Space Space::concat(const Space& o) const {
    Space s = *this;
    s.dims.insert(s.dims.end(), o.dims.begin(), o.dims.end());
    return s;
}

Space Space::slice(size_t first, size_t count) const {
    return Space(std::vector<size_t>(dims.begin() + first, dims.begin() + first + count));
}

std::string Space::str() const {
    if (dims.empty()) return "k";
    std::string s;
    for (size_t k = 0; k < dims.size(); ++k) s += (k ? "x" : "") + std::to_string(dims[k]);
    return s;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(Field f, Space dom, Space cod) : f_(f), dom_(std::move(dom)), cod_(std::move(cod)) {
    cols_.resize(dom_.size());
}

LinMap LinMap::identity(Field f, const Space& s) {
    LinMap m(f, s, s);
    for (size_t i = 0; i < m.cols_.size(); ++i) m.cols_[i] = SVec::unit(i, f);
    return m;
}

LinMap LinMap::zero(Field f, const Space& dom, const Space& cod) { return LinMap(f, dom, cod); }

LinMap LinMap::from_columns(Field f, Space dom, Space cod, std::vector<SVec> cols) {
    LinMap m(f, std::move(dom), std::move(cod));
    if (cols.size() != m.cols_.size()) throw DimensionError("column count does not match the domain");
    m.cols_ = std::move(cols);
    return m;
}

LinMap LinMap::from_dense(const Matrix& a, Space dom, Space cod) {
    LinMap m(a.field(), std::move(dom), std::move(cod));
    if (a.rows() != m.cod_.size() || a.cols() != m.dom_.size()) throw DimensionError("matrix shape mismatch");
    for (size_t j = 0; j < a.cols(); ++j)
        for (size_t i = 0; i < a.rows(); ++i) m.cols_[j].add(i, a(i, j));
    return m;
}

LinMap LinMap::twist(Field f, const Space& a, const Space& b) {
    LinMap m(f, a.concat(b), b.concat(a));
    size_t na = a.size(), nb = b.size();
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) m.cols_[i * nb + j] = SVec::unit(j * na + i, f);
    return m;
}

SVec LinMap::apply(const SVec& v) const {
    SVec r;
    for (const auto& [i, c] : v.entries()) r += cols_.at(i).scaled(c);
    return r;
}

LinMap LinMap::after(const LinMap& inner) const {
    if (!(inner.cod_.size() == dom_.size())) throw DimensionError("composition shape mismatch");
    LinMap m(f_, inner.dom_, cod_);
    for (size_t i = 0; i < m.cols_.size(); ++i) m.cols_[i] = apply(inner.cols_[i]);
    return m;
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (dom_.size() != o.dom_.size() || cod_.size() != o.cod_.size()) throw DimensionError("sum shape mismatch");
    LinMap m = *this;
    for (size_t i = 0; i < cols_.size(); ++i) m.cols_[i] += o.cols_[i];
    return m;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + o.scaled(Scalar(-1)); }

LinMap LinMap::scaled(const Scalar& c) const {
    LinMap m = *this;
    for (auto& col : m.cols_) col = col.scaled(c);
    return m;
}

bool LinMap::operator==(const LinMap& o) const {
    return dom_.size() == o.dom_.size() && cod_.size() == o.cod_.size() && cols_ == o.cols_;
}

std::optional<size_t> LinMap::first_difference(const LinMap& o) const {
    for (size_t i = 0; i < std::min(cols_.size(), o.cols_.size()); ++i)
        if (cols_[i] != o.cols_[i]) return i;
    if (cols_.size() != o.cols_.size()) return std::min(cols_.size(), o.cols_.size());
    return std::nullopt;
}

Matrix LinMap::dense() const {
    Matrix a(f_, cod_.size(), dom_.size());
    for (size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, c] : cols_[j].entries()) a(i, j) = c;
    return a;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    LinMap m(f.field(), f.dom().concat(g.dom()), f.cod().concat(g.cod()));
    size_t nd = g.dom().size(), nc = g.cod().size();
    for (size_t i = 0; i < f.dom().size(); ++i)
        for (size_t j = 0; j < nd; ++j) {
            SVec col;
            for (const auto& [a, ca] : f.col(i).entries())
                for (const auto& [b, cb] : g.col(j).entries()) col.add(a * nc + b, ca * cb);
            m.cols()[i * nd + j] = std::move(col);
        }
    return m;
}

Space replace_factors(const Space& s, size_t first, size_t count, const Space& with) {
    Space r(std::vector<size_t>(s.dims.begin(), s.dims.begin() + first));
    r.dims.insert(r.dims.end(), with.dims.begin(), with.dims.end());
    r.dims.insert(r.dims.end(), s.dims.begin() + first + count, s.dims.end());
    return r;
}

SVec apply_on_factors(const SVec& v, const Space& s, size_t first, size_t count, const LinMap& f) {
    size_t mid = 1, suf = 1;
    for (size_t k = first; k < first + count; ++k) mid *= s.dims.at(k);
    for (size_t k = first + count; k < s.dims.size(); ++k) suf *= s.dims[k];
    if (mid != f.dom().size()) throw DimensionError("factor map has the wrong domain");
    size_t out_mid = f.cod().size();
    SVec r;
    for (const auto& [i, c] : v.entries()) {
        Index pre = i / (mid * suf);
        Index m = (i / suf) % mid;
        Index post = i % suf;
        for (const auto& [j, d] : f.col(m).entries()) r.add((pre * out_mid + j) * suf + post, c * d);
    }
    return r;
}

LinMap on_factors(const LinMap& f, const Space& s, size_t first, size_t count) {
    Space cod = replace_factors(s, first, count, f.cod());
    LinMap m(f.field(), s, cod);
    for (size_t i = 0; i < s.size(); ++i) m.cols()[i] = apply_on_factors(SVec::unit(i, f.field()), s, first, count, f);
    return m;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, size_t rows, size_t cols) : f_(f), r_(rows), c_(cols) {
    if (rows > kDenseLimit || cols > kDenseLimit)
        throw DimensionError("dense matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds the dimension guard " + std::to_string(kDenseLimit));
    a_.assign(rows * cols, Scalar::zero(f));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw DimensionError("matrix product shape mismatch");
    Matrix m(f_, r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
        }
    return m;
}

Matrix Matrix::identity(Field f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

void Matrix::append_rows(const Matrix& o) {
    if (r_ == 0 && c_ == 0) {
        *this = o;
        return;
    }
    if (o.c_ != c_) throw DimensionError("row append shape mismatch");
    if (r_ + o.r_ > kDenseLimit) throw DimensionError("dense matrix exceeds the dimension guard");
    a_.insert(a_.end(), o.a_.begin(), o.a_.end());
    r_ += o.r_;
}

std::string Matrix::str() const {
    std::string s;
    for (size_t i = 0; i < r_; ++i) {
        s += "[";
        for (size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
        s += "]\n";
    }
    return s;
}

Echelon row_reduce(Matrix a, Exec exec) {
    const size_t R = a.rows(), C = a.cols();
    const bool par = exec == Exec::parallel;
    Echelon e;
    Scalar prev = Scalar::one(a.field());
    size_t r = 0;
    for (size_t col = 0; col < C && r < R; ++col) {
        size_t p = r;
        while (p < R && a(p, col).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        const Scalar piv = a(r, col);
        const Scalar inv_prev = prev.inverse();
#pragma omp parallel for schedule(dynamic) if (par)
        for (long i = static_cast<long>(r) + 1; i < static_cast<long>(R); ++i) {
            Scalar lead = a(i, col);
            for (size_t j = col + 1; j < C; ++j) {
                Scalar v = piv * a(i, j);
                if (!lead.is_zero() && !a(r, j).is_zero()) v -= lead * a(r, j);
                a(i, j) = v * inv_prev;
            }
            a(i, col) = Scalar::zero(a.field());
        }
        prev = piv;
        e.pivots.push_back(col);
        ++r;
    }
    e.rank = static_cast<long>(r);
    // back substitution, one inverse per pivot
    for (size_t k = r; k-- > 0;) {
        size_t pc = e.pivots[k];
        Scalar inv = a(k, pc).inverse();
        for (size_t j = pc; j < C; ++j)
            if (!a(k, j).is_zero()) a(k, j) *= inv;
#pragma omp parallel for schedule(dynamic) if (par)
        for (long i = 0; i < static_cast<long>(k); ++i) {
            Scalar f = a(i, pc);
            if (f.is_zero()) continue;
            for (size_t j = pc; j < C; ++j)
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        }
    }
    e.rref = std::move(a);
    return e;
}

long rank(const Matrix& m, Exec exec) { return row_reduce(m, exec).rank; }

std::vector<std::vector<Scalar>> kernel(const Matrix& m, Exec exec) {
    Echelon e = row_reduce(m, exec);
    const size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (size_t pc : e.pivots) is_pivot[pc] = true;
    std::vector<std::vector<Scalar>> out;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(C, Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_reduce(aug);
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        x[e.pivots[k]] = e.rref(k, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    Echelon e = row_reduce(aug);
    if (e.rank < static_cast<long>(n) || e.pivots[n - 1] >= n) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, size_t ambient, std::vector<SVec> spanning) : f_(f), n_(ambient) {
    for (auto& v : spanning) {
        for (size_t k = 0; k < basis_.size() && !v.is_zero(); ++k) {
            Scalar c = v.at(pivots_[k], f_);
            if (!c.is_zero()) v -= basis_[k].scaled(c);
        }
        if (v.is_zero()) continue;
        Index p = v.entries().begin()->first;
        v = v.scaled(v.entries().begin()->second.inverse());
        for (auto& b : basis_) {
            Scalar c = b.at(p, f_);
            if (!c.is_zero()) b -= v.scaled(c);
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        basis_.insert(basis_.begin() + pos, std::move(v));
    }
}

std::optional<std::vector<Scalar>> Subspace::coords(const SVec& v) const {
    std::vector<Scalar> c(basis_.size(), Scalar::zero(f_));
    SVec r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        c[k] = v.at(pivots_[k], f_);
        if (!c[k].is_zero()) r -= basis_[k].scaled(c[k]);
    }
    if (!r.is_zero()) return std::nullopt;
    return c;
}

SVec Subspace::reduce(const SVec& v) const {
    SVec r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        Scalar c = v.at(pivots_[k], f_);
        if (!c.is_zero()) r -= basis_[k].scaled(c);
    }
    return r;
}

Quotient::Quotient(Field f, size_t ambient, std::vector<SVec> relations) : sub(f, ambient, std::move(relations)) {
    size_t k = 0;
    for (Index i = 0; i < ambient; ++i) {
        if (k < sub.pivots().size() && sub.pivots()[k] == i) {
            ++k;
            continue;
        }
        position[i] = complement.size();
        complement.push_back(i);
    }
}

SVec Quotient::project(const SVec& v) const {
    SVec r;
    const SVec red = sub.reduce(v);
    for (const auto& [i, c] : red.entries()) r.add(position.at(i), c);
    return r;
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

SubspaceResult subspace_solve(const LinMap& constraint, Exec exec) {
    SubspaceResult res;
    Matrix m = constraint.dense();
    Echelon e = row_reduce(m, exec);
    res.rank = e.rank;
    const size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (size_t pc : e.pivots) is_pivot[pc] = true;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        SVec v;
        v.add(f, Scalar::one(m.field()));
        for (size_t k = 0; k < e.pivots.size(); ++k) v.add(e.pivots[k], -e.rref(k, f));
        res.basis.push_back(std::move(v));
    }
    return res;
}

// ---------------------------------------------------------------- FinDimAlg

FinDimAlg::FinDimAlg(Field f, std::vector<std::string> labels, std::vector<SVec> table, SVec unit)
    : f_(f), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != labels_.size() * labels_.size()) throw DimensionError("structure table is not square");
}

int FinDimAlg::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

SVec FinDimAlg::mul(const SVec& a, const SVec& b) const {
    SVec r;
    const size_t n = dim();
    for (const auto& [i, ca] : a.entries())
        for (const auto& [j, cb] : b.entries()) {
            Scalar c = ca * cb;
            for (const auto& [k, ck] : table_[i * n + j].entries()) r.add(k, c * ck);
        }
    return r;
}

LinMap FinDimAlg::mult_map() const {
    return LinMap::from_columns(f_, Space{dim(), dim()}, Space{dim()}, table_);
}

LinMap FinDimAlg::unit_map() const { return LinMap::from_columns(f_, Space{}, Space{dim()}, {unit_}); }

bool FinDimAlg::is_commutative() const {
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = i + 1; j < dim(); ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

std::string FinDimAlg::str(const SVec& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : v.entries()) {
        std::string cs = c.str();
        bool neg = c.is_rational() && !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        if (!c.is_rational() && mag.find_first_of("+-") != std::string::npos) mag = "(" + mag + ")";
        std::string t = (mag == "1" ? "" : mag + "*") + labels_[i];
        if (s.empty()) s = (neg ? "-" : "") + t;
        else s += (neg ? " - " : " + ") + t;
    }
    return s;
}

std::optional<std::tuple<size_t, size_t, size_t>> associator_scan(const FinDimAlg& A, Exec exec) {
    const long n = static_cast<long>(A.dim());
    std::vector<std::optional<std::pair<size_t, size_t>>> first(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n && !first[i]; ++j) {
            SVec ij = A.product(i, j);
            for (long k = 0; k < n; ++k) {
                SVec lhs = A.mul(ij, A.basis(k));
                SVec rhs = A.mul(A.basis(i), A.product(j, k));
                if (lhs != rhs) {
                    first[i] = std::make_pair(static_cast<size_t>(j), static_cast<size_t>(k));
                    break;
                }
            }
        }
    }
    for (long i = 0; i < n; ++i)
        if (first[i]) return std::make_tuple(static_cast<size_t>(i), first[i]->first, first[i]->second);
    return std::nullopt;
}

Report check_algebra(const FinDimAlg& A, Exec exec) {
    Report rep;
    auto w = associator_scan(A, exec);
    std::string wit;
    if (w) {
        auto [i, j, k] = *w;
        wit = "(" + A.labels()[i] + "," + A.labels()[j] + "," + A.labels()[k] + ")";
    }
    rep.add("associativity", !w, wit).dims = {static_cast<long>(A.dim())};
    bool unit_ok = true;
    wit.clear();
    for (size_t i = 0; i < A.dim() && unit_ok; ++i) {
        SVec e = A.basis(i);
        if (A.mul(A.unit(), e) != e || A.mul(e, A.unit()) != e) {
            unit_ok = false;
            wit = A.labels()[i];
        }
    }
    rep.add("unit", unit_ok, wit);
    return rep;
}

FinDimAlg algebra_make(Field f, std::vector<std::string> labels, std::vector<SVec> table, SVec unit) {
    FinDimAlg A(f, std::move(labels), std::move(table), std::move(unit));
    Report r = check_algebra(A);
    if (!r.pass()) throw AxiomError("algebra axioms fail: " + r.first_failure(), r);
    return A;
}

FinDimAlg tensor_alg(const FinDimAlg& A, const FinDimAlg& B) {
    if (A.field() != B.field()) throw FieldError("tensor product over different fields");
    const size_t n = A.dim(), m = B.dim();
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) labels.push_back(A.labels()[i] + "|" + B.labels()[j]);
    std::vector<SVec> table(n * m * n * m);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < m; ++d) {
                    SVec r;
                    for (const auto& [x, cx] : A.product(a, c).entries())
                        for (const auto& [y, cy] : B.product(b, d).entries()) r.add(x * m + y, cx * cy);
                    table[(a * m + b) * n * m + (c * m + d)] = std::move(r);
                }
    SVec unit;
    for (const auto& [x, cx] : A.unit().entries())
        for (const auto& [y, cy] : B.unit().entries()) unit.add(x * m + y, cx * cy);
    return FinDimAlg(A.field(), std::move(labels), std::move(table), std::move(unit));
}

FinDimAlg opposite(const FinDimAlg& A) {
    const size_t n = A.dim();
    std::vector<SVec> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i * n + j] = A.product(j, i);
    return FinDimAlg(A.field(), A.labels(), std::move(table), A.unit());
}

FinDimAlg ground_field_alg(Field f) { return FinDimAlg(f, {"1"}, {SVec::unit(0, f)}, SVec::unit(0, f)); }

Space space_of(const std::vector<const FinDimAlg*>& algs) {
    Space s;
    for (auto* a : algs) s.dims.push_back(a->dim());
    return s;
}

SVec tensor_mul(const std::vector<const FinDimAlg*>& algs, const SVec& a, const SVec& b) {
    Space s = space_of(algs);
    Field f = algs.empty() ? rationals() : algs[0]->field();
    SVec out;
    for (const auto& [ia, ca] : a.entries()) {
        auto xa = s.split(ia);
        for (const auto& [ib, cb] : b.entries()) {
            auto xb = s.split(ib);
            std::vector<std::pair<Index, Scalar>> cur{{0, ca * cb}};
            for (size_t k = 0; k < algs.size() && !cur.empty(); ++k) {
                std::vector<std::pair<Index, Scalar>> next;
                const SVec& p = algs[k]->product(xa[k], xb[k]);
                for (const auto& [idx, c] : cur)
                    for (const auto& [j, d] : p.entries()) next.emplace_back(idx * s.dims[k] + j, c * d);
                cur = std::move(next);
            }
            for (const auto& [idx, c] : cur) out.add(idx, c);
        }
    }
    (void)f;
    return out;
}

SVec tensor_unit(const std::vector<const FinDimAlg*>& algs) {
    Field f = algs.empty() ? rationals() : algs[0]->field();
    std::vector<std::pair<Index, Scalar>> cur{{0, Scalar::one(f)}};
    for (auto* a : algs) {
        std::vector<std::pair<Index, Scalar>> next;
        for (const auto& [idx, c] : cur)
            for (const auto& [j, d] : a->unit().entries()) next.emplace_back(idx * a->dim() + j, c * d);
        cur = std::move(next);
    }
    SVec out;
    for (const auto& [idx, c] : cur) out.add(idx, c);
    return out;
}

std::string tensor_str(const std::vector<const FinDimAlg*>& algs, const SVec& v) {
    if (v.is_zero()) return "0";
    Space s = space_of(algs);
    std::string out;
    for (const auto& [i, c] : v.entries()) {
        auto idx = s.split(i);
        std::string t;
        for (size_t k = 0; k < idx.size(); ++k) t += (k ? "(x)" : "") + algs[k]->labels()[idx[k]];
        std::string cs = c.str();
        if (!out.empty()) out += " + ";
        out += (cs == "1" ? "" : (c.is_rational() ? cs : "(" + cs + ")") + "*") + t;
    }
    return out;
}

LinMap convolution(const LinMap& f, const LinMap& g, const LinMap& delta_c, const FinDimAlg& A) {
    const Space& C = f.dom();
    LinMap out(A.field(), C, Space{A.dim()});
    Space cc = C.concat(C);
    Space ac = Space{A.dim()}.concat(C);
    for (size_t i = 0; i < C.size(); ++i) {
        SVec d = delta_c.col(i);
        SVec x = apply_on_factors(d, cc, 0, C.factors(), f);
        SVec y = apply_on_factors(x, ac, 1, C.factors(), g);
        out.cols()[i] = A.mult_map().apply(y);
    }
    return out;
}

std::optional<LinMap> convolution_inverse(const LinMap& f, const LinMap& delta_c, const LinMap& eps_c,
                                          const FinDimAlg& A) {
    const size_t nc = f.dom().size(), na = A.dim();
    const Field F = A.field();
    const size_t unknowns = nc * na;
    Matrix M(F, 2 * nc * na, unknowns);
    std::vector<Scalar> rhs(2 * nc * na, Scalar::zero(F));
    Space cc{nc, nc};
    for (size_t c = 0; c < nc; ++c) {
        Scalar e = eps_c.col(c).at(0, F);
        for (const auto& [k, u] : A.unit().entries()) {
            rhs[c * na + k] = e * u;
            rhs[nc * na + c * na + k] = e * u;
        }
        for (const auto& [idx, lam] : delta_c.col(c).entries()) {
            size_t c1 = idx / nc, c2 = idx % nc;
            const SVec& f1 = f.col(c1);
            const SVec& f2 = f.col(c2);
            for (size_t a = 0; a < na; ++a) {
                // f(c1) * g(c2): unknown (c2, a)
                for (const auto& [k, v] : A.mul(f1, A.basis(a)).entries()) M(c * na + k, c2 * na + a) += lam * v;
                // g(c1) * f(c2): unknown (c1, a)
                for (const auto& [k, v] : A.mul(A.basis(a), f2).entries())
                    M(nc * na + c * na + k, c1 * na + a) += lam * v;
            }
        }
    }
    auto x = solve(M, rhs);
    if (!x) return std::nullopt;
    LinMap g(F, f.dom(), f.cod());
    for (size_t c = 0; c < nc; ++c)
        for (size_t a = 0; a < na; ++a) g.cols()[c].add(a, (*x)[c * na + a]);
    return g;
}

}  // namespace skewhopf
