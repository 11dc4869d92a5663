#pragma once

// Exact linear algebra over Q and Q(i). Dense, desk-scale (dimension up to ~20).

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/scalar.hpp"

namespace orbitkit {

template <class F>
using Vec = std::vector<F>;

template <class F>
Vec<F> zero_vec(std::size_t n) {
  return Vec<F>(n, FieldTraits<F>::zero());
}

template <class F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
  Vec<F> v = zero_vec<F>(n);
  v[i] = FieldTraits<F>::one();
  return v;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  F s = FieldTraits<F>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class F>
Vec<F> add(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class F>
Vec<F> scale(Vec<F> a, const F& c) {
  for (auto& x : a) x *= c;
  return a;
}

inline Vec<Gaussian> complexify(const Vec<Rational>& v) {
  Vec<Gaussian> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<F>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<F>::one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<F>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<F> col(std::size_t j) const {
    Vec<F> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
    Vec<F> out = zero_vec<F>(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(Matrix a, const F& c) {
    for (auto& x : a.data_) x *= c;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

inline Matrix<Gaussian> complexify(const Matrix<Rational>& m) {
  Matrix<Gaussian> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Gaussian(m(i, j));
  return out;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << "]\n";
  }
  return os;
}

template <class F>
struct Echelon {
  Matrix<F> reduced;               // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = FieldTraits<F>::one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

template <class F>
class Subspace;

template <class F>
Subspace<F> kernel(const Matrix<F>& m);

/// A linear subspace of F^n, stored as its unique reduced row echelon basis.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  Subspace(std::size_t ambient, const std::vector<Vec<F>>& spanning) : ambient_(ambient) {
    if (spanning.empty()) return;
    auto e = rref(Matrix<F>::from_rows(spanning, ambient));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis_.push_back(e.reduced.row(i));
    pivots_ = std::move(e.pivots);
  }

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) {
    std::vector<Vec<F>> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec<F>(n, i));
    return Subspace(n, b);
  }
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<Vec<F>> b;
    for (auto i : indices) b.push_back(unit_vec<F>(n, i));
    return Subspace(n, b);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Basis vectors as rows.
  Matrix<F> matrix() const { return Matrix<F>::from_rows(basis_, ambient_); }

  /// Coordinates of v in the echelon basis, or nullopt if v is not in the subspace.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector length mismatch");
    Vec<F> coeffs;
    Vec<F> rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      F c = rest[pivots_[i]];
      coeffs.push_back(c);
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c * basis_[i][j];
    }
    if (!is_zero_vec(rest)) return std::nullopt;
    return coeffs;
  }
  bool contains(const Vec<F>& v) const { return coordinates(v).has_value(); }

  bool is_subset_of(const Subspace& other) const {
    check(other);
    for (const auto& b : basis_)
      if (!other.contains(b)) return false;
    return true;
  }

  /// Orthogonal complement for the bilinear pairing sum a_i b_i (the annihilator in dual coordinates).
  Subspace annihilator() const {
    if (basis_.empty()) return full(ambient_);
    return kernel(matrix());
  }

  /// Lexicographically first coordinates whose unit vectors complete this basis.
  std::vector<std::size_t> greedy_complement() const {
    std::vector<std::size_t> chosen;
    Subspace acc = *this;
    for (std::size_t j = 0; j < ambient_ && acc.dim() < ambient_; ++j) {
      Vec<F> e = unit_vec<F>(ambient_, j);
      if (acc.contains(e)) continue;
      chosen.push_back(j);
      auto b = acc.basis_;
      b.push_back(e);
      acc = Subspace(ambient_, b);
    }
    return chosen;
  }

  /// Coordinates not used as pivots; their unit vectors also complete the basis.
  std::vector<std::size_t> free_coordinates() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (p < pivots_.size() && pivots_[p] == j) {
        ++p;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : M v = 0} in canonical form.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = zero_vec<F>(m.cols());
    v[free] = FieldTraits<F>::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace<F>(m.cols(), basis);
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.check(b);
  auto v = a.basis();
  v.insert(v.end(), b.basis().begin(), b.basis().end());
  return Subspace<F>(a.ambient_dim(), v);
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.check(b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace<F>::zero(a.ambient_dim());
  // Solve sum x_i a_i - sum y_j b_j = 0 and keep sum x_i a_i.
  const std::size_t n = a.ambient_dim();
  Matrix<F> m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
  auto ker = kernel(m);
  std::vector<Vec<F>> out;
  for (const auto& k : ker.basis()) {
    Vec<F> v = zero_vec<F>(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero(k[i]))
        for (std::size_t r = 0; r < n; ++r) v[r] += k[i] * a.basis()[i][r];
    out.push_back(std::move(v));
  }
  return Subspace<F>(n, out);
}

/// Some x with M x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x = zero_vec<F>(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldTraits<F>::one();
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Restriction of an operator A (n x n) to an A-invariant subspace with the given
/// basis columns B (n x k): the k x k matrix R with A B = B R.
template <class F>
Matrix<F> restrict_operator(const Matrix<F>& a, const Matrix<F>& basis_columns) {
  const std::size_t k = basis_columns.cols();
  Matrix<F> image = a * basis_columns;
  Matrix<F> r(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto x = solve(basis_columns, image.col(j));
    if (!x) throw PreconditionFailed("restrict_operator: subspace is not invariant");
    for (std::size_t i = 0; i < k; ++i) r(i, j) = (*x)[i];
  }
  return r;
}

inline Subspace<Rational> real_part_subspace(const Subspace<Gaussian>& s) {
  std::vector<Vec<Rational>> rows;
  for (const auto& b : s.basis()) {
    Vec<Rational> v;
    for (const auto& z : b) {
      if (!z.is_real()) throw PreconditionFailed("subspace is not defined over the rationals");
      v.push_back(z.re());
    }
    rows.push_back(std::move(v));
  }
  return Subspace<Rational>(s.ambient_dim(), rows);
}

inline Subspace<Gaussian> complexify(const Subspace<Rational>& s) {
  std::vector<Vec<Gaussian>> rows;
  for (const auto& b : s.basis()) rows.push_back(complexify(b));
  return Subspace<Gaussian>(s.ambient_dim(), rows);
}

}  // namespace orbitkit
