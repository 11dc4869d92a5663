#pragma once

// Univariate polynomials, characteristic polynomials and exact eigenvalues in Q(i).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace orbitkit {

/// Dense univariate polynomial, coefficients from low to high degree, no trailing zeros.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(std::size_t degree, F coeff = FieldTraits<F>::one()) {
    Vec<F> c = zero_vec<F>(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Vec<F>& coeffs() const { return c_; }
  const F& leading() const { return c_.back(); }

  F eval(const F& x) const {
    F acc = FieldTraits<F>::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    Vec<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Vec<F> c = c_;
    F inv = FieldTraits<F>::one() / c.back();
    for (auto& x : c) x *= inv;
    return Poly(std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Vec<F> c = zero_vec<F>(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Vec<F> c = zero_vec<F>(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Vec<F> c = zero_vec<F>(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: (quotient, remainder).
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw PreconditionFailed("polynomial division by zero");
    Vec<F> r = num.c_;
    if (num.degree() < den.degree()) return {Poly(), num};
    Vec<F> q = zero_vec<F>(static_cast<std::size_t>(num.degree() - den.degree() + 1));
    F inv = FieldTraits<F>::one() / den.leading();
    for (long k = num.degree() - den.degree(); k >= 0; --k) {
      F coeff = r[static_cast<std::size_t>(k + den.degree())] * inv;
      q[static_cast<std::size_t>(k)] = coeff;
      if (orbitkit::is_zero(coeff)) continue;
      for (long j = 0; j <= den.degree(); ++j)
        r[static_cast<std::size_t>(k + j)] -= coeff * den.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && orbitkit::is_zero(c_.back())) c_.pop_back();
  }
  Vec<F> c_;
};

/// det(t I - A) by the Faddeev-LeVerrier recursion (exact in characteristic zero).
template <class F>
Poly<F> characteristic_polynomial(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Vec<F> c = zero_vec<F>(n + 1);
  c[n] = FieldTraits<F>::one();
  Matrix<F> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Matrix<F> am = a * m;
    F tr = FieldTraits<F>::zero();
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / F(static_cast<long>(k));
  }
  return Poly<F>(std::move(c));
}

struct EigenvalueSearch {
  std::vector<std::pair<Gaussian, std::size_t>> roots;  // distinct roots with multiplicity, sorted
  bool complete = false;                                 // multiplicities add up to the degree
};

/// All roots of p lying in Q(i). Candidates come from a floating point root finder
/// on the square-free part and are accepted only after exact verification.
EigenvalueSearch gaussian_roots(const Poly<Gaussian>& p);

inline EigenvalueSearch gaussian_roots(const Poly<Rational>& p) {
  Vec<Gaussian> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return gaussian_roots(Poly<Gaussian>(std::move(c)));
}

/// Eigenvalues of a square matrix in Q(i).
EigenvalueSearch eigenvalues(const Matrix<Gaussian>& a);

std::string to_string(const Poly<Gaussian>& p, const std::string& var = "t");

}  // namespace orbitkit
