#pragma once

// Exponential polynomials c * prod v^k * exp(linear form) with Q(i) coefficients,
// one-parameter coadjoint flows and orbit maps in coordinates of the second kind.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

using Monomial = std::map<std::string, unsigned>;

/// constant + sum coeffs[v] * v, no zero coefficients stored.
struct LinearForm {
  Gaussian constant;
  std::map<std::string, Gaussian> coeffs;

  static LinearForm variable(const std::string& v, Gaussian c = Gaussian(1));
  bool is_zero() const { return constant.is_zero() && coeffs.empty(); }
  bool is_real() const;
  Gaussian coeff(const std::string& v) const;

  LinearForm& operator+=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a += b * Gaussian(-1); }
  friend LinearForm operator*(LinearForm a, const Gaussian& c);
  friend auto operator<=>(const LinearForm& a, const LinearForm& b) = default;
  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
};

std::string to_string(const LinearForm& l);

struct TermKey {
  Monomial mono;
  LinearForm lin;
  friend auto operator<=>(const TermKey& a, const TermKey& b) = default;
  friend bool operator==(const TermKey& a, const TermKey& b) = default;
};

class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(const Gaussian& c);  // NOLINT(google-explicit-constructor)
  ExpPoly(const Rational& c) : ExpPoly(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(long c) : ExpPoly(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(int c) : ExpPoly(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)

  static ExpPoly variable(const std::string& v);
  static ExpPoly exp(const LinearForm& l);
  static ExpPoly term(const Gaussian& c, Monomial mono, LinearForm lin);

  const std::map<TermKey, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the only term is c * exp(0).
  bool is_constant() const;
  Gaussian constant_value() const;

  std::set<std::string> variables() const;
  std::set<std::string> polynomial_variables() const;
  std::set<std::string> exponent_variables() const;
  std::set<LinearForm> exponents() const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly operator-() const;
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

  ExpPoly pow(unsigned k) const;

  /// Replaces v everywhere. Inside exponents the value must be affine and free of exponentials.
  ExpPoly substitute(const std::string& v, const ExpPoly& value) const;
  ExpPoly substitute(const std::map<std::string, ExpPoly>& values) const;
  ExpPoly d_dvar(const std::string& v) const;

  ExpPoly real_part() const;
  ExpPoly conj() const;

 private:
  void add_term(const TermKey& k, const Gaussian& c);
  std::map<TermKey, Gaussian> terms_;
};

inline bool is_zero(const ExpPoly& p) { return p.is_zero(); }
std::string to_string(const ExpPoly& p);

template <>
struct FieldTraits<ExpPoly> {
  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly one() { return ExpPoly(1); }
};

Matrix<ExpPoly> to_exppoly(const Matrix<Gaussian>& m);
Matrix<ExpPoly> substitute(const Matrix<ExpPoly>& m, const std::string& v, const ExpPoly& value);
Matrix<ExpPoly> d_dvar(const Matrix<ExpPoly>& m, const std::string& v);

/// Matrix of the infinitesimal coadjoint action on dual coordinates: -(ad X)^T.
Matrix<Rational> coadjoint_matrix(const LieAlgebra& g, const Vec<Rational>& x);

/// exp(t A) exactly, from the generalized eigenspaces of A.
Matrix<ExpPoly> matrix_exponential(const Matrix<Rational>& a, const std::string& param,
                                   const std::string& map_name = "A");

/// coAd(exp(param * X)) on dual coordinates.
Matrix<ExpPoly> one_param_flow(const LieAlgebra& g, const Vec<Rational>& x, const std::string& param);

/// One factor of an orbit parametrization: exp(sum_k p_k X_k) for commuting X_k.
struct FlowStep {
  std::vector<std::pair<Vec<Rational>, std::string>> generators;
};

Matrix<ExpPoly> step_flow(const LieAlgebra& g, const FlowStep& step);

struct OrbitMap {
  std::vector<std::string> basis;      // names of the dual coordinates
  std::vector<std::string> params;     // in sequence order
  std::vector<ExpPoly> components;     // on the dual basis of g
};

/// p |-> coAd(exp(step_1) ... exp(step_k)) f, the last factor acting first.
OrbitMap orbit_map(const LieAlgebra& g, const std::vector<ExpPoly>& f, const std::vector<FlowStep>& sequence);

std::vector<ExpPoly> symbolic(const Vec<Rational>& f);

/// Coordinates of components on the echelon basis of s: component(b_j).
std::vector<ExpPoly> restrict_components(const std::vector<ExpPoly>& components, const RSubspace& s);

/// Values of the exponential atoms: exp(form) = value > 0.
using ExpAssignment = std::vector<std::pair<LinearForm, Rational>>;

/// Exact evaluation: rational values for variables, positive rationals for exponentials.
Rational evaluate(const ExpPoly& p, const std::map<std::string, Rational>& values, const ExpAssignment& exps);
Vec<Rational> evaluate(const std::vector<ExpPoly>& ps, const std::map<std::string, Rational>& values,
                       const ExpAssignment& exps);

/// Parses "x1=1,x2=2,exp(t)=1,exp(-s)=1/4" into plain values and exponential atoms.
std::pair<std::map<std::string, Rational>, ExpAssignment> parse_assignment(const std::string& text);

/// Parses a linear form such as "-s - 2*t + 1/2".
LinearForm parse_linear_form(const std::string& text);

}  // namespace orbitkit
