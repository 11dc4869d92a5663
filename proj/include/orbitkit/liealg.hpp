#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants on a named,
// ordered basis, together with their structure theory in the solvable case.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace orbitkit {

/// One nonzero structure constant entry: [e_i, e_j] = sum_k coeffs[k] e_k.
struct BracketSpec {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec<Rational> value;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates antisymmetry and the Jacobi identity on every basis triple.
  /// Entries may be listed for (i,j), (j,i) or both; listing both requires them to be negatives.
  static LieAlgebra construct(std::vector<std::string> names, const std::vector<BracketSpec>& brackets);

  /// Builds from a full tensor c[i][j][k] (size n^3, index (i*n + j)*n + k).
  static LieAlgebra from_tensor(std::vector<std::string> names, std::vector<Rational> tensor);

  static LieAlgebra abelian(std::size_t n, const std::string& prefix = "e");

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  /// [e_i, e_j] in coordinates.
  Vec<Rational> bracket_basis(std::size_t i, std::size_t j) const;
  Vec<Rational> bracket(const Vec<Rational>& x, const Vec<Rational>& y) const;
  Vec<Rational> basis_vector(std::size_t i) const { return unit_vec<Rational>(dim(), i); }

  /// Matrix of ad X: column j holds [X, e_j].
  Matrix<Rational> ad(const Vec<Rational>& x) const;

  const std::vector<Rational>& tensor() const { return c_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.c_ == b.c_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

using RSubspace = Subspace<Rational>;

/// Jacobi defect [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] of a raw tensor.
Vec<Rational> jacobi_defect(const std::vector<Rational>& tensor, std::size_t n, std::size_t i, std::size_t j,
                            std::size_t k);

/// span{[a, b] : a in A, b in B}.
RSubspace bracket_space(const LieAlgebra& g, const RSubspace& a, const RSubspace& b);
RSubspace commutator_ideal(const LieAlgebra& g);
RSubspace center(const LieAlgebra& g);
/// {x in V : [x, W] = 0}, with V and W subspaces of g.
RSubspace centralizer(const LieAlgebra& g, const RSubspace& v, const RSubspace& w);

bool is_subalgebra(const LieAlgebra& g, const RSubspace& v);
bool is_ideal(const LieAlgebra& g, const RSubspace& v);

struct CentralSeries {
  std::vector<RSubspace> terms;  // C^1 m = [m,m], C^{k+1} m = [m, C^k m], up to the first repeat
  RSubspace limit;               // the stable term m^infinity
};

/// Descending central series of a subalgebra m of g.
CentralSeries descending_central_series(const LieAlgebra& g, const RSubspace& m);
/// Derived series of a subalgebra m: D^1 = [m,m], D^{k+1} = [D^k, D^k].
std::vector<RSubspace> derived_series(const LieAlgebra& g, const RSubspace& m);

bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g, const RSubspace& m);
bool is_abelian(const LieAlgebra& g, const RSubspace& m);

struct Quotient {
  LieAlgebra algebra;
  Matrix<Rational> projection;             // dim(g/a) x dim(g)
  std::vector<std::size_t> complement;     // coordinates of g spanning the complement
};

/// g / a with the lexicographically first coordinate complement of a.
Quotient quotient(const LieAlgebra& g, const RSubspace& ideal);

struct SubalgebraView {
  LieAlgebra algebra;
  Matrix<Rational> embedding;  // dim(g) x dim(h): column j is the j-th echelon basis vector
};

/// The subalgebra h as a Lie algebra in its echelon basis. Basis vectors that are
/// coordinate unit vectors keep their names; the others are named v1, v2, ...
SubalgebraView subalgebra(const LieAlgebra& g, const RSubspace& h);

/// A weight of the complexified adjoint representation: gamma = re + i*im on g.
struct Root {
  Vec<Rational> re;
  Vec<Rational> im;
  std::size_t multiplicity = 1;

  bool is_zero() const { return is_zero_vec(re) && is_zero_vec(im); }
  Gaussian value(const Vec<Rational>& x) const { return {dot(re, x), dot(im, x)}; }
  friend bool operator==(const Root& a, const Root& b) { return a.re == b.re && a.im == b.im; }
};

struct CompositionSeries {
  std::vector<Subspace<Gaussian>> flag;  // 0 < V_1 < ... < V_n, invariant subspaces of V
  std::vector<Vec<Gaussian>> weights;    // weight on V_k / V_{k-1}, as values on the basis of g
};

/// Composition series of the g-module C^m where ops[i] is the action of e_i.
/// Requires a solvable action; raises NonRationalSpectrum when a weight is not in Q(i).
CompositionSeries composition_series(const LieAlgebra& g, const std::vector<Matrix<Gaussian>>& ops);

/// Adjoint weights, each listed once with its multiplicity (order of first appearance).
std::vector<Root> adjoint_weights(const LieAlgebra& g);

/// A complete flag of ideals 0 < g_1 < ... < g_n = g defined over Q. Requires real weights.
std::vector<RSubspace> ideal_flag(const LieAlgebra& g);

/// Intersection of the kernels of the real and imaginary parts of every adjoint weight.
RSubspace nilradical(const LieAlgebra& g);

struct ExponentialVerdict {
  enum class Kind { Exponential, NotExponential, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Root> witness;   // a root with ker(re) not contained in ker(im)
  std::string note;
};

ExponentialVerdict is_exponential(const LieAlgebra& g);

std::string format_vector(const LieAlgebra& g, const Vec<Rational>& v);
std::string format_covector(const LieAlgebra& g, const Vec<Rational>& v);
std::string format_subspace(const LieAlgebra& g, const RSubspace& s);
std::string format_root(const LieAlgebra& g, const Root& r);

}  // namespace orbitkit
