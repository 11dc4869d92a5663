#pragma once

// PBW normal forms in U(g_C), symmetrization, centrality, and evaluation in
// differential operators sum a_k D^k on functions of xi, with D = -i d/dxi.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/invariants.hpp"
#include "orbitkit/liealg.hpp"
#include "orbitkit/symflow.hpp"

namespace orbitkit {

/// Exponents over the algebra's basis order: e_1^{a_1} ... e_n^{a_n}.
using PBWMonomial = std::vector<unsigned>;

class UEAElement {
 public:
  UEAElement() = default;
  explicit UEAElement(const LieAlgebra& g) : g_(g) {}

  static UEAElement scalar(const LieAlgebra& g, const ExpPoly& c);
  static UEAElement generator(const LieAlgebra& g, std::size_t i);
  /// The dotted generator -i e_i.
  static UEAElement dotted(const LieAlgebra& g, std::size_t i);

  const LieAlgebra& algebra() const { return g_; }
  const std::map<PBWMonomial, ExpPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  void add_term(const PBWMonomial& m, const ExpPoly& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const ExpPoly& c);
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.g_ == b.g_ && a.terms_ == b.terms_; }

 private:
  LieAlgebra g_;
  std::map<PBWMonomial, ExpPoly> terms_;
};

std::string to_string(const UEAElement& u);

/// Product in normal form, moving the left factor's generators into the right factor.
UEAElement uea_mul(const UEAElement& u, const UEAElement& v);
/// Same product, appending the right factor's generators to the left factor one at a time.
UEAElement uea_mul_right(const UEAElement& u, const UEAElement& v);
UEAElement uea_commutator(const UEAElement& u, const UEAElement& v);

/// x_1 ... x_k |-> (1/k!) sum over permutations, with e_nu sent to generators[nu].
UEAElement symmetrize(const LieAlgebra& g, const DualPolynomial& q, const std::vector<UEAElement>& generators);
/// Symmetrization onto the plain generators e_nu.
UEAElement symmetrize(const LieAlgebra& g, const DualPolynomial& q);
std::vector<UEAElement> dotted_generators(const LieAlgebra& g);

struct Centrality {
  bool central = true;
  std::size_t generator = 0;   // first basis element with a nonzero commutator
  UEAElement commutator;       // [u, e_generator]
};

Centrality is_central(const UEAElement& u);

/// sum_k coeffs[k] D^k, all coefficients to the left.
class DiffOp {
 public:
  DiffOp() = default;
  static DiffOp multiplication(const ExpPoly& a);
  static DiffOp d();
  static const std::string& variable();  // "xi"

  const std::map<unsigned, ExpPoly>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Order 0 with a coefficient free of xi.
  bool is_scalar() const;
  ExpPoly scalar_value() const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const ExpPoly& c);
  /// Composition a o b using D a = a D + (-i) a'.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

  void add(unsigned k, const ExpPoly& a);

 private:
  std::map<unsigned, ExpPoly> c_;
};

std::string to_string(const DiffOp& op);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Images of the dotted generators: assignment[nu] = d tau(-i e_nu).
using Assignment = std::vector<DiffOp>;

struct RepCheck {
  bool ok = true;
  std::size_t i = 0, j = 0;  // first failing pair
  DiffOp defect;             // [T(e_i), T(e_j)] - T([e_i, e_j]) with T(e) = i * assignment
};

RepCheck check_rep(const LieAlgebra& m, const Assignment& assign);

/// The homomorphism extension e_nu |-> i * assign[nu] applied to u. Raises RepCheckFailed.
DiffOp evaluate_uea(const Assignment& assign, const UEAElement& u);

}  // namespace orbitkit
