#pragma once

// Polynomial functions on a dual space, the infinitesimal coadjoint derivation,
// (semi-)invariants, and orbit-closure membership.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/symflow.hpp"

namespace orbitkit {

using Exponents = std::vector<unsigned>;

/// Higher total degree first, then lexicographically larger exponent vectors first.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in the coordinate functions e_nu(h) = h(e_nu), with ExpPoly
/// coefficients so that named constants such as f0 may appear.
class DualPolynomial {
 public:
  using Terms = std::map<Exponents, ExpPoly, GradedLexDescending>;

  DualPolynomial() = default;
  explicit DualPolynomial(std::vector<std::string> coords) : coords_(std::move(coords)) {}

  static DualPolynomial coordinate(const std::vector<std::string>& coords, std::size_t i);
  static DualPolynomial coordinate(const std::vector<std::string>& coords, const std::string& name);
  static DualPolynomial constant(const std::vector<std::string>& coords, const ExpPoly& c);
  static DualPolynomial monomial(const std::vector<std::string>& coords, const Exponents& e,
                                 const ExpPoly& c = ExpPoly(1));

  const std::vector<std::string>& coords() const { return coords_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;

  DualPolynomial& operator+=(const DualPolynomial& o);
  DualPolynomial& operator-=(const DualPolynomial& o);
  friend DualPolynomial operator+(DualPolynomial a, const DualPolynomial& b) { return a += b; }
  friend DualPolynomial operator-(DualPolynomial a, const DualPolynomial& b) { return a -= b; }
  friend DualPolynomial operator*(const DualPolynomial& a, const DualPolynomial& b);
  friend DualPolynomial operator*(DualPolynomial a, const ExpPoly& c);
  friend bool operator==(const DualPolynomial& a, const DualPolynomial& b) {
    return a.coords_ == b.coords_ && a.terms_ == b.terms_;
  }

  /// Substitutes a value for every coordinate function.
  ExpPoly substitute(const std::vector<ExpPoly>& values) const;
  /// Value at a rational functional; coefficients may use the named constants.
  Rational evaluate(const Vec<Rational>& h, const std::map<std::string, Rational>& constants = {}) const;
  DualPolynomial substitute_constants(const std::map<std::string, ExpPoly>& values) const;

 private:
  void add_term(const Exponents& e, const ExpPoly& c);
  std::vector<std::string> coords_;
  Terms terms_;
};

std::string to_string(const DualPolynomial& q);

/// Parses "e0*e3 - e1*e2 - f0*e3"; identifiers outside coords become named constants.
DualPolynomial parse_dual_polynomial(const std::vector<std::string>& coords, const std::string& text);

/// Action of x on the coordinate functions of an ideal a of g: column nu holds
/// the a-coordinates of the linear function h |-> h([x, b_nu]).
Matrix<Rational> coordinate_action(const LieAlgebra& g, const RSubspace& a, const Vec<Rational>& x);

/// The derivation with X.e_nu = (h |-> h([X, e_nu])).
DualPolynomial derivation(const LieAlgebra& m, const Vec<Rational>& x, const DualPolynomial& q);
/// Same for X in g acting on the coordinate functions of an ideal a (coordinates named as in subalgebra()).
DualPolynomial derivation(const LieAlgebra& g, const RSubspace& a, const Vec<Rational>& x, const DualPolynomial& q);

/// All monomials of total degree exactly k in n variables, in GradedLexDescending order.
std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned k);

/// Basis of the invariant polynomials of degree <= bound, constants included.
std::vector<DualPolynomial> invariant_space(const LieAlgebra& m, unsigned degree_bound);

struct SemiInvariant {
  DualPolynomial q;
  Vec<Rational> weight;  // chi on the basis of g
};

/// Semi-invariants of g acting on the coordinate functions of the ideal a, degree <= bound.
std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, const RSubspace& a, unsigned degree_bound);
std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, unsigned degree_bound);

/// True when q vanishes identically on the orbit map (coordinates matched by name).
bool vanish_on_orbit(const DualPolynomial& q, const OrbitMap& om);

/// Basis of the polynomials of degree <= bound vanishing identically on om. Variables of om
/// that are not orbit parameters count as free, so the result vanishes for all their values.
std::vector<DualPolynomial> vanishing_polynomials(const OrbitMap& om, unsigned degree_bound);

/// Orbit map restricted to a subspace s of g, with coordinate names for the echelon basis.
OrbitMap restrict_orbit(const OrbitMap& om, const RSubspace& s, const std::vector<std::string>& names);

struct ClosureOptions {
  Rational tol = Rational(1, 1000000);
  std::size_t budget = 10000;   // objective evaluations
  std::uint64_t seed = 0;
  std::map<std::string, Rational> constants;  // values for named constants such as f0
};

struct ClosureVerdict {
  enum class Kind { NotInClosure, InClosureNumeric, ExactPoint, Inconclusive };
  enum class Certificate { None, Invariant, Sign, Constant };
  Kind kind = Kind::Inconclusive;

  Certificate certificate = Certificate::None;
  std::optional<DualPolynomial> invariant;   // q with q(g) != 0
  Rational value;                            // q(g), or g on the certified component
  std::size_t component = 0;                 // sign and constant certificates: component index
  int sign = 0;                              // sign certificate: sign of the component on the orbit

  std::map<std::string, Rational> params;    // witness values of polynomial parameters
  ExpAssignment exps;                        // witness values exp(v) for exponent parameters
  Vec<Rational> point;                       // exact orbit point at the witness
  Rational distance2;                        // exact squared distance to g
  Rational tol;
  std::size_t evaluations = 0;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::map<std::string, Rational> constants;
  std::vector<std::string> notes;
};

std::string to_string(ClosureVerdict::Kind k);

/// Decides g in the closure of the orbit: exact certificates first, then a seeded search.
ClosureVerdict closure_membership(const OrbitMap& om, const Vec<Rational>& g, const std::vector<DualPolynomial>& invs,
                                  const ClosureOptions& opts = {});

/// Re-evaluates the certificate or witness of a verdict exactly.
bool verify(const OrbitMap& om, const Vec<Rational>& g, const ClosureVerdict& v);

struct CriticalVerdict {
  enum class Kind { Critical, InClosureEvidence, NotInOmega, SameNOrbit, Inconclusive };
  Kind kind = Kind::Inconclusive;
  ClosureVerdict restricted;                 // g|n against the closure of the restricted orbit
  std::optional<ClosureVerdict> full;        // g against the closure of the full orbit
  std::optional<bool> description_agrees;    // cross-check against a known exact description
  std::vector<std::string> notes;
};

std::string to_string(CriticalVerdict::Kind k);

/// Tests g in Omega \ closure(coAd(G)f), Omega being the preimage of the closure of the restricted orbit in n*.
CriticalVerdict critical_test(const LieAlgebra& g, const Functional& f, const Functional& target,
                              const std::vector<FlowStep>& sequence, unsigned degree_bound = 2,
                              const ClosureOptions& opts = {},
                              const std::function<bool(const Functional&)>& exact_description = {});

}  // namespace orbitkit
