#pragma once

// Built-in catalog entries: algebra, reference data, representations and expected results.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/envelop.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/symflow.hpp"

namespace orbitkit {

struct CatalogRepresentation {
  std::string name;
  std::string on;            // catalog name of the algebra it represents
  Assignment assignment;     // images of the dotted generators
  std::optional<ExpPoly> central_value;  // expected scalar for the entry's central element
};

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;

  Functional reference;                      // numeric reference functional
  std::vector<ExpPoly> symbolic_reference;   // may use named constants
  std::vector<FlowStep> sequence;            // orbit parametrization, last factor acting first
  std::vector<RSubspace> flag;               // ideal flag for polarizations; empty when none is pinned

  RegularityReport::Verdict expected_verdict = RegularityReport::Verdict::Undetermined;
  std::string expected_reason;

  std::optional<DualPolynomial> invariant;   // a polynomial vanishing on the symbolic orbit
  std::function<bool(const Functional&)> critical;  // exact description of the critical set, when known

  std::vector<CatalogRepresentation> representations;
  std::optional<UEAElement> central;         // a central element of U(g_C)
  std::vector<std::string> assumptions;
};

const std::vector<CatalogEntry>& catalog();
/// Entry by name; "abelian<n>" entries are generated on demand.
std::optional<CatalogEntry> catalog_entry(const std::string& name);

namespace reps {
/// The representation of g49_0 carried by the orbit at f_s; parameters s and f0.
Assignment dpi_s();
/// As printed, with the image of the dotted e2 equal to exp(-s) xi.
Assignment dpi_s_printed();
/// The representation of g49_0 attached to a critical g; parameters g1 and g2.
Assignment drho();
}  // namespace reps

/// W = e3' e0' - (e2' e1' + e1' e2')/2 - f0 e3' in U(g49_0), primes for dotted generators.
UEAElement central_element_w(const LieAlgebra& m);

/// A symbolic functional: "e3=1,e0=f0" with rationals or constant names as values.
std::vector<ExpPoly> parse_symbolic_functional(const LieAlgebra& g, const std::string& text);

}  // namespace orbitkit
