#pragma once

// Linear functionals on g, stabilizers, condition (R), polarizations and the
// regularity decision cascade.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

/// Covector on the dual basis: f(x) = sum_i f[i] x[i].
using Functional = Vec<Rational>;

Functional parse_functional(const LieAlgebra& g, const std::string& text);  // "e3=1,e0=2"

/// Values f(b_j) on the echelon basis of s.
Vec<Rational> restrict_functional(const Functional& f, const RSubspace& s);

/// B_f(e_i, e_j) = f([e_i, e_j]).
Matrix<Rational> form_matrix(const LieAlgebra& g, const Functional& f);

RSubspace stabilizer(const LieAlgebra& g, const Functional& f);

/// g_f + n for an ideal n containing [g,g].
RSubspace stabilizer_ideal(const LieAlgebra& g, const Functional& f, const RSubspace& n);

/// Intersection of the root kernels over the roots vanishing on m.
RSubspace mtilde(const LieAlgebra& g, const RSubspace& m);

struct ConditionRCertificate {
  bool holds = false;
  Functional f;
  RSubspace m;                 // stabilizer ideal g_f + n
  RSubspace m_inf;             // stable term of its descending central series
  Vec<Rational> values;        // f on the echelon basis of m_inf
};

ConditionRCertificate condition_R_at(const LieAlgebra& g, const Functional& f);

/// Recomputes every field of the certificate.
bool verify(const LieAlgebra& g, const ConditionRCertificate& c);

/// The largest ideal of g contained in ker f.
RSubspace largest_ideal_in_kernel(const LieAlgebra& g, const Functional& f);

struct GeneralPositionReduction {
  RSubspace ideal;     // largest ideal in ker f
  Quotient quotient;   // g / ideal
  Functional f;        // induced functional on the quotient
};

GeneralPositionReduction reduce_to_general_position(const LieAlgebra& g, const Functional& f);

/// sum_k (g_k)_{f|g_k} over a complete flag of ideals g_1 < ... < g_n = g.
RSubspace vergne_polarization(const LieAlgebra& g, const std::vector<RSubspace>& flag, const Functional& f);

struct PolarizationReport {
  RSubspace p;
  bool is_subalgebra = false;
  bool is_isotropic = false;
  bool dimension_ok = false;              // dim p = (dim g + dim g_f) / 2
  bool contains_stabilizer = false;
  bool certified() const { return is_subalgebra && is_isotropic && dimension_ok && contains_stabilizer; }
};

PolarizationReport check_polarization(const LieAlgebra& g, const Functional& f, const RSubspace& p);

/// g_f + p0 for a subalgebra h with g = g_f + h and p0 inside h.
PolarizationReport combine_polarization(const LieAlgebra& g, const Functional& f, const RSubspace& h,
                                        const RSubspace& p0);

struct RemarkReport {
  RSubspace m;           // stabilizer ideal
  RSubspace center_n;    // center of the nilradical
  RSubspace center_m;    // center of m
  bool bracket_vanishes = false;   // [m, z(n)] = 0
  bool inclusion_holds = false;    // z(n) inside z(m)
  std::vector<std::string> witnesses;
  bool pass() const { return bracket_vanishes && inclusion_holds; }
};

/// Requires f in general position (largest ideal in ker f is zero).
RemarkReport remark_invariants(const LieAlgebra& g, const Functional& f);

/// Random rational functional with numerators in [-bound, bound] and denominators in [1, bound].
inline constexpr long kRandomFunctionalBound = 9;
Functional random_functional(std::mt19937_64& rng, std::size_t dim, long bound = kRandomFunctionalBound);

struct RegularityReport {
  enum class Verdict { StarRegular, PrimitiveStarRegular, ConditionRFails, Undetermined };
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
  std::vector<std::string> branches;   // every cascade branch that applies
  std::vector<std::string> notes;
  std::optional<ConditionRCertificate> certificate;
  std::size_t functionals_checked = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kRandomSampleCount = 24;

RegularityReport regularity_report(const LieAlgebra& g, const std::vector<Functional>& samples, std::uint64_t seed);

/// Recomputes the cascade and, when present, the certificate.
bool verify(const LieAlgebra& g, const RegularityReport& r);

std::string to_string(RegularityReport::Verdict v);

}  // namespace orbitkit
