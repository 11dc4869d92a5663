#pragma once

// JSON mirrors of the library's reports. Object keys come out sorted, rationals
// are "num/den" strings, and decimals are strings with kDecimalDigits significant digits.

#include <string>

#include "json.hpp"
#include "orbitkit/catalog.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/liealg.hpp"
#include "orbitkit/symflow.hpp"

namespace orbitkit::report {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "orbitkit-report/1";
inline constexpr int kDecimalDigits = 20;

std::string rational(const Rational& q);
/// Scientific notation, kDecimalDigits significant digits.
std::string decimal(const Rational& q);
std::string decimal_sqrt(const Rational& q);

Json vector(const Vec<Rational>& v);
Json covector(const LieAlgebra& g, const Vec<Rational>& f);  // {"e3": "1/1", ...} for nonzero entries
Json subspace(const LieAlgebra& g, const RSubspace& s);
Json root(const LieAlgebra& g, const Root& r);

Json algebra(const LieAlgebra& g);
Json analysis(const LieAlgebra& g);
Json stabilizer(const LieAlgebra& g, const Functional& f);
Json condition_r(const LieAlgebra& g, const ConditionRCertificate& c);
Json polarization(const LieAlgebra& g, const std::vector<RSubspace>& flag, const PolarizationReport& r);
Json orbit(const OrbitMap& om);
Json regularity(const LieAlgebra& g, const RegularityReport& r);
Json closure(const OrbitMap& om, const Vec<Rational>& g, const ClosureVerdict& v);
/// Closure verdict without re-verification.
Json closure(const ClosureVerdict& v, const std::vector<std::string>& coords);
Json critical(const LieAlgebra& g, const CriticalVerdict& v);
Json catalog_entry(const CatalogEntry& e, bool detailed);

/// {"schema": ..., "command": ..., "algebra": ..., "result": ...}.
Json envelope(const std::string& command, const std::string& algebra_name, Json result);
std::string dump(const Json& j);

}  // namespace orbitkit::report
