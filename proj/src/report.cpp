#include "orbitkit/report.hpp"

#include <gmp.h>

#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/io.hpp"

namespace orbitkit::report {

namespace {

std::string format_mpf(const mpf_class& x) {
  std::vector<char> buf(64 + kDecimalDigits);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fe", kDecimalDigits - 1, x.get_mpf_t());
  return buf.data();
}

constexpr mp_bitcnt_t kPrecisionBits = 4 * kDecimalDigits + 64;

std::string exponential_kind(ExponentialVerdict::Kind k) {
  switch (k) {
    case ExponentialVerdict::Kind::Exponential: return "Exponential";
    case ExponentialVerdict::Kind::NotExponential: return "NotExponential";
    case ExponentialVerdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string certificate_kind(ClosureVerdict::Certificate c) {
  switch (c) {
    case ClosureVerdict::Certificate::None: return "None";
    case ClosureVerdict::Certificate::Invariant: return "Invariant";
    case ClosureVerdict::Certificate::Sign: return "Sign";
    case ClosureVerdict::Certificate::Constant: return "Constant";
  }
  return "None";
}

Json rational_map(const std::map<std::string, Rational>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = rational(v);
  return j;
}

Json flag_json(const LieAlgebra& g, const std::vector<RSubspace>& flag) {
  Json j = Json::array();
  for (const auto& s : flag) j.push_back(subspace(g, s));
  return j;
}

}  // namespace

std::string rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string decimal(const Rational& q) {
  mpf_class x(0, kPrecisionBits);
  x = q;
  return format_mpf(x);
}

std::string decimal_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw PreconditionFailed("square root of a negative rational");
  mpf_class x(0, kPrecisionBits);
  x = q;
  mpf_class r(0, kPrecisionBits);
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return format_mpf(r);
}

Json vector(const Vec<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational(x));
  return j;
}

Json covector(const LieAlgebra& g, const Vec<Rational>& f) {
  Json j = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (sgn(f[i]) != 0) j[g.names()[i]] = rational(f[i]);
  return j;
}

Json subspace(const LieAlgebra& g, const RSubspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(vector(b));
  return {{"dim", s.dim()}, {"basis", basis}, {"display", format_subspace(g, s)}};
}

Json root(const LieAlgebra& g, const Root& r) {
  return {{"re", vector(r.re)}, {"im", vector(r.im)}, {"multiplicity", r.multiplicity}, {"display", format_root(g, r)}};
}

Json algebra(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      auto v = g.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      brackets.push_back({{"a", g.names()[i]}, {"b", g.names()[j]}, {"value", covector(g, v)}});
    }
  return {{"dim", g.dim()}, {"basis", g.names()}, {"brackets", brackets}, {"text", emit_algebra(g)}};
}

Json analysis(const LieAlgebra& g) {
  Json j = algebra(g);
  j["solvable"] = is_solvable(g);
  j["nilpotent"] = is_nilpotent(g);
  j["center"] = subspace(g, center(g));
  j["commutator_ideal"] = subspace(g, commutator_ideal(g));
  Json derived = Json::array();
  for (const auto& s : derived_series(g, RSubspace::full(g.dim()))) derived.push_back(subspace(g, s));
  j["derived_series"] = derived;
  if (!is_solvable(g)) {
    j["notes"] = Json::array({"not solvable: roots and nilradical are not computed"});
    return j;
  }
  j["nilradical"] = subspace(g, nilradical(g));
  Json roots = Json::array();
  for (const auto& r : adjoint_weights(g)) roots.push_back(root(g, r));
  j["roots"] = roots;
  auto e = is_exponential(g);
  j["exponential"] = {{"kind", exponential_kind(e.kind)}, {"note", e.note}};
  if (e.witness) j["exponential"]["witness"] = root(g, *e.witness);
  return j;
}

Json stabilizer(const LieAlgebra& g, const Functional& f) {
  auto gf = orbitkit::stabilizer(g, f);
  auto n = nilradical(g);
  auto m = stabilizer_ideal(g, f, n);
  auto view = subalgebra(g, m);
  return {{"functional", covector(g, f)},
          {"stabilizer", subspace(g, gf)},
          {"nilradical", subspace(g, n)},
          {"stabilizer_ideal", subspace(g, m)},
          {"stabilizer_ideal_algebra", algebra(view.algebra)},
          {"orbit_dimension", g.dim() - gf.dim()}};
}

Json condition_r(const LieAlgebra& g, const ConditionRCertificate& c) {
  return {{"holds", c.holds},
          {"functional", covector(g, c.f)},
          {"stabilizer_ideal", subspace(g, c.m)},
          {"m_infinity", subspace(g, c.m_inf)},
          {"values", vector(c.values)},
          {"verified", verify(g, c)}};
}

Json polarization(const LieAlgebra& g, const std::vector<RSubspace>& flag, const PolarizationReport& r) {
  return {{"flag", flag_json(g, flag)},
          {"polarization", subspace(g, r.p)},
          {"is_subalgebra", r.is_subalgebra},
          {"is_isotropic", r.is_isotropic},
          {"dimension_ok", r.dimension_ok},
          {"contains_stabilizer", r.contains_stabilizer},
          {"certified", r.certified()}};
}

Json orbit(const OrbitMap& om) {
  Json comps = Json::object();
  for (std::size_t i = 0; i < om.components.size(); ++i) comps[om.basis[i]] = to_string(om.components[i]);
  return {{"basis", om.basis}, {"params", om.params}, {"components", comps}};
}

Json regularity(const LieAlgebra& g, const RegularityReport& r) {
  Json j = {{"verdict", to_string(r.verdict)},
            {"reason", r.reason},
            {"branches", r.branches},
            {"notes", r.notes},
            {"functionals_checked", r.functionals_checked},
            {"seed", r.seed},
            {"verified", verify(g, r)}};
  if (r.certificate) j["certificate"] = condition_r(g, *r.certificate);
  return j;
}

Json closure(const ClosureVerdict& v, const std::vector<std::string>& coords) {
  Json j = {{"kind", to_string(v.kind)},
            {"certificate", certificate_kind(v.certificate)},
            {"tol", rational(v.tol)},
            {"evaluations", v.evaluations},
            {"budget", v.budget},
            {"seed", v.seed},
            {"constants", rational_map(v.constants)},
            {"notes", v.notes}};
  switch (v.certificate) {
    case ClosureVerdict::Certificate::Invariant:
      j["invariant"] = to_string(*v.invariant);
      j["value"] = rational(v.value);
      break;
    case ClosureVerdict::Certificate::Sign:
      j["component"] = coords.at(v.component);
      j["sign"] = v.sign;
      j["value"] = rational(v.value);
      break;
    case ClosureVerdict::Certificate::Constant:
      j["component"] = coords.at(v.component);
      j["value"] = rational(v.value);
      break;
    case ClosureVerdict::Certificate::None: break;
  }
  if (v.kind == ClosureVerdict::Kind::InClosureNumeric || v.kind == ClosureVerdict::Kind::ExactPoint) {
    Json exps = Json::array();
    for (const auto& [form, value] : v.exps) exps.push_back({{"exponent", to_string(form)}, {"value", rational(value)}});
    Json point = Json::object();
    for (std::size_t i = 0; i < v.point.size(); ++i) point[coords.at(i)] = rational(v.point[i]);
    j["witness"] = {{"params", rational_map(v.params)}, {"exps", exps}, {"point", point}};
    j["distance2"] = rational(v.distance2);
    j["distance2_decimal"] = decimal(v.distance2);
    j["distance_decimal"] = decimal_sqrt(v.distance2);
    j["decimal_digits"] = kDecimalDigits;
  }
  return j;
}

Json closure(const OrbitMap& om, const Vec<Rational>& g, const ClosureVerdict& v) {
  Json j = closure(v, om.basis);
  j["target"] = vector(g);
  j["verified"] = verify(om, g, v);
  return j;
}

Json critical(const LieAlgebra& g, const CriticalVerdict& v) {
  auto n = subalgebra(g, nilradical(g));
  Json j = {{"kind", to_string(v.kind)}, {"restricted", closure(v.restricted, n.algebra.names())}, {"notes", v.notes}};
  if (v.full) j["full"] = closure(*v.full, g.names());
  if (v.description_agrees) j["description_agrees"] = *v.description_agrees;
  return j;
}

Json catalog_entry(const CatalogEntry& e, bool detailed) {
  Json j = {{"name", e.name},
            {"description", e.description},
            {"dim", e.algebra.dim()},
            {"expected_verdict", to_string(e.expected_verdict)},
            {"expected_reason", e.expected_reason}};
  if (!detailed) return j;
  j["algebra"] = algebra(e.algebra);
  j["reference"] = covector(e.algebra, e.reference);
  Json sref = Json::object();
  for (std::size_t i = 0; i < e.symbolic_reference.size(); ++i)
    if (!e.symbolic_reference[i].is_zero()) sref[e.algebra.names()[i]] = to_string(e.symbolic_reference[i]);
  j["symbolic_reference"] = sref;
  Json seq = Json::array();
  for (const auto& step : e.sequence) {
    Json factor = Json::array();
    for (const auto& [x, param] : step.generators)
      factor.push_back({{"generator", format_vector(e.algebra, x)}, {"param", param}});
    seq.push_back(factor);
  }
  j["sequence"] = seq;
  j["flag"] = flag_json(e.algebra, e.flag);
  if (e.invariant) j["invariant"] = to_string(*e.invariant);
  if (e.central) j["central"] = to_string(*e.central);
  Json reps = Json::array();
  for (const auto& r : e.representations) {
    Json images = Json::array();
    for (const auto& op : r.assignment) images.push_back(to_string(op));
    Json rj = {{"name", r.name}, {"on", r.on}, {"images", images}};
    if (r.central_value) rj["central_value"] = to_string(*r.central_value);
    reps.push_back(rj);
  }
  j["representations"] = reps;
  j["assumptions"] = e.assumptions;
  return j;
}

Json envelope(const std::string& command, const std::string& algebra_name, Json result) {
  return {{"schema", kSchemaVersion}, {"command", command}, {"algebra", algebra_name}, {"result", std::move(result)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace orbitkit::report
