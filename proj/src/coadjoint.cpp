#include "orbitkit/coadjoint.hpp"

#include <sstream>

namespace orbitkit {
namespace {

RSubspace kernel_of_covector(const Functional& f) {
  if (is_zero_vec(f)) return RSubspace::full(f.size());
  return kernel(Matrix<Rational>::from_rows({f}, f.size()));
}

void check_length(const LieAlgebra& g, const Functional& f) {
  if (f.size() != g.dim()) throw DimensionMismatch("functional length does not match the algebra");
}

// {x in s : f([x, s]) = 0}
RSubspace relative_radical(const LieAlgebra& g, const Functional& f, const RSubspace& s) {
  const std::size_t k = s.dim();
  if (k == 0) return s;
  Matrix<Rational> m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m(a, b) = dot(f, g.bracket(s.basis()[a], s.basis()[b]));
  std::vector<Vec<Rational>> out;
  const auto ker = kernel(m);
  for (const auto& c : ker.basis()) {
    Vec<Rational> x = zero_vec<Rational>(g.dim());
    for (std::size_t a = 0; a < k; ++a)
      if (!is_zero(c[a])) x = add(x, scale(s.basis()[a], c[a]));
    out.push_back(std::move(x));
  }
  return RSubspace(g.dim(), out);
}

bool is_isotropic(const LieAlgebra& g, const Functional& f, const RSubspace& p) {
  for (const auto& x : p.basis())
    for (const auto& y : p.basis())
      if (!is_zero(dot(f, g.bracket(x, y)))) return false;
  return true;
}

}  // namespace

Functional parse_functional(const LieAlgebra& g, const std::string& text) {
  Functional f = zero_vec<Rational>(g.dim());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionFailed("functional entry '" + item + "' lacks '='");
    std::string name = trim(item.substr(0, eq));
    auto idx = g.index_of(name);
    if (!idx) throw PreconditionFailed("unknown basis element '" + name + "' in functional");
    auto value = parse_rational(trim(item.substr(eq + 1)));
    if (!value) throw PreconditionFailed("invalid rational value in functional entry '" + item + "'");
    f[*idx] = *value;
  }
  return f;
}

Vec<Rational> restrict_functional(const Functional& f, const RSubspace& s) {
  Vec<Rational> out;
  for (const auto& b : s.basis()) out.push_back(dot(f, b));
  return out;
}

Matrix<Rational> form_matrix(const LieAlgebra& g, const Functional& f) {
  check_length(g, f);
  const std::size_t n = g.dim();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dot(f, g.bracket_basis(i, j));
  return m;
}

RSubspace stabilizer(const LieAlgebra& g, const Functional& f) { return kernel(form_matrix(g, f)); }

RSubspace stabilizer_ideal(const LieAlgebra& g, const Functional& f, const RSubspace& n) {
  if (!commutator_ideal(g).is_subset_of(n)) throw NotCoabelianIdeal("n does not contain [g,g]");
  RSubspace m = sum(stabilizer(g, f), n);
  if (!is_ideal(g, m)) throw Error("stabilizer ideal is not an ideal");  // impossible once [g,g] is inside n
  return m;
}

RSubspace mtilde(const LieAlgebra& g, const RSubspace& m) {
  RSubspace out = RSubspace::full(g.dim());
  for (const auto& r : adjoint_weights(g)) {
    bool vanishes = true;
    for (const auto& b : m.basis())
      if (!is_zero(dot(r.re, b)) || !is_zero(dot(r.im, b))) vanishes = false;
    if (!vanishes) continue;
    if (!is_zero_vec(r.re)) out = intersect(out, kernel_of_covector(r.re));
    if (!is_zero_vec(r.im)) out = intersect(out, kernel_of_covector(r.im));
  }
  return out;
}

ConditionRCertificate condition_R_at(const LieAlgebra& g, const Functional& f) {
  check_length(g, f);
  ConditionRCertificate c;
  c.f = f;
  c.m = stabilizer_ideal(g, f, nilradical(g));
  c.m_inf = descending_central_series(g, c.m).limit;
  c.values = restrict_functional(f, c.m_inf);
  c.holds = is_zero_vec(c.values);
  return c;
}

bool verify(const LieAlgebra& g, const ConditionRCertificate& c) {
  if (c.f.size() != g.dim()) return false;
  auto again = condition_R_at(g, c.f);
  return again.holds == c.holds && again.m == c.m && again.m_inf == c.m_inf && again.values == c.values;
}

RSubspace largest_ideal_in_kernel(const LieAlgebra& g, const Functional& f) {
  check_length(g, f);
  RSubspace v = kernel_of_covector(f);
  std::vector<Matrix<Rational>> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad(g.basis_vector(i)));
  while (v.dim() > 0) {
    auto ann = v.annihilator();
    if (ann.dim() == 0) break;
    Matrix<Rational> a = ann.matrix();
    Matrix<Rational> b = Matrix<Rational>::from_columns(v.basis(), g.dim());
    std::vector<Vec<Rational>> rows;
    for (const auto& ad : ads) {
      Matrix<Rational> c = a * ad * b;
      for (std::size_t r = 0; r < c.rows(); ++r) rows.push_back(c.row(r));
    }
    auto ker = kernel(Matrix<Rational>::from_rows(rows, v.dim()));
    if (ker.dim() == v.dim()) break;
    std::vector<Vec<Rational>> next;
    for (const auto& c : ker.basis()) next.push_back(b.apply(c));
    v = RSubspace(g.dim(), next);
  }
  return v;
}

GeneralPositionReduction reduce_to_general_position(const LieAlgebra& g, const Functional& f) {
  GeneralPositionReduction r;
  r.ideal = largest_ideal_in_kernel(g, f);
  r.quotient = quotient(g, r.ideal);
  for (auto c : r.quotient.complement) r.f.push_back(f[c]);
  return r;
}

RSubspace vergne_polarization(const LieAlgebra& g, const std::vector<RSubspace>& flag, const Functional& f) {
  check_length(g, f);
  const std::size_t n = g.dim();
  if (flag.size() != n) throw FlagInvalid("flag must have one ideal per dimension 1..n");
  for (std::size_t k = 0; k < n; ++k) {
    if (flag[k].ambient_dim() != n || flag[k].dim() != k + 1)
      throw FlagInvalid("flag term " + std::to_string(k + 1) + " has the wrong dimension");
    if (k > 0 && !flag[k - 1].is_subset_of(flag[k])) throw FlagInvalid("flag is not increasing");
    if (!is_ideal(g, flag[k])) throw FlagInvalid("flag term " + std::to_string(k + 1) + " is not an ideal");
  }
  RSubspace p = RSubspace::zero(n);
  for (const auto& gk : flag) p = sum(p, relative_radical(g, f, gk));
  return p;
}

PolarizationReport check_polarization(const LieAlgebra& g, const Functional& f, const RSubspace& p) {
  check_length(g, f);
  PolarizationReport r;
  r.p = p;
  auto gf = stabilizer(g, f);
  r.is_subalgebra = is_subalgebra(g, p);
  r.is_isotropic = is_isotropic(g, f, p);
  r.dimension_ok = 2 * p.dim() == g.dim() + gf.dim();
  r.contains_stabilizer = gf.is_subset_of(p);
  return r;
}

PolarizationReport combine_polarization(const LieAlgebra& g, const Functional& f, const RSubspace& h,
                                        const RSubspace& p0) {
  auto gf = stabilizer(g, f);
  if (!(sum(gf, h) == RSubspace::full(g.dim()))) throw PreconditionFailed("g is not g_f + h");
  if (!p0.is_subset_of(h)) throw PreconditionFailed("p0 is not contained in h");
  return check_polarization(g, f, sum(gf, p0));
}

RemarkReport remark_invariants(const LieAlgebra& g, const Functional& f) {
  if (largest_ideal_in_kernel(g, f).dim() != 0)
    throw NotGeneralPosition("ker f contains a nonzero ideal");
  RemarkReport r;
  auto n = nilradical(g);
  r.m = stabilizer_ideal(g, f, n);
  r.center_n = centralizer(g, n, n);
  r.center_m = centralizer(g, r.m, r.m);
  r.bracket_vanishes = true;
  for (const auto& x : r.m.basis())
    for (const auto& z : r.center_n.basis()) {
      auto b = g.bracket(x, z);
      if (!is_zero_vec(b)) {
        r.bracket_vanishes = false;
        r.witnesses.push_back("[" + format_vector(g, x) + ", " + format_vector(g, z) + "] = " + format_vector(g, b));
      }
    }
  r.inclusion_holds = true;
  for (const auto& z : r.center_n.basis())
    if (!r.center_m.contains(z)) {
      r.inclusion_holds = false;
      r.witnesses.push_back(format_vector(g, z) + " is central in n but not in m");
    }
  return r;
}

Functional random_functional(std::mt19937_64& rng, std::size_t dim, long bound) {
  Functional f;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    long num = static_cast<long>(rng() % span) - bound;
    long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(bound));
    Rational q(num, den);
    q.canonicalize();
    f.push_back(q);
  }
  return f;
}

namespace {

struct Branches {
  bool nilpotent = false;
  bool metabelian = false;
  bool codim_one = false;
};

Branches cascade_branches(const LieAlgebra& g) {
  Branches b;
  b.nilpotent = is_nilpotent(g);
  b.metabelian = is_abelian(g, commutator_ideal(g));
  b.codim_one = nilradical(g).dim() + 1 == g.dim();
  return b;
}

std::vector<std::string> branch_names(const Branches& b) {
  std::vector<std::string> out;
  if (b.nilpotent) out.emplace_back("nilpotent");
  if (b.metabelian) out.emplace_back("metabelian");
  if (b.codim_one) out.emplace_back("codimension-one nilradical");
  return out;
}

}  // namespace

RegularityReport regularity_report(const LieAlgebra& g, const std::vector<Functional>& samples, std::uint64_t seed) {
  RegularityReport r;
  r.seed = seed;
  auto exp = is_exponential(g);
  if (exp.kind != ExponentialVerdict::Kind::Exponential) {
    r.verdict = RegularityReport::Verdict::Undetermined;
    r.reason = exp.kind == ExponentialVerdict::Kind::NotExponential ? "NotExponential" : "ExponentialityUnknown";
    r.notes.push_back(exp.kind == ExponentialVerdict::Kind::NotExponential ? "not exponential: " + exp.note
                                                                           : "exponentiality undecided: " + exp.note);
    return r;
  }
  auto b = cascade_branches(g);
  r.branches = branch_names(b);
  if (b.nilpotent) {
    r.verdict = RegularityReport::Verdict::StarRegular;
    r.reason = "nilpotent: connected nilpotent Lie groups have polynomial growth";
    return r;
  }
  if (b.metabelian) {
    r.verdict = RegularityReport::Verdict::StarRegular;
    r.reason = "metabelian: [g,g] is commutative";
    return r;
  }
  if (b.codim_one) {
    r.verdict = RegularityReport::Verdict::PrimitiveStarRegular;
    r.reason = "nilradical is a one-codimensional nilpotent ideal";
    return r;
  }
  std::vector<Functional> all = samples;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < kRandomSampleCount; ++k) all.push_back(random_functional(rng, g.dim()));
  for (const auto& f : all) {
    check_length(g, f);
    auto c = condition_R_at(g, f);
    ++r.functionals_checked;
    if (!c.holds) {
      r.verdict = RegularityReport::Verdict::ConditionRFails;
      r.reason = "condition (R) fails: f does not vanish on the stable central series term of g_f + n";
      r.certificate = std::move(c);
      return r;
    }
  }
  r.verdict = RegularityReport::Verdict::Undetermined;
  r.reason = "ConditionRHoldsOnSample";
  r.notes.push_back("condition (R) holds on " + std::to_string(r.functionals_checked) +
                    " sampled functionals; evidence only");
  return r;
}

bool verify(const LieAlgebra& g, const RegularityReport& r) {
  auto exp = is_exponential(g);
  if (exp.kind != ExponentialVerdict::Kind::Exponential)
    return r.verdict == RegularityReport::Verdict::Undetermined && r.branches.empty() && !r.certificate;
  if (branch_names(cascade_branches(g)) != r.branches) return false;
  if (r.verdict == RegularityReport::Verdict::ConditionRFails)
    return r.certificate && !r.certificate->holds && verify(g, *r.certificate);
  return !r.certificate;
}

std::string to_string(RegularityReport::Verdict v) {
  switch (v) {
    case RegularityReport::Verdict::StarRegular: return "StarRegular";
    case RegularityReport::Verdict::PrimitiveStarRegular: return "PrimitiveStarRegular";
    case RegularityReport::Verdict::ConditionRFails: return "ConditionRFails";
    case RegularityReport::Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

}  // namespace orbitkit
