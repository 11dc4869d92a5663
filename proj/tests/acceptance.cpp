// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitkit/catalog.hpp"
#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/envelop.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/symflow.hpp"

using namespace orbitkit;
using Q = Rational;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Q random_q(std::mt19937_64& rng, long bound = 4) {
  Q q(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound,
      1 + static_cast<long>(rng() % static_cast<std::uint64_t>(bound)));
  q.canonicalize();
  return q;
}

Q random_nonzero(std::mt19937_64& rng) {
  Q q = random_q(rng);
  while (sgn(q) == 0) q = random_q(rng);
  return q;
}

Vec<Q> random_vec(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  Vec<Q> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_q(rng, bound));
  return v;
}

ExpPoly var(const std::string& v) { return ExpPoly::variable(v); }
ExpPoly ex(const std::string& v, long c) { return ExpPoly::exp(LinearForm::variable(v, Gaussian(c))); }

const std::vector<LieAlgebra>& sample_algebras() {
  static const std::vector<LieAlgebra> algs = {algebras::b5(), algebras::g49_0(), algebras::heisenberg3(),
                                               algebras::axb(), algebras::e2_motion(),
                                               algebras::heisenberg3_plus_line()};
  return algs;
}

bool in_span(const std::vector<DualPolynomial>& basis, const DualPolynomial& q) {
  std::map<Exponents, std::size_t, GradedLexDescending> index;
  for (const auto& b : basis)
    for (const auto& [e, c] : b.terms()) index.emplace(e, 0);
  for (const auto& [e, c] : q.terms()) index.emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, i] : index) i = k++;
  auto row = [&](const DualPolynomial& p) {
    Vec<Q> r(index.size(), Q(0));
    for (const auto& [e, c] : p.terms()) {
      if (!c.is_constant() || !c.constant_value().is_real()) return std::optional<Vec<Q>>();
      r[index.at(e)] = c.constant_value().re();
    }
    return std::optional<Vec<Q>>(r);
  };
  std::vector<Vec<Q>> rows;
  for (const auto& b : basis) {
    auto r = row(b);
    if (!r) return false;
    rows.push_back(*r);
  }
  auto target = row(q);
  if (!target) return false;
  Subspace<Q> s(index.size(), rows);
  return s.contains(*target);
}

// ---------------------------------------------------------------------------

Check criterion1() {
  Check c;
  auto start = Clock::now();
  auto e = *catalog_entry("b5");
  auto om = orbit_map(e.algebra, e.symbolic_reference, e.sequence);
  double t = seconds_since(start);
  c(om.basis == std::vector<std::string>{"d", "e0", "e1", "e2", "e3"}, "basis order");
  c(om.components[1] == var("f0") - var("x1") * var("x2"), "e0 component f(e0) - x1 x2");
  c(om.components[2] == ex("t", 1) * var("x2"), "e1 component e^t x2");
  c(om.components[3] == -(ex("s", -1) * ex("t", -1) * var("x1")), "e2 component -e^-s e^-t x1");
  c(om.components[4] == ex("s", -1), "e3 component e^-s");
  c(om.components[0] == var("x3"), "d component x3");
  c(t < 1.0, "runtime " + std::to_string(t) + " s");
  return c;
}

Check criterion2() {
  Check c;
  auto e = *catalog_entry("b5");
  const auto& g = e.algebra;
  auto gf = stabilizer(g, e.reference);
  c(gf == RSubspace::coordinate(5, {1}), "stabilizer is span{e0}");
  auto m = stabilizer_ideal(g, e.reference, nilradical(g));
  c(m == RSubspace::coordinate(5, {1, 2, 3, 4}), "stabilizer ideal is span{e0,e1,e2,e3}");
  auto view = subalgebra(g, m);
  c(view.algebra == catalog_entry("g49_0")->algebra, "bracket table equals the g49_0 entry");
  return c;
}

Check criterion3() {
  Check c;
  auto e = *catalog_entry("b5");
  const auto& g = e.algebra;
  auto cert = condition_R_at(g, e.reference);
  c(!cert.holds, "condition (R) is false");
  c(cert.m_inf == RSubspace::coordinate(5, {2, 3, 4}), "m_infinity is span{e1,e2,e3}");
  bool e3_is_one = false;
  for (std::size_t i = 0; i < cert.m_inf.dim(); ++i)
    if (cert.m_inf.basis()[i] == unit_vec<Q>(5, 4) && cert.values[i] == 1) e3_is_one = true;
  c(e3_is_one, "certificate records f(e3) = 1");
  c(verify(g, cert), "certificate re-verifies");
  auto r = regularity_report(g, {e.reference}, 1);
  c(r.verdict == RegularityReport::Verdict::ConditionRFails, "regularity_report(b5) = ConditionRFails");
  c(verify(g, r), "report re-verifies");
  return c;
}

Check criterion4() {
  using V = RegularityReport::Verdict;
  Check c;
  auto starts = [](const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; };
  auto h3 = regularity_report(algebras::heisenberg3(), {}, 1);
  c(h3.verdict == V::StarRegular && starts(h3.reason, "nilpotent"), "heisenberg3 StarRegular(nilpotent)");
  auto axb = regularity_report(algebras::axb(), {}, 1);
  c(axb.verdict == V::StarRegular && starts(axb.reason, "metabelian"), "axb StarRegular(metabelian)");

  std::size_t codim_one = 0;
  for (const auto& e : catalog()) {
    const auto& g = e.algebra;
    if (!is_solvable(g) || is_exponential(g).kind != ExponentialVerdict::Kind::Exponential) continue;
    if (nilradical(g).dim() + 1 != g.dim()) continue;
    ++codim_one;
    auto r = regularity_report(g, {e.reference}, 1);
    bool branch = false;
    for (const auto& b : r.branches) branch = branch || b == "codimension-one nilradical";
    c(branch, e.name + ": codimension-one nilradical branch applies");
    // an earlier branch may give the stronger StarRegular verdict
    c(r.verdict == V::PrimitiveStarRegular || r.verdict == V::StarRegular, e.name + ": primitive *-regular");
    if (e.name == "g49_0") c(r.verdict == V::PrimitiveStarRegular, "g49_0 PrimitiveStarRegular");
  }
  c(codim_one >= 2, "catalog has codimension-one examples");

  auto e2 = regularity_report(algebras::e2_motion(), {}, 1);
  bool note = false;
  for (const auto& n : e2.notes) note = note || n.find("not exponential") != std::string::npos;
  c(e2.verdict == V::Undetermined && e2.reason == "NotExponential" && note, "e2-motion Undetermined(NotExponential)");
  return c;
}

Check criterion5() {
  Check c;
  auto m = algebras::g49_0();
  auto invs = invariant_space(m, 2);
  c(invs.size() == 4, "invariant space of degree <= 2 has dimension 4, got " + std::to_string(invs.size()));
  c(in_span(invs, DualPolynomial::coordinate(m.names(), "e3")), "contains e3");
  c(in_span(invs, parse_dual_polynomial(m.names(), "e0*e3 - e1*e2")), "contains e0e3 - e1e2");
  c(!in_span(invs, parse_dual_polynomial(m.names(), "e0*e3")), "does not contain e0e3");
  for (const auto& q : invs) c(derivation(m, m.basis_vector(0), q).is_zero(), "basis element is invariant");

  auto e = *catalog_entry("b5");
  auto om = orbit_map(e.algebra, e.symbolic_reference, e.sequence);
  auto p = parse_dual_polynomial(e.algebra.names(), "e0*e3 - e1*e2 - f0*e3");
  c(vanish_on_orbit(p, om), "p vanishes on the b5 orbit");
  c(!vanish_on_orbit(parse_dual_polynomial(e.algebra.names(), "e0*e3 - e1*e2"), om), "without -f0 e3 it does not");
  return c;
}

Check criterion6() {
  Check c;
  auto start = Clock::now();
  auto g = algebras::g49_0();
  auto p = parse_dual_polynomial(g.names(), "e0*e3 - e1*e2 - f0*e3");
  auto w = central_element_w(g);
  c(symmetrize(g, p, dotted_generators(g)) == w, "symmetrization in dotted generators is W");
  auto e = [&](std::size_t i) { return UEAElement::generator(g, i); };
  UEAElement pbw = uea_mul(e(0), e(3)) * ExpPoly(-1) + uea_mul(e(1), e(2)) - e(3) * ExpPoly(Q(1, 2)) +
                   e(3) * (ExpPoly(Gaussian::i()) * var("f0"));
  c(w == pbw, "W = -e0e3 + e1e2 - e3/2 + i f0 e3 in PBW form");
  c(is_central(w).central, "W is central");
  c(check_rep(g, reps::dpi_s()).ok, "dpi_s is a representation");
  c(check_rep(g, reps::drho()).ok, "drho is a representation");
  c(evaluate_uea(reps::dpi_s(), w).is_zero(), "dpi_s(W) = 0");
  auto rho = evaluate_uea(reps::drho(), w);
  c(rho.is_scalar() && rho.scalar_value() == -(var("g1") * var("g2")), "drho(W) = -g1 g2");
  double t = seconds_since(start);
  c(t < 5.0, "runtime " + std::to_string(t) + " s");
  return c;
}

Check criterion7() {
  Check c;
  auto e = *catalog_entry("b5");
  auto om = orbit_map(e.algebra, e.symbolic_reference, e.sequence);
  const auto p = *e.invariant;
  const Q tol(1, 1000000);
  const Q small(1, 1000000);

  auto options = [&](std::uint64_t seed, const Q& f0) {
    ClosureOptions o;
    o.tol = tol;
    o.budget = 10000;
    o.seed = seed;
    o.constants = {{"f0", f0}};
    return o;
  };
  auto abs_q = [](const Q& q) { return sgn(q) < 0 ? Q(-q) : q; };

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    Q f0 = random_q(rng);
    Vec<Q> g = {random_q(rng), random_q(rng), random_nonzero(rng), random_nonzero(rng), Q(0)};
    auto v = closure_membership(om, g, {p}, options(seed, f0));
    std::string tag = "critical seed " + std::to_string(seed);
    c(e.critical(g), tag + ": inside the critical set");
    c(v.kind == ClosureVerdict::Kind::NotInClosure && v.certificate == ClosureVerdict::Certificate::Invariant &&
          v.invariant && *v.invariant == p.substitute_constants({{"f0", ExpPoly(f0)}}),
      tag + ": NotInClosure with the p certificate");
    c(v.value == -(g[2] * g[3]), tag + ": p(g) = -g1 g2");
    c(verify(om, g, v), tag + ": certificate re-verifies");
  }

  // g(e3) = g(e2) = 0 < |g(e1)|;  g(e3) = g(e1) = 0 < |g(e2)|;  g(e1) = g(e2) = g(e3) = 0
  const char* labels[] = {"e1", "e2", "zero"};
  for (int kind = 0; kind < 3; ++kind) {
    std::size_t worst = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      std::mt19937_64 rng(1000 * (kind + 1) + seed);
      Q f0 = random_q(rng);
      Vec<Q> g = {random_q(rng), random_q(rng), Q(0), Q(0), Q(0)};
      if (kind == 0) g[2] = random_nonzero(rng);
      if (kind == 1) g[3] = random_nonzero(rng);
      auto opts = options(seed, f0);
      auto v = closure_membership(om, g, {p}, opts);
      std::string tag = std::string("boundary ") + labels[kind] + " seed " + std::to_string(seed);
      c(!e.critical(g), tag + ": outside the critical set");
      c(v.kind == ClosureVerdict::Kind::InClosureNumeric, tag + ": InClosureNumeric, got " + to_string(v.kind));
      if (v.kind != ClosureVerdict::Kind::InClosureNumeric) continue;
      c(v.distance2 < Q(1, 1000000000000), tag + ": squared distance below 1e-12");
      c(v.evaluations <= 10000, tag + ": within the evaluation budget");
      c(verify(om, g, v), tag + ": witness re-verifies");
      worst = std::max(worst, v.evaluations);

      // sequence shape: s -> +infinity, and the remaining coordinates follow the case
      std::map<std::string, Q> values = v.params;
      values["f0"] = f0;
      Q e_minus_s = evaluate(ex("s", -1), values, v.exps);
      Q e1 = evaluate(om.components[2], values, v.exps);
      Q e2 = evaluate(om.components[3], values, v.exps);
      Q prod = evaluate(var("x1") * var("x2"), values, v.exps);
      c(sgn(e_minus_s) > 0 && e_minus_s < small, tag + ": exp(-s) is small");
      c(abs_q(prod - (f0 - g[1])) < small, tag + ": x1 x2 matches f(e0) - g(e0)");
      c(abs_q(e1 - g[2]) < small && abs_q(e2 - g[3]) < small, tag + ": e1 and e2 coordinates converge");
      if (kind == 0) c(abs_q(e2) < small && sgn(v.params.at("x2")) == sgn(g[2]), tag + ": x2 carries g(e1)");
      if (kind == 1) c(abs_q(e1) < small && sgn(v.params.at("x1")) == -sgn(g[3]), tag + ": x1 carries g(e2)");

      auto again = closure_membership(om, g, {p}, opts);
      c(again.point == v.point && again.params == v.params && again.exps == v.exps &&
            again.evaluations == v.evaluations,
        tag + ": deterministic");
    }
    std::cout << "  boundary case " << labels[kind] << ": at most " << worst << " evaluations\n";
  }
  return c;
}

Check criterion8() {
  Check c;
  auto start = Clock::now();
  std::mt19937_64 rng(8);
  const auto& algs = sample_algebras();
  std::size_t cases = 0;

  // Jacobi validation against ad being a homomorphism
  std::size_t jacobi = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + rng() % 2;
    std::vector<Q> tensor(n * n * n, Q(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k)
          if (rng() % 4 == 0) {
            Q val(static_cast<long>(rng() % 3) - 1);
            tensor[(a * n + b) * n + k] = val;
            tensor[(b * n + a) * n + k] = -val;
          }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    bool accepted = true;
    try {
      LieAlgebra::from_tensor(names, tensor);
    } catch (const JacobiViolation&) {
      accepted = false;
    }
    auto ad = [&](std::size_t i) {
      Matrix<Q> m(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = tensor[(i * n + j) * n + k];
      return m;
    };
    bool oracle = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<Q> lhs(n, n);
        for (std::size_t k = 0; k < n; ++k) lhs = lhs + ad(k) * tensor[(i * n + j) * n + k];
        oracle = oracle && lhs == ad(i) * ad(j) - ad(j) * ad(i);
      }
    c(accepted == oracle, "Jacobi validation case " + std::to_string(t));
    ++jacobi;
  }
  cases += jacobi;

  // Grassmann identity
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng() % 5;
    auto space = [&] {
      std::vector<Vec<Q>> rows;
      std::size_t k = rng() % (n + 1);
      for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vec(rng, n, 2));
      return Subspace<Q>(n, rows);
    };
    auto a = space(), b = space();
    c(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim(), "Grassmann case " + std::to_string(t));
    ++cases;
  }

  // PBW associativity and rewrite-order independence
  auto random_uea = [&](const LieAlgebra& g) {
    UEAElement u(g);
    std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms; ++t) {
      PBWMonomial m(g.dim(), 0);
      unsigned d = static_cast<unsigned>(rng() % 3);
      for (unsigned k = 0; k < d; ++k) ++m[rng() % g.dim()];
      u.add_term(m, ExpPoly(random_q(rng)));
    }
    return u;
  };
  for (int t = 0; t < 200; ++t) {
    const auto& g = algs[rng() % algs.size()];
    auto a = random_uea(g), b = random_uea(g), d = random_uea(g);
    c(uea_mul(uea_mul(a, b), d) == uea_mul(a, uea_mul(b, d)), "PBW associativity case " + std::to_string(t));
    c(uea_mul(a, b) == uea_mul_right(a, b), "PBW order independence case " + std::to_string(t));
    ++cases;
  }

  // ExpPoly ring axioms and the flow group law
  auto random_exppoly = [&] {
    static const std::vector<std::string> vars = {"s", "t", "x"};
    ExpPoly p;
    std::size_t terms = rng() % 4;
    for (std::size_t k = 0; k < terms; ++k) {
      Monomial mono;
      LinearForm lin;
      for (const auto& v : vars) {
        if (rng() % 3 == 0) mono[v] = static_cast<unsigned>(1 + rng() % 2);
        if (rng() % 3 == 0) lin += LinearForm::variable(v, Gaussian(static_cast<long>(rng() % 5) - 2));
      }
      p += ExpPoly::term(Gaussian(random_q(rng), rng() % 4 == 0 ? random_q(rng) : Q(0)), mono, lin);
    }
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    auto a = random_exppoly(), b = random_exppoly(), d = random_exppoly();
    bool ring = (a + b) + d == a + (b + d) && a + b == b + a && (a * b) * d == a * (b * d) && a * b == b * a &&
                a * (b + d) == a * b + a * d && a - a == ExpPoly() && a * ExpPoly(1) == a;
    c(ring, "ExpPoly ring case " + std::to_string(t));
    const auto& g = algs[rng() % algs.size()];
    auto flow = one_param_flow(g, random_vec(rng, g.dim()), "t");
    c(substitute(flow, "t", var("t1")) * substitute(flow, "t", var("t2")) == substitute(flow, "t", var("t1") + var("t2")),
      "flow group law case " + std::to_string(t));
    ++cases;
  }

  // Leibniz rule for the coadjoint derivation
  auto random_poly = [&](const std::vector<std::string>& coords) {
    DualPolynomial q(coords);
    std::size_t terms = rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      Exponents e(coords.size(), 0);
      unsigned d = static_cast<unsigned>(rng() % 3);
      for (unsigned k = 0; k < d; ++k) ++e[rng() % coords.size()];
      q += DualPolynomial::monomial(coords, e, ExpPoly(random_q(rng)));
    }
    return q;
  };
  for (int t = 0; t < 200; ++t) {
    const auto& g = algs[rng() % algs.size()];
    auto a = random_poly(g.names()), b = random_poly(g.names());
    auto x = random_vec(rng, g.dim());
    c(derivation(g, x, a * b) == derivation(g, x, a) * b + a * derivation(g, x, b), "Leibniz case " + std::to_string(t));
    ++cases;
  }

  // homomorphism defect of the catalog representations
  for (const auto& e : catalog())
    for (const auto& rep : e.representations) {
      c(check_rep(e.algebra, rep.assignment).ok, rep.name + " passes check_rep");
      auto image = [&](const Vec<Q>& x) {
        DiffOp op;
        for (std::size_t i = 0; i < x.size(); ++i) op += rep.assignment[i] * ExpPoly(Gaussian(Q(0), x[i]));
        return op;  // i * sum x_i assign_i
      };
      for (int t = 0; t < 100; ++t) {
        auto x = random_vec(rng, e.algebra.dim()), y = random_vec(rng, e.algebra.dim());
        auto defect = commutator(image(x), image(y)) - image(e.algebra.bracket(x, y));
        c(defect.is_zero(), rep.name + " homomorphism defect case " + std::to_string(t));
        ++cases;
      }
    }

  // certificate re-verification for emitted reports
  auto b5 = *catalog_entry("b5");
  auto om = orbit_map(b5.algebra, b5.symbolic_reference, b5.sequence);
  for (int t = 0; t < 200; ++t) {
    switch (t % 3) {
      case 0: {
        const auto& g = algs[rng() % algs.size()];
        if (!is_solvable(g)) break;
        auto f = random_functional(rng, g.dim(), 3);
        try {
          c(verify(g, condition_R_at(g, f)), "condition (R) certificate case " + std::to_string(t));
        } catch (const NonRationalSpectrum&) {
        }
        break;
      }
      case 1: {
        const auto& g = algs[rng() % algs.size()];
        auto r = regularity_report(g, {random_functional(rng, g.dim(), 3)}, rng());
        c(verify(g, r), "regularity report case " + std::to_string(t));
        break;
      }
      default: {
        Vec<Q> g = random_vec(rng, 5);
        ClosureOptions o;
        o.constants = {{"f0", random_q(rng)}};
        o.seed = rng();
        o.budget = 2000;
        auto v = closure_membership(om, g, {*b5.invariant}, o);
        c(verify(om, g, v), "closure verdict case " + std::to_string(t));
      }
    }
    ++cases;
  }

  double secs = seconds_since(start);
  std::cout << "  property cases: " << cases << " in " << secs << " s\n";
  c(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"b5 orbit golden values", criterion1},
      {"stabilizer and stabilizer ideal of b5", criterion2},
      {"condition (R) certificate for b5", criterion3},
      {"regularity decision branches", criterion4},
      {"invariant recovery", criterion5},
      {"enveloping algebra pipeline", criterion6},
      {"orbit closure at desk scale", criterion7},
      {"property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(start);
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
         << secs << " s)";
    std::cout << line.str() << "\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "  failed: " << c.failures[k] << "\n";
    if (c.failures.size() > 10) std::cout << "  ... " << c.failures.size() - 10 << " more\n";
    failed += !c.failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
