#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitkit/errors.hpp"
#include "orbitkit/invariants.hpp"

namespace orbitkit {

std::string to_string(ClosureVerdict::Kind k) {
  switch (k) {
    case ClosureVerdict::Kind::NotInClosure: return "NotInClosure";
    case ClosureVerdict::Kind::InClosureNumeric: return "InClosureNumeric";
    case ClosureVerdict::Kind::ExactPoint: return "ExactPoint";
    case ClosureVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(CriticalVerdict::Kind k) {
  switch (k) {
    case CriticalVerdict::Kind::Critical: return "Critical";
    case CriticalVerdict::Kind::InClosureEvidence: return "InClosureEvidence";
    case CriticalVerdict::Kind::NotInOmega: return "NotInOmega";
    case CriticalVerdict::Kind::SameNOrbit: return "SameNOrbit";
    case CriticalVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::vector<ExpPoly> with_constants(const std::vector<ExpPoly>& comps, const std::map<std::string, Rational>& cs) {
  if (cs.empty()) return comps;
  std::map<std::string, ExpPoly> values;
  for (const auto& [k, v] : cs) values.emplace(k, ExpPoly(v));
  std::vector<ExpPoly> out;
  for (const auto& c : comps) out.push_back(c.substitute(values));
  return out;
}

DualPolynomial with_constants(const DualPolynomial& q, const std::map<std::string, Rational>& cs) {
  std::map<std::string, ExpPoly> values;
  for (const auto& [k, v] : cs) values.emplace(k, ExpPoly(v));
  return q.substitute_constants(values);
}

Vec<Rational> matched_point(const DualPolynomial& q, const OrbitMap& om, const Vec<Rational>& g) {
  Vec<Rational> h;
  for (const auto& c : q.coords()) {
    auto it = std::find(om.basis.begin(), om.basis.end(), c);
    if (it == om.basis.end()) throw CoordinateMismatch("orbit map has no coordinate " + c);
    h.push_back(g[static_cast<std::size_t>(it - om.basis.begin())]);
  }
  return h;
}

// +1 or -1 when every term is a same-signed real constant times a real exponential, else 0.
int definite_sign(const ExpPoly& p) {
  int sign = 0;
  for (const auto& [k, c] : p.terms()) {
    if (!k.mono.empty() || !k.lin.is_real() || !c.is_real()) return 0;
    int s = sgn(c.re());
    if (sign != 0 && s != sign) return 0;
    sign = s;
  }
  return sign;
}

Rational distance2(const Vec<Rational>& a, const Vec<Rational>& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational x = a[i] - b[i];
    d += x * x;
  }
  return d;
}

// Best rational approximation of x within relative error rel (continued fractions of the exact double).
Rational approximate(double x, double rel) {
  Rational exact(x);
  if (x == 0.0 || rel <= 0.0) return exact;
  if (std::abs(x) < 1e-30) return 0;
  Rational bound = abs(exact) * Rational(rel);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = exact;
  for (int it = 0; it < 200; ++it) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    Rational conv(p2, q2);
    conv.canonicalize();
    if (abs(conv - exact) <= bound) return conv;
    Rational frac = rest - Rational(a);
    if (frac == 0) return conv;
    rest = 1 / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return exact;
}

// Components compiled for the search. Polynomial parameters x = sinh(z); exponent-only parameters
// enter through atoms u_v = exp(v / L_v) = 2^y, so every exponential is an integer power product.
struct Compiled {
  struct Term {
    Rational cq;
    double c = 0;
    std::vector<unsigned> pw;  // over poly
    std::vector<long> ex;      // over exp
  };
  std::vector<std::string> poly, exp, held;
  std::vector<Rational> scale;  // L_v
  std::vector<std::vector<Term>> comps;
};

std::optional<Compiled> compile(const std::vector<ExpPoly>& in, std::vector<std::string>& notes) {
  Compiled cc;
  std::set<std::string> pv, ev;
  for (const auto& p : in) {
    auto a = p.polynomial_variables();
    auto b = p.exponent_variables();
    pv.insert(a.begin(), a.end());
    ev.insert(b.begin(), b.end());
  }
  std::map<std::string, ExpPoly> zero;
  for (const auto& v : pv)
    if (ev.count(v)) {
      cc.held.push_back(v);
      zero.emplace(v, ExpPoly());
    }
  for (const auto& v : pv)
    if (!ev.count(v)) cc.poly.push_back(v);
  for (const auto& v : ev)
    if (!pv.count(v)) cc.exp.push_back(v);
  if (!cc.held.empty()) notes.push_back("parameters entering both polynomially and in exponents held at 0");

  std::vector<ExpPoly> comps;
  for (const auto& p : in) comps.push_back(zero.empty() ? p : p.substitute(zero));
  cc.scale.assign(cc.exp.size(), Rational(1));
  for (const auto& p : comps)
    for (const auto& [k, c] : p.terms()) {
      if (!k.lin.is_real() || !k.lin.constant.is_zero()) {
        notes.push_back("exponent " + to_string(k.lin) + " has no positive rational values");
        return std::nullopt;
      }
      if (!c.is_real()) {
        notes.push_back("complex coefficients are outside the search");
        return std::nullopt;
      }
      for (std::size_t j = 0; j < cc.exp.size(); ++j) {
        Rational a = k.lin.coeff(cc.exp[j]).re();
        mpz_class l = cc.scale[j].get_num();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
        cc.scale[j] = Rational(l);
      }
    }
  for (const auto& p : comps) {
    std::vector<Compiled::Term> ts;
    for (const auto& [k, c] : p.terms()) {
      Compiled::Term t;
      t.cq = c.re();
      t.c = t.cq.get_d();
      for (const auto& v : cc.poly) {
        auto it = k.mono.find(v);
        t.pw.push_back(it == k.mono.end() ? 0 : it->second);
      }
      for (std::size_t j = 0; j < cc.exp.size(); ++j) {
        Rational a = k.lin.coeff(cc.exp[j]).re() * cc.scale[j];
        t.ex.push_back(a.get_num().get_si());
      }
      ts.push_back(std::move(t));
    }
    cc.comps.push_back(std::move(ts));
  }
  return cc;
}

Vec<Rational> exact_point(const Compiled& cc, const std::vector<Rational>& x, const std::vector<Rational>& u) {
  Vec<Rational> out;
  for (const auto& ts : cc.comps) {
    Rational acc = 0;
    for (const auto& t : ts) {
      Rational v = t.cq;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (t.pw[i]) v *= orbitkit::pow(x[i], static_cast<long>(t.pw[i]));
      for (std::size_t j = 0; j < u.size(); ++j)
        if (t.ex[j]) v *= orbitkit::pow(u[j], t.ex[j]);
      acc += v;
    }
    out.push_back(acc);
  }
  return out;
}

constexpr double kLn2 = 0.69314718055994530942;

struct Search {
  const Compiled& cc;
  std::vector<double> g;
  std::size_t np, ne;
  std::size_t budget;
  double target;
  std::size_t evals = 0;
  std::size_t limit = 0;  // end of the current restart's share

  bool exhausted() const { return evals >= std::min(budget, limit); }

  static void clamp(std::vector<double>& th, std::size_t np) {
    for (std::size_t i = 0; i < th.size(); ++i) th[i] = std::clamp(th[i], i < np ? -150.0 : -400.0, i < np ? 150.0 : 400.0);
  }

  void residual(const std::vector<double>& th, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    ++evals;
    std::vector<double> x(np), ch(np);
    for (std::size_t i = 0; i < np; ++i) {
      x[i] = std::sinh(th[i]);
      ch[i] = std::cosh(th[i]);
    }
    r.resize(static_cast<Eigen::Index>(g.size()));
    if (jac) jac->setZero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(np + ne));
    for (std::size_t k = 0; k < cc.comps.size(); ++k) {
      double acc = 0;
      for (const auto& t : cc.comps[k]) {
        double e = 0;
        for (std::size_t j = 0; j < ne; ++j) e += static_cast<double>(t.ex[j]) * th[np + j];
        double expart = std::exp2(e);
        double v = t.c * expart;
        for (std::size_t i = 0; i < np; ++i)
          if (t.pw[i]) v *= std::pow(x[i], static_cast<double>(t.pw[i]));
        acc += v;
        if (!jac) continue;
        const auto kk = static_cast<Eigen::Index>(k);
        for (std::size_t i = 0; i < np; ++i) {
          if (!t.pw[i]) continue;
          double d = t.c * expart * static_cast<double>(t.pw[i]) * std::pow(x[i], static_cast<double>(t.pw[i] - 1)) * ch[i];
          for (std::size_t l = 0; l < np; ++l)
            if (l != i && t.pw[l]) d *= std::pow(x[l], static_cast<double>(t.pw[l]));
          (*jac)(kk, static_cast<Eigen::Index>(i)) += d;
        }
        for (std::size_t j = 0; j < ne; ++j)
          if (t.ex[j]) (*jac)(kk, static_cast<Eigen::Index>(np + j)) += v * static_cast<double>(t.ex[j]) * kLn2;
      }
      r(static_cast<Eigen::Index>(k)) = acc - g[k];
    }
  }

  double objective(const std::vector<double>& th) {
    Eigen::VectorXd r;
    residual(th, r, nullptr);
    double f = r.squaredNorm();
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
  }

  // Levenberg-Marquardt from th with objective value f; returns the new value.
  double lm(std::vector<double>& th, double f, int iterations) {
    const auto n = static_cast<Eigen::Index>(np + ne);
    if (n == 0) return f;
    double lambda = 1e-3;
    for (int it = 0; it < iterations && f > target && !exhausted(); ++it) {
      Eigen::VectorXd r;
      Eigen::MatrixXd j;
      residual(th, r, &j);
      if (!j.allFinite() || !r.allFinite()) break;
      Eigen::MatrixXd a = j.transpose() * j;
      Eigen::VectorXd b = j.transpose() * r;
      double floor = 1e-12 * (a.diagonal().maxCoeff() + 1e-300);
      bool improved = false;
      double before = f;
      for (int tries = 0; tries < 10 && !exhausted(); ++tries) {
        Eigen::MatrixXd m = a;
        for (Eigen::Index i = 0; i < n; ++i) m(i, i) += lambda * (a(i, i) + floor);
        Eigen::VectorXd delta = -m.ldlt().solve(b);
        if (!delta.allFinite()) {
          lambda *= 4;
          continue;
        }
        std::vector<double> trial = th;
        for (Eigen::Index i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += delta(i);
        clamp(trial, np);
        double ft = objective(trial);
        if (ft < f) {
          th = std::move(trial);
          f = ft;
          lambda = std::max(lambda / 3, 1e-15);
          improved = true;
          break;
        }
        lambda *= 4;
      }
      if (!improved || before - f <= 1e-12 * before) break;
    }
    return f;
  }

  // Integer moves on the exponent atoms, each followed by a short joint refit.
  double descend(std::vector<double>& th, double f) {
    static constexpr double kSteps[] = {16, 8, 4, 2, 1};
    for (int round = 0; round < 64 && f > target && !exhausted(); ++round) {
      bool improved = false;
      for (double step : kSteps)
        for (std::size_t j = 0; j < ne && f > target; ++j)
          for (double dir : {1.0, -1.0}) {
            while (f > target && !exhausted()) {
              std::vector<double> trial = th;
              trial[np + j] += dir * step;
              clamp(trial, np);
              if (trial[np + j] == th[np + j]) break;
              double ft = lm(trial, objective(trial), 12);
              if (!(ft < f * (1 - 1e-9))) break;
              th = std::move(trial);
              f = ft;
              improved = true;
            }
          }
      f = lm(th, f, 40);
      if (!improved) break;
    }
    return f;
  }
};

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t& s, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(splitmix(s) >> 11) * 0x1.0p-53;
}

}  // namespace

ClosureVerdict closure_membership(const OrbitMap& om, const Vec<Rational>& g, const std::vector<DualPolynomial>& invs,
                                  const ClosureOptions& opts) {
  if (g.size() != om.components.size()) throw DimensionMismatch("closure: functional length differs from the orbit map");
  ClosureVerdict v;
  v.tol = opts.tol;
  v.budget = opts.budget;
  v.seed = opts.seed;
  v.constants = opts.constants;
  OrbitMap base = om;
  base.components = with_constants(om.components, opts.constants);

  std::vector<DualPolynomial> qs;
  for (const auto& q : invs) {
    auto r = with_constants(q, opts.constants);
    if (!vanish_on_orbit(r, base)) throw InvariantNotVanishing(to_string(q) + " does not vanish on the orbit");
    qs.push_back(std::move(r));
  }
  for (const auto& q : qs) {
    if (q.is_zero()) continue;
    Rational value = q.evaluate(matched_point(q, base, g));
    if (value != 0) {
      v.kind = ClosureVerdict::Kind::NotInClosure;
      v.certificate = ClosureVerdict::Certificate::Invariant;
      v.invariant = q;
      v.value = value;
      return v;
    }
  }
  for (std::size_t k = 0; k < base.components.size(); ++k) {
    const auto& c = base.components[k];
    if (c.variables().empty()) {
      Rational value = c.is_zero() ? Rational(0) : c.constant_value().re();
      if (c.is_zero() || c.constant_value().is_real()) {
        if (value != g[k]) {
          v.kind = ClosureVerdict::Kind::NotInClosure;
          v.certificate = ClosureVerdict::Certificate::Constant;
          v.component = k;
          v.value = g[k];
          return v;
        }
        continue;
      }
    }
    int s = definite_sign(c);
    if (s != 0 && sgn(g[k]) == -s) {
      v.kind = ClosureVerdict::Kind::NotInClosure;
      v.certificate = ClosureVerdict::Certificate::Sign;
      v.component = k;
      v.sign = s;
      v.value = g[k];
      return v;
    }
  }

  auto cc = compile(base.components, v.notes);
  if (!cc) return v;
  const std::size_t np = cc->poly.size(), ne = cc->exp.size();
  const Rational tol2 = opts.tol * opts.tol;

  auto finish = [&](const std::vector<Rational>& x, const std::vector<Rational>& u, const Vec<Rational>& pt,
                    const Rational& d2) {
    v.params.clear();
    v.exps.clear();
    for (std::size_t i = 0; i < np; ++i) v.params[cc->poly[i]] = x[i];
    for (const auto& h : cc->held) v.params[h] = 0;
    for (std::size_t j = 0; j < ne; ++j)
      v.exps.emplace_back(LinearForm::variable(cc->exp[j], Gaussian(1 / cc->scale[j])), u[j]);
    v.point = pt;
    v.distance2 = d2;
    v.kind = d2 == 0 ? ClosureVerdict::Kind::ExactPoint : ClosureVerdict::Kind::InClosureNumeric;
  };

  {
    std::vector<Rational> x(np, Rational(0)), u(ne, Rational(1));
    auto pt = exact_point(*cc, x, u);
    ++v.evaluations;
    if (distance2(pt, g) == 0) {
      finish(x, u, pt, 0);
      return v;
    }
  }

  double target = tol2.get_d() / 4;
  Search search{*cc, {}, np, ne, opts.budget, target};
  for (const auto& x : g) search.g.push_back(x.get_d());
  search.evals = v.evaluations;

  std::uint64_t state = opts.seed;
  std::vector<double> best(np + ne, 0.0);
  double fbest = std::numeric_limits<double>::infinity();
  const std::size_t share = std::max<std::size_t>(opts.budget / 5, 200);
  for (int restart = 0; search.evals < opts.budget; ++restart) {
    search.limit = search.evals + share;
    std::vector<double> th(np + ne, 0.0);
    if (restart > 0) {
      for (std::size_t i = 0; i < np; ++i) th[i] = uniform(state, -3, 3);
      for (std::size_t j = 0; j < ne; ++j) th[np + j] = std::round(uniform(state, -8, 8));
    }
    double f = search.objective(th);
    f = search.lm(th, f, 60);
    f = search.descend(th, f);
    if (f < fbest) {
      fbest = f;
      best = th;
    }
    if (fbest <= target) break;
    if (np + ne == 0) break;
  }
  v.evaluations = search.evals;

  std::vector<double> xs(np), us(ne);
  for (std::size_t i = 0; i < np; ++i) xs[i] = std::sinh(best[i]);
  for (std::size_t j = 0; j < ne; ++j) us[j] = std::exp2(best[np + j]);
  for (double rel : {1e-4, 1e-8, 1e-12, 0.0}) {
    std::vector<Rational> x, u;
    for (double a : xs) x.push_back(approximate(a, rel));
    bool ok = true;
    for (std::size_t j = 0; j < ne; ++j) {
      double yr = std::round(best[np + j]);
      Rational r = std::abs(best[np + j] - yr) < 1e-9 ? orbitkit::pow(Rational(2), static_cast<long>(yr))
                                                      : approximate(us[j], rel);
      if (sgn(r) <= 0) ok = false;
      u.push_back(r);
    }
    if (!ok) continue;
    auto pt = exact_point(*cc, x, u);
    ++v.evaluations;
    Rational d2 = distance2(pt, g);
    if (d2 < tol2) {
      finish(x, u, pt, d2);
      return v;
    }
  }
  v.notes.push_back("best squared distance " + std::to_string(fbest) + " after " + std::to_string(v.evaluations) +
                    " evaluations");
  return v;
}

bool verify(const OrbitMap& om, const Vec<Rational>& g, const ClosureVerdict& v) {
  OrbitMap base = om;
  base.components = with_constants(om.components, v.constants);
  switch (v.kind) {
    case ClosureVerdict::Kind::Inconclusive: return true;
    case ClosureVerdict::Kind::NotInClosure:
      switch (v.certificate) {
        case ClosureVerdict::Certificate::Invariant:
          if (!v.invariant || !vanish_on_orbit(*v.invariant, base)) return false;
          return v.value != 0 && v.invariant->evaluate(matched_point(*v.invariant, base, g)) == v.value;
        case ClosureVerdict::Certificate::Sign:
          return v.component < g.size() && v.sign != 0 && definite_sign(base.components[v.component]) == v.sign &&
                 g[v.component] == v.value && sgn(v.value) == -v.sign;
        case ClosureVerdict::Certificate::Constant: {
          if (v.component >= g.size()) return false;
          const auto& c = base.components[v.component];
          if (!c.variables().empty()) return false;
          Rational value = c.is_zero() ? Rational(0) : c.constant_value().re();
          return g[v.component] == v.value && value != v.value;
        }
        case ClosureVerdict::Certificate::None: return false;
      }
      return false;
    case ClosureVerdict::Kind::InClosureNumeric:
    case ClosureVerdict::Kind::ExactPoint: {
      auto pt = evaluate(base.components, v.params, v.exps);
      if (pt != v.point) return false;
      Rational d2 = distance2(pt, g);
      if (d2 != v.distance2) return false;
      return v.kind == ClosureVerdict::Kind::ExactPoint ? d2 == 0 : d2 < v.tol * v.tol;
    }
  }
  return false;
}

CriticalVerdict critical_test(const LieAlgebra& g, const Functional& f, const Functional& target,
                              const std::vector<FlowStep>& sequence, unsigned degree_bound, const ClosureOptions& opts,
                              const std::function<bool(const Functional&)>& exact_description) {
  if (f.size() != g.dim() || target.size() != g.dim()) throw DimensionMismatch("critical_test: functional length");
  CriticalVerdict out;
  RSubspace n = nilradical(g);
  auto names = subalgebra(g, n).algebra.names();
  OrbitMap om = orbit_map(g, symbolic(f), sequence);
  OrbitMap rom = restrict_orbit(om, n, names);
  Vec<Rational> rt;
  for (const auto& b : n.basis()) rt.push_back(dot(target, b));

  out.restricted = closure_membership(rom, rt, vanishing_polynomials(rom, degree_bound), opts);
  switch (out.restricted.kind) {
    case ClosureVerdict::Kind::NotInClosure: out.kind = CriticalVerdict::Kind::NotInOmega; break;
    case ClosureVerdict::Kind::Inconclusive:
      out.kind = CriticalVerdict::Kind::Inconclusive;
      out.notes.push_back("restricted closure test inconclusive");
      break;
    default: {
      out.full = closure_membership(om, target, vanishing_polynomials(om, degree_bound), opts);
      switch (out.full->kind) {
        case ClosureVerdict::Kind::NotInClosure: out.kind = CriticalVerdict::Kind::Critical; break;
        case ClosureVerdict::Kind::ExactPoint: out.kind = CriticalVerdict::Kind::SameNOrbit; break;
        case ClosureVerdict::Kind::InClosureNumeric: out.kind = CriticalVerdict::Kind::InClosureEvidence; break;
        case ClosureVerdict::Kind::Inconclusive:
          out.kind = CriticalVerdict::Kind::Inconclusive;
          out.notes.push_back("full closure test inconclusive");
          break;
      }
    }
  }
  if (exact_description && out.kind != CriticalVerdict::Kind::Inconclusive)
    out.description_agrees = (out.kind == CriticalVerdict::Kind::Critical) == exact_description(target);
  return out;
}

}  // namespace orbitkit
