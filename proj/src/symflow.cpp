#include "orbitkit/symflow.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "orbitkit/spectrum.hpp"

namespace orbitkit {

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::variable(const std::string& v, Gaussian c) {
  LinearForm l;
  if (!c.is_zero()) l.coeffs.emplace(v, std::move(c));
  return l;
}

bool LinearForm::is_real() const {
  if (!constant.is_real()) return false;
  for (const auto& [v, c] : coeffs)
    if (!c.is_real()) return false;
  return true;
}

Gaussian LinearForm::coeff(const std::string& v) const {
  auto it = coeffs.find(v);
  return it == coeffs.end() ? Gaussian() : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant += o.constant;
  for (const auto& [v, c] : o.coeffs) {
    auto& slot = coeffs[v];
    slot += c;
    if (slot.is_zero()) coeffs.erase(v);
  }
  return *this;
}

LinearForm operator*(LinearForm a, const Gaussian& c) {
  if (c.is_zero()) return LinearForm{};
  a.constant *= c;
  for (auto& [v, x] : a.coeffs) x *= c;
  return a;
}

namespace {

std::string coefficient_text(const Gaussian& c, bool leading, bool unit_implicit) {
  std::string out;
  if (c.is_real()) {
    bool neg = sgn(c.re()) < 0;
    Rational a = abs(c.re());
    if (leading) {
      out = neg ? "-" : "";
    } else {
      out = neg ? " - " : " + ";
    }
    if (!(unit_implicit && a == 1)) out += to_string(a) + (unit_implicit ? "*" : "");
    return out;
  }
  if (is_zero(c.re())) {
    bool neg = sgn(c.im()) < 0;
    Gaussian a(Rational(0), abs(c.im()));
    out = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    return out + to_string(a) + (unit_implicit ? "*" : "");
  }
  return (leading ? "" : " + ") + ("(" + to_string(c) + ")") + (unit_implicit ? "*" : "");
}

}  // namespace

std::string to_string(const LinearForm& l) {
  if (l.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [v, c] : l.coeffs) {
    out += coefficient_text(c, first, true) + v;
    first = false;
  }
  if (!l.constant.is_zero()) out += coefficient_text(l.constant, first, false);
  return out;
}

// ---------------------------------------------------------------------------
// ExpPoly

ExpPoly::ExpPoly(const Gaussian& c) {
  if (!c.is_zero()) terms_.emplace(TermKey{}, c);
}

ExpPoly ExpPoly::variable(const std::string& v) { return term(Gaussian(1), Monomial{{v, 1}}, LinearForm{}); }

ExpPoly ExpPoly::exp(const LinearForm& l) { return term(Gaussian(1), Monomial{}, l); }

ExpPoly ExpPoly::term(const Gaussian& c, Monomial mono, LinearForm lin) {
  ExpPoly p;
  for (auto it = mono.begin(); it != mono.end();) it = it->second == 0 ? mono.erase(it) : std::next(it);
  p.add_term(TermKey{std::move(mono), std::move(lin)}, c);
  return p;
}

void ExpPoly::add_term(const TermKey& k, const Gaussian& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool ExpPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.mono.empty() && terms_.begin()->first.lin.is_zero();
}

Gaussian ExpPoly::constant_value() const {
  if (!is_constant()) throw PreconditionFailed("expression is not constant: " + to_string(*this));
  return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

std::set<std::string> ExpPoly::polynomial_variables() const {
  std::set<std::string> out;
  for (const auto& [k, c] : terms_)
    for (const auto& [v, e] : k.mono) out.insert(v);
  return out;
}

std::set<std::string> ExpPoly::exponent_variables() const {
  std::set<std::string> out;
  for (const auto& [k, c] : terms_)
    for (const auto& [v, x] : k.lin.coeffs) out.insert(v);
  return out;
}

std::set<std::string> ExpPoly::variables() const {
  auto out = polynomial_variables();
  auto e = exponent_variables();
  out.insert(e.begin(), e.end());
  return out;
}

std::set<LinearForm> ExpPoly::exponents() const {
  std::set<LinearForm> out;
  for (const auto& [k, c] : terms_) out.insert(k.lin);
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TermKey k{ka.mono, ka.lin + kb.lin};
      for (const auto& [v, e] : kb.mono) k.mono[v] += e;
      out.add_term(k, ca * cb);
    }
  return out;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) { return *this = *this * o; }

ExpPoly ExpPoly::operator-() const {
  ExpPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

ExpPoly ExpPoly::pow(unsigned k) const {
  ExpPoly out(1), base = *this;
  while (k) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return out;
}

namespace {

// An affine, exponential-free value as a linear form.
LinearForm affine_form(const ExpPoly& value, const std::string& v) {
  LinearForm l;
  for (const auto& [k, c] : value.terms()) {
    if (!k.lin.is_zero())
      throw NonlinearExponentSubstitution("substituting an exponential into the exponent of " + v);
    if (k.mono.empty()) {
      l.constant += c;
    } else if (k.mono.size() == 1 && k.mono.begin()->second == 1) {
      l += LinearForm::variable(k.mono.begin()->first, c);
    } else {
      throw NonlinearExponentSubstitution("substituting a nonlinear value into the exponent of " + v);
    }
  }
  return l;
}

}  // namespace

ExpPoly ExpPoly::substitute(const std::string& v, const ExpPoly& value) const {
  ExpPoly out;
  std::optional<LinearForm> affine;
  for (const auto& [k, c] : terms_) {
    unsigned power = 0;
    Monomial mono = k.mono;
    if (auto it = mono.find(v); it != mono.end()) {
      power = it->second;
      mono.erase(it);
    }
    LinearForm lin = k.lin;
    Gaussian a = lin.coeff(v);
    lin.coeffs.erase(v);
    if (!a.is_zero()) {
      if (!affine) affine = affine_form(value, v);
      lin += *affine * a;
    }
    ExpPoly t = term(c, std::move(mono), std::move(lin));
    if (power > 0) t *= value.pow(power);
    out += t;
  }
  return out;
}

ExpPoly ExpPoly::substitute(const std::map<std::string, ExpPoly>& values) const {
  // Simultaneous substitution via fresh names so values may mention replaced variables.
  ExpPoly out = *this;
  std::map<std::string, std::string> fresh;
  std::size_t k = 0;
  for (const auto& [v, val] : values) {
    std::string f = "\x01" + std::to_string(k++);
    out = out.substitute(v, variable(f));
    fresh[f] = v;
  }
  for (const auto& [f, v] : fresh) out = out.substitute(f, values.at(v));
  return out;
}

ExpPoly ExpPoly::d_dvar(const std::string& v) const {
  ExpPoly out;
  for (const auto& [k, c] : terms_) {
    auto it = k.mono.find(v);
    if (it != k.mono.end()) {
      Monomial mono = k.mono;
      unsigned e = it->second;
      if (e == 1) {
        mono.erase(v);
      } else {
        mono[v] = e - 1;
      }
      out.add_term(TermKey{std::move(mono), k.lin}, c * Gaussian(static_cast<long>(e)));
    }
    Gaussian a = k.lin.coeff(v);
    if (!a.is_zero()) out.add_term(k, c * a);
  }
  return out;
}

ExpPoly ExpPoly::conj() const {
  ExpPoly out;
  for (const auto& [k, c] : terms_) {
    LinearForm l;
    l.constant = k.lin.constant.conj();
    for (const auto& [v, x] : k.lin.coeffs) l.coeffs.emplace(v, x.conj());
    out.add_term(TermKey{k.mono, l}, c.conj());
  }
  return out;
}

ExpPoly ExpPoly::real_part() const { return (*this + conj()) * ExpPoly(Gaussian(Rational(1, 2))); }

std::string to_string(const ExpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    std::string factors;
    for (const auto& [v, e] : k.mono) {
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (!k.lin.is_zero()) {
      if (!factors.empty()) factors += "*";
      factors += "exp(" + to_string(k.lin) + ")";
    }
    if (factors.empty()) {
      out += coefficient_text(c, first, false);
    } else {
      out += coefficient_text(c, first, true) + factors;
    }
    first = false;
  }
  return out;
}

Matrix<ExpPoly> to_exppoly(const Matrix<Gaussian>& m) {
  Matrix<ExpPoly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ExpPoly(m(i, j));
  return out;
}

Matrix<ExpPoly> substitute(const Matrix<ExpPoly>& m, const std::string& v, const ExpPoly& value) {
  Matrix<ExpPoly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(v, value);
  return out;
}

Matrix<ExpPoly> d_dvar(const Matrix<ExpPoly>& m, const std::string& v) {
  Matrix<ExpPoly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).d_dvar(v);
  return out;
}

// ---------------------------------------------------------------------------
// Flows

Matrix<Rational> coadjoint_matrix(const LieAlgebra& g, const Vec<Rational>& x) {
  return g.ad(x).transpose() * Rational(-1);
}

Matrix<ExpPoly> matrix_exponential(const Matrix<Rational>& a, const std::string& param,
                                   const std::string& map_name) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("matrix exponential of a non-square matrix");
  Matrix<ExpPoly> out(n, n);
  if (n == 0) return out;
  auto ac = complexify(a);
  auto ev = eigenvalues(ac);
  if (!ev.complete)
    throw NonRationalSpectrum(map_name, "eigenvalues of the coadjoint action of " + map_name + " are not in Q(i)");

  std::vector<Vec<Gaussian>> columns;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in columns
  std::vector<Matrix<Gaussian>> nilpotent_parts;
  for (const auto& [lambda, mult] : ev.roots) {
    auto nmat = ac - Matrix<Gaussian>::identity(n) * lambda;
    Matrix<Gaussian> power = Matrix<Gaussian>::identity(n);
    for (std::size_t k = 0; k < mult; ++k) power = power * nmat;
    auto gen = kernel(power);
    if (gen.dim() != mult) throw Error("generalized eigenspace has the wrong dimension");
    blocks.emplace_back(columns.size(), columns.size() + mult);
    columns.insert(columns.end(), gen.basis().begin(), gen.basis().end());
    nilpotent_parts.push_back(std::move(nmat));
  }
  auto b = Matrix<Gaussian>::from_columns(columns, n);
  auto binv = inverse(b);
  if (!binv) throw Error("generalized eigenvectors are not a basis");

  for (std::size_t r = 0; r < ev.roots.size(); ++r) {
    const auto& [lambda, mult] = ev.roots[r];
    auto [lo, hi] = blocks[r];
    Matrix<Gaussian> proj(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = lo; k < hi; ++k) proj(i, j) += b(i, k) * (*binv)(k, j);
    ExpPoly e = ExpPoly::exp(LinearForm::variable(param, lambda));
    Matrix<Gaussian> nk = proj;
    Rational factorial = 1;
    for (std::size_t k = 0; k < mult; ++k) {
      if (k > 0) {
        nk = nilpotent_parts[r] * nk;
        factorial *= static_cast<long>(k);
      }
      if (nk.is_zero_matrix()) break;
      ExpPoly scalar = e * ExpPoly::term(Gaussian(Rational(1) / factorial), Monomial{{param, static_cast<unsigned>(k)}},
                                         LinearForm{});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!nk(i, j).is_zero()) out(i, j) += scalar * ExpPoly(nk(i, j));
    }
  }
  return out;
}

Matrix<ExpPoly> one_param_flow(const LieAlgebra& g, const Vec<Rational>& x, const std::string& param) {
  return matrix_exponential(coadjoint_matrix(g, x), param, format_vector(g, x));
}

Matrix<ExpPoly> step_flow(const LieAlgebra& g, const FlowStep& step) {
  std::vector<Matrix<Rational>> mats;
  for (const auto& [x, p] : step.generators) mats.push_back(coadjoint_matrix(g, x));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!(mats[i] * mats[j] == mats[j] * mats[i]))
        throw PreconditionFailed("a combined flow step needs commuting coadjoint actions");
  Matrix<ExpPoly> out = Matrix<ExpPoly>::identity(g.dim());
  for (std::size_t i = 0; i < mats.size(); ++i)
    out = out * matrix_exponential(mats[i], step.generators[i].second, format_vector(g, step.generators[i].first));
  return out;
}

OrbitMap orbit_map(const LieAlgebra& g, const std::vector<ExpPoly>& f, const std::vector<FlowStep>& sequence) {
  if (f.size() != g.dim()) throw DimensionMismatch("functional length does not match the algebra");
  OrbitMap om;
  om.basis = g.names();
  Matrix<ExpPoly> total = Matrix<ExpPoly>::identity(g.dim());
  for (const auto& step : sequence) {
    for (const auto& [x, p] : step.generators) {
      if (x.size() != g.dim()) throw DimensionMismatch("flow generator length does not match the algebra");
      om.params.push_back(p);
    }
    total = total * step_flow(g, step);
  }
  om.components = total.apply(f);
  return om;
}

std::vector<ExpPoly> symbolic(const Vec<Rational>& f) {
  std::vector<ExpPoly> out;
  for (const auto& x : f) out.emplace_back(x);
  return out;
}

std::vector<ExpPoly> restrict_components(const std::vector<ExpPoly>& components, const RSubspace& s) {
  if (components.size() != s.ambient_dim()) throw DimensionMismatch("restriction: length mismatch");
  std::vector<ExpPoly> out;
  for (const auto& b : s.basis()) {
    ExpPoly acc;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!is_zero(b[i])) acc += components[i] * ExpPoly(b[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact evaluation

namespace {

LinearForm substitute_values(const LinearForm& l, const std::map<std::string, Rational>& values) {
  LinearForm out;
  out.constant = l.constant;
  for (const auto& [v, c] : l.coeffs) {
    auto it = values.find(v);
    if (it != values.end()) {
      out.constant += c * Gaussian(it->second);
    } else {
      out.coeffs.emplace(v, c);
    }
  }
  return out;
}

struct ExpSolver {
  std::vector<std::string> vars;  // coordinate order; the constant is the last coordinate
  std::vector<Vec<Rational>> forms;
  std::vector<Rational> values;

  Vec<Rational> coords(const LinearForm& l) const {
    Vec<Rational> c;
    for (const auto& v : vars) c.push_back(l.coeff(v).re());
    c.push_back(l.constant.re());
    return c;
  }

  static Rational power(const Rational& base, const Rational& exponent) {
    // base^(p/q) = (base^p)^(1/q)
    mpz_class p = exponent.get_num();
    mpz_class q = exponent.get_den();
    if (!p.fits_slong_p() || !q.fits_ulong_p()) throw PreconditionFailed("exponent too large for exact evaluation");
    Rational raised = orbitkit::pow(base, p.get_si());
    auto root = exact_root(raised, q.get_ui());
    if (!root) throw PreconditionFailed("exponential value is not rational");
    return *root;
  }
};

ExpSolver prepare(const std::map<std::string, Rational>& values, const ExpAssignment& exps,
                  const std::set<std::string>& extra_vars) {
  ExpSolver s;
  std::set<std::string> vars = extra_vars;
  std::vector<LinearForm> reduced;
  for (const auto& [l, u] : exps) {
    if (!l.is_real()) throw InconsistentExponentialAssignment("exp(" + to_string(l) + ") is not real");
    if (sgn(u) <= 0) throw InconsistentExponentialAssignment("exp(" + to_string(l) + ") must be positive");
    LinearForm r = substitute_values(l, values);
    if (r.coeffs.empty()) {
      if (r.constant.is_zero() && u != 1)
        throw InconsistentExponentialAssignment("exp(" + to_string(l) + ") equals 1 at the given values");
      if (!r.constant.is_zero())
        throw InconsistentExponentialAssignment("exp(" + to_string(l) + ") is irrational at the given values");
    }
    for (const auto& [v, c] : r.coeffs) vars.insert(v);
    reduced.push_back(std::move(r));
    s.values.push_back(u);
  }
  s.vars.assign(vars.begin(), vars.end());
  for (const auto& r : reduced) s.forms.push_back(s.coords(r));

  // Multiplicative consistency along every linear relation among the forms.
  if (!s.forms.empty()) {
    auto m = Matrix<Rational>::from_columns(s.forms, s.vars.size() + 1);
    auto rel = kernel(m);
    for (const auto& r : rel.basis()) {
      mpz_class den = 1;
      for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      Rational prod = 1;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (!is_zero(r[k])) prod *= ExpSolver::power(s.values[k], r[k] * Rational(den));
      if (prod != 1)
        throw InconsistentExponentialAssignment("exponential values violate exp(a+b) = exp(a)exp(b)");
    }
  }
  return s;
}

Gaussian evaluate_with(const ExpPoly& p, const std::map<std::string, Rational>& values, const ExpSolver& s) {
  Gaussian total;
  for (const auto& [k, c] : p.terms()) {
    Gaussian t = c;
    for (const auto& [v, e] : k.mono) {
      auto it = values.find(v);
      if (it == values.end()) throw PreconditionFailed("no value for variable " + v);
      t *= Gaussian(orbitkit::pow(it->second, static_cast<long>(e)));
    }
    LinearForm l = substitute_values(k.lin, values);
    if (!l.is_zero()) {
      if (!l.is_real()) throw PreconditionFailed("cannot evaluate the complex exponential exp(" + to_string(l) + ")");
      std::optional<Vec<Rational>> sol;
      bool known = true;
      for (const auto& [v, x] : l.coeffs)
        if (std::find(s.vars.begin(), s.vars.end(), v) == s.vars.end()) known = false;
      if (known && !s.forms.empty())
        sol = solve(Matrix<Rational>::from_columns(s.forms, s.vars.size() + 1), s.coords(l));
      if (!sol) throw PreconditionFailed("no value assigned for exp(" + to_string(l) + ")");
      Rational value = 1;
      for (std::size_t j = 0; j < sol->size(); ++j)
        if (!is_zero((*sol)[j])) value *= ExpSolver::power(s.values[j], (*sol)[j]);
      t *= Gaussian(value);
    }
    total += t;
  }
  return total;
}

Rational real_or_throw(const Gaussian& z) {
  if (!z.is_real()) throw PreconditionFailed("evaluation is not real: " + to_string(z));
  return z.re();
}

}  // namespace

Rational evaluate(const ExpPoly& p, const std::map<std::string, Rational>& values, const ExpAssignment& exps) {
  auto s = prepare(values, exps, p.exponent_variables());
  return real_or_throw(evaluate_with(p, values, s));
}

Vec<Rational> evaluate(const std::vector<ExpPoly>& ps, const std::map<std::string, Rational>& values,
                       const ExpAssignment& exps) {
  std::set<std::string> vars;
  for (const auto& p : ps) {
    auto v = p.exponent_variables();
    vars.insert(v.begin(), v.end());
  }
  auto s = prepare(values, exps, vars);
  Vec<Rational> out;
  for (const auto& p : ps) out.push_back(real_or_throw(evaluate_with(p, values, s)));
  return out;
}

LinearForm parse_linear_form(const std::string& text) {
  LinearForm l;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> LinearForm {
    throw PreconditionFailed("cannot parse linear form '" + text + "': " + why);
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    bool have_number = false;
    if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/' || text[i] == '.'))
        ++i;
      auto q = parse_rational(text.substr(start, i - start));
      if (!q) fail("bad number");
      coeff = *q;
      have_number = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      } else {
        l.constant += Gaussian(sign * coeff);
        continue;
      }
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) fail(have_number ? "expected a variable after '*'" : "expected a term");
    if (std::isdigit(static_cast<unsigned char>(text[start]))) fail("variable names start with a letter");
    l += LinearForm::variable(text.substr(start, i - start), Gaussian(sign * coeff));
  }
  return l;
}

std::pair<std::map<std::string, Rational>, ExpAssignment> parse_assignment(const std::string& text) {
  std::map<std::string, Rational> values;
  ExpAssignment exps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.rfind('=');
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    if (eq == std::string::npos) throw PreconditionFailed("assignment entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    auto value = parse_rational(item.substr(eq + 1));
    if (!value) throw PreconditionFailed("invalid rational in assignment entry '" + item + "'");
    if (key.rfind("exp(", 0) == 0 && key.size() > 5 && key.back() == ')') {
      exps.emplace_back(parse_linear_form(key.substr(4, key.size() - 5)), *value);
    } else {
      if (key.empty()) throw PreconditionFailed("empty variable name in assignment");
      values[key] = *value;
    }
  }
  return {values, exps};
}

}  // namespace orbitkit
