#include "orbitkit/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "orbitkit/errors.hpp"
#include "orbitkit/spectrum.hpp"

namespace orbitkit {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void require_same(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) throw CoordinateMismatch("dual polynomials over different coordinates");
}

}  // namespace

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return b < a;
}

// ---------------------------------------------------------------------------
// DualPolynomial

void DualPolynomial::add_term(const Exponents& e, const ExpPoly& c) {
  if (c.is_zero()) return;
  if (e.size() != coords_.size()) throw DimensionMismatch("monomial length differs from coordinate count");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DualPolynomial DualPolynomial::coordinate(const std::vector<std::string>& coords, std::size_t i) {
  if (i >= coords.size()) throw DimensionMismatch("coordinate index out of range");
  Exponents e(coords.size(), 0);
  e[i] = 1;
  return monomial(coords, e);
}

DualPolynomial DualPolynomial::coordinate(const std::vector<std::string>& coords, const std::string& name) {
  auto it = std::find(coords.begin(), coords.end(), name);
  if (it == coords.end()) throw CoordinateMismatch("no coordinate named " + name);
  return coordinate(coords, static_cast<std::size_t>(it - coords.begin()));
}

DualPolynomial DualPolynomial::constant(const std::vector<std::string>& coords, const ExpPoly& c) {
  return monomial(coords, Exponents(coords.size(), 0), c);
}

DualPolynomial DualPolynomial::monomial(const std::vector<std::string>& coords, const Exponents& e,
                                        const ExpPoly& c) {
  DualPolynomial q(coords);
  q.add_term(e, c);
  return q;
}

long DualPolynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(total(terms_.begin()->first));
}

DualPolynomial& DualPolynomial::operator+=(const DualPolynomial& o) {
  if (coords_.empty() && terms_.empty()) coords_ = o.coords_;
  if (!(o.coords_.empty() && o.terms_.empty())) require_same(coords_, o.coords_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DualPolynomial& DualPolynomial::operator-=(const DualPolynomial& o) {
  if (coords_.empty() && terms_.empty()) coords_ = o.coords_;
  if (!(o.coords_.empty() && o.terms_.empty())) require_same(coords_, o.coords_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

DualPolynomial operator*(const DualPolynomial& a, const DualPolynomial& b) {
  require_same(a.coords_, b.coords_);
  DualPolynomial out(a.coords_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

DualPolynomial operator*(DualPolynomial a, const ExpPoly& c) {
  DualPolynomial out(a.coords_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, x * c);
  return out;
}

ExpPoly DualPolynomial::substitute(const std::vector<ExpPoly>& values) const {
  if (values.size() != coords_.size()) throw CoordinateMismatch("substitution needs one value per coordinate");
  std::vector<std::vector<ExpPoly>> powers(values.size());
  auto power = [&](std::size_t i, unsigned k) -> const ExpPoly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(ExpPoly(1));
    while (p.size() <= k) p.push_back(p.back() * values[i]);
    return p[k];
  };
  ExpPoly out;
  for (const auto& [e, c] : terms_) {
    ExpPoly t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

DualPolynomial DualPolynomial::substitute_constants(const std::map<std::string, ExpPoly>& values) const {
  DualPolynomial out(coords_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(values));
  return out;
}

Rational DualPolynomial::evaluate(const Vec<Rational>& h, const std::map<std::string, Rational>& constants) const {
  std::vector<ExpPoly> values;
  for (const auto& x : h) values.emplace_back(x);
  std::map<std::string, ExpPoly> cs;
  for (const auto& [k, v] : constants) cs.emplace(k, ExpPoly(v));
  ExpPoly r = substitute_constants(cs).substitute(values);
  if (r.is_zero()) return 0;
  if (!r.is_constant()) throw PreconditionFailed("value depends on unassigned constants: " + to_string(r));
  Gaussian z = r.constant_value();
  if (!z.is_real()) throw PreconditionFailed("value is not real: " + to_string(z));
  return z.re();
}

std::string to_string(const DualPolynomial& q) {
  if (q.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : q.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += q.coords()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = to_string(c);
    bool negative = false;
    if (c.terms().size() == 1 && coef.size() > 1 && coef[0] == '-') {
      negative = true;
      coef = coef.substr(1);
    } else if (c.terms().size() > 1) {
      coef = "(" + coef + ")";
    }
    std::string body;
    if (mono.empty()) body = coef;
    else if (coef == "1") body = mono;
    else body = coef + "*" + mono;
    if (first) out += negative ? "-" + body : body;
    else out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

DualPolynomial parse_dual_polynomial(const std::vector<std::string>& coords, const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> DualPolynomial {
    throw PreconditionFailed("cannot parse polynomial '" + text + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  DualPolynomial out(coords);
  bool first = true;
  skip();
  if (i == text.size()) fail("empty");
  while (true) {
    skip();
    if (i == text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    DualPolynomial term = DualPolynomial::constant(coords, ExpPoly(sign));
    while (true) {
      skip();
      if (i == text.size()) fail("expected a factor");
      DualPolynomial factor;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        auto q = parse_rational(text.substr(start, i - start));
        if (!q) fail("bad number");
        factor = DualPolynomial::constant(coords, ExpPoly(*q));
      } else if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string name = text.substr(start, i - start);
        if (std::find(coords.begin(), coords.end(), name) != coords.end())
          factor = DualPolynomial::coordinate(coords, name);
        else
          factor = DualPolynomial::constant(coords, ExpPoly::variable(name));
      } else {
        fail("expected a number or a name");
      }
      skip();
      unsigned power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected an exponent");
        power = static_cast<unsigned>(std::stoul(text.substr(start, i - start)));
      }
      for (unsigned k = 0; k < power; ++k) term = term * factor;
      if (power == 0) term = term * DualPolynomial::constant(coords, ExpPoly(1));
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

Matrix<Rational> coordinate_action(const LieAlgebra& g, const RSubspace& a, const Vec<Rational>& x) {
  if (x.size() != g.dim() || a.ambient_dim() != g.dim()) throw DimensionMismatch("coordinate action: dimension");
  const auto& basis = a.basis();
  Matrix<Rational> m(basis.size(), basis.size());
  for (std::size_t nu = 0; nu < basis.size(); ++nu) {
    auto c = a.coordinates(g.bracket(x, basis[nu]));
    if (!c) throw NotIdeal("coordinate action needs an ideal");
    for (std::size_t mu = 0; mu < basis.size(); ++mu) m(mu, nu) = (*c)[mu];
  }
  return m;
}

namespace {

// X.q for the derivation sending coordinate nu to sum_mu A(mu, nu) coordinate mu.
DualPolynomial apply_action(const Matrix<Rational>& a, const DualPolynomial& q) {
  const std::size_t n = q.coords().size();
  if (a.rows() != n) throw CoordinateMismatch("derivation: coordinate count differs from the ideal dimension");
  DualPolynomial out(q.coords());
  for (const auto& [e, c] : q.terms())
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (e[nu] == 0) continue;
      for (std::size_t mu = 0; mu < n; ++mu) {
        if (is_zero(a(mu, nu))) continue;
        Exponents f = e;
        --f[nu];
        ++f[mu];
        out += DualPolynomial::monomial(q.coords(), f, c * ExpPoly(a(mu, nu) * Rational(e[nu])));
      }
    }
  return out;
}

// The same action as a matrix on the monomial basis of one degree.
Matrix<Rational> action_on_monomials(const Matrix<Rational>& a, const std::vector<Exponents>& mons) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t j = 0; j < mons.size(); ++j) index.emplace(mons[j], j);
  Matrix<Rational> m(mons.size(), mons.size());
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < mons.size(); ++j) {
    const auto& e = mons[j];
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (e[nu] == 0) continue;
      for (std::size_t mu = 0; mu < n; ++mu) {
        if (is_zero(a(mu, nu))) continue;
        Exponents f = e;
        --f[nu];
        ++f[mu];
        m(index.at(f), j) += a(mu, nu) * Rational(e[nu]);
      }
    }
  }
  return m;
}

DualPolynomial from_coefficients(const std::vector<std::string>& coords, const std::vector<Exponents>& mons,
                                 const Vec<Rational>& v) {
  DualPolynomial q(coords);
  for (std::size_t j = 0; j < mons.size(); ++j)
    if (!is_zero(v[j])) q += DualPolynomial::monomial(coords, mons[j], ExpPoly(v[j]));
  return q;
}

std::vector<std::string> ideal_names(const LieAlgebra& g, const RSubspace& a) {
  if (a.dim() == g.dim()) return g.names();
  return subalgebra(g, a).algebra.names();
}

Matrix<Rational> stack(const std::vector<Matrix<Rational>>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<Rational> m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
  return m;
}

}  // namespace

DualPolynomial derivation(const LieAlgebra& m, const Vec<Rational>& x, const DualPolynomial& q) {
  if (q.coords() != m.names()) throw CoordinateMismatch("derivation: coordinates do not match the algebra");
  return apply_action(coordinate_action(m, RSubspace::full(m.dim()), x), q);
}

DualPolynomial derivation(const LieAlgebra& g, const RSubspace& a, const Vec<Rational>& x, const DualPolynomial& q) {
  if (q.coords() != ideal_names(g, a)) throw CoordinateMismatch("derivation: coordinates do not match the ideal");
  return apply_action(coordinate_action(g, a, x), q);
}

std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned k) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned c = left + 1; c-- > 0;) {
      e[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<DualPolynomial> invariant_space(const LieAlgebra& m, unsigned degree_bound) {
  if (degree_bound < 1) throw PreconditionFailed("invariant_space needs degree_bound >= 1");
  std::vector<Matrix<Rational>> actions;
  for (std::size_t i = 0; i < m.dim(); ++i)
    actions.push_back(coordinate_action(m, RSubspace::full(m.dim()), m.basis_vector(i)));
  std::vector<DualPolynomial> out;
  for (unsigned k = 0; k <= degree_bound; ++k) {
    auto mons = monomials_of_degree(m.dim(), k);
    std::vector<Matrix<Rational>> blocks;
    for (const auto& a : actions) blocks.push_back(action_on_monomials(a, mons));
    auto ker = blocks.empty() ? Subspace<Rational>::full(mons.size()) : kernel(stack(blocks, mons.size()));
    for (const auto& v : ker.basis()) out.push_back(from_coefficients(m.names(), mons, v));
  }
  return out;
}

std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, const RSubspace& a, unsigned degree_bound) {
  if (!is_ideal(g, a)) throw NotIdeal("semi-invariants need an ideal");
  const auto names = ideal_names(g, a);
  const RSubspace gg = commutator_ideal(g);
  const Quotient ab = quotient(g, gg);

  std::vector<Matrix<Rational>> inner;
  for (const auto& x : gg.basis()) inner.push_back(coordinate_action(g, a, x));
  std::vector<Matrix<Rational>> outer;
  for (auto c : ab.complement) outer.push_back(coordinate_action(g, a, g.basis_vector(c)));

  std::vector<SemiInvariant> out;
  for (unsigned k = 0; k <= degree_bound; ++k) {
    auto mons = monomials_of_degree(a.dim(), k);
    const std::size_t n = mons.size();
    std::vector<Matrix<Rational>> blocks;
    for (const auto& m : inner) blocks.push_back(action_on_monomials(m, mons));
    RSubspace base = blocks.empty() ? RSubspace::full(n) : kernel(stack(blocks, n));
    if (base.dim() == 0) continue;

    struct Piece {
      RSubspace space;
      Vec<Rational> lambda;
    };
    std::vector<Piece> pieces{{base, {}}};
    for (std::size_t j = 0; j < outer.size(); ++j) {
      auto op = action_on_monomials(outer[j], mons);
      std::vector<Piece> next;
      for (const auto& p : pieces) {
        auto cols = p.space.matrix().transpose();
        auto r = restrict_operator(op, cols);
        auto ev = eigenvalues(complexify(r));
        if (!ev.complete)
          throw NonRationalSpectrum(g.names()[ab.complement[j]], "semi-invariant weights are not in Q(i)");
        for (const auto& [lambda, mult] : ev.roots) {
          if (!lambda.is_real())
            throw NonRationalSpectrum(g.names()[ab.complement[j]], "semi-invariant weight " + to_string(lambda) +
                                                                      " is not rational");
          auto shifted = r - Matrix<Rational>::identity(r.rows()) * lambda.re();
          auto e = kernel(shifted);
          std::vector<Vec<Rational>> vecs;
          for (const auto& c : e.basis()) vecs.push_back(cols.apply(c));
          Piece q{RSubspace(n, vecs), p.lambda};
          q.lambda.push_back(lambda.re());
          next.push_back(std::move(q));
        }
      }
      pieces = std::move(next);
    }
    for (const auto& p : pieces) {
      Vec<Rational> chi = zero_vec<Rational>(g.dim());
      for (std::size_t j = 0; j < p.lambda.size(); ++j)
        for (std::size_t i = 0; i < g.dim(); ++i) chi[i] += p.lambda[j] * ab.projection(j, i);
      for (const auto& v : p.space.basis()) out.push_back({from_coefficients(names, mons, v), chi});
    }
  }
  return out;
}

std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, unsigned degree_bound) {
  return semi_invariants(g, RSubspace::full(g.dim()), degree_bound);
}

// ---------------------------------------------------------------------------
// Orbit maps

namespace {

std::vector<ExpPoly> matched_components(const DualPolynomial& q, const OrbitMap& om) {
  if (om.basis.size() != om.components.size()) throw CoordinateMismatch("orbit map without coordinate names");
  std::vector<ExpPoly> values;
  for (const auto& c : q.coords()) {
    auto it = std::find(om.basis.begin(), om.basis.end(), c);
    if (it == om.basis.end()) throw CoordinateMismatch("orbit map has no coordinate " + c);
    values.push_back(om.components[static_cast<std::size_t>(it - om.basis.begin())]);
  }
  return values;
}

}  // namespace

bool vanish_on_orbit(const DualPolynomial& q, const OrbitMap& om) {
  if (q.is_zero()) return true;
  return q.substitute(matched_components(q, om)).is_zero();
}

std::vector<DualPolynomial> vanishing_polynomials(const OrbitMap& om, unsigned degree_bound) {
  if (om.basis.size() != om.components.size()) throw CoordinateMismatch("orbit map without coordinate names");
  std::vector<Exponents> mons;
  for (unsigned k = 0; k <= degree_bound; ++k) {
    auto m = monomials_of_degree(om.basis.size(), k);
    mons.insert(mons.end(), m.begin(), m.end());
  }
  std::vector<ExpPoly> images;
  std::map<TermKey, std::size_t> keys;
  for (const auto& e : mons) {
    images.push_back(DualPolynomial::monomial(om.basis, e).substitute(om.components));
    for (const auto& [k, c] : images.back().terms()) keys.emplace(k, keys.size());
  }
  Matrix<Rational> m(2 * keys.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j)
    for (const auto& [k, c] : images[j].terms()) {
      std::size_t r = keys.at(k);
      m(2 * r, j) = c.re();
      m(2 * r + 1, j) = c.im();
    }
  std::vector<DualPolynomial> out;
  auto ker = keys.empty() ? RSubspace::full(mons.size()) : kernel(m);
  for (const auto& v : ker.basis()) out.push_back(from_coefficients(om.basis, mons, v));
  return out;
}

OrbitMap restrict_orbit(const OrbitMap& om, const RSubspace& s, const std::vector<std::string>& names) {
  if (names.size() != s.dim()) throw DimensionMismatch("restrict_orbit: one name per basis vector");
  OrbitMap out;
  out.basis = names;
  out.params = om.params;
  out.components = restrict_components(om.components, s);
  return out;
}

}  // namespace orbitkit
