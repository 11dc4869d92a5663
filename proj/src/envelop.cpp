#include "orbitkit/envelop.hpp"

#include <algorithm>
#include <numeric>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

const ExpPoly& minus_i() {
  static const ExpPoly v(Gaussian(Rational(0), Rational(-1)));
  return v;
}

const ExpPoly& plus_i() {
  static const ExpPoly v(Gaussian::i());
  return v;
}

void require_same(const UEAElement& a, const UEAElement& b) {
  if (!(a.algebra() == b.algebra())) throw PreconditionFailed("enveloping algebra elements of different algebras");
}

std::string coefficient_prefix(const ExpPoly& c, bool& negative) {
  std::string s = to_string(c);
  negative = false;
  if (c.terms().size() == 1 && s.size() > 1 && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  } else if (c.terms().size() > 1) {
    s = "(" + s + ")";
  }
  return s;
}

std::string join_terms(const std::vector<std::pair<std::string, ExpPoly>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [body, c] : parts) {
    bool negative = false;
    std::string coef = coefficient_prefix(c, negative);
    std::string term;
    if (body.empty()) term = coef;
    else if (coef == "1") term = body;
    else term = coef + "*" + body;
    if (first) out += negative ? "-" + term : term;
    else out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

// e_i * m in normal form.
UEAElement left_mul(const LieAlgebra& g, std::size_t i, const PBWMonomial& m) {
  UEAElement out(g);
  std::size_t j = 0;
  while (j < m.size() && m[j] == 0) ++j;
  if (j >= i || j == m.size()) {
    PBWMonomial r = m;
    ++r[i];
    out.add_term(r, ExpPoly(1));
    return out;
  }
  // e_i e_j rest = e_j (e_i rest) + [e_i, e_j] rest
  PBWMonomial rest = m;
  --rest[j];
  const UEAElement moved = left_mul(g, i, rest);
  for (const auto& [mono, c] : moved.terms()) out += left_mul(g, j, mono) * c;
  auto br = g.bracket_basis(i, j);
  for (std::size_t k = 0; k < br.size(); ++k)
    if (!is_zero(br[k])) out += left_mul(g, k, rest) * ExpPoly(br[k]);
  return out;
}

// m * e_i in normal form.
UEAElement right_mul(const LieAlgebra& g, const PBWMonomial& m, std::size_t i) {
  UEAElement out(g);
  std::size_t j = m.size();
  while (j > 0 && m[j - 1] == 0) --j;
  if (j == 0 || j - 1 <= i) {
    PBWMonomial r = m;
    ++r[i];
    out.add_term(r, ExpPoly(1));
    return out;
  }
  --j;
  // rest e_j e_i = rest e_i e_j + rest [e_j, e_i]
  PBWMonomial rest = m;
  --rest[j];
  const UEAElement moved = right_mul(g, rest, i);
  for (const auto& [mono, c] : moved.terms()) out += right_mul(g, mono, j) * c;
  auto br = g.bracket_basis(j, i);
  for (std::size_t k = 0; k < br.size(); ++k)
    if (!is_zero(br[k])) out += right_mul(g, rest, k) * ExpPoly(br[k]);
  return out;
}

std::vector<std::size_t> word(const PBWMonomial& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) w.push_back(i);
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// UEAElement

UEAElement UEAElement::scalar(const LieAlgebra& g, const ExpPoly& c) {
  UEAElement u(g);
  u.add_term(PBWMonomial(g.dim(), 0), c);
  return u;
}

UEAElement UEAElement::generator(const LieAlgebra& g, std::size_t i) {
  if (i >= g.dim()) throw DimensionMismatch("generator index out of range");
  UEAElement u(g);
  PBWMonomial m(g.dim(), 0);
  m[i] = 1;
  u.add_term(m, ExpPoly(1));
  return u;
}

UEAElement UEAElement::dotted(const LieAlgebra& g, std::size_t i) { return generator(g, i) * minus_i(); }

std::size_t UEAElement::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

void UEAElement::add_term(const PBWMonomial& m, const ExpPoly& c) {
  if (m.size() != g_.dim()) throw DimensionMismatch("PBW monomial length differs from the algebra dimension");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement operator*(UEAElement a, const ExpPoly& c) {
  UEAElement out(a.g_);
  for (const auto& [m, x] : a.terms_) out.add_term(m, x * c);
  return out;
}

std::string to_string(const UEAElement& u) {
  std::vector<std::pair<std::string, ExpPoly>> parts;
  auto ordered = std::vector<std::pair<PBWMonomial, ExpPoly>>(u.terms().begin(), u.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    auto da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    auto db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [m, c] : ordered) {
    std::string body;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += u.algebra().names()[i];
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    parts.emplace_back(body, c);
  }
  return join_terms(parts);
}

UEAElement uea_mul(const UEAElement& u, const UEAElement& v) {
  require_same(u, v);
  const auto& g = u.algebra();
  UEAElement out(g);
  for (const auto& [mu, cu] : u.terms()) {
    UEAElement acc = v;
    auto w = word(mu);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      UEAElement next(g);
      for (const auto& [m, c] : acc.terms()) next += left_mul(g, *it, m) * c;
      acc = std::move(next);
    }
    out += acc * cu;
  }
  return out;
}

UEAElement uea_mul_right(const UEAElement& u, const UEAElement& v) {
  require_same(u, v);
  const auto& g = u.algebra();
  UEAElement out(g);
  for (const auto& [mv, cv] : v.terms()) {
    UEAElement acc = u;
    for (auto i : word(mv)) {
      UEAElement next(g);
      for (const auto& [m, c] : acc.terms()) next += right_mul(g, m, i) * c;
      acc = std::move(next);
    }
    out += acc * cv;
  }
  return out;
}

UEAElement uea_commutator(const UEAElement& u, const UEAElement& v) { return uea_mul(u, v) - uea_mul(v, u); }

std::vector<UEAElement> dotted_generators(const LieAlgebra& g) {
  std::vector<UEAElement> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(UEAElement::dotted(g, i));
  return out;
}

UEAElement symmetrize(const LieAlgebra& g, const DualPolynomial& q, const std::vector<UEAElement>& generators) {
  if (q.coords() != g.names()) throw CoordinateMismatch("symmetrize: coordinates do not match the algebra");
  if (generators.size() != g.dim()) throw DimensionMismatch("symmetrize: one generator per basis element");
  UEAElement out(g);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> w;
    Rational weight = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) {
        w.push_back(i);
        weight *= Rational(k + 1);
      }
    for (std::size_t k = 2; k <= w.size(); ++k) weight /= Rational(static_cast<long>(k));
    UEAElement sum(g);
    do {
      UEAElement prod = UEAElement::scalar(g, ExpPoly(1));
      for (auto i : w) prod = uea_mul(prod, generators[i]);
      sum += prod;
    } while (std::next_permutation(w.begin(), w.end()));
    out += sum * (c * ExpPoly(weight));
  }
  return out;
}

UEAElement symmetrize(const LieAlgebra& g, const DualPolynomial& q) {
  std::vector<UEAElement> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(UEAElement::generator(g, i));
  return symmetrize(g, q, gens);
}

Centrality is_central(const UEAElement& u) {
  const auto& g = u.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    auto c = uea_commutator(u, UEAElement::generator(g, i));
    if (!c.is_zero()) return {false, i, c};
  }
  return {true, 0, UEAElement(g)};
}

// ---------------------------------------------------------------------------
// DiffOp

const std::string& DiffOp::variable() {
  static const std::string xi = "xi";
  return xi;
}

DiffOp DiffOp::multiplication(const ExpPoly& a) {
  DiffOp op;
  op.add(0, a);
  return op;
}

DiffOp DiffOp::d() {
  DiffOp op;
  op.add(1, ExpPoly(1));
  return op;
}

void DiffOp::add(unsigned k, const ExpPoly& a) {
  if (a.is_zero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) c_.erase(it);
}

bool DiffOp::is_scalar() const {
  if (c_.empty()) return true;
  if (c_.size() != 1 || c_.begin()->first != 0) return false;
  return c_.begin()->second.variables().count(variable()) == 0;
}

ExpPoly DiffOp::scalar_value() const {
  if (!is_scalar()) throw PreconditionFailed("operator is not a scalar: " + to_string(*this));
  return c_.empty() ? ExpPoly() : c_.begin()->second;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, a] : o.c_) add(k, a);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, a] : o.c_) add(k, -a);
  return *this;
}

DiffOp operator*(DiffOp a, const ExpPoly& c) {
  DiffOp out;
  for (const auto& [k, x] : a.c_) out.add(k, x * c);
  return out;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  // (x D^m)(y D^n) = x sum_j C(m,j) (D^j y) D^(m-j+n), D^j y = (-i)^j y^(j)
  DiffOp out;
  for (const auto& [m, x] : a.c_)
    for (const auto& [n, y] : b.c_) {
      ExpPoly deriv = y;
      ExpPoly factor = 1;
      Rational binom = 1;
      for (unsigned j = 0; j <= m; ++j) {
        if (deriv.is_zero()) break;
        out.add(m - j + n, x * deriv * factor * ExpPoly(binom));
        deriv = deriv.d_dvar(DiffOp::variable());
        factor = factor * minus_i();
        binom = binom * Rational(static_cast<long>(m - j)) / Rational(static_cast<long>(j + 1));
      }
    }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

std::string to_string(const DiffOp& op) {
  std::vector<std::pair<std::string, ExpPoly>> parts;
  for (auto it = op.coeffs().rbegin(); it != op.coeffs().rend(); ++it) {
    std::string body;
    if (it->first == 1) body = "D";
    else if (it->first > 1) body = "D^" + std::to_string(it->first);
    parts.emplace_back(body, it->second);
  }
  return join_terms(parts);
}

// ---------------------------------------------------------------------------
// Representations

namespace {

DiffOp image(const Assignment& assign, const Vec<Rational>& x) {
  DiffOp out;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x[k])) out += assign[k] * (plus_i() * ExpPoly(x[k]));
  return out;
}

}  // namespace

RepCheck check_rep(const LieAlgebra& m, const Assignment& assign) {
  if (assign.size() != m.dim()) throw DimensionMismatch("check_rep: one operator per basis element");
  std::vector<DiffOp> t;
  for (const auto& a : assign) t.push_back(a * plus_i());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      DiffOp defect = commutator(t[i], t[j]) - image(assign, m.bracket_basis(i, j));
      if (!defect.is_zero()) return {false, i, j, defect};
    }
  return {};
}

DiffOp evaluate_uea(const Assignment& assign, const UEAElement& u) {
  const auto& g = u.algebra();
  auto rc = check_rep(g, assign);
  if (!rc.ok)
    throw RepCheckFailed("assignment is not a representation at [" + g.names()[rc.i] + ", " + g.names()[rc.j] +
                         "], defect " + to_string(rc.defect));
  std::vector<DiffOp> t;
  for (const auto& a : assign) t.push_back(a * plus_i());
  DiffOp out;
  for (const auto& [mono, c] : u.terms()) {
    DiffOp prod = DiffOp::multiplication(c);
    for (auto i : word(mono)) prod = prod * t[i];
    out += prod;
  }
  return out;
}

}  // namespace orbitkit
