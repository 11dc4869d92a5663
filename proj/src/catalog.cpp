#include "orbitkit/catalog.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

ExpPoly var(const std::string& v) { return ExpPoly::variable(v); }
ExpPoly ex(const std::string& v, long c) { return ExpPoly::exp(LinearForm::variable(v, Gaussian(c))); }

std::vector<FlowStep> basis_sequence(const LieAlgebra& g) {
  std::vector<FlowStep> seq;
  for (std::size_t i = 0; i < g.dim(); ++i) seq.push_back(FlowStep{{{g.basis_vector(i), "t_" + g.names()[i]}}});
  return seq;
}

Functional unit(const LieAlgebra& g, const std::string& name) {
  Functional f = zero_vec<Rational>(g.dim());
  f[*g.index_of(name)] = 1;
  return f;
}

CatalogEntry basic(const std::string& name, const std::string& description, LieAlgebra g, const std::string& ref,
                   RegularityReport::Verdict verdict, const std::string& reason) {
  CatalogEntry e;
  e.name = name;
  e.description = description;
  e.algebra = std::move(g);
  e.reference = unit(e.algebra, ref);
  e.symbolic_reference = symbolic(e.reference);
  e.sequence = basis_sequence(e.algebra);
  e.expected_verdict = verdict;
  e.expected_reason = reason;
  try {
    e.flag = ideal_flag(e.algebra);
  } catch (const Error&) {
    e.flag.clear();
  }
  return e;
}

CatalogEntry b5_entry() {
  using V = RegularityReport::Verdict;
  auto e = basic("b5", "five-dimensional exponential algebra with stabilizer ideal g49_0", algebras::b5(), "e3",
                 V::ConditionRFails, "condition (R) fails");
  const std::size_t n = 5;
  e.sequence = {FlowStep{{{unit_vec<Rational>(n, 0), "s"}}}, FlowStep{{{unit_vec<Rational>(n, 1), "t"}}},
                FlowStep{{{unit_vec<Rational>(n, 2), "x1"}}},
                FlowStep{{{unit_vec<Rational>(n, 3), "x2"}, {unit_vec<Rational>(n, 4), "x3"}}}};
  e.symbolic_reference = {ExpPoly(), var("f0"), ExpPoly(), ExpPoly(), ExpPoly(1)};
  e.invariant = parse_dual_polynomial(e.algebra.names(), "e0*e3 - e1*e2 - f0*e3");
  e.critical = [](const Functional& g) { return g.size() == 5 && g[4] == 0 && g[2] * g[3] != 0; };
  e.assumptions = {"f0 denotes the value of the reference functional on e0",
                   "the combined factor exp(x2 e2 + x3 e3) is used because e2 and e3 commute"};
  return e;
}

CatalogEntry g49_entry() {
  using V = RegularityReport::Verdict;
  auto e = basic("g49_0", "stabilizer ideal of b5: [e0,e1] = -e1, [e0,e2] = e2, [e1,e2] = e3", algebras::g49_0(),
                 "e3", V::PrimitiveStarRegular, "nilradical is a one-codimensional nilpotent ideal");
  e.symbolic_reference = {var("f0"), ExpPoly(), ExpPoly(), ExpPoly(1)};
  e.invariant = parse_dual_polynomial(e.algebra.names(), "e0*e3 - e1*e2 - f0*e3");
  e.representations = {{"dpi_s", "g49_0", reps::dpi_s(), ExpPoly()},
                       {"drho", "g49_0", reps::drho(), -(var("g1") * var("g2"))}};
  e.central = central_element_w(e.algebra);
  e.assumptions = {"f0 denotes the value of the reference functional on e0",
                   "dpi_s sends the dotted e2 to -exp(-s) xi so that it is a representation"};
  return e;
}

std::vector<CatalogEntry> build() {
  using V = RegularityReport::Verdict;
  std::vector<CatalogEntry> out;
  out.push_back(basic("abelian3", "abelian algebra of dimension 3", algebras::abelian(3), "e1", V::StarRegular,
                      "nilpotent"));
  for (auto [name, description, g] : {std::tuple{"heisenberg3", "Heisenberg algebra [e1,e2] = e3", algebras::heisenberg3()},
                                      std::tuple{"heisenberg3+R", "Heisenberg algebra plus a central line",
                                                 algebras::heisenberg3_plus_line()}}) {
    auto h = basic(name, description, g, "e3", V::StarRegular, "nilpotent");
    h.invariant = parse_dual_polynomial(h.algebra.names(), "e3 - 1");
    out.push_back(std::move(h));
  }
  out.push_back(basic("axb", "affine group algebra [a,b] = b", algebras::axb(), "b", V::StarRegular, "metabelian"));
  out.push_back(g49_entry());
  out.push_back(b5_entry());
  out.push_back(basic("e2-motion", "Euclidean motion algebra of the plane, not exponential", algebras::e2_motion(), "x",
                      V::Undetermined, "NotExponential"));
  return out;
}

}  // namespace

namespace reps {

Assignment dpi_s() {
  const DiffOp xi = DiffOp::multiplication(var(DiffOp::variable()));
  const DiffOp d = DiffOp::d();
  const ExpPoly es = ex("s", -1);
  return {DiffOp::multiplication(var("f0") + ExpPoly(Gaussian(Rational(0), Rational(-1, 2)))) + xi * d,
          d * ExpPoly(-1), xi * (-es), DiffOp::multiplication(es)};
}

Assignment dpi_s_printed() {
  auto a = dpi_s();
  a[2] = a[2] * ExpPoly(-1);
  return a;
}

Assignment drho() {
  const std::string& x = DiffOp::variable();
  return {DiffOp::d() * ExpPoly(-1), DiffOp::multiplication(ex(x, 1) * var("g1")),
          DiffOp::multiplication(ex(x, -1) * var("g2")), DiffOp()};
}

}  // namespace reps

UEAElement central_element_w(const LieAlgebra& m) {
  auto d = [&](std::size_t i) { return UEAElement::dotted(m, i); };
  UEAElement w = uea_mul(d(3), d(0));
  w -= (uea_mul(d(2), d(1)) + uea_mul(d(1), d(2))) * ExpPoly(Rational(1, 2));
  w -= d(3) * var("f0");
  return w;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  if (name.rfind("abelian", 0) == 0) {
    auto g = algebras::by_name(name);
    if (!g) return std::nullopt;
    return basic(name, "abelian algebra of dimension " + std::to_string(g->dim()), *g, g->names()[0],
                 RegularityReport::Verdict::StarRegular, "nilpotent");
  }
  return std::nullopt;
}

std::vector<ExpPoly> parse_symbolic_functional(const LieAlgebra& g, const std::string& text) {
  std::vector<ExpPoly> out(g.dim());
  std::stringstream ss(text);
  std::string item;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionFailed("functional entry '" + item + "' lacks '='");
    std::string key = trim(item.substr(0, eq));
    std::string value = trim(item.substr(eq + 1));
    auto idx = g.index_of(key);
    if (!idx) throw PreconditionFailed("unknown basis element '" + key + "'");
    if (auto q = parse_rational(value)) {
      out[*idx] = ExpPoly(*q);
      continue;
    }
    Rational coeff = 1;
    std::string name = value;
    auto star = value.find('*');
    if (star != std::string::npos) {
      auto q = parse_rational(trim(value.substr(0, star)));
      if (!q) throw PreconditionFailed("invalid coefficient in '" + item + "'");
      coeff = *q;
      name = trim(value.substr(star + 1));
    } else if (!name.empty() && name[0] == '-') {
      coeff = -1;
      name = trim(name.substr(1));
    }
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw PreconditionFailed("invalid value in functional entry '" + item + "'");
    out[*idx] = ExpPoly(coeff) * ExpPoly::variable(name);
  }
  return out;
}

}  // namespace orbitkit
