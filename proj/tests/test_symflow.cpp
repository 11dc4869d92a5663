#include <chrono>
#include <random>

#include "doctest.h"
#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/symflow.hpp"

using namespace orbitkit;
using Q = Rational;

namespace {

ExpPoly var(const std::string& v) { return ExpPoly::variable(v); }
ExpPoly ex(const std::string& form) { return ExpPoly::exp(parse_linear_form(form)); }

Q random_q(std::mt19937_64& rng, long bound = 5) {
  Q q(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound,
      1 + static_cast<long>(rng() % static_cast<std::uint64_t>(bound)));
  q.canonicalize();
  return q;
}

ExpPoly random_exppoly(std::mt19937_64& rng) {
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
    Gaussian c(random_q(rng), rng() % 4 == 0 ? random_q(rng) : Q(0));
    p += ExpPoly::term(c, mono, lin);
  }
  return p;
}

Vec<Q> random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec<Q> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_q(rng, 3));
  return v;
}

std::vector<FlowStep> b5_sequence() {
  const std::size_t n = 5;
  return {FlowStep{{{unit_vec<Q>(n, 0), "s"}}}, FlowStep{{{unit_vec<Q>(n, 1), "t"}}},
          FlowStep{{{unit_vec<Q>(n, 2), "x1"}}}, FlowStep{{{unit_vec<Q>(n, 3), "x2"}, {unit_vec<Q>(n, 4), "x3"}}}};
}

}  // namespace

TEST_CASE("exponential polynomial arithmetic examples") {
  auto a = ex("t") * var("x2");
  auto b = -(ex("-s") * ex("-t") * var("x1"));
  CHECK(a * b == -(ex("-s") * var("x1") * var("x2")));
  CHECK(a.d_dvar("t") == a);
  CHECK(ex("-s").substitute("s", ExpPoly(0)) == ExpPoly(1));
  CHECK(ex("t").substitute("t", var("u") + ExpPoly(Q(1, 2))) == ex("u + 1/2"));
  CHECK_THROWS_AS(ex("t").substitute("t", var("x") * var("y")), NonlinearExponentSubstitution);
  CHECK_THROWS_AS(ex("t").substitute("t", ex("s")), NonlinearExponentSubstitution);
  CHECK((var("x") * ex("2*t")).d_dvar("t") == ExpPoly(2) * var("x") * ex("2*t"));
  CHECK((var("t").pow(2) * ex("t")).d_dvar("t") == ExpPoly(2) * var("t") * ex("t") + var("t").pow(2) * ex("t"));
  CHECK(to_string(b) == "-x1*exp(-s - t)");
  CHECK(to_string(var("f0") - var("x1") * var("x2")) == "f0 - x1*x2");
  CHECK(to_string(ExpPoly(Gaussian(Q(0), Q(-1, 2)))) == "-1/2i");
}

TEST_CASE("exponential polynomials form a commutative ring") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 250; ++t) {
    auto a = random_exppoly(rng), b = random_exppoly(rng), c = random_exppoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ExpPoly());
    CHECK(a * ExpPoly(1) == a);
    CHECK(a.substitute({}) == a);
    // product rule
    CHECK((a * b).d_dvar("t") == a.d_dvar("t") * b + a * b.d_dvar("t"));
    auto ab = a * b;
    for (const auto& [k, coeff] : ab.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("one-parameter flows") {
  auto h3 = algebras::heisenberg3();
  CHECK(one_param_flow(h3, unit_vec<Q>(3, 2), "t") == Matrix<ExpPoly>::identity(3));
  auto nil = one_param_flow(h3, unit_vec<Q>(3, 0), "t");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(nil(i, j).exponent_variables().empty());

  auto b5 = algebras::b5();
  auto fd = one_param_flow(b5, unit_vec<Q>(5, 0), "s");
  CHECK(fd(4, 4) == ex("-s"));
  CHECK(fd(3, 3) == ex("-s"));
  CHECK(fd(2, 2) == ExpPoly(1));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(fd(i, j).is_zero());

  auto rot = one_param_flow(algebras::e2_motion(), unit_vec<Q>(3, 0), "t");
  CHECK(rot(1, 1) == (ExpPoly::exp(LinearForm::variable("t", Gaussian::i())) + ExpPoly::exp(LinearForm::variable("t", -Gaussian::i()))) * ExpPoly(Q(1, 2)));
}

TEST_CASE("flow group law and infinitesimal generator") {
  std::mt19937_64 rng(555);
  const std::vector<LieAlgebra> algs = {algebras::b5(), algebras::g49_0(), algebras::heisenberg3(),
                                        algebras::axb(), algebras::e2_motion()};
  for (int trial = 0; trial < 220; ++trial) {
    const auto& g = algs[rng() % algs.size()];
    auto x = random_vec(rng, g.dim());
    auto flow = one_param_flow(g, x, "t");
    auto lhs = substitute(flow, "t", var("t1")) * substitute(flow, "t", var("t2"));
    auto rhs = substitute(flow, "t", var("t1") + var("t2"));
    CHECK(lhs == rhs);
    CHECK(substitute(flow, "t", ExpPoly(0)) == Matrix<ExpPoly>::identity(g.dim()));
    auto gen = substitute(d_dvar(flow, "t"), "t", ExpPoly(0));
    CHECK(gen == to_exppoly(complexify(coadjoint_matrix(g, x))));
  }
}

TEST_CASE("b5 orbit map in coordinates of the second kind") {
  auto start = std::chrono::steady_clock::now();
  auto b5 = algebras::b5();
  std::vector<ExpPoly> f = {ExpPoly(0), var("f0"), ExpPoly(0), ExpPoly(0), ExpPoly(1)};
  auto om = orbit_map(b5, f, b5_sequence());
  CHECK(om.params == std::vector<std::string>{"s", "t", "x1", "x2", "x3"});
  CHECK(om.components[1] == var("f0") - var("x1") * var("x2"));
  CHECK(om.components[2] == ex("t") * var("x2"));
  CHECK(om.components[3] == -(ex("-s") * ex("-t") * var("x1")));
  CHECK(om.components[4] == ex("-s"));
  CHECK(om.components[0] == var("x3"));
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));

  auto at_zero = om.components;
  for (auto& c : at_zero)
    for (const auto& p : om.params) c = c.substitute(p, ExpPoly(0));
  CHECK(at_zero == f);

  CHECK(orbit_map(b5, f, {}).components == f);

  auto h3 = algebras::heisenberg3();
  auto hm = orbit_map(h3, {var("a"), var("b"), var("c")},
                      {FlowStep{{{unit_vec<Q>(3, 0), "x"}}}, FlowStep{{{unit_vec<Q>(3, 1), "y"}}}});
  for (const auto& c : hm.components) CHECK(c.exponent_variables().empty());

  CHECK_THROWS_AS(step_flow(b5, FlowStep{{{unit_vec<Q>(5, 2), "x1"}, {unit_vec<Q>(5, 3), "x2"}}}),
                  PreconditionFailed);
}

TEST_CASE("exact evaluation of orbit points") {
  auto b5 = algebras::b5();
  std::vector<ExpPoly> f = {ExpPoly(0), var("f0"), ExpPoly(0), ExpPoly(0), ExpPoly(1)};
  auto om = orbit_map(b5, f, b5_sequence());
  auto [values, exps] = parse_assignment("f0=5,x1=1,x2=2,x3=0,exp(t)=1,exp(-s)=1/4");
  CHECK(evaluate(om.components, values, exps) == Vec<Q>{Q(0), Q(3), Q(2), Q(-1, 4), Q(1, 4)});

  std::map<std::string, Q> zeros = {{"f0", Q(7)}, {"s", Q(0)}, {"t", Q(0)}, {"x1", Q(0)}, {"x2", Q(0)}, {"x3", Q(0)}};
  CHECK(evaluate(om.components, zeros, {}) == Vec<Q>{Q(0), Q(7), Q(0), Q(0), Q(1)});

  auto e = ex("2*t");
  CHECK(evaluate(e, {}, {{parse_linear_form("t"), Q(3)}}) == Q(9));
  CHECK(evaluate(e, {}, {{parse_linear_form("4*t"), Q(16)}}) == Q(4));
  CHECK_THROWS_AS(evaluate(e, {}, {{parse_linear_form("t"), Q(2)}, {parse_linear_form("2*t"), Q(3)}}),
                  InconsistentExponentialAssignment);
  CHECK_THROWS_AS(evaluate(e, {{"t", Q(0)}}, {{parse_linear_form("t"), Q(2)}}),
                  InconsistentExponentialAssignment);
  CHECK_THROWS_AS(evaluate(e, {}, {{parse_linear_form("t"), Q(-2)}}), InconsistentExponentialAssignment);
  CHECK_THROWS_AS(evaluate(e, {}, {}), PreconditionFailed);
}

TEST_CASE("condition (R) is constant along sampled orbits") {
  std::mt19937_64 rng(8080);
  const std::vector<LieAlgebra> algs = {algebras::b5(), algebras::g49_0(), algebras::axb(),
                                        algebras::heisenberg3()};
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = algs[rng() % algs.size()];
    auto f = random_functional(rng, g.dim());
    std::vector<FlowStep> seq;
    for (std::size_t i = 0; i < g.dim(); ++i) seq.push_back(FlowStep{{{g.basis_vector(i), "p" + std::to_string(i)}}});
    auto om = orbit_map(g, symbolic(f), seq);
    std::map<std::string, Q> values;
    ExpAssignment exps;
    std::set<std::string> in_exp, in_poly;
    for (const auto& c : om.components) {
      auto e = c.exponent_variables();
      auto p = c.polynomial_variables();
      in_exp.insert(e.begin(), e.end());
      in_poly.insert(p.begin(), p.end());
    }
    for (const auto& p : om.params) {
      if (in_exp.count(p) && !in_poly.count(p)) {
        exps.emplace_back(LinearForm::variable(p), Q(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5)));
      } else {
        values[p] = in_exp.count(p) ? Q(0) : random_q(rng);
      }
    }
    for (auto& [l, u] : exps) u.canonicalize();
    auto point = evaluate(om.components, values, exps);
    CHECK(condition_R_at(g, point).holds == condition_R_at(g, f).holds);
    ++checked;
  }
  CHECK(checked == 200);
}
