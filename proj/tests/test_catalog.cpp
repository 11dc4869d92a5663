#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/errors.hpp"

using namespace orbitkit;
using Q = Rational;

TEST_CASE("catalog names and lookup") {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"abelian3", "heisenberg3", "heisenberg3+R", "axb", "g49_0", "b5",
                                          "e2-motion"});
  CHECK(catalog_entry("b5")->algebra == algebras::b5());
  auto a5 = catalog_entry("abelian5");
  REQUIRE(a5);
  CHECK(a5->algebra.dim() == 5);
  CHECK_FALSE(catalog_entry("nonsense"));
}

TEST_CASE("expected verdicts are reproduced") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    auto r = regularity_report(e.algebra, {e.reference}, 1);
    CHECK(r.verdict == e.expected_verdict);
    CHECK(r.reason.rfind(e.expected_reason, 0) == 0);
    CHECK(verify(e.algebra, r));
  }
}

TEST_CASE("catalog invariants vanish on the catalog orbits") {
  for (const auto& e : catalog()) {
    if (!e.invariant) continue;
    CAPTURE(e.name);
    auto om = orbit_map(e.algebra, e.symbolic_reference, e.sequence);
    CHECK(vanish_on_orbit(*e.invariant, om));
    CHECK(om.components.size() == e.algebra.dim());
  }
}

TEST_CASE("catalog flags") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    if (e.name == "e2-motion") continue;
    REQUIRE(e.flag.size() == e.algebra.dim());
    for (std::size_t k = 0; k < e.flag.size(); ++k) {
      CHECK(e.flag[k].dim() == k + 1);
      CHECK(is_ideal(e.algebra, e.flag[k]));
    }
  }
}

TEST_CASE("catalog representations and central values") {
  for (const auto& e : catalog()) {
    for (const auto& rep : e.representations) {
      CAPTURE(rep.name);
      CHECK(rep.on == e.name);
      CHECK(check_rep(e.algebra, rep.assignment).ok);
      REQUIRE(e.central);
      CHECK(is_central(*e.central).central);
      auto v = evaluate_uea(rep.assignment, *e.central);
      REQUIRE(rep.central_value);
      if (rep.central_value->is_zero()) CHECK(v.is_zero());
      else CHECK((v.is_scalar() && v.scalar_value() == *rep.central_value));
    }
  }
}

TEST_CASE("b5 critical predicate") {
  auto e = *catalog_entry("b5");
  CHECK(e.critical(Functional{Q(0), Q(0), Q(1), Q(2), Q(0)}));
  CHECK_FALSE(e.critical(Functional{Q(0), Q(0), Q(1), Q(0), Q(0)}));
  CHECK_FALSE(e.critical(Functional{Q(0), Q(0), Q(1), Q(2), Q(1)}));
}

TEST_CASE("symbolic functionals") {
  auto g = algebras::b5();
  auto f = parse_symbolic_functional(g, "e3=1, e0=f0, e1=-c, e2=3/2*k");
  CHECK(f[4] == ExpPoly(1));
  CHECK(f[1] == ExpPoly::variable("f0"));
  CHECK(f[2] == ExpPoly(-1) * ExpPoly::variable("c"));
  CHECK(f[3] == ExpPoly(Q(3, 2)) * ExpPoly::variable("k"));
  CHECK(f[0].is_zero());
  CHECK_THROWS_AS(parse_symbolic_functional(g, "e9=1"), PreconditionFailed);
  CHECK_THROWS_AS(parse_symbolic_functional(g, "e3"), PreconditionFailed);
  CHECK_THROWS_AS(parse_symbolic_functional(g, "e3=1+"), PreconditionFailed);
}
