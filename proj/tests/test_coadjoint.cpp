#include <random>

#include "doctest.h"
#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/coadjoint.hpp"

using namespace orbitkit;
using Q = Rational;

namespace {

RSubspace span(std::size_t n, std::initializer_list<std::size_t> idx) { return RSubspace::coordinate(n, idx); }

Functional fn(const LieAlgebra& g, const std::string& s) { return parse_functional(g, s); }

const std::vector<LieAlgebra>& solvable_catalog() {
  static const std::vector<LieAlgebra> v = {algebras::abelian(3), algebras::heisenberg3(),
                                            algebras::heisenberg3_plus_line(), algebras::axb(),
                                            algebras::g49_0(), algebras::b5()};
  return v;
}

}  // namespace

TEST_CASE("form matrix and stabilizer") {
  auto b5 = algebras::b5();
  auto f = fn(b5, "e3=1");
  auto bf = form_matrix(b5, f);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Q expected = 0;
      if (i == 0 && j == 4) expected = 1;
      if (i == 4 && j == 0) expected = -1;
      if (i == 2 && j == 3) expected = 1;
      if (i == 3 && j == 2) expected = -1;
      CHECK(bf(i, j) == expected);
    }
  CHECK(rank(bf) == 4);
  CHECK(stabilizer(b5, f) == span(5, {1}));
  CHECK(stabilizer(b5, fn(b5, "e3=1,d=3,e0=-2/3")) == span(5, {1}));
  CHECK(form_matrix(algebras::abelian(3), fn(algebras::abelian(3), "e1=2")).is_zero_matrix());
  CHECK(stabilizer(algebras::abelian(3), fn(algebras::abelian(3), "e1=2")) == RSubspace::full(3));
  auto h3 = algebras::heisenberg3();
  CHECK(rank(form_matrix(h3, fn(h3, "e3=1"))) == 2);
  CHECK(stabilizer(h3, fn(h3, "e3=1")) == span(3, {2}));
}

TEST_CASE("stabilizer ideal and mtilde") {
  auto b5 = algebras::b5();
  auto n = nilradical(b5);
  CHECK(stabilizer_ideal(b5, fn(b5, ""), n) == RSubspace::full(5));
  CHECK(stabilizer_ideal(b5, fn(b5, "e3=1"), n) == span(5, {1, 2, 3, 4}));
  CHECK_THROWS_AS(stabilizer_ideal(b5, fn(b5, "e3=1"), span(5, {3, 4})), NotCoabelianIdeal);
  auto h3 = algebras::heisenberg3();
  CHECK(stabilizer_ideal(h3, fn(h3, "e3=5"), nilradical(h3)) == RSubspace::full(3));

  CHECK(mtilde(b5, RSubspace::full(5)) == RSubspace::full(5));
  CHECK(mtilde(b5, span(5, {1, 2, 3, 4})) == span(5, {1, 2, 3, 4}));
  CHECK(mtilde(b5, n) == span(5, {2, 3, 4}));
}

TEST_CASE("condition (R) at a functional") {
  auto b5 = algebras::b5();
  auto c = condition_R_at(b5, fn(b5, "e3=1"));
  CHECK_FALSE(c.holds);
  CHECK(c.m == span(5, {1, 2, 3, 4}));
  CHECK(c.m_inf == span(5, {2, 3, 4}));
  CHECK(c.values == Vec<Q>{Q(0), Q(0), Q(1)});
  CHECK(verify(b5, c));
  auto tampered = c;
  tampered.values[2] = 2;
  CHECK_FALSE(verify(b5, tampered));

  auto h3 = algebras::heisenberg3();
  CHECK(condition_R_at(h3, fn(h3, "e3=1,e1=4")).holds);

  // axb at a generic f is already in general position; its stabilizer ideal is abelian
  auto axb = algebras::axb();
  auto red = reduce_to_general_position(axb, fn(axb, "a=2,b=3"));
  CHECK(red.ideal.dim() == 0);
  CHECK(condition_R_at(red.quotient.algebra, red.f).holds);
}

TEST_CASE("largest ideal in the kernel") {
  auto b5 = algebras::b5();
  CHECK(largest_ideal_in_kernel(b5, fn(b5, "")) == RSubspace::full(5));
  CHECK(largest_ideal_in_kernel(b5, fn(b5, "e3=1,d=7,e0=1/2")).dim() == 0);
  auto h3 = algebras::heisenberg3();
  CHECK(largest_ideal_in_kernel(h3, fn(h3, "e1=1")) == span(3, {1, 2}));
  CHECK(largest_ideal_in_kernel(h3, fn(h3, "e3=1")).dim() == 0);
}

TEST_CASE("largest ideal in the kernel contains random ideals inside ker f") {
  std::mt19937_64 rng(99);
  int tested = 0;
  for (int t = 0; t < 240; ++t) {
    const auto& g = solvable_catalog()[rng() % solvable_catalog().size()];
    auto flag = ideal_flag(g);
    // a random ideal: a flag term plus a central vector
    RSubspace ideal = flag[rng() % flag.size()];
    auto z = center(g);
    if (z.dim() > 0) ideal = sum(ideal, RSubspace(g.dim(), {z.basis()[rng() % z.dim()]}));
    REQUIRE(is_ideal(g, ideal));
    // f vanishing on the ideal
    auto ann = ideal.annihilator();
    Functional f = zero_vec<Q>(g.dim());
    for (const auto& a : ann.basis()) f = add(f, scale(a, Q(static_cast<long>(rng() % 7) - 3)));
    auto big = largest_ideal_in_kernel(g, f);
    CHECK(is_ideal(g, big));
    for (const auto& b : big.basis()) CHECK(is_zero(dot(f, b)));
    CHECK(ideal.is_subset_of(big));
    ++tested;
  }
  CHECK(tested >= 200);
}

TEST_CASE("stabilizers have even codimension and stabilizer ideals are ideals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 240; ++t) {
    const auto& g = solvable_catalog()[rng() % solvable_catalog().size()];
    auto f = random_functional(rng, g.dim());
    auto bf = form_matrix(g, f);
    CHECK(bf.transpose() == bf * Q(-1));
    auto s = stabilizer(g, f);
    CHECK((g.dim() - s.dim()) % 2 == 0);
    auto m = stabilizer_ideal(g, f, nilradical(g));
    CHECK(is_ideal(g, m));
    auto mt = mtilde(g, m);
    CHECK(m.is_subset_of(mt));
    auto view = subalgebra(g, mt);
    auto lim = descending_central_series(view.algebra, RSubspace::full(view.algebra.dim())).limit;
    CHECK(is_nilpotent(quotient(view.algebra, lim).algebra));
  }
}

TEST_CASE("Vergne polarizations") {
  auto m = algebras::g49_0();
  std::vector<RSubspace> flag = {span(4, {3}), span(4, {2, 3}), span(4, {1, 2, 3}), RSubspace::full(4)};
  auto f = fn(m, "e3=1");
  auto p = vergne_polarization(m, flag, f);
  CHECK(p == span(4, {0, 2, 3}));
  CHECK(vergne_polarization(m, flag, fn(m, "e3=1,e0=5/2")) == span(4, {0, 2, 3}));
  auto rep = check_polarization(m, f, p);
  CHECK(rep.certified());

  auto h3 = algebras::heisenberg3();
  CHECK(vergne_polarization(h3, {span(3, {2}), span(3, {1, 2}), RSubspace::full(3)}, fn(h3, "e3=1")) ==
        span(3, {1, 2}));
  auto a3 = algebras::abelian(3);
  CHECK(vergne_polarization(a3, {span(3, {0}), span(3, {0, 1}), RSubspace::full(3)}, fn(a3, "e2=1")) ==
        RSubspace::full(3));

  CHECK_THROWS_AS(vergne_polarization(m, {span(4, {0}), span(4, {0, 1}), span(4, {0, 1, 2}), RSubspace::full(4)}, f),
                  FlagInvalid);
  CHECK_THROWS_AS(vergne_polarization(m, {span(4, {3}), span(4, {2, 3})}, f), FlagInvalid);

  // critical g: n is a polarization
  auto crit = fn(m, "e1=1,e2=2");
  CHECK(check_polarization(m, crit, span(4, {1, 2, 3})).certified());
  auto whole = check_polarization(h3, fn(h3, "e3=1"), RSubspace::full(3));
  CHECK_FALSE(whole.is_isotropic);

  // every automatically generated flag gives a certified polarization
  for (const auto& g : solvable_catalog()) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
      auto fr = random_functional(rng, g.dim());
      auto pr = check_polarization(g, fr, vergne_polarization(g, ideal_flag(g), fr));
      CHECK(pr.is_subalgebra);
      CHECK(pr.is_isotropic);
      CHECK(pr.dimension_ok);
      CHECK(pr.contains_stabilizer);
    }
  }
}

TEST_CASE("combined polarizations") {
  auto m = algebras::g49_0();
  auto crit = fn(m, "e1=1,e2=2");
  auto n = span(4, {1, 2, 3});
  // the stabilizer of a critical g lies inside n, so g_g + n is not all of g
  CHECK(stabilizer(m, crit).is_subset_of(n));
  CHECK_THROWS_AS(combine_polarization(m, crit, n, n), PreconditionFailed);
  auto whole = combine_polarization(m, crit, RSubspace::full(4), n);
  CHECK(whole.certified());
  CHECK(whole.p == n);

  auto f = fn(m, "e3=1");
  auto p0 = span(4, {0, 2, 3});
  CHECK(combine_polarization(m, f, RSubspace::full(4), p0).p == p0);

  auto b5 = algebras::b5();
  CHECK_THROWS_AS(combine_polarization(b5, fn(b5, "e3=1"), nilradical(b5), nilradical(b5)), PreconditionFailed);
}

TEST_CASE("centers of the nilradical and the stabilizer ideal") {
  auto b5 = algebras::b5();
  auto r = remark_invariants(b5, fn(b5, "e3=1"));
  CHECK(r.pass());
  CHECK(r.center_n == span(5, {4}));
  CHECK(r.center_m == span(5, {4}));

  auto h3 = algebras::heisenberg3();
  CHECK(remark_invariants(h3, fn(h3, "e3=1,e1=2")).pass());

  // on h3 + R every f kills a central line, so pass to the quotient first
  auto hr = algebras::heisenberg3_plus_line();
  auto f = fn(hr, "e1=1/2,e2=-3,e3=2,z=5");
  CHECK_THROWS_AS(remark_invariants(hr, f), NotGeneralPosition);
  auto red = reduce_to_general_position(hr, f);
  CHECK(red.ideal.dim() == 1);
  CHECK(remark_invariants(red.quotient.algebra, red.f).pass());
}

TEST_CASE("regularity cascade") {
  auto h3 = regularity_report(algebras::heisenberg3(), {}, 1);
  CHECK(h3.verdict == RegularityReport::Verdict::StarRegular);
  CHECK(h3.branches.front() == "nilpotent");

  auto axb = regularity_report(algebras::axb(), {}, 1);
  CHECK(axb.verdict == RegularityReport::Verdict::StarRegular);
  CHECK(axb.branches == std::vector<std::string>{"metabelian", "codimension-one nilradical"});

  auto g49 = regularity_report(algebras::g49_0(), {}, 1);
  CHECK(g49.verdict == RegularityReport::Verdict::PrimitiveStarRegular);

  auto b5 = algebras::b5();
  auto r = regularity_report(b5, {fn(b5, "e3=1")}, 1);
  CHECK(r.verdict == RegularityReport::Verdict::ConditionRFails);
  REQUIRE(r.certificate);
  CHECK(r.certificate->f == fn(b5, "e3=1"));
  CHECK(r.certificate->m_inf == span(5, {2, 3, 4}));
  CHECK(verify(b5, r));

  auto e2 = regularity_report(algebras::e2_motion(), {}, 1);
  CHECK(e2.verdict == RegularityReport::Verdict::Undetermined);
  CHECK(e2.reason == "NotExponential");
}

TEST_CASE("regularity reports re-verify and are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    for (const auto& g : solvable_catalog()) {
      auto r = regularity_report(g, {}, seed);
      CHECK(verify(g, r));
      auto again = regularity_report(g, {}, seed);
      CHECK(again.verdict == r.verdict);
      CHECK(again.certificate.has_value() == r.certificate.has_value());
      if (r.certificate) CHECK(again.certificate->f == r.certificate->f);
    }
}
