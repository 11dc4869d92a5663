#include "doctest.h"
#include "orbitkit/scalar.hpp"

using namespace orbitkit;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(*parse_rational("-6/4") == Rational(-3, 2));
  CHECK_FALSE(parse_rational("6/-4"));
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("-1.5") == Rational(-3, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
}

TEST_CASE("powers and exact roots") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(*exact_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK_FALSE(exact_root(Rational(2), 2));
}

TEST_CASE("gaussian field operations") {
  Gaussian a(Rational(1), Rational(2));
  Gaussian b(Rational(3), Rational(-1));
  CHECK(a * b == Gaussian(Rational(5), Rational(5)));
  CHECK((a / b) * b == a);
  CHECK(a.conj() * a == Gaussian(a.norm()));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK(to_string(Gaussian(Rational(1, 2), Rational(3, 4))) == "1/2+3/4i");
  CHECK(to_string(-Gaussian::i()) == "-i");
  CHECK(to_string(Gaussian(Rational(1), Rational(-1))) == "1-i");
  CHECK(to_string(Gaussian(Rational(0), Rational(2))) == "2i");
}
