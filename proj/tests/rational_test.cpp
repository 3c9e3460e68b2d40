#include <catch2/catch_amalgamated.hpp>

#include "qhopf/rational.hpp"

using qhopf::Rational;

TEST_CASE("construction and canonical form") {
  CHECK(Rational().is_zero());
  CHECK(Rational(1).is_one());
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("0") == Rational());
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("/2"));
  CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("field operations") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS(Rational().inverse());

  // field axioms on a small sample
  std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1), Rational(2, 3),
                              Rational(-5, 7), Rational(9, 4)};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (const auto& z : xs) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
      if (!y.is_zero()) CHECK(x / y * y == x);
    }
}

TEST_CASE("exactness survives mixing") {
  // 1/3 accumulated many times stays exact
  Rational s;
  for (int i = 0; i < 300; ++i) s += Rational(1, 3);
  CHECK(s == Rational(100));
  Rational p(1);
  for (int i = 0; i < 20; ++i) p *= Rational(2, 3);
  CHECK(p == Rational(1048576, 3486784401L));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(!(Rational(2, 4) < Rational(1, 2)));
}
