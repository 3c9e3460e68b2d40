#include <catch2/catch_amalgamated.hpp>

#include "qhopf/linalg.hpp"

using namespace qhopf;

namespace {
Mat from_rows(std::size_t r, std::size_t c, std::vector<long> v) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(v[i * c + j]);
  return m;
}
}  // namespace

TEST_CASE("rank and rref pivots") {
  Mat m = from_rows(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
  CHECK(rank(m) == 2);
  Mat id = from_rows(2, 2, {1, 0, 0, 1});
  CHECK(rank(id) == 2);
}

TEST_CASE("nullspace is canonical and exact") {
  // x + 2y + 3z = 0, rows dependent
  Mat m = from_rows(2, 3, {1, 2, 3, 2, 4, 6});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  // basis vector per free column, unit at that column
  CHECK(ns[0][1] == Rational(1));
  CHECK(ns[0][2] == Rational(0));
  CHECK(ns[1][1] == Rational(0));
  CHECK(ns[1][2] == Rational(1));
  for (const auto& v : ns) {
    for (std::size_t i = 0; i < 2; ++i) {
      Rational acc;
      for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * v[j];
      CHECK(acc.is_zero());
    }
  }
  // deterministic: run twice, same output
  CHECK(nullspace(m) == ns);
}

TEST_CASE("solve distinguishes unique, none, many") {
  Mat a = from_rows(2, 2, {1, 1, 0, 1});
  auto s = solve(a, {Rational(3), Rational(2)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == Rational(1));
  CHECK((*s)[1] == Rational(2));

  Mat sing = from_rows(2, 2, {1, 1, 2, 2});
  CHECK(!solve(sing, {Rational(1), Rational(3)}).has_value());  // inconsistent
  CHECK(!solve(sing, {Rational(1), Rational(2)}).has_value());  // underdetermined
}

TEST_CASE("inverse") {
  Mat a = from_rows(2, 2, {2, 1, 1, 1});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Rational(1));
  CHECK(inv->at(0, 1) == Rational(-1));
  CHECK(inv->at(1, 0) == Rational(-1));
  CHECK(inv->at(1, 1) == Rational(2));
  Mat sing = from_rows(2, 2, {1, 2, 2, 4});
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("canonical_span and in_span") {
  std::vector<std::vector<Rational>> v1 = {{Rational(1), Rational(1), Rational(0)},
                                           {Rational(0), Rational(1), Rational(1)}};
  std::vector<std::vector<Rational>> v2 = {{Rational(1), Rational(2), Rational(1)},
                                           {Rational(2), Rational(3), Rational(1)}};
  CHECK(canonical_span(v1, 3) == canonical_span(v2, 3));
  auto rows = canonical_span(v1, 3);
  CHECK(in_span(rows, {Rational(3), Rational(4), Rational(1)}, 3));
  CHECK(!in_span(rows, {Rational(1), Rational(0), Rational(0)}, 3));
}
