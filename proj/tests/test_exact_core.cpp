#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordercone/json_io.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/rational.hpp"
#include "ordercone/rng.hpp"

using namespace ordercone;

TEST_CASE("rational formatting and parsing") {
  CHECK(format_rational(Rational(3, 6)) == "1/2");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Rational q(Integer(6), Integer(-8));
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 4);
  q *= Rational(4, 3);
  CHECK(q == Rational(-1));
}

TEST_CASE("solve_linear identity case") {
  const auto x = solve_linear(RMatrix::identity(2), RVector{3, Rational(-1, 2)});
  REQUIRE(x.has_value());
  CHECK(*x == RVector{3, Rational(-1, 2)});
}

TEST_CASE("solve_linear inconsistent rows") {
  const RMatrix a{{1, 1}, {2, 2}};
  CHECK_FALSE(solve_linear(a, RVector{1, 3}).has_value());
}

TEST_CASE("solve_linear diagonal solve") {
  const RMatrix a{{2, 0}, {0, 4}};
  const auto x = solve_linear(a, RVector{1, 1});
  REQUIRE(x.has_value());
  CHECK(*x == RVector{Rational(1, 2), Rational(1, 4)});
}

TEST_CASE("solve_linear rejects dimension mismatch") {
  CHECK_THROWS_AS(solve_linear(RMatrix::identity(2), RVector{1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(RMatrix::identity(3)).empty());

  const auto k1 = kernel_basis(RMatrix{{1, 1}});
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0] == -k1[0][1]);
  CHECK_FALSE(k1[0].is_zero());

  const auto k2 = kernel_basis(RMatrix(2, 2));
  REQUIRE(k2.size() == 2);
  CHECK(rank_of_vectors(k2) == 2);
}

TEST_CASE("rank") {
  CHECK(rank(RMatrix::identity(4)) == 4);
  CHECK(rank(RMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RMatrix(3, 3)) == 0);
  CHECK(rank(RMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}) == 1);
}

TEST_CASE("determinant and inverse") {
  const RMatrix m{{1, 1}, {0, 1}};
  CHECK(determinant(m) == 1);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == RMatrix::identity(2));
  CHECK_FALSE(inverse(RMatrix{{1, 2}, {2, 4}}).has_value());
}

namespace {

RMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  RationalSampler s(seed);
  RMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = s.draw();
  return m;
}

}  // namespace

TEST_CASE("re-multiplication of every solve_linear success") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 shape(seed * 7919 + 1);
    const std::size_t r = 1 + shape.below(5);
    const std::size_t c = 1 + shape.below(5);
    const RMatrix a = random_matrix(r, c, seed);
    RationalSampler s(seed ^ 0xabcdef);
    RVector b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = s.draw();
    const auto x = solve_linear(a, b);
    if (!x) continue;
    CHECK(a * *x == b);
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 shape(seed * 104729 + 3);
    const std::size_t r = 1 + shape.below(5);
    const std::size_t c = 1 + shape.below(5);
    const RMatrix a = random_matrix(r, c, seed + 1000);
    CHECK(rank(a) + kernel_basis(a).size() == c);
    CHECK(rank(a) == rank(a.transposed()));
  }
}

TEST_CASE("column_space_basis spans and has full rank") {
  const RMatrix a{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  const auto basis = column_space_basis(a);
  CHECK(basis.size() == rank(a));
  CHECK(rank_of_vectors(basis) == basis.size());
}

TEST_CASE("normalization helpers") {
  CHECK(normalize_ray(RVector{Rational(1, 2), Rational(3, 2)}) == RVector{1, 3});
  CHECK(normalize_ray(RVector{-2, 4}) == RVector{-1, 2});
  CHECK(normalize_line(RVector{-2, 4}) == RVector{1, -2});
  CHECK(normalize_ray(RVector{0, 0}) == RVector{0, 0});
}

TEST_CASE("results are reproducible bit for bit") {
  const RMatrix a = random_matrix(4, 4, 42);
  RationalSampler s(43);
  RVector b(4);
  for (std::size_t i = 0; i < 4; ++i) b[i] = s.draw();
  const auto x1 = solve_linear(a, b);
  const auto x2 = solve_linear(a, b);
  REQUIRE(x1.has_value());
  CHECK(canonical_dump(to_json(*x1)) == canonical_dump(to_json(*x2)));
}
