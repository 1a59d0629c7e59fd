#include <doctest.h>

#include <random>

#include "artin/cyclic_burnside.hpp"
#include "artin/series.hpp"

using namespace artin;

namespace {

using IntSeries = TruncatedSeries<std::int64_t>;
using ArtinSeries = TruncatedSeries<CyclicBurnside>;

CyclicBurnside random_element(std::mt19937& rng) {
  CyclicBurnside x;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t)
    x += CyclicBurnside::orbit(1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 7) - 3);
  return x;
}

}  // namespace

TEST_CASE("geometric series inverse") {
  IntSeries s(6);
  s[0] = 1;
  s[1] = 1;
  const auto inv = invert(s);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(inv[k] == (k % 2 ? -1 : 1));
  CHECK(invert(inv) == s);
  CHECK(s * inv == IntSeries::one(6));
}

TEST_CASE("inversion needs a unit constant term") {
  IntSeries s(3);
  s[0] = 2;
  CHECK_THROWS_AS(invert(s), std::domain_error);
  CHECK_THROWS_AS(divide(IntSeries::one(3), s), std::domain_error);
}

TEST_CASE("divide") {
  IntSeries a(4);
  a[0] = 1;
  a[1] = 1;
  CHECK(divide(a, IntSeries::one(4)) == a);
  CHECK(divide(a, a) == IntSeries::one(4));
}

TEST_CASE("random integer and Artin series invert exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    IntSeries s(n);
    ArtinSeries a(n);
    s[0] = 1;
    a[0] = CyclicBurnside(1);
    for (std::size_t k = 1; k <= n; ++k) {
      s[k] = static_cast<std::int64_t>(rng() % 11) - 5;
      a[k] = random_element(rng);
    }
    CHECK(s * invert(s) == IntSeries::one(n));
    CHECK(a * invert(a) == ArtinSeries::one(n));
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("lambda from sigma") {
  // One-point set: every symmetric power is a point.
  std::vector<std::int64_t> unit(6, 1);
  CHECK(lambda_from_sigma<std::int64_t>(unit) == std::vector<std::int64_t>{1, 1, 0, 0, 0, 0});

  // n trivial points: sigma^k = C(n+k-1, k), lambda^i = C(n, i).
  const std::int64_t n = 5;
  std::vector<std::int64_t> sigma{1};
  for (std::int64_t k = 1; k <= 7; ++k) sigma.push_back(sigma.back() * (n + k - 1) / k);
  const auto lambda = lambda_from_sigma<std::int64_t>(sigma);
  std::int64_t binom = 1;
  for (std::int64_t i = 0; i <= 7; ++i) {
    CHECK(lambda[static_cast<std::size_t>(i)] == binom);
    binom = binom * (n - i) / (i + 1);
  }

  // sigma([Z/2]) = 1, [Z/2], 1 + [Z/2], ...
  const auto z2 = CyclicBurnside::orbit(2);
  std::vector<CyclicBurnside> s2{CyclicBurnside(1), z2, CyclicBurnside(1) + z2};
  const auto l2 = lambda_from_sigma<CyclicBurnside>(s2);
  CHECK(l2[1] == z2);
  CHECK(l2[2] == z2 - CyclicBurnside(1));

  CHECK_THROWS_AS(lambda_from_sigma<std::int64_t>(std::vector<std::int64_t>{2, 1}), std::domain_error);
}

TEST_CASE("sigma/lambda recursions are mutually inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<CyclicBurnside> sigma{CyclicBurnside(1)};
    for (int k = 1; k <= 6; ++k) sigma.push_back(random_element(rng));
    const auto lambda = lambda_from_sigma<CyclicBurnside>(sigma);
    CHECK(sigma_from_lambda<CyclicBurnside>(lambda) == sigma);
  }
}

TEST_CASE("dividing out a trivial point") {
  // S = [Z/3] + 1: lambda_t(S) / lambda_t(1) is lambda_t([Z/3]).
  const auto z3 = CyclicBurnside::orbit(3);
  const auto with_point = lambda_series(z3 + CyclicBurnside(1), 4);
  const auto without = lambda_series(z3, 4);
  ArtinSeries num(4, with_point);
  ArtinSeries den(4);
  den[0] = CyclicBurnside(1);
  den[1] = CyclicBurnside(1);
  CHECK(divide(num, den).coeffs() == without);
}
