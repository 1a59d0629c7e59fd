#include <doctest.h>

#include <algorithm>
#include <set>

#include "artin/combinatorics.hpp"
#include "artin/gset.hpp"
#include "oracles.hpp"

using namespace artin;

TEST_CASE("compositions: small cases and order") {
  auto c1 = compositions(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].parts == std::vector<int>{1});

  auto c3 = compositions(3);
  std::vector<std::vector<int>> got;
  for (const auto& c : c3) got.push_back(c.parts);
  CHECK(got == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});

  CHECK(compositions(0).size() == 1);
  CHECK(compositions(0)[0].parts.empty());
  CHECK_THROWS_AS(compositions(-1), std::invalid_argument);
}

TEST_CASE("compositions match cut-pattern enumeration") {
  CHECK(compositions(8).size() == 128);
  for (int i = 1; i <= 12; ++i) {
    const auto comps = compositions(i);
    CHECK(comps.size() == (std::size_t{1} << (i - 1)));
    std::set<std::vector<int>> as_set;
    for (const auto& c : comps) {
      CHECK(c.weight() == i);
      as_set.insert(c.parts);
    }
    CHECK(as_set == oracle::compositions_by_cuts(i));
    CHECK(std::is_sorted(comps.begin(), comps.end(), std::greater<>()));
  }
}

TEST_CASE("sorting a composition gives a partition of the same weight") {
  for (int i = 1; i <= 8; ++i)
    for (const auto& c : compositions(i)) {
      const auto p = sorted_partition(c);
      CHECK(p.weight() == i);
      CHECK(std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>()));
    }
}

TEST_CASE("partitions") {
  REQUIRE(partitions(0).size() == 1);
  CHECK(partitions(0)[0].parts.empty());
  const auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front().parts == std::vector<int>{4});
  CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});
  CHECK(partitions(10).size() == 42);
  for (int n = 0; n <= 12; ++n) CHECK(partitions(n).size() == oracle::partition_count(n));
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("multinomial") {
  CHECK(multinomial(4, Composition{{2}}) == 6);
  CHECK(multinomial(4, Composition{{2, 1}}) == 12);
  CHECK(multinomial(7, Composition{}) == 1);
  CHECK_THROWS_AS(multinomial(3, Composition{{2, 2}}), std::invalid_argument);
  for (int n = 0; n <= 6; ++n)
    for (int w = 0; w <= n; ++w)
      for (const auto& c : compositions(w)) CHECK(multinomial(n, c) == oracle::disjoint_tuple_count(n, c.parts));
  // 21!/(1!)^21 does not fit in 64 bits.
  Composition ones{std::vector<int>(21, 1)};
  CHECK(multinomial(21, ones) == BigInt("51090942171709440000"));
}

TEST_CASE("power_cycle_type") {
  CHECK(power_cycle_type(Partition({4}), 2).parts == std::vector<int>{2, 2});
  CHECK(power_cycle_type(Partition({6}), 4).parts == std::vector<int>{3, 3});
  CHECK(power_cycle_type(Partition({3, 2, 2}), 1) == Partition({3, 2, 2}));
  CHECK_THROWS_AS(power_cycle_type(Partition({3}), 0), std::invalid_argument);
}

TEST_CASE("power_cycle_type agrees with explicit permutation powers") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions(n)) {
      const auto sigma = permutation_of_cycle_type(lambda);
      CHECK(cycle_type(sigma) == lambda);
      for (int e = 1; e <= 6; ++e) {
        CHECK(power_cycle_type(lambda, e).parts == oracle::cycle_lengths(oracle::apply_power(sigma, e)));
        CHECK(power_cycle_type(lambda, e) == cycle_type(power(sigma, e)));
      }
    }
}
