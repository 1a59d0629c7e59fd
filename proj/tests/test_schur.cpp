#include <doctest.h>

#include <random>

#include "artin/gset.hpp"
#include "artin/schur.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

CyclicBurnside z(std::int64_t k, std::int64_t c = 1) { return CyclicBurnside::orbit(k, c); }

}  // namespace

TEST_CASE("mark matrix small cases") {
  const auto& m2 = mark_matrix(2);
  CHECK(m2.entry(m2.position(Partition({2})), m2.position(Partition({2}))) == 1);
  CHECK(m2.entry(m2.position(Partition({1, 1})), m2.position(Partition({2}))) == 0);

  const auto& m4 = mark_matrix(4);
  CHECK(m4.entry(m4.position(Partition({2, 2})), m4.position(Partition({2, 2}))) == 2);

  const auto& m3 = mark_matrix(3);
  const auto id = m3.position(Partition({1, 1, 1}));
  CHECK(m3.entry(0, id) == 1);
  CHECK(m3.entry(1, id) == 3);
  CHECK(m3.entry(2, id) == 6);
}

TEST_CASE("identity column holds multinomial cardinalities") {
  for (int n = 1; n <= 8; ++n) {
    const auto& m = mark_matrix(n);
    const auto id = m.index().size() - 1;
    for (std::size_t mu = 0; mu < m.index().size(); ++mu)
      CHECK(BigInt(m.entry(mu, id)) == multinomial(n, Composition{m.index()[mu].parts}));
  }
}

TEST_CASE("mark matrix matches brute-force fixed points") {
  for (int n = 1; n <= 5; ++n) {
    const auto& m = mark_matrix(n);
    for (std::size_t la = 0; la < m.index().size(); ++la) {
      const std::vector<Permutation> sigma{permutation_of_cycle_type(m.index()[la])};
      for (std::size_t mu = 0; mu < m.index().size(); ++mu) {
        const auto set = power_tuple_set(n, Composition{m.index()[mu].parts}, sigma);
        const auto engine = fixed_points(set, std::vector<std::size_t>{0});
        CHECK(static_cast<std::int64_t>(engine) == m.entry(mu, la));
        CHECK(oracle::fixed_tuples(sigma[0], m.index()[mu].parts) == engine);
      }
    }
  }
}

TEST_CASE("mark matrices are invertible up to the default bound") {
  for (int n = 1; n <= kDefaultSchurDegreeBound; ++n) CHECK_NOTHROW(mark_matrix(n));
  CHECK_THROWS_AS(mark_matrix(0), std::out_of_range);
  CHECK_THROWS_AS(mark_matrix(kDefaultSchurDegreeBound + 1), std::out_of_range);
}

TEST_CASE("non-Schur mark vectors are rejected") {
  // The regular-like vector (0, 1) at types ((2),(1,1)) is not a combination of P_mu.
  CHECK_THROWS_AS(SchurElement::from_marks(2, {0, 1}), std::domain_error);
  CHECK_THROWS_AS(SchurElement::from_marks(2, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("p_class") {
  for (int n = 1; n <= 6; ++n) CHECK(p_class(n, Composition{{n}}) == SchurElement::one(n));
  CHECK(p_class(4, Composition{{2, 1}}) == p_class(4, Composition{{1, 2}}));
  CHECK(p_class(4, Composition{{2, 1}}).marks() == p_class(4, Composition{{1, 2}}).marks());
  const auto natural = p_class(4, Composition{{1}});
  for (const auto& lambda : partitions(4)) {
    const auto fixed = std::count(lambda.parts.begin(), lambda.parts.end(), 1);
    CHECK(natural.mark_at(lambda) == fixed);
  }
  CHECK_THROWS_AS(p_class(3, Composition{{2, 2}}), std::invalid_argument);
}

TEST_CASE("Sch_n is closed under products") {
  // Ordered pairs of points split into equal and distinct pairs.
  for (int n = 2; n <= 7; ++n) {
    const auto s = p_class(n, Composition{{1}});
    CHECK(s * s == p_class(n, Composition{{1, 1}}) + s);
  }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto& parts = partitions(n);
    const auto a = p_class(n, Composition{parts[rng() % parts.size()].parts});
    const auto b = p_class(n, Composition{parts[rng() % parts.size()].parts});
    const auto prod = a * b;
    for (std::size_t k = 0; k < prod.marks().size(); ++k) CHECK(prod.marks()[k] == a.marks()[k] * b.marks()[k]);
    CHECK(SchurElement::from_basis(n, prod.basis()) == prod);
  }
}

TEST_CASE("rho") {
  for (int n = 1; n <= 6; ++n) {
    const auto r1 = rho(n, 1);
    CHECK(r1 == -p_class(n, Composition{{1}}));
    CHECK(r1.cardinality() == -n);
  }
  CHECK(rho(2, 2) == p_class(2, Composition{{1, 1}}) - p_class(2, Composition{{2}}));
  CHECK(restrict_to_cyclic(rho(3, 3), Partition({3})) == CyclicBurnside(-1));
  CHECK(to_string(rho(4, 1)) == "-[P_(3,1)]");
  CHECK_THROWS_AS(rho(3, 0), std::out_of_range);
  CHECK_THROWS_AS(rho(3, 4), std::out_of_range);
}

TEST_CASE("lambda_top") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(lambda_top(n, 0) == SchurElement::one(n));
    CHECK(lambda_top(n, 1) == p_class(n, Composition{{1}}));
    const auto top = lambda_top(n, n);
    for (const auto& lambda : partitions(n)) {
      const int sign = (n - static_cast<int>(lambda.length())) % 2 ? -1 : 1;
      CHECK(top.mark_at(lambda) == sign);
    }
  }
  const auto l2 = lambda_top(2, 2);
  CHECK(l2.mark_at(Partition({1, 1})) == 1);
  CHECK(l2.mark_at(Partition({2})) == -1);
}

TEST_CASE("lambda_top marks are exterior-power traces") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto l = lambda_top(n, i);
      for (const auto& lambda : partitions(n))
        CHECK(l.mark_at(lambda) == oracle::exterior_trace(oracle::perm_of_type(lambda.parts), i));
    }
}

TEST_CASE("rho equals signed lambda") {
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) CHECK(rho(n, i) == lambda_top(n, i).scaled(i % 2 ? -1 : 1));
}

TEST_CASE("restriction to cyclic subgroups") {
  const Partition four({4});
  CHECK(restrict_to_cyclic(p_class(4, Composition{{2}}), four) == z(4) + z(2));
  CHECK(restrict_to_cyclic(rho(4, 2), four) == z(4, 2) - z(2));
  for (int n = 1; n <= 5; ++n) {
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int i = 1; i <= n; ++i) {
      const auto r = rho(n, i);
      CHECK(restrict_to_cyclic(r, identity) == CyclicBurnside(r.cardinality()));
    }
  }
  // Ordered pairs (3-cycle point, 2-cycle point) and the reversed pairs form two orbits of
  // size lcm(3,2) = 6 > 5, which must be recovered.
  CHECK(restrict_to_cyclic(p_class(5, Composition{{1, 1}}), Partition({3, 2})).coeff(6) == 2);
  CHECK_THROWS_AS(restrict_to_cyclic(rho(4, 1), Partition({3})), std::invalid_argument);
}

TEST_CASE("restriction is a ring map and agrees with the G-set engine") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto& parts = partitions(n);
    const auto lambda = parts[rng() % parts.size()];
    const auto a = p_class(n, Composition{parts[rng() % parts.size()].parts}).scaled(static_cast<int>(rng() % 5) - 2);
    const auto b = rho(n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
    CHECK(restrict_to_cyclic(a + b, lambda) == restrict_to_cyclic(a, lambda) + restrict_to_cyclic(b, lambda));
    CHECK(restrict_to_cyclic(a * b, lambda) == restrict_to_cyclic(a, lambda) * restrict_to_cyclic(b, lambda));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& mu : partitions(n)) {
        const std::vector<Permutation> sigma{permutation_of_cycle_type(lambda)};
        CHECK(restrict_to_cyclic(p_class(n, Composition{mu.parts}), lambda) ==
              cyclic_decomposition(power_tuple_set(n, Composition{mu.parts}, sigma)));
      }
}

TEST_CASE("rendering") {
  const auto r = rho(2, 2);
  CHECK(to_string(r) == "-[P_(2)] + [P_(1,1)]");
  const auto j = to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["basis"]["(2)"] == -1);
  CHECK(j["marks"]["(1,1)"] == 1);
  CHECK(to_string(rho(2, 2) - rho(2, 2)) == "0");
}
