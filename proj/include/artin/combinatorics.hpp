#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/checked.hpp"

namespace artin {

// Ordered tuple of positive parts, e.g. the (i_t, ..., i_1) indexing tuple sets.
struct Composition {
  std::vector<int> parts;

  int weight() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Weakly decreasing list of positive parts. Doubles as a cycle type.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  // Sorts descending; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> p);

  int weight() const;
  std::size_t length() const { return parts.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All compositions of i in lexicographically descending order.
// compositions(0) is the single empty composition.
std::vector<Composition> compositions(int i);

// All partitions of n in lexicographically descending order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

// n! / (i_1! ... i_t! (n - weight)!)
BigInt multinomial(int n, const Composition& parts);

// Cycle type of the e-th power of a permutation of cycle type lambda.
Partition power_cycle_type(const Partition& lambda, int e);

// Least common multiple of the parts: the order of a permutation of this cycle type.
std::int64_t permutation_order(const Partition& lambda);

// Descending rearrangement of a composition.
Partition sorted_partition(const Composition& c);

// "(3,1)" style rendering; the empty tuple renders as "()".
std::string to_string(const Composition& c);
std::string to_string(const Partition& p);

}  // namespace artin
