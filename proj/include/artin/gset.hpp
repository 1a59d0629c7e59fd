#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/combinatorics.hpp"

namespace artin {

class CyclicBurnside;

// image[x] is where the permutation sends x.
using Permutation = std::vector<std::uint32_t>;

// Sets above this many elements are rejected with ResourceError.
inline constexpr std::size_t kMaxGSetSize = 10'000'000;

// A finite set {0, ..., size-1} with an action of a group given by generator
// permutations. The same generator list must be used for sets that are combined.
class FiniteGSet {
 public:
  explicit FiniteGSet(std::size_t size, std::vector<Permutation> generators = {},
                      std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& generator(std::size_t k) const { return generators_.at(k); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Disjoint union of cycles of the given lengths under one generator.
  static FiniteGSet cycles(std::span<const int> lengths);

 private:
  std::size_t size_;
  std::vector<Permutation> generators_;
  std::vector<std::string> labels_;
};

// Cartesian product with diagonal action. Element (a, b) has index a * |B| + b.
FiniteGSet product(const FiniteGSet& a, const FiniteGSet& b);

// Orbits in order of their least element, each with the induced action.
// Elements of an orbit are renumbered in increasing order of original index.
std::vector<FiniteGSet> orbits(const FiniteGSet& a);

// Orbit sizes in the same order as orbits().
std::vector<std::size_t> orbit_sizes(const FiniteGSet& a);

// Fixed points of the composite g_{w[0]} o g_{w[1]} o ... (rightmost letter applied first).
std::size_t fixed_points(const FiniteGSet& a, std::span<const std::size_t> word);

std::size_t fixed_points(const Permutation& p);

// Multisets of size k drawn from the elements, with the induced action.
FiniteGSet symmetric_power(const FiniteGSet& a, int k);

// The fixed presentation of S_n: transposition (0 1) and the n-cycle (0 1 ... n-1).
std::vector<Permutation> symmetric_group_generators(int n);

// Permutation of {0..n-1} with the given cycle type; cycles occupy consecutive blocks.
Permutation permutation_of_cycle_type(const Partition& lambda);

Partition cycle_type(const Permutation& p);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation power(const Permutation& p, int e);

// Tuples (S_t, ..., S_1) of pairwise disjoint subsets of {0..n-1} with |S_k| given by
// alpha.parts (in order), acted on elementwise by the listed permutations of {0..n-1}.
// Default generators present the full symmetric group.
FiniteGSet power_tuple_set(int n, const Composition& alpha);
FiniteGSet power_tuple_set(int n, const Composition& alpha, std::span<const Permutation> base_generators);

// Orbit-size multiset of a single-generator set as an element of B(Z^).
CyclicBurnside cyclic_decomposition(const FiniteGSet& a);

}  // namespace artin
