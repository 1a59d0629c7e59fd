#include "artin/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "artin/cyclic_burnside.hpp"

namespace artin {

namespace {

void guard_size(std::size_t size) {
  if (size > kMaxGSetSize)
    throw ResourceError("G-set of " + std::to_string(size) + " elements exceeds the limit of " +
                        std::to_string(kMaxGSetSize));
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Smallest root wins so the representative of each orbit is its least element.
std::vector<std::size_t> orbit_roots(const FiniteGSet& a) {
  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : a.generators()) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      std::size_t rx = find_root(parent, x);
      std::size_t ry = find_root(parent, g[x]);
      if (rx == ry) continue;
      if (ry < rx) std::swap(rx, ry);
      parent[ry] = rx;
    }
  }
  for (std::size_t x = 0; x < a.size(); ++x) parent[x] = find_root(parent, x);
  return parent;
}

}  // namespace

FiniteGSet::FiniteGSet(std::size_t size, std::vector<Permutation> generators, std::vector<std::string> labels)
    : size_(size), generators_(std::move(generators)), labels_(std::move(labels)) {
  guard_size(size_);
  if (!labels_.empty() && labels_.size() != size_) throw std::invalid_argument("FiniteGSet: label count mismatch");
  std::vector<char> seen(size_);
  for (const auto& g : generators_) {
    if (g.size() != size_) throw std::invalid_argument("FiniteGSet: generator has wrong length");
    std::fill(seen.begin(), seen.end(), 0);
    for (auto img : g) {
      if (img >= size_ || seen[img]) throw std::invalid_argument("FiniteGSet: generator is not a bijection");
      seen[img] = 1;
    }
  }
}

FiniteGSet FiniteGSet::cycles(std::span<const int> lengths) {
  std::size_t total = 0;
  for (int len : lengths) {
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
    total += static_cast<std::size_t>(len);
  }
  guard_size(total);
  Permutation g(total);
  std::size_t start = 0;
  for (int len : lengths) {
    for (int k = 0; k < len; ++k) g[start + k] = static_cast<std::uint32_t>(start + (k + 1) % len);
    start += static_cast<std::size_t>(len);
  }
  return FiniteGSet(total, {std::move(g)});
}

FiniteGSet product(const FiniteGSet& a, const FiniteGSet& b) {
  if (a.generator_count() != b.generator_count())
    throw std::invalid_argument("product: generator count mismatch");
  if (a.size() != 0 && b.size() > kMaxGSetSize / a.size()) guard_size(kMaxGSetSize + 1);
  const std::size_t m = b.size();
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < a.generator_count(); ++k) {
    const auto& ga = a.generator(k);
    const auto& gb = b.generator(k);
    Permutation g(a.size() * m);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < m; ++y) g[x * m + y] = static_cast<std::uint32_t>(ga[x] * m + gb[y]);
    gens.push_back(std::move(g));
  }
  return FiniteGSet(a.size() * m, std::move(gens));
}

std::vector<FiniteGSet> orbits(const FiniteGSet& a) {
  const auto roots = orbit_roots(a);
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t x = 0; x < a.size(); ++x) members[roots[x]].push_back(x);

  std::vector<FiniteGSet> out;
  std::vector<std::uint32_t> local(a.size());
  for (const auto& [root, elems] : members) {
    for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<std::uint32_t>(k);
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) {
      Permutation h(elems.size());
      for (std::size_t k = 0; k < elems.size(); ++k) h[k] = local[g[elems[k]]];
      gens.push_back(std::move(h));
    }
    std::vector<std::string> labels;
    if (!a.labels().empty())
      for (auto x : elems) labels.push_back(a.labels()[x]);
    out.emplace_back(elems.size(), std::move(gens), std::move(labels));
  }
  return out;
}

std::vector<std::size_t> orbit_sizes(const FiniteGSet& a) {
  const auto roots = orbit_roots(a);
  std::map<std::size_t, std::size_t> counts;
  for (auto r : roots) ++counts[r];
  std::vector<std::size_t> out;
  for (const auto& [root, c] : counts) out.push_back(c);
  return out;
}

std::size_t fixed_points(const FiniteGSet& a, std::span<const std::size_t> word) {
  for (auto letter : word)
    if (letter >= a.generator_count()) throw std::out_of_range("fixed_points: word letter out of range");
  std::size_t count = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::size_t y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = a.generator(*it)[y];
    if (y == x) ++count;
  }
  return count;
}

std::size_t fixed_points(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] == x) ++count;
  return count;
}

FiniteGSet symmetric_power(const FiniteGSet& a, int k) {
  if (k < 0) throw std::invalid_argument("symmetric_power: negative exponent");
  const std::size_t m = a.size();
  if (k == 0) return FiniteGSet(1, std::vector<Permutation>(a.generator_count(), Permutation{0}));

  // Multisets are nondecreasing sequences; index them through an ordered map.
  // Count C(m+k-1, k) up front to honour the size guard before enumerating.
  BigInt count = 1;
  for (int j = 1; j <= k; ++j) count = count * (m + j - 1) / j;
  if (count > kMaxGSetSize) guard_size(kMaxGSetSize + 1);

  std::vector<std::vector<std::uint32_t>> elems;
  std::vector<std::uint32_t> current(k, 0);
  if (m > 0) {
    while (true) {
      elems.push_back(current);
      int pos = k - 1;
      while (pos >= 0 && current[pos] + 1 == m) --pos;
      if (pos < 0) break;
      const auto v = current[pos] + 1;
      for (int j = pos; j < k; ++j) current[j] = v;
    }
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::size_t x = 0; x < elems.size(); ++x) index.emplace(elems[x], static_cast<std::uint32_t>(x));

  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    Permutation h(elems.size());
    std::vector<std::uint32_t> image(k);
    for (std::size_t x = 0; x < elems.size(); ++x) {
      for (int j = 0; j < k; ++j) image[j] = g[elems[x][j]];
      std::sort(image.begin(), image.end());
      h[x] = index.at(image);
    }
    gens.push_back(std::move(h));
  }
  return FiniteGSet(elems.size(), std::move(gens));
}

std::vector<Permutation> symmetric_group_generators(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group_generators: n must be positive");
  Permutation transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0u);
  if (n >= 2) std::swap(transposition[0], transposition[1]);
  for (int x = 0; x < n; ++x) cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
  return {transposition, cycle};
}

Permutation permutation_of_cycle_type(const Partition& lambda) {
  std::vector<int> lengths(lambda.parts.begin(), lambda.parts.end());
  return FiniteGSet::cycles(lengths).generator(0);
}

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lengths;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) r[x] = outer[inner[x]];
  return r;
}

Permutation power(const Permutation& p, int e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  Permutation r(p.size());
  std::iota(r.begin(), r.end(), 0u);
  for (int k = 0; k < e; ++k) r = compose(p, r);
  return r;
}

FiniteGSet power_tuple_set(int n, const Composition& alpha) {
  const auto gens = n > 0 ? symmetric_group_generators(n) : std::vector<Permutation>{};
  return power_tuple_set(n, alpha, gens);
}

FiniteGSet power_tuple_set(int n, const Composition& alpha, std::span<const Permutation> base_generators) {
  if (n < 0) throw std::invalid_argument("power_tuple_set: negative n");
  const BigInt card = multinomial(n, alpha);  // validates weight <= n
  if (card > kMaxGSetSize) guard_size(kMaxGSetSize + 1);
  for (const auto& g : base_generators)
    if (g.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("power_tuple_set: generator degree mismatch");

  const std::size_t t = alpha.parts.size();
  // Enumerate tuples block by block; each block is a sorted subset of the unused points.
  std::vector<std::vector<std::uint32_t>> tuples;  // concatenated blocks
  std::vector<std::uint32_t> current;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t block, std::size_t pos_in_block, std::uint32_t min_elem) -> void {
    if (block == t) {
      tuples.push_back(current);
      return;
    }
    if (pos_in_block == static_cast<std::size_t>(alpha.parts[block])) {
      self(self, block + 1, 0, 0);
      return;
    }
    for (std::uint32_t x = min_elem; x < static_cast<std::uint32_t>(n); ++x) {
      if (used[x]) continue;
      used[x] = 1;
      current.push_back(x);
      self(self, block, pos_in_block + 1, x + 1);
      current.pop_back();
      used[x] = 0;
    }
  };
  rec(rec, 0, 0, 0);

  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    index.emplace(tuples[x], static_cast<std::uint32_t>(x));
    std::string label = "(";
    std::size_t off = 0;
    for (std::size_t b = 0; b < t; ++b) {
      if (b) label += ",";
      label += "{";
      for (int j = 0; j < alpha.parts[b]; ++j) {
        if (j) label += ",";
        label += std::to_string(tuples[x][off + j] + 1);
      }
      label += "}";
      off += static_cast<std::size_t>(alpha.parts[b]);
    }
    labels.push_back(label + ")");
  }

  std::vector<Permutation> gens;
  for (const auto& g : base_generators) {
    Permutation h(tuples.size());
    std::vector<std::uint32_t> image;
    for (std::size_t x = 0; x < tuples.size(); ++x) {
      image.clear();
      std::size_t off = 0;
      for (std::size_t b = 0; b < t; ++b) {
        const auto len = static_cast<std::size_t>(alpha.parts[b]);
        const auto first = image.size();
        for (std::size_t j = 0; j < len; ++j) image.push_back(g[tuples[x][off + j]]);
        std::sort(image.begin() + static_cast<std::ptrdiff_t>(first), image.end());
        off += len;
      }
      h[x] = index.at(image);
    }
    gens.push_back(std::move(h));
  }
  return FiniteGSet(tuples.size(), std::move(gens), std::move(labels));
}

CyclicBurnside cyclic_decomposition(const FiniteGSet& a) {
  if (a.generator_count() > 1) throw std::invalid_argument("cyclic_decomposition: needs at most one generator");
  CyclicBurnside out;
  if (a.generator_count() == 0) return CyclicBurnside(static_cast<std::int64_t>(a.size()));
  for (auto s : orbit_sizes(a)) out += CyclicBurnside::orbit(static_cast<std::int64_t>(s));
  return out;
}

}  // namespace artin
