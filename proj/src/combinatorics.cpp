#include "artin/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace artin {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out << ',';
    out << parts[k];
  }
  out << ')';
  return out.str();
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Composition> compositions(int i) {
  if (i < 0) throw std::invalid_argument("compositions: negative weight");
  std::vector<Composition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(Composition{current});
      return;
    }
    for (int first = remaining; first >= 1; --first) {
      current.push_back(first);
      rec(remaining - first);
      current.pop_back();
    }
  };
  rec(i);
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      Partition p;
      p.parts = current;
      out.push_back(std::move(p));
      return;
    }
    for (int first = std::min(remaining, cap); first >= 1; --first) {
      current.push_back(first);
      rec(remaining - first, first);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt multinomial(int n, const Composition& parts) {
  if (n < 0) throw std::invalid_argument("multinomial: negative n");
  for (int p : parts.parts)
    if (p < 1) throw std::invalid_argument("multinomial: parts must be positive");
  const int w = parts.weight();
  if (w > n) throw std::invalid_argument("multinomial: weight exceeds n");
  BigInt denom = factorial(n - w);
  for (int p : parts.parts) denom *= factorial(p);
  return factorial(n) / denom;
}

Partition power_cycle_type(const Partition& lambda, int e) {
  if (e < 1) throw std::invalid_argument("power_cycle_type: exponent must be positive");
  std::vector<int> out;
  for (int c : lambda.parts) {
    const int g = std::gcd(c, e);
    out.insert(out.end(), g, c / g);
  }
  return Partition(std::move(out));
}

std::int64_t permutation_order(const Partition& lambda) {
  std::int64_t order = 1;
  for (int c : lambda.parts) order = std::lcm(order, static_cast<std::int64_t>(c));
  return order;
}

Partition sorted_partition(const Composition& c) { return Partition(c.parts); }

std::string to_string(const Composition& c) { return join_parts(c.parts); }
std::string to_string(const Partition& p) { return join_parts(p.parts); }

}  // namespace artin
