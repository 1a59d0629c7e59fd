#include "artin/torus_class.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "artin/schur.hpp"

namespace artin {

CyclicBurnside AlgebraSpec::spec_class() const {
  CyclicBurnside s;
  for (int k : parts.parts) s += CyclicBurnside::orbit(k);
  return s;
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1)
      throw std::invalid_argument("bad partition '" + std::string(text) + "': expected comma-separated positive integers");
    parts.push_back(value);
    start = end + 1;
  }
  return AlgebraSpec{Partition(std::move(parts))};
}

LefschetzPolynomial::LefschetzPolynomial(std::vector<CyclicBurnside> by_power) : by_power_(std::move(by_power)) {
  trim();
}

LefschetzPolynomial LefschetzPolynomial::monomial(const CyclicBurnside& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power of L");
  std::vector<CyclicBurnside> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return LefschetzPolynomial(std::move(v));
}

CyclicBurnside LefschetzPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return CyclicBurnside();
  return by_power_[static_cast<std::size_t>(power)];
}

void LefschetzPolynomial::trim() {
  while (!by_power_.empty() && by_power_.back().is_zero()) by_power_.pop_back();
}

LefschetzPolynomial& LefschetzPolynomial::operator+=(const LefschetzPolynomial& o) {
  if (o.by_power_.size() > by_power_.size()) by_power_.resize(o.by_power_.size());
  for (std::size_t p = 0; p < o.by_power_.size(); ++p) by_power_[p] += o.by_power_[p];
  trim();
  return *this;
}

LefschetzPolynomial& LefschetzPolynomial::operator-=(const LefschetzPolynomial& o) {
  if (o.by_power_.size() > by_power_.size()) by_power_.resize(o.by_power_.size());
  for (std::size_t p = 0; p < o.by_power_.size(); ++p) by_power_[p] -= o.by_power_[p];
  trim();
  return *this;
}

LefschetzPolynomial operator*(const LefschetzPolynomial& a, const LefschetzPolynomial& b) {
  if (a.by_power_.empty() || b.by_power_.empty()) return {};
  std::vector<CyclicBurnside> r(a.by_power_.size() + b.by_power_.size() - 1);
  for (std::size_t i = 0; i < a.by_power_.size(); ++i)
    for (std::size_t j = 0; j < b.by_power_.size(); ++j) r[i + j] += a.by_power_[i] * b.by_power_[j];
  return LefschetzPolynomial(std::move(r));
}

BigInt LefschetzPolynomial::count_points(std::int64_t q, std::int64_t e) const {
  if (q < 2) throw std::invalid_argument("count_points: q must be at least 2");
  if (e < 1) throw std::invalid_argument("count_points: e must be positive");
  const BigInt qe = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
  BigInt total = 0;
  BigInt lefschetz_power = 1;
  for (const auto& c : by_power_) {
    total += c.mark(e) * lefschetz_power;
    lefschetz_power *= qe;
  }
  return total;
}

TorusClass TorusClass::from_coefficients(std::vector<CyclicBurnside> coeffs) {
  if (coeffs.empty() || !(coeffs.front() == CyclicBurnside(1)))
    throw std::invalid_argument("torus class must be monic (a_0 = 1)");
  return TorusClass(std::move(coeffs));
}

TorusClass TorusClass::from_polynomial(const LefschetzPolynomial& p) {
  const int d = p.degree();
  if (d < 0) throw std::invalid_argument("torus class cannot be zero");
  std::vector<CyclicBurnside> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(p.coeff(d - i));
  return from_coefficients(std::move(coeffs));
}

LefschetzPolynomial TorusClass::polynomial() const {
  std::vector<CyclicBurnside> by_power(coeffs_.rbegin(), coeffs_.rend());
  return LefschetzPolynomial(std::move(by_power));
}

TorusClass operator*(const TorusClass& a, const TorusClass& b) {
  return TorusClass::from_polynomial(a.polynomial() * b.polynomial());
}

TorusClass multiplicative_group() { return TorusClass::from_coefficients({CyclicBurnside(1), CyclicBurnside(-1)}); }

// ---------------------------------------------------------------------------
// Fibered algebras and the stratification recursion

FiberedAlgebra::FiberedAlgebra(FiniteGSet total, FiniteGSet base, std::vector<std::uint32_t> projection)
    : total_(std::move(total)), base_(std::move(base)), projection_(std::move(projection)) {
  if (total_.generator_count() != 1 || base_.generator_count() != 1)
    throw std::invalid_argument("FiberedAlgebra: both sets need exactly one generator");
  if (projection_.size() != total_.size()) throw std::invalid_argument("FiberedAlgebra: projection has wrong length");
  std::vector<int> fibre(base_.size(), 0);
  const auto& gs = total_.generator(0);
  const auto& gt = base_.generator(0);
  for (std::size_t s = 0; s < total_.size(); ++s) {
    if (projection_[s] >= base_.size()) throw std::invalid_argument("FiberedAlgebra: projection out of range");
    if (projection_[gs[s]] != gt[projection_[s]]) throw std::invalid_argument("FiberedAlgebra: projection is not equivariant");
    ++fibre[projection_[s]];
  }
  rank_ = fibre.empty() ? 0 : fibre.front();
  for (int f : fibre)
    if (f != rank_) throw std::invalid_argument("FiberedAlgebra: fibres have unequal size");
}

FiberedAlgebra FiberedAlgebra::over_point(const AlgebraSpec& spec) {
  std::vector<int> lengths(spec.parts.parts.begin(), spec.parts.parts.end());
  auto total = FiniteGSet::cycles(lengths);
  std::vector<std::uint32_t> projection(total.size(), 0);
  return FiberedAlgebra(std::move(total), FiniteGSet(1, {Permutation{0}}), std::move(projection));
}

FiberedAlgebra FiberedAlgebra::stratum(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("stratum: need 1 <= i <= rank");
  std::vector<std::vector<std::uint32_t>> fibres(base_.size());
  for (std::size_t s = 0; s < total_.size(); ++s) fibres[projection_[s]].push_back(static_cast<std::uint32_t>(s));

  // Strata bases: i-subsets of single fibres, keyed by their sorted elements.
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> current;
  for (const auto& f : fibres) {
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (current.size() == static_cast<std::size_t>(i)) {
        subsets.push_back(current);
        return;
      }
      for (std::size_t k = from; k < f.size(); ++k) {
        current.push_back(f[k]);
        self(self, k + 1);
        current.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> subset_index;
  for (std::size_t u = 0; u < subsets.size(); ++u) subset_index.emplace(subsets[u], static_cast<std::uint32_t>(u));

  const auto& gs = total_.generator(0);
  Permutation base_gen(subsets.size());
  std::vector<std::uint32_t> image;
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    image.clear();
    for (auto s : subsets[u]) image.push_back(gs[s]);
    std::sort(image.begin(), image.end());
    base_gen[u] = subset_index.at(image);
  }

  // Points (s, U) with s in the fibre of U and s outside U.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (auto s : fibres[projection_[subsets[u].front()]])
      if (!std::binary_search(subsets[u].begin(), subsets[u].end(), s))
        points.emplace_back(s, static_cast<std::uint32_t>(u));
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> point_index;
  for (std::size_t x = 0; x < points.size(); ++x) point_index.emplace(points[x], static_cast<std::uint32_t>(x));
  Permutation total_gen(points.size());
  std::vector<std::uint32_t> projection(points.size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    const auto [s, u] = points[x];
    total_gen[x] = point_index.at({gs[s], base_gen[u]});
    projection[x] = u;
  }
  return FiberedAlgebra(FiniteGSet(points.size(), {std::move(total_gen)}),
                        FiniteGSet(subsets.size(), {std::move(base_gen)}), std::move(projection));
}

namespace {

// Units of one base orbit of size k whose fibre carries Frobenius^k with cycle type lambda.
// The realization puts each lambda-cycle of length c on a Frobenius orbit of size k*c.
LefschetzPolynomial orbit_component(std::int64_t k, const Partition& lambda);

struct ComponentCache {
  std::mutex mutex;
  std::map<std::pair<std::int64_t, Partition>, LefschetzPolynomial> values;
};

ComponentCache& component_cache() {
  static ComponentCache cache;
  return cache;
}

LefschetzPolynomial orbit_component(std::int64_t k, const Partition& lambda) {
  auto& cache = component_cache();
  const auto key = std::make_pair(k, lambda);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }

  const CyclicBurnside base = CyclicBurnside::orbit(k);
  const int rank = lambda.weight();
  LefschetzPolynomial result;
  if (rank == 0) {
    result = LefschetzPolynomial::monomial(base, 0);
  } else {
    const auto kk = static_cast<std::size_t>(k);
    std::size_t total_size = 0;
    for (int c : lambda.parts) total_size += kk * static_cast<std::size_t>(c);
    Permutation gs(total_size);
    std::vector<std::uint32_t> projection(total_size);
    std::size_t offset = 0;
    for (int c : lambda.parts) {
      const std::size_t len = kk * static_cast<std::size_t>(c);
      for (std::size_t j = 0; j < len; ++j) {
        gs[offset + j] = static_cast<std::uint32_t>(offset + (j + 1) % len);
        projection[offset + j] = static_cast<std::uint32_t>(j % kk);
      }
      offset += len;
    }
    const std::vector<int> base_cycle{static_cast<int>(k)};
    const FiberedAlgebra algebra(FiniteGSet(total_size, {std::move(gs)}), FiniteGSet::cycles(base_cycle),
                                 std::move(projection));
    // [units] = [T] L^r - sum_{i=1}^{r-1} [units of stratum i] - [T]
    result = LefschetzPolynomial::monomial(base, rank) - LefschetzPolynomial::monomial(base, 0);
    for (int i = 1; i < rank; ++i) result -= units_class(algebra.stratum(i));
  }

  std::lock_guard lock(cache.mutex);
  cache.values.emplace(key, result);
  return result;
}

}  // namespace

LefschetzPolynomial units_class(const FiberedAlgebra& algebra) {
  const auto& base = algebra.base();
  const auto& gt = base.generator(0);
  const auto& gs = algebra.total().generator(0);
  std::vector<std::vector<std::uint32_t>> fibres(base.size());
  for (std::size_t s = 0; s < algebra.total().size(); ++s) fibres[algebra.projection()[s]].push_back(static_cast<std::uint32_t>(s));

  LefschetzPolynomial total;
  std::vector<char> seen(base.size(), 0);
  for (std::size_t t = 0; t < base.size(); ++t) {
    if (seen[t]) continue;
    std::int64_t k = 0;
    for (std::size_t u = t; !seen[u]; u = gt[u]) {
      seen[u] = 1;
      ++k;
    }
    // Frobenius^k restricted to the fibre over t.
    const auto& fibre = fibres[t];
    std::map<std::uint32_t, std::uint32_t> local;
    for (std::size_t j = 0; j < fibre.size(); ++j) local.emplace(fibre[j], static_cast<std::uint32_t>(j));
    Permutation restricted(fibre.size());
    for (std::size_t j = 0; j < fibre.size(); ++j) {
      std::uint32_t s = fibre[j];
      for (std::int64_t step = 0; step < k; ++step) s = gs[s];
      restricted[j] = local.at(s);
    }
    total += orbit_component(k, cycle_type(restricted));
  }
  return total;
}

TorusClass class_via_lambda(const AlgebraSpec& spec) {
  const int n = spec.degree();
  const auto lambdas = lambda_series(spec.spec_class(), n);
  std::vector<CyclicBurnside> coeffs;
  for (int i = 0; i <= n; ++i) coeffs.push_back(i % 2 ? -lambdas[static_cast<std::size_t>(i)] : lambdas[static_cast<std::size_t>(i)]);
  return TorusClass::from_coefficients(std::move(coeffs));
}

TorusClass class_via_rho(const AlgebraSpec& spec) {
  const int n = spec.degree();
  std::vector<CyclicBurnside> coeffs{CyclicBurnside(1)};
  for (int i = 1; i <= n; ++i) coeffs.push_back(restrict_to_cyclic(rho(n, i), spec.parts));
  return TorusClass::from_coefficients(std::move(coeffs));
}

TorusClass class_via_recursion(const AlgebraSpec& spec) {
  if (spec.degree() == 0) return TorusClass::from_coefficients({CyclicBurnside(1)});
  return TorusClass::from_polynomial(units_class(FiberedAlgebra::over_point(spec)));
}

TorusClass norm_one_class(const AlgebraSpec& spec) {
  const int n = spec.degree();
  if (n < 1) throw std::invalid_argument("norm_one_class: algebra must have positive dimension");
  const auto lambdas = lambda_series(spec.spec_class() - CyclicBurnside(1), n - 1);
  std::vector<CyclicBurnside> coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(i % 2 ? -lambdas[static_cast<std::size_t>(i)] : lambdas[static_cast<std::size_t>(i)]);
  return TorusClass::from_coefficients(std::move(coeffs));
}

void visit_strata(const AlgebraSpec& spec, const std::function<void(const Stratum&)>& visit) {
  if (spec.degree() == 0) return;
  auto walk = [&](auto&& self, const Composition& alpha, const FiberedAlgebra& algebra) -> void {
    visit(Stratum{alpha, cyclic_decomposition(algebra.base())});
    for (int j = 1; j < algebra.rank(); ++j) {
      Composition child;
      child.parts.push_back(j);
      child.parts.insert(child.parts.end(), alpha.parts.begin(), alpha.parts.end());
      self(self, child, algebra.stratum(j));
    }
  };
  walk(walk, Composition{}, FiberedAlgebra::over_point(spec));
}

BigInt count_points(const TorusClass& tc, std::int64_t q, std::int64_t e) { return tc.polynomial().count_points(q, e); }

BigInt point_count_oracle(const AlgebraSpec& spec, std::int64_t q, std::int64_t e) {
  if (q < 2) throw std::invalid_argument("point_count_oracle: q must be at least 2");
  if (e < 1) throw std::invalid_argument("point_count_oracle: e must be positive");
  BigInt total = 1;
  for (int nj : spec.parts.parts) {
    const std::int64_t g = std::gcd(static_cast<std::int64_t>(nj), e);
    const std::int64_t l = nj / g * e;
    const BigInt factor = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l)) - 1;
    total *= boost::multiprecision::pow(factor, static_cast<unsigned>(g));
  }
  return total;
}

BigInt norm_one_point_oracle(const AlgebraSpec& spec, std::int64_t q, std::int64_t e) {
  const BigInt full = point_count_oracle(spec, q, e);
  const BigInt gm = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)) - 1;
  if (full % gm != 0) throw std::domain_error("norm-one point count: inexact division");
  return full / gm;
}

IntPolynomial char_poly(const TorusClass& tc) {
  const int n = tc.n();
  IntPolynomial p(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(n - i)] = tc.coefficient(i).mark(1);
  return p;
}

IntPolynomial char_poly_oracle(const AlgebraSpec& spec) {
  IntPolynomial p{1};
  for (int nj : spec.parts.parts) {
    IntPolynomial next(p.size() + static_cast<std::size_t>(nj), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + static_cast<std::size_t>(nj)] += p[k];
      next[k] -= p[k];
    }
    p = std::move(next);
  }
  return p;
}

std::string to_string(const IntPolynomial& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const BigInt& c = p[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "X";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace artin
