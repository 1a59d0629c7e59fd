#include "artin/schur.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "artin/series.hpp"

namespace artin {

namespace {

std::atomic<int> g_degree_bound{kDefaultSchurDegreeBound};

// Ways to distribute the cycles of lambda over labelled blocks of sizes mu so that every
// block is filled exactly. A fixed subset tuple is exactly such a distribution.
std::int64_t count_cycle_assignments(const Partition& mu, const Partition& lambda) {
  std::map<std::vector<int>, std::int64_t> states{{mu.parts, 1}};
  for (int len : lambda.parts) {
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [capacity, ways] : states) {
      for (std::size_t b = 0; b < capacity.size(); ++b) {
        if (capacity[b] < len) continue;
        auto c = capacity;
        c[b] -= len;
        auto& slot = next[c];
        slot = checked_add(slot, ways);
      }
    }
    states = std::move(next);
  }
  std::int64_t total = 0;
  for (const auto& [capacity, ways] : states) total = checked_add(total, ways);
  return total;
}

void check_degree(int n) {
  if (n < 1 || n > schur_degree_bound())
    throw std::out_of_range("degree " + std::to_string(n) + " outside 1.." + std::to_string(schur_degree_bound()));
}

}  // namespace

int schur_degree_bound() { return g_degree_bound.load(); }

void set_schur_degree_bound(int bound) {
  if (bound < 1) throw std::invalid_argument("degree bound must be positive");
  g_degree_bound.store(bound);
}

MarkMatrix::MarkMatrix(int n) : n_(n), index_(partitions(n)) {
  check_degree(n);
  const std::size_t p = index_.size();
  entries_.assign(p, std::vector<std::int64_t>(p, 0));
  for (std::size_t mu = 0; mu < p; ++mu)
    for (std::size_t la = 0; la < p; ++la) entries_[mu][la] = count_cycle_assignments(index_[mu], index_[la]);

  // Gauss-Jordan over the rationals.
  std::vector<std::vector<BigRational>> a(p, std::vector<BigRational>(2 * p));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) a[r][c] = entries_[r][c];
    a[r][p + r] = 1;
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    while (pivot < p && a[pivot][col] == 0) ++pivot;
    if (pivot == p) throw std::logic_error("mark matrix of degree " + std::to_string(n) + " is singular");
    std::swap(a[pivot], a[col]);
    const BigRational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = 0; c < 2 * p; ++c) a[r][c] -= f * a[col][c];
    }
  }
  inverse_denom_ = 1;
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) {
      const BigInt d = boost::multiprecision::denominator(a[r][p + c]);
      inverse_denom_ = inverse_denom_ / boost::multiprecision::gcd(inverse_denom_, d) * d;
    }
  inverse_numer_.assign(p, std::vector<BigInt>(p));
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) {
      const auto& v = a[r][p + c];
      inverse_numer_[r][c] = boost::multiprecision::numerator(v) * (inverse_denom_ / boost::multiprecision::denominator(v));
    }
}

std::size_t MarkMatrix::position(const Partition& p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), p, std::greater<>());
  if (it == index_.end() || *it != p)
    throw std::invalid_argument("partition " + to_string(p) + " is not a partition of " + std::to_string(n_));
  return static_cast<std::size_t>(it - index_.begin());
}

std::vector<std::int64_t> MarkMatrix::solve(const std::vector<std::int64_t>& marks) const {
  const std::size_t p = index_.size();
  if (marks.size() != p) throw std::invalid_argument("mark vector has wrong length");
  std::vector<std::int64_t> out(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    BigInt acc = 0;
    for (std::size_t la = 0; la < p; ++la) acc += marks[la] * inverse_numer_[la][mu];
    if (acc % inverse_denom_ != 0)
      throw std::domain_error("mark vector does not lie in the Schur subring (non-integral coefficient at " +
                              to_string(index_[mu]) + ")");
    out[mu] = checked_narrow(acc / inverse_denom_);
  }
  return out;
}

const MarkMatrix& mark_matrix(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const MarkMatrix>> cache;
  check_degree(n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const MarkMatrix>(n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

SchurElement SchurElement::from_basis(int n, std::vector<std::int64_t> basis) {
  const auto& m = mark_matrix(n);
  const std::size_t p = m.index().size();
  if (basis.size() != p) throw std::invalid_argument("basis vector has wrong length");
  std::vector<std::int64_t> marks(p, 0);
  for (std::size_t mu = 0; mu < p; ++mu) {
    if (basis[mu] == 0) continue;
    for (std::size_t la = 0; la < p; ++la) marks[la] = checked_add(marks[la], checked_mul(basis[mu], m.entry(mu, la)));
  }
  return SchurElement(n, std::move(basis), std::move(marks));
}

SchurElement SchurElement::from_marks(int n, std::vector<std::int64_t> marks) {
  auto basis = mark_matrix(n).solve(marks);
  return SchurElement(n, std::move(basis), std::move(marks));
}

SchurElement SchurElement::one(int n) {
  std::vector<std::int64_t> basis(mark_matrix(n).index().size(), 0);
  basis.front() = 1;  // P_(n) is the one-point set
  return from_basis(n, std::move(basis));
}

std::int64_t SchurElement::coefficient(const Partition& mu) const { return basis_[mark_matrix(n_).position(mu)]; }

std::int64_t SchurElement::mark_at(const Partition& cycle_type) const {
  return marks_[mark_matrix(n_).position(cycle_type)];
}

namespace {

void require_same_degree(const SchurElement& a, const SchurElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Schur elements of different degree");
}

}  // namespace

SchurElement operator+(const SchurElement& a, const SchurElement& b) {
  require_same_degree(a, b);
  auto basis = a.basis_;
  auto marks = a.marks_;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    basis[k] = checked_add(basis[k], b.basis_[k]);
    marks[k] = checked_add(marks[k], b.marks_[k]);
  }
  return SchurElement(a.n_, std::move(basis), std::move(marks));
}

SchurElement operator-(const SchurElement& a, const SchurElement& b) { return a + (-b); }

SchurElement operator*(const SchurElement& a, const SchurElement& b) {
  require_same_degree(a, b);
  std::vector<std::int64_t> marks(a.marks_.size());
  for (std::size_t k = 0; k < marks.size(); ++k) marks[k] = checked_mul(a.marks_[k], b.marks_[k]);
  return SchurElement::from_marks(a.n_, std::move(marks));
}

SchurElement SchurElement::operator-() const { return scaled(-1); }

SchurElement SchurElement::scaled(std::int64_t c) const {
  auto basis = basis_;
  auto marks = marks_;
  for (auto& v : basis) v = checked_mul(v, c);
  for (auto& v : marks) v = checked_mul(v, c);
  return SchurElement(n_, std::move(basis), std::move(marks));
}

SchurElement p_class(int n, const Composition& alpha) {
  const int w = alpha.weight();
  if (w > n) throw std::invalid_argument("p_class: composition weight exceeds n");
  auto parts = alpha.parts;
  if (w < n) parts.push_back(n - w);
  const auto& m = mark_matrix(n);
  std::vector<std::int64_t> basis(m.index().size(), 0);
  basis[m.position(Partition(parts))] = 1;
  return SchurElement::from_basis(n, std::move(basis));
}

SchurElement rho(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("rho: need 1 <= i <= n");
  const auto& m = mark_matrix(n);
  std::vector<std::int64_t> basis(m.index().size(), 0);
  for (const auto& c : compositions(i)) {
    auto parts = c.parts;
    if (i < n) parts.push_back(n - i);
    const std::int64_t sign = c.parts.size() % 2 ? -1 : 1;
    auto& slot = basis[m.position(Partition(parts))];
    slot = checked_add(slot, sign);
  }
  return SchurElement::from_basis(n, std::move(basis));
}

SchurElement lambda_top(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("lambda_top: need 0 <= i <= n");
  const auto& m = mark_matrix(n);
  const auto trunc = static_cast<std::size_t>(n);
  std::vector<std::int64_t> marks;
  for (const auto& lambda : m.index()) {
    // Invariant k-multisets are constant on cycles: sum_k |fix| t^k = prod_c 1/(1 - t^c).
    auto sigma = TruncatedSeries<std::int64_t>::one(trunc);
    for (int c : lambda.parts) {
      TruncatedSeries<std::int64_t> geometric(trunc);
      for (std::size_t k = 0; k <= trunc; k += static_cast<std::size_t>(c)) geometric[k] = 1;
      sigma = sigma * geometric;
    }
    const auto lambdas = lambda_from_sigma<std::int64_t>(sigma.coeffs());
    marks.push_back(lambdas[static_cast<std::size_t>(i)]);
  }
  return SchurElement::from_marks(n, std::move(marks));
}

CyclicBurnside restrict_to_cyclic(const SchurElement& x, const Partition& lambda) {
  if (lambda.weight() != x.n()) throw std::invalid_argument("restrict_to_cyclic: cycle type has wrong degree");
  // Orbit sizes divide the order of the permutation, which may exceed n.
  const std::int64_t order = permutation_order(lambda);
  std::vector<std::int64_t> fix;
  for (std::int64_t e = 1; e <= order; ++e) fix.push_back(x.mark_at(power_cycle_type(lambda, static_cast<int>(e))));
  return from_marks(fix);
}

std::string to_string(const SchurElement& x) {
  const auto& idx = mark_matrix(x.n()).index();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::int64_t c = x.basis()[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out << mag << "·";
    out << "[P_" << to_string(idx[k]) << ']';
  }
  return first ? "0" : out.str();
}

nlohmann::ordered_json to_json(const SchurElement& x) {
  const auto& idx = mark_matrix(x.n()).index();
  nlohmann::ordered_json basis = nlohmann::ordered_json::object();
  nlohmann::ordered_json marks = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (x.basis()[k] != 0) basis[to_string(idx[k])] = x.basis()[k];
    marks[to_string(idx[k])] = x.marks()[k];
  }
  return {{"n", x.n()}, {"basis", basis}, {"marks", marks}};
}

}  // namespace artin
