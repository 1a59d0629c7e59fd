#include "artin/cyclic_burnside.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "artin/gset.hpp"
#include "artin/series.hpp"

namespace artin {

namespace {

int moebius(std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

CyclicBurnside::CyclicBurnside(std::int64_t n) {
  if (n != 0) coeffs_.emplace(1, n);
}

CyclicBurnside CyclicBurnside::orbit(std::int64_t k, std::int64_t coeff) {
  if (k < 1) throw std::invalid_argument("orbit size must be positive");
  CyclicBurnside x;
  x.add_term(k, coeff);
  return x;
}

std::int64_t CyclicBurnside::coeff(std::int64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? 0 : it->second;
}

bool CyclicBurnside::is_effective() const {
  for (const auto& [k, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

void CyclicBurnside::add_term(std::int64_t k, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) coeffs_.erase(it);
}

std::int64_t CyclicBurnside::mark(std::int64_t e) const {
  if (e < 1) throw std::invalid_argument("mark: exponent must be positive");
  std::int64_t total = 0;
  for (const auto& [k, c] : coeffs_)
    if (e % k == 0) total = checked_add(total, checked_mul(c, k));
  return total;
}

CyclicBurnside& CyclicBurnside::operator+=(const CyclicBurnside& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

CyclicBurnside& CyclicBurnside::operator-=(const CyclicBurnside& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, checked_sub(0, c));
  return *this;
}

CyclicBurnside& CyclicBurnside::operator*=(const CyclicBurnside& o) {
  CyclicBurnside r;
  for (const auto& [a, ca] : coeffs_) {
    for (const auto& [b, cb] : o.coeffs_) {
      const std::int64_t g = std::gcd(a, b);
      r.add_term(checked_mul(a / g, b), checked_mul(checked_mul(ca, cb), g));
    }
  }
  *this = std::move(r);
  return *this;
}

CyclicBurnside CyclicBurnside::operator-() const { return CyclicBurnside(0) - *this; }

CyclicBurnside CyclicBurnside::positive_part() const {
  CyclicBurnside r;
  for (const auto& [k, c] : coeffs_)
    if (c > 0) r.add_term(k, c);
  return r;
}

CyclicBurnside CyclicBurnside::negative_part() const {
  CyclicBurnside r;
  for (const auto& [k, c] : coeffs_)
    if (c < 0) r.add_term(k, checked_sub(0, c));
  return r;
}

CyclicBurnside from_marks(std::span<const std::int64_t> marks) {
  CyclicBurnside x;
  const auto n = static_cast<std::int64_t>(marks.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t d = 1; d <= k; ++d) {
      if (k % d) continue;
      acc = checked_add(acc, checked_mul(moebius(k / d), marks[d - 1]));
    }
    if (acc % k != 0)
      throw std::domain_error("from_marks: mark vector is not realizable (orbit size " + std::to_string(k) + ")");
    x += CyclicBurnside::orbit(k, acc / k);
  }
  return x;
}

std::vector<std::int64_t> marks(const CyclicBurnside& x, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = 1; e <= n; ++e) out.push_back(x.mark(e));
  return out;
}

CyclicBurnside induce(std::int64_t d, const CyclicBurnside& x) {
  if (d < 1) throw std::invalid_argument("induce: degree must be positive");
  CyclicBurnside r;
  for (const auto& [k, c] : x.coeffs()) r += CyclicBurnside::orbit(checked_mul(d, k), c);
  return r;
}

CyclicBurnside base_change(std::int64_t d, const CyclicBurnside& x) {
  if (d < 1) throw std::invalid_argument("base_change: degree must be positive");
  CyclicBurnside r;
  for (const auto& [k, c] : x.coeffs()) {
    const std::int64_t g = std::gcd(d, k);
    r += CyclicBurnside::orbit(k / g, checked_mul(c, g));
  }
  return r;
}

CyclicBurnside symmetric_power_class(const CyclicBurnside& x, int k) {
  if (!x.is_effective()) throw std::invalid_argument("symmetric_power_class: element is not effective");
  std::vector<int> lengths;
  for (const auto& [size, c] : x.coeffs()) lengths.insert(lengths.end(), static_cast<std::size_t>(c), static_cast<int>(size));
  return cyclic_decomposition(symmetric_power(FiniteGSet::cycles(lengths), k));
}

namespace {

TruncatedSeries<CyclicBurnside> effective_lambda_series(const CyclicBurnside& x, int truncation) {
  std::vector<CyclicBurnside> sigmas;
  for (int k = 0; k <= truncation; ++k) sigmas.push_back(symmetric_power_class(x, k));
  const auto lambdas = lambda_from_sigma<CyclicBurnside>(sigmas);
  return TruncatedSeries<CyclicBurnside>(static_cast<std::size_t>(truncation), lambdas);
}

}  // namespace

std::vector<CyclicBurnside> lambda_series(const CyclicBurnside& x, int truncation) {
  if (truncation < 0) throw std::invalid_argument("lambda_series: negative truncation");
  const auto pos = effective_lambda_series(x.positive_part(), truncation);
  const auto neg = x.negative_part();
  if (neg.is_zero()) return pos.coeffs();
  return divide(pos, effective_lambda_series(neg, truncation)).coeffs();
}

CyclicBurnside lambda_op(const CyclicBurnside& x, int i, int truncation) {
  if (i < 0 || i > truncation) throw std::invalid_argument("lambda_op: need 0 <= i <= truncation");
  return lambda_series(x, truncation)[static_cast<std::size_t>(i)];
}

std::string to_string(const CyclicBurnside& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : x.coeffs()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 1) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "·";
      out << '[' << k << ']';
    }
  }
  return out.str();
}

nlohmann::ordered_json to_json(const CyclicBurnside& x) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, c] : x.coeffs()) j[std::to_string(k)] = c;
  return j;
}

CyclicBurnside cyclic_burnside_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("Artin class JSON must be an object");
  CyclicBurnside x;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const long long k = std::stoll(key, &used);
    if (used != key.size() || k < 1) throw std::invalid_argument("bad orbit size key: " + key);
    x += CyclicBurnside::orbit(k, value.get<std::int64_t>());
  }
  return x;
}

}  // namespace artin
