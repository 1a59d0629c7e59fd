#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace artin {

// Commutative ring with identity whose zero and one are R(0) and R(1).
// Division is never required.
template <typename R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { R(0) };
  { R(1) };
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

// Power series in t truncated after t^N. Coefficients beyond N are never consulted.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t truncation) : coeffs_(truncation + 1, R(0)) {}

  TruncatedSeries(std::size_t truncation, std::span<const R> leading) : TruncatedSeries(truncation) {
    for (std::size_t k = 0; k < leading.size() && k <= truncation; ++k) coeffs_[k] = leading[k];
  }

  static TruncatedSeries one(std::size_t truncation) {
    TruncatedSeries s(truncation);
    s.coeffs_[0] = R(1);
    return s;
  }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  R& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.truncation(), b.truncation()));
    for (std::size_t k = 0; k <= r.truncation(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.truncation(), b.truncation()));
    for (std::size_t k = 0; k <= r.truncation(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.truncation(), b.truncation()));
    for (std::size_t i = 0; i <= r.truncation(); ++i) {
      if (a.coeffs_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j <= r.truncation(); ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  // Substitutes t -> -t.
  TruncatedSeries negate_variable() const {
    TruncatedSeries r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

 private:
  std::vector<R> coeffs_;
};

// Multiplicative inverse; the constant term must be exactly one.
template <CoefficientRing R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& s) {
  if (!(s[0] == R(1))) throw std::domain_error("series inversion needs constant term 1");
  const std::size_t n = s.truncation();
  TruncatedSeries<R> r(n);
  r[0] = R(1);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc = acc + s[j] * r[k - j];
    r[k] = -acc;
  }
  return r;
}

template <CoefficientRing R>
TruncatedSeries<R> divide(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return a * invert(b);
}

// Solves sum_{i=0..k} (-1)^i lambda^i sigma^{k-i} = 0 for k >= 1, i.e. sigma_t * lambda_{-t} = 1.
template <CoefficientRing R>
std::vector<R> lambda_from_sigma(std::span<const R> sigmas) {
  if (sigmas.empty() || !(sigmas[0] == R(1))) throw std::domain_error("lambda_from_sigma: sigma^0 must be 1");
  TruncatedSeries<R> sigma(sigmas.size() - 1, sigmas);
  return invert(sigma).negate_variable().coeffs();
}

// Inverse of lambda_from_sigma; the two structures are mutually opposite.
template <CoefficientRing R>
std::vector<R> sigma_from_lambda(std::span<const R> lambdas) {
  if (lambdas.empty() || !(lambdas[0] == R(1))) throw std::domain_error("sigma_from_lambda: lambda^0 must be 1");
  TruncatedSeries<R> lambda(lambdas.size() - 1, lambdas);
  return invert(lambda.negate_variable()).coeffs();
}

}  // namespace artin
