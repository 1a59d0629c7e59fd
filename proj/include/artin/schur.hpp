#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/checked.hpp"
#include "artin/combinatorics.hpp"
#include "artin/cyclic_burnside.hpp"

namespace artin {

inline constexpr int kDefaultSchurDegreeBound = 10;

// Largest n accepted by mark_matrix() and everything built on it.
int schur_degree_bound();
void set_schur_degree_bound(int bound);

// M[mu][lambda] = number of points of P_mu({1..n}) fixed by a permutation of cycle type lambda.
// Rows and columns are indexed by partitions(n) order. Invertibility is checked on construction.
class MarkMatrix {
 public:
  explicit MarkMatrix(int n);

  int n() const { return n_; }
  const std::vector<Partition>& index() const { return index_; }
  std::size_t position(const Partition& p) const;
  std::int64_t entry(std::size_t mu, std::size_t lambda) const { return entries_[mu][lambda]; }
  const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }

  // Solves marks = coeffs * M over the integers. Throws std::domain_error when the
  // rational solution is not integral.
  std::vector<std::int64_t> solve(const std::vector<std::int64_t>& marks) const;

 private:
  int n_;
  std::vector<Partition> index_;
  std::vector<std::vector<std::int64_t>> entries_;
  // M^{-1} = inverse_numer_ / inverse_denom_
  std::vector<std::vector<BigInt>> inverse_numer_;
  BigInt inverse_denom_;
};

// Cached per n; safe to call concurrently.
const MarkMatrix& mark_matrix(int n);

// Element of the Schur subring Sch_n of B(S_n), held both on the [P_mu] basis and as its
// mark vector (fixed points at each cycle type). Arithmetic runs on marks.
class SchurElement {
 public:
  static SchurElement from_basis(int n, std::vector<std::int64_t> basis);
  static SchurElement from_marks(int n, std::vector<std::int64_t> marks);
  static SchurElement one(int n);

  int n() const { return n_; }
  const std::vector<std::int64_t>& basis() const { return basis_; }
  const std::vector<std::int64_t>& marks() const { return marks_; }
  std::int64_t coefficient(const Partition& mu) const;
  std::int64_t mark_at(const Partition& cycle_type) const;
  // Mark at the identity: the cardinality of the (virtual) set.
  std::int64_t cardinality() const { return marks_.back(); }

  friend SchurElement operator+(const SchurElement& a, const SchurElement& b);
  friend SchurElement operator-(const SchurElement& a, const SchurElement& b);
  friend SchurElement operator*(const SchurElement& a, const SchurElement& b);
  SchurElement operator-() const;
  SchurElement scaled(std::int64_t c) const;
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

 private:
  SchurElement(int n, std::vector<std::int64_t> basis, std::vector<std::int64_t> marks)
      : n_(n), basis_(std::move(basis)), marks_(std::move(marks)) {}

  int n_ = 0;
  std::vector<std::int64_t> basis_;
  std::vector<std::int64_t> marks_;
};

// Class of P_alpha({1..n}); alpha is padded with its complement and sorted.
SchurElement p_class(int n, const Composition& alpha);

// sum over compositions (i_1..i_t) of i of (-1)^t [P_{i_t..i_1}]
SchurElement rho(int n, int i);

// lambda^i of the natural n-point S_n-set, via inversion of the symmetric-power series
// on mark vectors followed by a basis solve.
SchurElement lambda_top(int n, int i);

// Restriction along Frobenius -> a permutation of cycle type lambda, read as an Artin class.
CyclicBurnside restrict_to_cyclic(const SchurElement& x, const Partition& lambda);

// "2·[P_(2,2)] - [P_(3,1)]" in partitions(n) order.
std::string to_string(const SchurElement& x);
nlohmann::ordered_json to_json(const SchurElement& x);

}  // namespace artin
