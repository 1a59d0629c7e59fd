#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artin/checked.hpp"
#include "artin/combinatorics.hpp"
#include "artin/cyclic_burnside.hpp"
#include "artin/gset.hpp"

namespace artin {

// L = prod_j F_{q^{n_j}}, recorded by the cycle type (n_1, ..., n_m) of Frobenius on its
// embeddings. The empty partition is the zero algebra.
struct AlgebraSpec {
  Partition parts;

  int degree() const { return parts.weight(); }
  // Class of Spec L: sum_j [Z/n_j].
  CyclicBurnside spec_class() const;

  // Parses "2,2" style input. Throws std::invalid_argument on malformed input.
  static AlgebraSpec parse(std::string_view text);
};

// Polynomial in the Lefschetz class with Artin-class coefficients; coeff(p) multiplies L^p.
class LefschetzPolynomial {
 public:
  LefschetzPolynomial() = default;
  explicit LefschetzPolynomial(std::vector<CyclicBurnside> by_power);
  // c * L^power
  static LefschetzPolynomial monomial(const CyclicBurnside& c, int power);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(by_power_.size()) - 1; }
  CyclicBurnside coeff(int power) const;
  const std::vector<CyclicBurnside>& by_power() const { return by_power_; }

  LefschetzPolynomial& operator+=(const LefschetzPolynomial& o);
  LefschetzPolynomial& operator-=(const LefschetzPolynomial& o);
  friend LefschetzPolynomial operator+(LefschetzPolynomial a, const LefschetzPolynomial& b) { return a += b; }
  friend LefschetzPolynomial operator-(LefschetzPolynomial a, const LefschetzPolynomial& b) { return a -= b; }
  friend LefschetzPolynomial operator*(const LefschetzPolynomial& a, const LefschetzPolynomial& b);
  friend bool operator==(const LefschetzPolynomial&, const LefschetzPolynomial&) = default;

  // Number of F_{q^e}-points: sum_p mark(coeff(p), e) * q^{e p}.
  BigInt count_points(std::int64_t q, std::int64_t e) const;

 private:
  void trim();
  std::vector<CyclicBurnside> by_power_;
};

// [L*] = L^n + a_1 L^{n-1} + ... + a_n with Artin-class coefficients.
class TorusClass {
 public:
  // a_0 .. a_n; a_0 must be 1.
  static TorusClass from_coefficients(std::vector<CyclicBurnside> coeffs);
  static TorusClass from_polynomial(const LefschetzPolynomial& p);

  int n() const { return static_cast<int>(coeffs_.size()) - 1; }
  // a_i, the coefficient of L^{n-i}.
  const CyclicBurnside& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<CyclicBurnside>& coefficients() const { return coeffs_; }
  LefschetzPolynomial polynomial() const;

  friend TorusClass operator*(const TorusClass& a, const TorusClass& b);
  friend bool operator==(const TorusClass&, const TorusClass&) = default;

 private:
  explicit TorusClass(std::vector<CyclicBurnside> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<CyclicBurnside> coeffs_;
};

// L - 1, the class of G_m.
TorusClass multiplicative_group();

// A single-generator map pi: S -> T with all fibres of size r, modelling a free
// algebra of rank r over a product of fields.
class FiberedAlgebra {
 public:
  FiberedAlgebra(FiniteGSet total, FiniteGSet base, std::vector<std::uint32_t> projection);

  const FiniteGSet& total() const { return total_; }
  const FiniteGSet& base() const { return base_; }
  const std::vector<std::uint32_t>& projection() const { return projection_; }
  int rank() const { return rank_; }

  // Spec L -> point.
  static FiberedAlgebra over_point(const AlgebraSpec& spec);

  // T_i = disjoint union over fibres of their i-subsets, with
  // L'_i = {(s, U) : s in the fibre of U, s not in U} -> T_i. Requires 1 <= i <= rank.
  FiberedAlgebra stratum(int i) const;

 private:
  FiniteGSet total_;
  FiniteGSet base_;
  std::vector<std::uint32_t> projection_;
  int rank_ = 0;
};

// Class of the units of a fibered algebra, by the stratification recursion.
LefschetzPolynomial units_class(const FiberedAlgebra& algebra);

// a_i = (-1)^i lambda^i([Spec L]) in B(Z^).
TorusClass class_via_lambda(const AlgebraSpec& spec);

// a_i = restriction of rho_i^(n) along Frobenius -> a permutation of the spec's cycle type.
TorusClass class_via_rho(const AlgebraSpec& spec);

// Stratify L~ by vanishing coordinates and recurse on the lower-rank strata.
TorusClass class_via_recursion(const AlgebraSpec& spec);

// Class of L* / G_m: coefficients (-1)^i lambda^i([Spec L] - 1), degree n - 1.
TorusClass norm_one_class(const AlgebraSpec& spec);

// One node of the stratification tree: the tuple alpha = (i_r, ..., i_1) (newest first)
// and the Artin class of the stratum base T_alpha.
struct Stratum {
  Composition alpha;
  CyclicBurnside base_class;
};

// Walks the full tree without memoization, calling visit at every node including the root.
void visit_strata(const AlgebraSpec& spec, const std::function<void(const Stratum&)>& visit);

// Sum_i mark(a_i, e) (q^e)^{n-i}.
BigInt count_points(const TorusClass& tc, std::int64_t q, std::int64_t e);

// prod_j (q^{lcm(n_j, e)} - 1)^{gcd(n_j, e)}
BigInt point_count_oracle(const AlgebraSpec& spec, std::int64_t q, std::int64_t e);

// Oracle count divided by q^e - 1; throws std::domain_error if the division is inexact.
BigInt norm_one_point_oracle(const AlgebraSpec& spec, std::int64_t q, std::int64_t e);

// Integer polynomials are stored by ascending power.
using IntPolynomial = std::vector<BigInt>;

// sum_i mark(a_i, 1) X^{n-i}
IntPolynomial char_poly(const TorusClass& tc);

// prod_j (X^{n_j} - 1)
IntPolynomial char_poly_oracle(const AlgebraSpec& spec);

std::string to_string(const IntPolynomial& p);

enum class Notation { Text, Latex };

// Text uses [k] for [Spec F_{q^k}] and 𝕃 for the Lefschetz class.
std::string render(const TorusClass& tc, Notation notation = Notation::Text);

// {"n": n, "coeffs": [{"power": p, "artin": {"k": c, ...}}, ...]}, powers descending,
// zero coefficients omitted.
nlohmann::ordered_json to_json(const TorusClass& tc);
TorusClass torus_class_from_json(const nlohmann::ordered_json& j);

}  // namespace artin
