#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/checked.hpp"

namespace artin {

// Element of the Burnside ring of the procyclic group Z^ = Gal(F_q-bar / F_q):
// an integer combination of the transitive sets [Z/k]. Under the Artin map
// [Z/k] is the class of Spec F_{q^k}, so this also models Artin classes over F_q.
//
// Coefficients are checked 64-bit integers; overflow throws std::overflow_error.
class CyclicBurnside {
 public:
  CyclicBurnside() = default;
  // n * [Z/1]
  CyclicBurnside(std::int64_t n);  // NOLINT(google-explicit-constructor)

  static CyclicBurnside orbit(std::int64_t k, std::int64_t coeff = 1);

  // Orbit size -> coefficient, ascending, no zero entries.
  const std::map<std::int64_t, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::int64_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  std::int64_t max_orbit() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  // Number of fixed points of the e-th power of Frobenius: the F_{q^e}-point count.
  std::int64_t mark(std::int64_t e) const;

  CyclicBurnside& operator+=(const CyclicBurnside& o);
  CyclicBurnside& operator-=(const CyclicBurnside& o);
  CyclicBurnside& operator*=(const CyclicBurnside& o);

  friend CyclicBurnside operator+(CyclicBurnside a, const CyclicBurnside& b) { return a += b; }
  friend CyclicBurnside operator-(CyclicBurnside a, const CyclicBurnside& b) { return a -= b; }
  friend CyclicBurnside operator*(CyclicBurnside a, const CyclicBurnside& b) { return a *= b; }
  CyclicBurnside operator-() const;
  friend bool operator==(const CyclicBurnside&, const CyclicBurnside&) = default;

  // Positive and negative parts: x = positive_part() - negative_part().
  CyclicBurnside positive_part() const;
  CyclicBurnside negative_part() const;

 private:
  void add_term(std::int64_t k, std::int64_t c);

  std::map<std::int64_t, std::int64_t> coeffs_;
};

// Inverts mark(e) = sum_{k | e} k * a_k for e = 1..N (marks[e-1]).
// Throws std::domain_error when the inversion is not integral.
CyclicBurnside from_marks(std::span<const std::int64_t> marks);

// Marks at e = 1..n.
std::vector<std::int64_t> marks(const CyclicBurnside& x, std::int64_t n);

// Restriction of scalars from F_{q^d}: [Z/k] -> [Z/dk], additively.
CyclicBurnside induce(std::int64_t d, const CyclicBurnside& x);

// Base change to F_{q^d}: [Z/k] -> gcd(d,k) [Z/(k/gcd(d,k))], a ring map.
CyclicBurnside base_change(std::int64_t d, const CyclicBurnside& x);

// sigma^k of an effective element, from symmetric powers of a concrete realization.
CyclicBurnside symmetric_power_class(const CyclicBurnside& x, int k);

// lambda^0 .. lambda^N. Virtual elements use lambda_t(u - v) = lambda_t(u) / lambda_t(v).
std::vector<CyclicBurnside> lambda_series(const CyclicBurnside& x, int truncation);

CyclicBurnside lambda_op(const CyclicBurnside& x, int i, int truncation);

// "a·[k] + ..." with keys ascending; [1] renders as a bare integer, zero as "0".
std::string to_string(const CyclicBurnside& x);

nlohmann::ordered_json to_json(const CyclicBurnside& x);
CyclicBurnside cyclic_burnside_from_json(const nlohmann::ordered_json& j);

}  // namespace artin
