#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "artin/torus_class.hpp"

namespace artin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct Mismatch {
  std::int64_t q;
  std::int64_t e;
  BigInt expected;
  BigInt got;
};

// First grid point (q ascending, then e) where the class's point count differs from the oracle.
std::optional<Mismatch> find_point_count_mismatch(const TorusClass& tc, const AlgebraSpec& spec, std::int64_t qmax,
                                                  std::int64_t emax);

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
