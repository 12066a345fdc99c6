#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlift/lift_engine.hpp"

namespace modlift {

inline constexpr std::uint64_t kSupportedQ[] = {2, 3, 4, 5, 7, 8, 9};

// (p, r) with q = p^r, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> factor_prime_power(std::uint64_t q);

bool is_supported_q(std::uint64_t q);

// Table columns for one q: V1 ... Vp, then Lambda.
std::vector<std::string> table_modules(std::uint32_t p, unsigned r);

// The known answer for lifting to Z/p^2Z: V_n(p^r) lifts iff r = 1 and
// either p = 2 with n in {1, 2} or p odd with n in {p-2, p-1}; Lambda(p^r)
// lifts iff p^r = 2.
bool known_lift(std::uint32_t p, unsigned r, const std::string& module);

struct ClassificationRow {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  unsigned r = 0;
  std::string module;
  bool lift = false;
  bool expected = false;
  std::string path;
  unsigned precision = 1;
  std::size_t group_order = 0;
  double seconds = 0.0;

  bool matches() const { return lift == expected; }
};

ClassificationRow classify_cell(std::uint32_t p, unsigned r, const std::string& module, const LiftOptions& options);

struct TableOptions {
  std::uint64_t max_q = 9;
  bool allow_large = false;
  unsigned jobs = 1;
  LiftOptions lift;
};

// Every cell for q <= max_q (supported q only unless allow_large), sorted by
// q and then column order.  Cells run on `jobs` threads.
std::vector<ClassificationRow> classify_table(const TableOptions& options);

}  // namespace modlift
