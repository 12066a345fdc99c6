#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modlift {

// One affine equation  sum_k coeff_k * x_{index_k} = rhs  over F_p.
struct SparseRow {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;  // (unknown, coefficient), sorted
  std::uint32_t rhs = 0;
};

// Sparse affine system over F_p.  Rows are normalised on insertion: terms
// sorted by unknown, duplicates merged, zero coefficients dropped.
class LinearSystemFp {
 public:
  LinearSystemFp(std::uint32_t p, std::size_t num_unknowns);

  std::uint32_t p() const { return p_; }
  std::size_t num_unknowns() const { return num_unknowns_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  // Coefficients and rhs may be any integers; they are reduced mod p.
  // Throws DomainError on an out-of-range unknown.
  void add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& terms, std::int64_t rhs);
  // Dense convenience form: coefficient k belongs to unknown k.
  void add_dense_row(const std::vector<std::int64_t>& coefficients, std::int64_t rhs);

 private:
  std::uint32_t p_;
  std::size_t num_unknowns_;
  std::vector<SparseRow> rows_;
};

struct FpSolution {
  bool consistent = false;
  // Particular solution with every free unknown set to 0 (empty when inconsistent).
  std::vector<std::uint32_t> solution;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  // First input row (in insertion order) that reduced to 0 = c with c != 0.
  std::optional<std::size_t> inconsistent_row;

  friend bool operator==(const FpSolution&, const FpSolution&) = default;
};

// Deterministic elimination over F_p.  Rows are consumed in input order and
// reduced against the existing pivots on their leftmost unknown; the solution
// returned is the unique one whose free unknowns are 0, so it does not depend
// on the elimination order.
FpSolution solve_linear_fp(const LinearSystemFp& system);

// True when x satisfies every row exactly.
bool satisfies(const LinearSystemFp& system, const std::vector<std::uint32_t>& x);

}  // namespace modlift
