#include "modlift/linear_system.hpp"

#include <algorithm>
#include <string>

#include "modlift/errors.hpp"
#include "modlift/residue.hpp"

namespace modlift {

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p) {
  // p is prime: x^(p-2).
  std::uint64_t result = 1, base = x % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

using Terms = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// row <- row - factor * pivot
Terms subtract_multiple(const Terms& row, const Terms& pivot, std::uint32_t factor, std::uint32_t p) {
  Terms out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  const std::uint64_t neg = (p - factor) % p;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      const auto v = static_cast<std::uint32_t>(neg * pivot[j].second % p);
      if (v) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      const auto v = static_cast<std::uint32_t>((row[i].second + neg * pivot[j].second) % p);
      if (v) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LinearSystemFp::LinearSystemFp(std::uint32_t p, std::size_t num_unknowns)
    : p_(p), num_unknowns_(num_unknowns) {
  if (!is_prime(p)) throw DomainError("LinearSystemFp: modulus " + std::to_string(p) + " is not prime");
}

void LinearSystemFp::add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& terms,
                             std::int64_t rhs) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow row;
  for (std::size_t k = 0; k < sorted.size();) {
    const std::uint32_t index = sorted[k].first;
    if (index >= num_unknowns_) {
      throw DomainError("LinearSystemFp: unknown index " + std::to_string(index) + " out of range");
    }
    std::int64_t sum = 0;
    for (; k < sorted.size() && sorted[k].first == index; ++k) {
      sum = static_cast<std::int64_t>(reduce_mod(sum + reduce_mod(sorted[k].second, p_), p_));
    }
    if (sum != 0) row.terms.emplace_back(index, static_cast<std::uint32_t>(sum));
  }
  row.rhs = reduce_mod(rhs, p_);
  rows_.push_back(std::move(row));
}

void LinearSystemFp::add_dense_row(const std::vector<std::int64_t>& coefficients, std::int64_t rhs) {
  if (coefficients.size() > num_unknowns_) throw DomainError("LinearSystemFp: dense row too long");
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) terms.emplace_back(static_cast<std::uint32_t>(k), coefficients[k]);
  }
  add_row(terms, rhs);
}

FpSolution solve_linear_fp(const LinearSystemFp& system) {
  const std::uint32_t p = system.p();
  const std::size_t n = system.num_unknowns();
  struct Pivot {
    Terms terms;  // leading coefficient normalised to 1
    std::uint32_t rhs;
  };
  std::vector<Pivot> pivots;
  std::vector<std::int64_t> pivot_of(n, -1);
  FpSolution result;
  result.consistent = true;

  for (std::size_t r = 0; r < system.rows().size(); ++r) {
    Terms terms = system.rows()[r].terms;
    std::uint32_t rhs = system.rows()[r].rhs;
    // Reduce the leading term while a pivot owns it.
    while (!terms.empty()) {
      const auto [lead, coeff] = terms.front();
      const std::int64_t owner = pivot_of[lead];
      if (owner < 0) break;
      const Pivot& pv = pivots[static_cast<std::size_t>(owner)];
      terms = subtract_multiple(terms, pv.terms, coeff, p);
      rhs = static_cast<std::uint32_t>((rhs + static_cast<std::uint64_t>(p - coeff) * pv.rhs) % p);
    }
    if (terms.empty()) {
      if (rhs != 0 && result.consistent) {
        result.consistent = false;
        result.inconsistent_row = r;
      }
      continue;
    }
    const std::uint32_t inv = inverse_mod(terms.front().second, p);
    for (auto& t : terms) t.second = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.second) * inv % p);
    rhs = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rhs) * inv % p);
    pivot_of[terms.front().first] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back({std::move(terms), rhs});
  }

  result.rank = pivots.size();
  result.nullity = n - result.rank;
  if (!result.consistent) return result;

  // Back substitution: every non-leading term of a pivot sits to the right of
  // its leading unknown, so descending order resolves dependencies first.
  result.solution.assign(n, 0);
  for (std::size_t col = n; col-- > 0;) {
    const std::int64_t owner = pivot_of[col];
    if (owner < 0) continue;
    const Pivot& pv = pivots[static_cast<std::size_t>(owner)];
    std::uint64_t value = pv.rhs;
    for (std::size_t k = 1; k < pv.terms.size(); ++k) {
      const auto [index, coeff] = pv.terms[k];
      value = (value + static_cast<std::uint64_t>(p - coeff) * result.solution[index]) % p;
    }
    result.solution[col] = static_cast<std::uint32_t>(value);
  }
  return result;
}

bool satisfies(const LinearSystemFp& system, const std::vector<std::uint32_t>& x) {
  if (x.size() != system.num_unknowns()) return false;
  const std::uint64_t p = system.p();
  for (const SparseRow& row : system.rows()) {
    std::uint64_t lhs = 0;
    for (const auto& [index, coeff] : row.terms) lhs = (lhs + static_cast<std::uint64_t>(coeff) * x[index]) % p;
    if (lhs != row.rhs) return false;
  }
  return true;
}

}  // namespace modlift
