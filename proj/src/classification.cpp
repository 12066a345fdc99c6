#include "modlift/classification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "modlift/errors.hpp"
#include "modlift/residue.hpp"
#include "modlift/sl2.hpp"

namespace modlift {

std::optional<std::pair<std::uint32_t, unsigned>> factor_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1 || p > UINT32_MAX) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), r};
}

bool is_supported_q(std::uint64_t q) { return std::ranges::find(kSupportedQ, q) != std::end(kSupportedQ); }

std::vector<std::string> table_modules(std::uint32_t p, unsigned) {
  std::vector<std::string> out;
  for (std::uint32_t n = 1; n <= p; ++n) out.push_back("V" + std::to_string(n));
  out.push_back("Lambda");
  return out;
}

bool known_lift(std::uint32_t p, unsigned r, const std::string& module) {
  const RepresentationSpec spec = RepresentationSpec::parse(p, r, module);
  if (spec.kind() == RepresentationSpec::Kind::Lambda) return p == 2 && r == 1;
  if (spec.kind() != RepresentationSpec::Kind::Basic) {
    throw DomainError("known_lift: only V_n and Lambda are classified");
  }
  const unsigned n = spec.degree();
  if (r != 1) return false;
  if (p == 2) return n == 1 || n == 2;
  return n + 2 == p || n + 1 == p;
}

ClassificationRow classify_cell(std::uint32_t p, unsigned r, const std::string& module, const LiftOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const RepresentationSpec spec = RepresentationSpec::parse(p, r, module);
  const LiftReport report = lift_to_precision(spec, options);
  ClassificationRow row;
  row.q = spec.q();
  row.p = p;
  row.r = r;
  row.module = module;
  row.lift = report.liftable;
  row.expected = known_lift(p, r, module);
  row.path = to_string(options.path);
  row.precision = report.achieved_precision;
  row.group_order = report.group_order;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<ClassificationRow> classify_table(const TableOptions& options) {
  struct Cell {
    std::uint32_t p;
    unsigned r;
    std::string module;
  };
  std::vector<Cell> cells;
  for (std::uint64_t q = 2; q <= options.max_q; ++q) {
    if (!options.allow_large && !is_supported_q(q)) continue;
    const auto pr = factor_prime_power(q);
    if (!pr) continue;
    for (const std::string& module : table_modules(pr->first, pr->second)) cells.push_back({pr->first, pr->second, module});
  }

  std::vector<ClassificationRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = classify_cell(cells[i].p, cells[i].r, cells[i].module, options.lift);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    const unsigned jobs = std::max(1u, options.jobs);
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  // Cells were generated in (q, column) order, so rows already are sorted.
  return rows;
}

}  // namespace modlift
