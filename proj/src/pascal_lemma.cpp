#include "modlift/pascal_lemma.hpp"

#include <algorithm>

#include "modlift/errors.hpp"

namespace modlift {

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

namespace {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out{a.n, std::vector<BigInt>(a.n * a.n, 0)};
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) out.entries[i * a.n + j] += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

std::string entry_name(unsigned power, std::size_t i, std::size_t j) {
  return "(a0^" + std::to_string(power) + ")_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

IntegerMatrix pascal_nilpotent_power(std::size_t n, unsigned ell) {
  IntegerMatrix a0{n, std::vector<BigInt>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      a0.entries[i * n + j] = binomial(static_cast<unsigned>(i), static_cast<unsigned>(j));
    }
  }
  IntegerMatrix result{n, std::vector<BigInt>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) result.entries[i * n + i] = 1;
  for (unsigned k = 0; k < ell; ++k) result = multiply(result, a0);
  return result;
}

bool PascalLemmaReport::all_pass() const {
  return std::all_of(identities.begin(), identities.end(), [](const PascalIdentity& id) { return id.pass; });
}

PascalLemmaReport pascal_lemma_check(std::size_t n, unsigned ell) {
  if (ell < 1 || ell + 2 > n) {
    throw DomainError("pascal_lemma_check: need 1 <= l and l + 2 <= n (n=" + std::to_string(n) +
                      ", l=" + std::to_string(ell) + ")");
  }
  const IntegerMatrix power = pascal_nilpotent_power(n, ell);
  const IntegerMatrix prev = pascal_nilpotent_power(n, ell - 1);
  PascalLemmaReport report{n, ell, {}};
  auto record = [&](std::string name, const BigInt& expected, const BigInt& actual) {
    report.identities.push_back({std::move(name), expected, actual, expected == actual});
  };
  // 1-based (i, j) -> 0-based storage.
  auto at = [](const IntegerMatrix& m, std::size_t i, std::size_t j) { return m.at(i - 1, j - 1); };

  record(entry_name(ell, ell + 1, 1) + " = " + std::to_string(ell) + "!", factorial(ell), at(power, ell + 1, 1));
  for (std::size_t j = 1; j <= ell; ++j) record(entry_name(ell, j, 1) + " = 0", 0, at(power, j, 1));

  record(entry_name(ell, ell + 2, 2) + " = " + std::to_string(ell + 1) + "!", factorial(ell + 1),
         at(power, ell + 2, 2));
  for (std::size_t j = 1; j < ell + 1; ++j) record(entry_name(ell - 1, j, 2) + " = 0", 0, at(prev, j, 2));

  record(entry_name(ell, ell + 2, 1) + " = C(" + std::to_string(ell + 1) + "," + std::to_string(ell - 1) + ")*" +
             std::to_string(ell) + "!",
         binomial(ell + 1, ell - 1) * factorial(ell), at(power, ell + 2, 1));
  return report;
}

}  // namespace modlift
