#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modlift {

using BigInt = boost::multiprecision::cpp_int;

// Dense square matrix over Z with arbitrary-precision entries.
struct IntegerMatrix {
  std::size_t n = 0;
  std::vector<BigInt> entries;  // row-major

  const BigInt& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

// (P - I)^ell over Z for the n x n Pascal matrix P.
IntegerMatrix pascal_nilpotent_power(std::size_t n, unsigned ell);

struct PascalIdentity {
  std::string name;       // e.g. "(a0^2)_{3,1} = 2!"
  BigInt expected;
  BigInt actual;
  bool pass = false;
};

struct PascalLemmaReport {
  std::size_t n = 0;
  unsigned ell = 0;
  std::vector<PascalIdentity> identities;

  bool all_pass() const;
};

// Checks, with a0 = P - I for the n x n Pascal matrix P:
//   (a0^l)_{l+1,1} = l!              and (a0^l)_{j,1} = 0 for j <= l
//   (a0^l)_{l+2,2} = (l+1)!          and (a0^(l-1))_{j,2} = 0 for j < l+1
//   (a0^l)_{l+2,1} = binom(l+1, l-1) * l!
// Indices are 1-based.  Requires 1 <= l and l + 2 <= n; throws DomainError otherwise.
PascalLemmaReport pascal_lemma_check(std::size_t n, unsigned ell);

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

}  // namespace modlift
