#include "modlift/residue.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "modlift/errors.hpp"

namespace modlift {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ResidueRing::ResidueRing(std::uint32_t p, unsigned s) : p_(p), s_(s), modulus_(1) {
  if (!is_prime(p)) throw DomainError("ResidueRing: " + std::to_string(p) + " is not prime");
  if (s < 1) throw DomainError("ResidueRing: exponent must be >= 1");
  constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;
  for (unsigned i = 0; i < s; ++i) {
    modulus_ *= p;
    if (modulus_ >= kMaxModulus) {
      throw DomainError("ResidueRing: p^s exceeds 2^31");
    }
  }
}

std::uint64_t ResidueRing::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ResidueRing::pow(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t result = 1 % modulus_;
  x %= modulus_;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::uint64_t ResidueRing::inverse(std::uint64_t x) const {
  x %= modulus_;
  if (!is_unit(x)) {
    throw DomainError("ResidueRing: " + std::to_string(x) + " is not a unit mod " +
                      std::to_string(modulus_));
  }
  // Extended Euclid on (x, modulus).
  std::int64_t old_r = static_cast<std::int64_t>(x), r = static_cast<std::int64_t>(modulus_);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

unsigned ResidueRing::valuation(std::uint64_t x) const {
  x %= modulus_;
  if (x == 0) return s_;
  unsigned v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

std::ostream& operator<<(std::ostream& os, const ResidueRing& ring) {
  os << "Z/" << ring.p();
  if (ring.s() > 1) os << '^' << ring.s();
  return os << 'Z';
}

namespace {
void require_same_ring(const ResidueElement& a, const ResidueElement& b) {
  if (!(a.ring() == b.ring())) throw DomainError("ResidueElement: ring mismatch");
}
}  // namespace

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
  require_same_ring(a, b);
  return ResidueElement::from_canonical(a.ring_, a.ring_.add(a.value_, b.value_));
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
  require_same_ring(a, b);
  return ResidueElement::from_canonical(a.ring_, a.ring_.sub(a.value_, b.value_));
}

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
  require_same_ring(a, b);
  return ResidueElement::from_canonical(a.ring_, a.ring_.mul(a.value_, b.value_));
}

}  // namespace modlift
