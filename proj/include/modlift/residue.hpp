#pragma once

#include <cstdint>
#include <iosfwd>

namespace modlift {

bool is_prime(std::uint64_t n);

// The ring Z/p^sZ.  Moduli are capped below 2^31 so that a product of two
// canonical representatives always fits in 64 bits.
class ResidueRing {
 public:
  ResidueRing(std::uint32_t p, unsigned s);

  std::uint32_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t reduce_unsigned(std::uint64_t v) const { return v % modulus_; }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % modulus_; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + modulus_ - y) % modulus_; }
  std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : modulus_ - x; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % modulus_; }
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;

  bool is_unit(std::uint64_t x) const { return x % p_ != 0; }
  // Throws DomainError when x is not a unit.
  std::uint64_t inverse(std::uint64_t x) const;

  // Largest v with p^v | x, capped at s (so valuation(0) == s).
  unsigned valuation(std::uint64_t x) const;

  // The same prime at another exponent.
  ResidueRing with_exponent(unsigned s) const { return ResidueRing(p_, s); }

  friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
    return a.p_ == b.p_ && a.s_ == b.s_;
  }

 private:
  std::uint32_t p_;
  unsigned s_;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const ResidueRing& ring);

class ResidueElement {
 public:
  ResidueElement(const ResidueRing& ring, std::int64_t value)
      : ring_(ring), value_(ring.reduce(value)) {}

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t value() const { return value_; }
  bool is_unit() const { return ring_.is_unit(value_); }
  ResidueElement inverse() const { return from_canonical(ring_, ring_.inverse(value_)); }

  friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator-(const ResidueElement& a) {
    return from_canonical(a.ring_, a.ring_.neg(a.value_));
  }
  friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  static ResidueElement from_canonical(const ResidueRing& ring, std::uint64_t v) {
    return ResidueElement(ring, static_cast<std::int64_t>(v));
  }

  ResidueRing ring_;
  std::uint64_t value_;
};

}  // namespace modlift
