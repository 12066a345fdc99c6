#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "modlift/matrix.hpp"
#include "modlift/residue.hpp"

namespace modlift {

// Coordinates in the basis 1, t, ..., t^(r-1), each reduced mod p.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Coefficients c_0..c_{r-1}, 1 of the first monic degree-r polynomial that is
// irreducible with a primitive root, enumerating monic polynomials by the
// integer sum c_i p^i ascending.  For r = 1 the result is t - g with g the
// least primitive root mod p.
std::vector<std::uint32_t> find_primitive_polynomial(std::uint32_t p, unsigned r);

// Brute-force irreducibility test by trial division against every monic
// polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// GF(p^r) = F_p[t]/(f) with f primitive, so t generates the unit group.
class GaloisField {
 public:
  GaloisField(std::uint32_t p, unsigned r);

  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus_poly() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // the class of t
  FieldElement from_int(std::int64_t k) const;
  // Enumeration: coordinates are the base-p digits of index, least significant first.
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  bool is_zero(const FieldElement& x) const;
  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  // Throws DomainError for x = 0.
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, std::int64_t e) const;

  // x^(p^times).
  FieldElement frobenius(const FieldElement& x, unsigned times = 1) const;
  // Throws DomainError for x = 0.
  std::uint64_t element_order(const FieldElement& x) const;
  // Multiplication-by-x in the basis 1, t, ..., t^(r-1); column j holds x*t^j.
  ResidueMatrix regular_representation(const FieldElement& x) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(const FieldElement& x) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  ResidueRing prime_field_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace modlift
