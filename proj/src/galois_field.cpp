#include "modlift/galois_field.hpp"

#include <ostream>
#include <string>

#include "modlift/errors.hpp"

namespace modlift {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const ResidueRing fp(p, 1);
  const std::uint64_t lead_inv = fp.inverse(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t factor = fp.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = static_cast<std::uint32_t>(fp.sub(a[shift + k], fp.mul(factor, b[k])));
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Order of the class of t in (F_p[t]/(f))^*, or 0 when t^(p^r-1) != 1.
std::uint64_t root_order_in_quotient(const Poly& f, std::uint32_t p) {
  const unsigned r = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t group_order = ipow(p, r) - 1;
  const ResidueRing fp(p, 1);
  auto mulmod = [&](const Poly& x, const Poly& y) {
    Poly prod(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        prod[i + j] = static_cast<std::uint32_t>(fp.add(prod[i + j], fp.mul(x[i], y[j])));
      }
    }
    return poly_mod(prod, f, p);
  };
  auto powmod = [&](std::uint64_t e) {
    Poly result{1};
    Poly base = poly_mod(Poly{0, 1}, f, p);
    while (e > 0) {
      if (e & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    trim(result);
    return result;
  };
  if (powmod(group_order) != Poly{1}) return 0;
  std::uint64_t order = group_order;
  for (const std::uint64_t ell : prime_factors(group_order)) {
    while (order % ell == 0 && powmod(order / ell) == Poly{1}) order /= ell;
  }
  return order;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t k = 0; k < d; ++k) {
        g[k] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_primitive_polynomial(std::uint32_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError("find_primitive_polynomial: " + std::to_string(p) + " is not prime");
  if (r < 1) throw DomainError("find_primitive_polynomial: degree must be >= 1");
  if (r == 1) {
    const ResidueRing fp(p, 1);
    for (std::uint32_t g = 1; g < p; ++g) {
      if (root_order_in_quotient(Poly{static_cast<std::uint32_t>(fp.neg(g)), 1}, p) == p - 1) {
        return {static_cast<std::uint32_t>(fp.neg(g)), 1};
      }
    }
  }
  const std::uint64_t count = ipow(p, r);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(r + 1, 0);
    std::uint64_t c = code;
    for (unsigned k = 0; k < r; ++k) {
      f[k] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p) && root_order_in_quotient(f, p) == count - 1) return f;
  }
  throw DomainError("find_primitive_polynomial: none found");  // unreachable for prime p
}

GaloisField::GaloisField(std::uint32_t p, unsigned r)
    : p_(p), r_(r), size_(ipow(p, r)), modulus_(find_primitive_polynomial(p, r)), prime_field_(p, 1) {}

void GaloisField::check(const FieldElement& x) const {
  if (x.coeffs.size() != r_) throw DomainError("FieldElement: wrong number of coordinates");
}

FieldElement GaloisField::zero() const { return FieldElement{std::vector<std::uint32_t>(r_, 0)}; }

FieldElement GaloisField::one() const { return from_int(1); }

FieldElement GaloisField::generator() const {
  // For r = 1 the class of t is the root of t - g, i.e. g itself.
  Poly t{0, 1};
  Poly reduced = poly_mod(t, modulus_, p_);
  FieldElement x = zero();
  for (std::size_t k = 0; k < reduced.size(); ++k) x.coeffs[k] = reduced[k];
  return x;
}

FieldElement GaloisField::from_int(std::int64_t k) const {
  FieldElement x = zero();
  x.coeffs[0] = static_cast<std::uint32_t>(prime_field_.reduce(k));
  return x;
}

FieldElement GaloisField::element(std::uint64_t index) const {
  if (index >= size_) throw DomainError("GaloisField::element: index out of range");
  FieldElement x = zero();
  for (unsigned k = 0; k < r_; ++k) {
    x.coeffs[k] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return x;
}

std::uint64_t GaloisField::index_of(const FieldElement& x) const {
  check(x);
  std::uint64_t index = 0;
  for (unsigned k = r_; k-- > 0;) index = index * p_ + x.coeffs[k];
  return index;
}

bool GaloisField::is_zero(const FieldElement& x) const {
  check(x);
  for (const auto c : x.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

FieldElement GaloisField::add(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  FieldElement z = zero();
  for (unsigned k = 0; k < r_; ++k) z.coeffs[k] = static_cast<std::uint32_t>(prime_field_.add(x.coeffs[k], y.coeffs[k]));
  return z;
}

FieldElement GaloisField::sub(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  FieldElement z = zero();
  for (unsigned k = 0; k < r_; ++k) z.coeffs[k] = static_cast<std::uint32_t>(prime_field_.sub(x.coeffs[k], y.coeffs[k]));
  return z;
}

FieldElement GaloisField::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement GaloisField::mul(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  Poly prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(prime_field_.add(prod[i + j], prime_field_.mul(x.coeffs[i], y.coeffs[j])));
    }
  }
  Poly reduced = poly_mod(prod, modulus_, p_);
  FieldElement z = zero();
  for (std::size_t k = 0; k < reduced.size(); ++k) z.coeffs[k] = reduced[k];
  return z;
}

FieldElement GaloisField::pow(const FieldElement& x, std::int64_t e) const {
  if (e < 0) return pow(inv(x), -e);
  FieldElement result = one();
  FieldElement base = x;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1) result = mul(result, base);
    base = mul(base, base);
    ue >>= 1;
  }
  return result;
}

FieldElement GaloisField::inv(const FieldElement& x) const {
  if (is_zero(x)) throw DomainError("GaloisField::inv: zero has no inverse");
  return pow(x, static_cast<std::int64_t>(size_ - 2));
}

FieldElement GaloisField::frobenius(const FieldElement& x, unsigned times) const {
  FieldElement y = x;
  for (unsigned k = 0; k < times; ++k) y = pow(y, p_);
  return y;
}

std::uint64_t GaloisField::element_order(const FieldElement& x) const {
  if (is_zero(x)) throw DomainError("element_order: zero has no multiplicative order");
  const std::uint64_t group_order = size_ - 1;
  std::uint64_t order = group_order;
  for (const std::uint64_t ell : prime_factors(group_order)) {
    while (order % ell == 0 && pow(x, static_cast<std::int64_t>(order / ell)) == one()) order /= ell;
  }
  return order;
}

ResidueMatrix GaloisField::regular_representation(const FieldElement& x) const {
  check(x);
  ResidueMatrix m(prime_field_, r_, r_);
  FieldElement basis = one();
  const FieldElement t = element(r_ > 1 ? p_ : 0);  // t itself when r > 1
  for (unsigned j = 0; j < r_; ++j) {
    const FieldElement image = mul(x, basis);
    for (unsigned i = 0; i < r_; ++i) m.set(i, j, image.coeffs[i]);
    if (r_ > 1) basis = mul(basis, t);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  bool first = true;
  for (std::size_t k = x.coeffs.size(); k-- > 0;) {
    if (x.coeffs[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || x.coeffs[k] != 1) os << x.coeffs[k];
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os;
}

}  // namespace modlift
