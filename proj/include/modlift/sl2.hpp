#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modlift/galois_field.hpp"
#include "modlift/matrix.hpp"

namespace modlift {

// (a b; c d) in SL_2(p^r).
struct Sl2Element {
  FieldElement a, b, c, d;

  friend bool operator==(const Sl2Element&, const Sl2Element&) = default;
};

Sl2Element sl2_identity(const GaloisField& field);
Sl2Element sl2_multiply(const GaloisField& field, const Sl2Element& g, const Sl2Element& h);
// Entry-wise x -> x^(p^k).
Sl2Element sl2_frobenius(const GaloisField& field, const Sl2Element& g, unsigned k);
FieldElement sl2_determinant(const GaloisField& field, const Sl2Element& g);

// alpha = (1 0; 1 1), beta = (1 1; 0 1), gamma = diag(l, l^-1) with l = t the
// primitive element of the field.  <alpha, gamma> is the Borel subgroup;
// <alpha, beta> is all of SL_2(q).
struct Sl2Generators {
  Sl2Element alpha, beta, gamma;
};
Sl2Generators sl2_generators(const GaloisField& field);

// Dense matrix over GF(p^r).
struct FieldMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<FieldElement> entries;  // row-major

  const FieldElement& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  FieldElement& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

FieldMatrix field_identity(const GaloisField& field, std::size_t n);
FieldMatrix field_multiply(const GaloisField& field, const FieldMatrix& a, const FieldMatrix& b);

// Action of g on degree-n forms in the basis x^n, x^(n-1)y, ..., y^n with
// x.g = ax + by, y.g = cx + dy; row k+1 holds the coordinates of
// (x^(n-k) y^k).g, so action_matrix(gh) = action_matrix(g) action_matrix(h).
FieldMatrix action_matrix(const GaloisField& field, const Sl2Element& g, unsigned n);

// Replaces each entry by its r x r regular representation over F_p.
ResidueMatrix restrict_scalars(const GaloisField& field, const FieldMatrix& m);

// Every entry raised to p^k.
FieldMatrix frobenius_twist(const GaloisField& field, const FieldMatrix& m, unsigned k);

// (M^-1)^T; throws SingularMatrix.
ResidueMatrix dual_matrix(const ResidueMatrix& m);

// Which F_p SL_2(p^r)-module to build.
class RepresentationSpec {
 public:
  enum class Kind { Basic, Lambda, Dual, Twist };

  static RepresentationSpec basic(std::uint32_t p, unsigned r, unsigned n);
  static RepresentationSpec lambda(std::uint32_t p, unsigned r);
  static RepresentationSpec dual(const RepresentationSpec& inner);
  static RepresentationSpec twist(const RepresentationSpec& inner, unsigned k);
  // "V3", "Lambda", "dual(V2)", "twist1(V1)", ...; throws DomainError.
  static RepresentationSpec parse(std::uint32_t p, unsigned r, const std::string& label);

  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t q() const;
  Kind kind() const { return kind_; }
  unsigned degree() const { return n_; }         // Basic only
  unsigned twist_power() const { return k_; }    // Twist only
  const RepresentationSpec& inner() const { return *inner_; }  // Dual / Twist only
  std::size_t dimension() const;                 // over F_p
  std::string label() const;

 private:
  RepresentationSpec(std::uint32_t p, unsigned r, Kind kind) : p_(p), r_(r), kind_(kind) {}

  std::uint32_t p_;
  unsigned r_;
  Kind kind_;
  unsigned n_ = 0;
  unsigned k_ = 0;
  std::shared_ptr<const RepresentationSpec> inner_;
};

// Image over F_p of g in the representation.
ResidueMatrix representation_image(const GaloisField& field, const RepresentationSpec& spec, const Sl2Element& g);

struct GeneratorImages {
  ResidueMatrix alpha, beta, gamma;
};
GeneratorImages generator_images(const GaloisField& field, const RepresentationSpec& spec);

}  // namespace modlift
