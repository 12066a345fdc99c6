#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "modlift/galois_field.hpp"
#include "modlift/matrix.hpp"
#include "modlift/matrix_group.hpp"
#include "modlift/sl2.hpp"

namespace modlift {

// A homomorphism from an indexed finite group into GL_m(Z/p^kZ): images[g]
// is the image of group element g.
struct ModularRep {
  std::shared_ptr<const MatrixGroup> group;
  ResidueRing ring;
  std::vector<ResidueMatrix> images;

  // The inclusion of a matrix group over F_p: every element is its own image.
  static ModularRep natural(std::shared_ptr<const MatrixGroup> group);

  std::size_t dimension() const { return images.front().rows(); }
  unsigned level() const { return ring.s(); }
  // Exhaustive check of images[g] images[h] = images[gh] and images[1] = I.
  bool is_homomorphism() const;
};

// g -> (images[g]^-1)^T on the same group.
ModularRep dual_rep(const ModularRep& rep);

// Which subgroup of SL_2(q) to close: the Borel subgroup <alpha, gamma> or the
// whole group <alpha, beta, gamma>.
enum class GroupPath { Borel, Full };

std::string to_string(GroupPath path);

std::vector<ResidueMatrix> path_generators(const GeneratorImages& images, GroupPath path);

// Image of <alpha, gamma> (resp. <alpha, beta, gamma>) in GL over F_p.
MatrixGroup borel_subgroup(const GaloisField& field, const RepresentationSpec& spec,
                           std::size_t cap = kDefaultClosureCap);
MatrixGroup full_group(const GaloisField& field, const RepresentationSpec& spec,
                       std::size_t cap = kDefaultClosureCap);

// Rank over F_p of a list of row vectors.
std::size_t rank_fp(std::uint32_t p, std::span<const std::vector<std::uint32_t>> vectors);

// True iff the F_p-span of the row vectors is stable under v -> v * image for
// the image of every group generator.
bool invariant_subspace_check(const ModularRep& rep, std::span<const std::vector<std::uint32_t>> basis);

}  // namespace modlift
