#include "modlift/modular_rep.hpp"

#include "modlift/errors.hpp"
#include "modlift/linear_system.hpp"

namespace modlift {

ModularRep ModularRep::natural(std::shared_ptr<const MatrixGroup> group) {
  ModularRep rep{group, group->ring(), group->elements()};
  return rep;
}

bool ModularRep::is_homomorphism() const {
  const std::size_t n = group->order();
  if (images.size() != n || !images[group->identity_index()].is_identity()) return false;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (!(images[g] * images[h] == images[group->multiply(g, h)])) return false;
    }
  }
  return true;
}

ModularRep dual_rep(const ModularRep& rep) {
  ModularRep out{rep.group, rep.ring, {}};
  out.images.reserve(rep.images.size());
  for (const ResidueMatrix& m : rep.images) out.images.push_back(dual_matrix(m));
  return out;
}

std::string to_string(GroupPath path) { return path == GroupPath::Borel ? "borel" : "full"; }

std::vector<ResidueMatrix> path_generators(const GeneratorImages& images, GroupPath path) {
  if (path == GroupPath::Borel) return {images.alpha, images.gamma};
  return {images.alpha, images.beta, images.gamma};
}

MatrixGroup borel_subgroup(const GaloisField& field, const RepresentationSpec& spec, std::size_t cap) {
  const auto gens = path_generators(generator_images(field, spec), GroupPath::Borel);
  return close_group(gens, cap);
}

MatrixGroup full_group(const GaloisField& field, const RepresentationSpec& spec, std::size_t cap) {
  const auto gens = path_generators(generator_images(field, spec), GroupPath::Full);
  return close_group(gens, cap);
}

std::size_t rank_fp(std::uint32_t p, std::span<const std::vector<std::uint32_t>> vectors) {
  if (vectors.empty()) return 0;
  LinearSystemFp system(p, vectors.front().size());
  for (const auto& v : vectors) {
    if (v.size() != system.num_unknowns()) throw DimensionMismatch("rank_fp: vectors differ in length");
    system.add_dense_row(std::vector<std::int64_t>(v.begin(), v.end()), 0);
  }
  return solve_linear_fp(system).rank;
}

bool invariant_subspace_check(const ModularRep& rep, std::span<const std::vector<std::uint32_t>> basis) {
  if (rep.ring.s() != 1) throw DomainError("invariant_subspace_check: representation must be over F_p");
  const std::uint32_t p = rep.ring.p();
  const std::size_t m = rep.dimension();
  for (const auto& v : basis) {
    if (v.size() != m) throw DimensionMismatch("invariant_subspace_check: vector length differs from dimension");
  }
  const std::size_t base_rank = rank_fp(p, basis);
  for (std::size_t slot = 0; slot < rep.group->num_generators(); ++slot) {
    const ResidueMatrix& image = rep.images[rep.group->generator_index(slot)];
    for (const auto& v : basis) {
      std::vector<std::uint32_t> moved(m, 0);
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc = (acc + static_cast<std::uint64_t>(v[i]) * image(i, j)) % p;
        moved[j] = static_cast<std::uint32_t>(acc);
      }
      std::vector<std::vector<std::uint32_t>> extended(basis.begin(), basis.end());
      extended.push_back(std::move(moved));
      if (rank_fp(p, extended) != base_rank) return false;
    }
  }
  return true;
}

}  // namespace modlift
