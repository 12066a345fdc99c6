#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlift/matrix.hpp"

namespace modlift {

inline constexpr std::size_t kDefaultClosureCap = 10000;

// A finite group of invertible matrices over F_p, stored as its element list
// in breadth-first discovery order from the identity (index 0).
//
// Every non-identity element i was first reached as element(parent(i)) *
// generator(parent_generator(i)), which gives each element a canonical word
// in the generators.  The Cayley table is filled by following those words.
class MatrixGroup {
 public:
  struct Parts {
    std::vector<ResidueMatrix> generators;
    std::vector<ResidueMatrix> elements;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> parent_generator;
  };

  // Rebuilds indices and tables from stored parts; validates the BFS tree
  // and closure, throwing DomainError on inconsistent data.
  explicit MatrixGroup(Parts parts);

  std::size_t order() const { return parts_.elements.size(); }
  std::size_t dimension() const { return parts_.elements.front().rows(); }
  const ResidueRing& ring() const { return parts_.elements.front().ring(); }
  std::size_t identity_index() const { return 0; }

  const ResidueMatrix& element(std::size_t i) const { return parts_.elements[i]; }
  const std::vector<ResidueMatrix>& elements() const { return parts_.elements; }
  std::optional<std::size_t> index_of(const ResidueMatrix& m) const;

  std::size_t num_generators() const { return parts_.generators.size(); }
  const ResidueMatrix& generator(std::size_t slot) const { return parts_.generators[slot]; }
  std::size_t generator_index(std::size_t slot) const { return generator_index_[slot]; }

  std::size_t multiply(std::size_t i, std::size_t j) const { return cayley_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  // element(i) * generator(slot).
  std::size_t times_generator(std::size_t i, std::size_t slot) const {
    return right_mult_[slot * order() + i];
  }

  std::size_t parent(std::size_t i) const { return parts_.parent[i]; }
  std::size_t parent_generator(std::size_t i) const { return parts_.parent_generator[i]; }
  // Generator slots whose product, left to right, is element(i).
  std::vector<std::size_t> word(std::size_t i) const;

  const Parts& parts() const { return parts_; }

 private:
  Parts parts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> generator_index_;
  std::vector<std::uint32_t> right_mult_;
  std::vector<std::uint32_t> cayley_;
  std::vector<std::uint32_t> inverse_;
};

// Breadth-first closure under right multiplication by the generators.
// Throws CapExceeded when more than cap elements appear, SingularMatrix for a
// singular generator, DomainError for an empty generator list.
MatrixGroup close_group(std::span<const ResidueMatrix> generators, std::size_t cap = kDefaultClosureCap);

}  // namespace modlift
