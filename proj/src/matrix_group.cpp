#include "modlift/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "modlift/errors.hpp"

namespace modlift {

MatrixGroup::MatrixGroup(Parts parts) : parts_(std::move(parts)) {
  const std::size_t n = parts_.elements.size();
  if (n == 0 || parts_.generators.empty()) throw DomainError("MatrixGroup: no elements or generators");
  if (parts_.parent.size() != n || parts_.parent_generator.size() != n) {
    throw DomainError("MatrixGroup: tree arrays do not match the element list");
  }
  if (!parts_.elements.front().is_identity()) throw DomainError("MatrixGroup: element 0 must be the identity");
  if (parts_.elements.front().ring().s() != 1) throw DomainError("MatrixGroup: elements must be over F_p");

  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(encode_bytes(parts_.elements[i]), i).second) {
      throw DomainError("MatrixGroup: duplicate element " + std::to_string(i));
    }
  }
  for (const ResidueMatrix& g : parts_.generators) {
    const auto slot = index_of(g);
    if (!slot) throw DomainError("MatrixGroup: generator is not an element");
    generator_index_.push_back(*slot);
  }

  const std::size_t gens = parts_.generators.size();
  right_mult_.assign(gens * n, 0);
  for (std::size_t slot = 0; slot < gens; ++slot) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = index_of(parts_.elements[i] * parts_.generators[slot]);
      if (!j) throw DomainError("MatrixGroup: element list is not closed");
      right_mult_[slot * n + i] = static_cast<std::uint32_t>(*j);
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t par = parts_.parent[i];
    const std::size_t slot = parts_.parent_generator[i];
    if (par >= i || slot >= gens || right_mult_[slot * n + par] != i) {
      throw DomainError("MatrixGroup: inconsistent discovery tree at element " + std::to_string(i));
    }
  }

  // Column j of the table from column parent(j): x * e_j = (x * e_parent) * gen.
  cayley_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) cayley_[i * n] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t par = parts_.parent[j];
    const std::size_t slot = parts_.parent_generator[j];
    for (std::size_t i = 0; i < n; ++i) cayley_[i * n + j] = right_mult_[slot * n + cayley_[i * n + par]];
  }
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cayley_[i * n + j] == 0) {
        inverse_[i] = static_cast<std::uint32_t>(j);
        break;
      }
    }
  }
}

std::optional<std::size_t> MatrixGroup::index_of(const ResidueMatrix& m) const {
  if (m.rows() != dimension() || m.cols() != dimension() || !(m.ring() == ring())) return std::nullopt;
  const auto it = index_.find(encode_bytes(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> MatrixGroup::word(std::size_t i) const {
  std::vector<std::size_t> out;
  while (i != 0) {
    out.push_back(parts_.parent_generator[i]);
    i = parts_.parent[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

MatrixGroup close_group(std::span<const ResidueMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw DomainError("close_group: no generators");
  const ResidueMatrix& first = generators.front();
  if (first.ring().s() != 1) throw DomainError("close_group: generators must be over F_p");
  for (const ResidueMatrix& g : generators) {
    if (!g.is_square() || g.rows() != first.rows() || !(g.ring() == first.ring())) {
      throw DimensionMismatch("close_group: generators differ in shape or ring");
    }
    if (!g.ring().is_unit(determinant(g))) throw SingularMatrix("close_group: singular generator");
  }

  MatrixGroup::Parts parts;
  parts.generators.assign(generators.begin(), generators.end());
  std::unordered_map<std::string, std::size_t> seen;
  auto discover = [&](ResidueMatrix m, std::size_t par, std::size_t slot) {
    std::string key = encode_bytes(m);
    if (seen.count(key)) return;
    if (parts.elements.size() >= cap) {
      throw CapExceeded("close_group: closure exceeds " + std::to_string(cap) + " elements");
    }
    seen.emplace(std::move(key), parts.elements.size());
    parts.elements.push_back(std::move(m));
    parts.parent.push_back(static_cast<std::uint32_t>(par));
    parts.parent_generator.push_back(static_cast<std::uint32_t>(slot));
  };
  discover(ResidueMatrix::identity(first.ring(), first.rows()), 0, 0);
  for (std::size_t next = 0; next < parts.elements.size(); ++next) {
    for (std::size_t slot = 0; slot < generators.size(); ++slot) {
      discover(parts.elements[next] * generators[slot], next, slot);
    }
  }
  return MatrixGroup(std::move(parts));
}

}  // namespace modlift
