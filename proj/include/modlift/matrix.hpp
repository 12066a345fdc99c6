#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modlift/residue.hpp"

namespace modlift {

// Dense row-major matrix over Z/p^sZ with canonical entries in [0, p^s).
class ResidueMatrix {
 public:
  ResidueMatrix(const ResidueRing& ring, std::size_t rows, std::size_t cols);
  // Values are reduced into the ring.
  ResidueMatrix(const ResidueRing& ring, std::size_t rows, std::size_t cols,
                std::span<const std::int64_t> values);

  static ResidueMatrix identity(const ResidueRing& ring, std::size_t n);

  const ResidueRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = ring_.reduce(v); }
  std::span<const std::uint64_t> values() const { return data_; }

  // Same integer entries read in another Z/p^kZ (an entry-wise lift when k
  // grows, a reduction when k shrinks).
  ResidueMatrix reread(const ResidueRing& target) const;
  ResidueMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  ResidueRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const ResidueMatrix& m);

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix scale(const ResidueMatrix& a, std::int64_t k);

// Binary powering.
ResidueMatrix mat_pow(const ResidueMatrix& a, std::uint64_t e);

// Gauss-Jordan elimination with unit pivots: the pivot of each column is the
// first remaining row whose entry there is a unit.  Throws SingularMatrix.
ResidueMatrix mat_inverse(const ResidueMatrix& a);

// Determinant by elimination over the local ring Z/p^sZ, pivoting on an
// entry of least p-adic valuation so that every elimination multiplier is
// an exact quotient.
std::uint64_t determinant(const ResidueMatrix& a);

// Least k <= cap with a^k = I, or nullopt when the cap is exceeded.
// Throws SingularMatrix for singular input.
std::optional<std::uint64_t> matrix_order(const ResidueMatrix& a, std::uint64_t cap);

// n x n lower-triangular matrix with entry (i, j) = binom(i, j) (0-based).
ResidueMatrix pascal_matrix(std::size_t n, const ResidueRing& ring);

// The (i, j) block of size r, 1-based, as in the block-matrix notation.
class BlockView {
 public:
  BlockView(const ResidueMatrix& parent, std::size_t block_size, std::size_t i, std::size_t j);

  std::size_t size() const { return block_size_; }
  std::uint64_t operator()(std::size_t a, std::size_t b) const {
    return parent_(row0_ + a, col0_ + b);
  }
  ResidueMatrix to_matrix() const;

 private:
  const ResidueMatrix& parent_;
  std::size_t block_size_;
  std::size_t row0_;
  std::size_t col0_;
};

ResidueMatrix block_get(const ResidueMatrix& m, std::size_t i, std::size_t j, std::size_t r);
void block_set(ResidueMatrix& m, std::size_t i, std::size_t j, const ResidueMatrix& block);

// Block-diagonal matrix with the given square blocks.
ResidueMatrix block_diagonal(std::span<const ResidueMatrix> blocks);

// Row-major entries as one byte per entry; requires every entry < 256.
std::string encode_bytes(const ResidueMatrix& m);

}  // namespace modlift
