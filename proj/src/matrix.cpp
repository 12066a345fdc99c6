#include "modlift/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "modlift/errors.hpp"

namespace modlift {

ResidueMatrix::ResidueMatrix(const ResidueRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ResidueMatrix::ResidueMatrix(const ResidueRing& ring, std::size_t rows, std::size_t cols,
                             std::span<const std::int64_t> values)
    : ResidueMatrix(ring, rows, cols) {
  if (values.size() != rows * cols) {
    throw DimensionMismatch("ResidueMatrix: expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(values.size()));
  }
  std::transform(values.begin(), values.end(), data_.begin(),
                 [&](std::int64_t v) { return ring_.reduce(v); });
}

ResidueMatrix ResidueMatrix::identity(const ResidueRing& ring, std::size_t n) {
  ResidueMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % ring.modulus();
  return m;
}

ResidueMatrix ResidueMatrix::reread(const ResidueRing& target) const {
  if (target.p() != ring_.p()) throw DomainError("reread: prime mismatch");
  ResidueMatrix out(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = target.reduce_unsigned(data_[k]);
  return out;
}

ResidueMatrix ResidueMatrix::transpose() const {
  ResidueMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return out;
}

bool ResidueMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (data_[i * cols_ + j] != (i == j ? 1 % ring_.modulus() : 0)) return false;
    }
  }
  return true;
}

bool ResidueMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

std::ostream& operator<<(std::ostream& os, const ResidueMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << "] over " << m.ring();
}

namespace {

void require_same_ring(const ResidueMatrix& a, const ResidueMatrix& b, const char* op) {
  if (!(a.ring() == b.ring())) throw DomainError(std::string(op) + ": ring mismatch");
}

}  // namespace

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_ring(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  const ResidueRing& ring = a.ring();
  const std::uint64_t mod = ring.modulus();
  std::vector<std::int64_t> acc(a.rows() * b.cols(), 0);
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = av[i * a.cols() + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& slot = acc[i * b.cols() + j];
        slot = static_cast<std::int64_t>((static_cast<std::uint64_t>(slot) + x * bv[k * b.cols() + j]) % mod);
      }
    }
  }
  return ResidueMatrix(ring, a.rows(), b.cols(), acc);
}

ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_ring(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add: shape mismatch");
  std::vector<std::int64_t> v(a.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = static_cast<std::int64_t>(a.ring().add(a.values()[k], b.values()[k]));
  }
  return ResidueMatrix(a.ring(), a.rows(), a.cols(), v);
}

ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_ring(a, b, "mat_sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_sub: shape mismatch");
  std::vector<std::int64_t> v(a.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = static_cast<std::int64_t>(a.ring().sub(a.values()[k], b.values()[k]));
  }
  return ResidueMatrix(a.ring(), a.rows(), a.cols(), v);
}

ResidueMatrix scale(const ResidueMatrix& a, std::int64_t k) {
  const std::uint64_t kk = a.ring().reduce(k);
  std::vector<std::int64_t> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<std::int64_t>(a.ring().mul(a.values()[i], kk));
  }
  return ResidueMatrix(a.ring(), a.rows(), a.cols(), v);
}

ResidueMatrix mat_pow(const ResidueMatrix& a, std::uint64_t e) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow: matrix is not square");
  ResidueMatrix result = ResidueMatrix::identity(a.ring(), a.rows());
  ResidueMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

// Working copy for in-place elimination.
struct Dense {
  std::size_t n;
  std::vector<std::uint64_t> v;
  std::uint64_t& at(std::size_t i, std::size_t j) { return v[i * n + j]; }
};

}  // namespace

ResidueMatrix mat_inverse(const ResidueMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inverse: matrix is not square");
  const ResidueRing& ring = a.ring();
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  std::vector<std::uint64_t> aug(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = a(i, j);
    aug[i * w + n + i] = 1 % ring.modulus();
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t row = col; row < n; ++row) {
      if (ring.is_unit(aug[row * w + col])) {
        pivot = row;
        break;
      }
    }
    if (pivot == n) throw SingularMatrix("mat_inverse: determinant is not a unit");
    if (pivot != col) {
      std::swap_ranges(aug.begin() + static_cast<std::ptrdiff_t>(pivot * w),
                       aug.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * w),
                       aug.begin() + static_cast<std::ptrdiff_t>(col * w));
    }
    const std::uint64_t inv = ring.inverse(aug[col * w + col]);
    for (std::size_t j = 0; j < w; ++j) aug[col * w + j] = ring.mul(aug[col * w + j], inv);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const std::uint64_t factor = aug[row * w + col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < w; ++j) {
        aug[row * w + j] = ring.sub(aug[row * w + j], ring.mul(factor, aug[col * w + j]));
      }
    }
  }
  ResidueMatrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, static_cast<std::int64_t>(aug[i * w + n + j]));
  }
  return out;
}

std::uint64_t determinant(const ResidueMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  const ResidueRing& ring = a.ring();
  const std::size_t n = a.rows();
  Dense m{n, std::vector<std::uint64_t>(a.values().begin(), a.values().end())};
  std::uint64_t det = 1 % ring.modulus();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    unsigned best = ring.s();
    for (std::size_t row = col; row < n; ++row) {
      const unsigned v = ring.valuation(m.at(row, col));
      if (v < best) {
        best = v;
        pivot = row;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = ring.neg(det);
    }
    // pivot = p^best * u with u a unit; every entry below is p^best * w.
    std::uint64_t scale_pow = 1;
    for (unsigned k = 0; k < best; ++k) scale_pow *= ring.p();
    const std::uint64_t unit_inv = ring.inverse(m.at(col, col) / scale_pow);
    det = ring.mul(det, m.at(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const std::uint64_t entry = m.at(row, col);
      if (entry == 0) continue;
      const std::uint64_t factor = ring.mul(entry / scale_pow, unit_inv);
      for (std::size_t j = col; j < n; ++j) {
        m.at(row, j) = ring.sub(m.at(row, j), ring.mul(factor, m.at(col, j)));
      }
    }
  }
  return det;
}

std::optional<std::uint64_t> matrix_order(const ResidueMatrix& a, std::uint64_t cap) {
  if (!a.is_square()) throw DimensionMismatch("matrix_order: matrix is not square");
  if (!a.ring().is_unit(determinant(a))) throw SingularMatrix("matrix_order: singular input");
  ResidueMatrix power = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * a;
  }
  return std::nullopt;
}

ResidueMatrix pascal_matrix(std::size_t n, const ResidueRing& ring) {
  if (n < 1) throw DomainError("pascal_matrix: n must be >= 1");
  ResidueMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, 0, 1);
    for (std::size_t j = 1; j <= i; ++j) {
      m.set(i, j, static_cast<std::int64_t>(ring.add(m(i - 1, j - 1), m(i - 1, j))));
    }
  }
  return m;
}

BlockView::BlockView(const ResidueMatrix& parent, std::size_t block_size, std::size_t i, std::size_t j)
    : parent_(parent), block_size_(block_size), row0_(0), col0_(0) {
  if (block_size == 0 || parent.rows() % block_size != 0 || parent.cols() % block_size != 0) {
    throw DimensionMismatch("BlockView: dimensions are not multiples of the block size");
  }
  if (i < 1 || j < 1 || i > parent.rows() / block_size || j > parent.cols() / block_size) {
    throw DomainError("BlockView: block index out of range");
  }
  row0_ = (i - 1) * block_size;
  col0_ = (j - 1) * block_size;
}

ResidueMatrix BlockView::to_matrix() const {
  ResidueMatrix out(parent_.ring(), block_size_, block_size_);
  for (std::size_t a = 0; a < block_size_; ++a) {
    for (std::size_t b = 0; b < block_size_; ++b) out.set(a, b, static_cast<std::int64_t>((*this)(a, b)));
  }
  return out;
}

ResidueMatrix block_get(const ResidueMatrix& m, std::size_t i, std::size_t j, std::size_t r) {
  return BlockView(m, r, i, j).to_matrix();
}

void block_set(ResidueMatrix& m, std::size_t i, std::size_t j, const ResidueMatrix& block) {
  const std::size_t r = block.rows();
  if (!block.is_square()) throw DimensionMismatch("block_set: block is not square");
  if (!(block.ring() == m.ring())) throw DomainError("block_set: ring mismatch");
  static_cast<void>(BlockView(m, r, i, j));  // validates indices
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      m.set((i - 1) * r + a, (j - 1) * r + b, static_cast<std::int64_t>(block(a, b)));
    }
  }
}

ResidueMatrix block_diagonal(std::span<const ResidueMatrix> blocks) {
  if (blocks.empty()) throw DomainError("block_diagonal: no blocks");
  std::size_t total = 0;
  for (const ResidueMatrix& b : blocks) {
    if (!b.is_square()) throw DimensionMismatch("block_diagonal: block is not square");
    if (!(b.ring() == blocks.front().ring())) throw DomainError("block_diagonal: ring mismatch");
    total += b.rows();
  }
  ResidueMatrix out(blocks.front().ring(), total, total);
  std::size_t offset = 0;
  for (const ResidueMatrix& b : blocks) {
    for (std::size_t a = 0; a < b.rows(); ++a) {
      for (std::size_t c = 0; c < b.rows(); ++c) out.set(offset + a, offset + c, static_cast<std::int64_t>(b(a, c)));
    }
    offset += b.rows();
  }
  return out;
}

std::string encode_bytes(const ResidueMatrix& m) {
  std::string out;
  out.reserve(m.values().size());
  for (const std::uint64_t v : m.values()) {
    if (v > 255) throw DomainError("encode_bytes: entry does not fit in a byte");
    out.push_back(static_cast<char>(v));
  }
  return out;
}

}  // namespace modlift
