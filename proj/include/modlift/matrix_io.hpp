#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modlift/matrix.hpp"

namespace modlift {

inline constexpr const char* kMatrixSchema = "modlift-matrix-v1";

// Self-describing text form of one matrix over Z/p^sZ, entries row-major.
struct MatrixFile {
  std::string schema = kMatrixSchema;
  std::uint32_t p = 0;
  unsigned s = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<unsigned> block;
  std::vector<std::uint64_t> entries;

  friend bool operator==(const MatrixFile&, const MatrixFile&) = default;
};

MatrixFile to_matrix_file(const ResidueMatrix& m, std::optional<unsigned> block = std::nullopt);
ResidueMatrix to_matrix(const MatrixFile& file);

// Canonical layout: one key per line, one matrix row per line of "entries".
std::string format_matrix_file(const MatrixFile& file);
// Throws DomainError when the text is not a valid matrix file.
MatrixFile parse_matrix_file(const std::string& text);

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);  // IoError
MatrixFile read_matrix_file(const std::filesystem::path& path);                     // IoError, DomainError

}  // namespace modlift
