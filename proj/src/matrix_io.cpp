#include "modlift/matrix_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "modlift/errors.hpp"

namespace modlift {

MatrixFile to_matrix_file(const ResidueMatrix& m, std::optional<unsigned> block) {
  MatrixFile file;
  file.p = m.ring().p();
  file.s = m.ring().s();
  file.rows = m.rows();
  file.cols = m.cols();
  file.block = block;
  file.entries.assign(m.values().begin(), m.values().end());
  return file;
}

ResidueMatrix to_matrix(const MatrixFile& file) {
  const ResidueRing ring(file.p, file.s);
  ResidueMatrix m(ring, file.rows, file.cols);
  for (std::size_t i = 0; i < file.rows; ++i) {
    for (std::size_t j = 0; j < file.cols; ++j) m.set(i, j, static_cast<std::int64_t>(file.entries[i * file.cols + j]));
  }
  return m;
}

std::string format_matrix_file(const MatrixFile& file) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema\": \"" << file.schema << "\",\n";
  out << "  \"p\": " << file.p << ",\n";
  out << "  \"s\": " << file.s << ",\n";
  out << "  \"rows\": " << file.rows << ",\n";
  out << "  \"cols\": " << file.cols << ",\n";
  if (file.block) out << "  \"block\": " << *file.block << ",\n";
  out << "  \"entries\": [";
  for (std::size_t i = 0; i < file.rows; ++i) {
    out << (i == 0 ? "\n    " : ",\n    ");
    for (std::size_t j = 0; j < file.cols; ++j) {
      if (j) out << ", ";
      out << file.entries[i * file.cols + j];
    }
  }
  out << (file.rows ? "\n  ]\n" : "]\n");
  out << "}\n";
  return out.str();
}

MatrixFile parse_matrix_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("matrix file: ") + e.what());
  }
  MatrixFile file;
  try {
    file.schema = doc.at("schema").get<std::string>();
    file.p = doc.at("p").get<std::uint32_t>();
    file.s = doc.at("s").get<unsigned>();
    file.rows = doc.at("rows").get<std::size_t>();
    file.cols = doc.at("cols").get<std::size_t>();
    if (doc.contains("block")) file.block = doc.at("block").get<unsigned>();
    file.entries = doc.at("entries").get<std::vector<std::uint64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix file: ") + e.what());
  }
  if (file.schema != kMatrixSchema) throw DomainError("matrix file: unknown schema '" + file.schema + "'");
  const ResidueRing ring(file.p, file.s);
  if (file.entries.size() != file.rows * file.cols) throw DomainError("matrix file: entry count differs from rows*cols");
  for (const std::uint64_t e : file.entries) {
    if (e >= ring.modulus()) throw DomainError("matrix file: entry " + std::to_string(e) + " out of range");
  }
  if (file.block && (*file.block == 0 || file.rows % *file.block != 0 || file.cols % *file.block != 0)) {
    throw DomainError("matrix file: block size does not divide the shape");
  }
  return file;
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << format_matrix_file(file);
  if (!out) throw IoError("write failed for " + path.string());
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_matrix_file(text.str());
}

}  // namespace modlift
