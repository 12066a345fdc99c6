#include "modlift/group_cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <system_error>
#include <thread>

#include "modlift/errors.hpp"

namespace modlift {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

json matrix_json(const ResidueMatrix& m) { return json(std::vector<std::uint64_t>(m.values().begin(), m.values().end())); }

ResidueMatrix matrix_from_json(const json& j, const ResidueRing& ring, std::size_t dim) {
  const auto values = j.get<std::vector<std::int64_t>>();
  if (values.size() != dim * dim) throw DomainError("cache: matrix has the wrong size");
  for (const std::int64_t v : values) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= ring.modulus()) throw DomainError("cache: entry out of range");
  }
  return ResidueMatrix(ring, dim, dim, values);
}

json payload_of(const MatrixGroup& group) {
  json payload;
  payload["p"] = group.ring().p();
  payload["dimension"] = group.dimension();
  json gens = json::array();
  for (const ResidueMatrix& g : group.parts().generators) gens.push_back(matrix_json(g));
  payload["generators"] = std::move(gens);
  json elements = json::array();
  for (const ResidueMatrix& g : group.elements()) elements.push_back(matrix_json(g));
  payload["elements"] = std::move(elements);
  payload["parent"] = group.parts().parent;
  payload["parent_generator"] = group.parts().parent_generator;
  return payload;
}

}  // namespace

GroupCache::GroupCache(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<GroupCache> GroupCache::from_environment() {
  const char* dir = std::getenv("MODLIFT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return GroupCache(dir);
}

std::string GroupCache::key(const RepresentationSpec& spec, GroupPath path) {
  std::string label;
  for (const char ch : spec.label()) label += (ch == '(' || ch == ')') ? '_' : ch;
  return "p" + std::to_string(spec.p()) + "_r" + std::to_string(spec.r()) + "_" + label + "_" + to_string(path) +
         "_L1";
}

std::filesystem::path GroupCache::file_for(const std::string& key) const { return root_ / (key + ".json"); }

std::shared_ptr<const MatrixGroup> GroupCache::load(const std::string& key,
                                                    std::span<const ResidueMatrix> generators) const {
  std::ifstream in(file_for(key), std::ios::binary);
  if (!in || generators.empty()) return nullptr;
  try {
    const json doc = json::parse(in);
    const json& payload = doc.at("payload");
    if (doc.at("sha256").get<std::string>() != sha256_hex(payload.dump())) return nullptr;

    const ResidueRing ring(payload.at("p").get<std::uint32_t>(), 1);
    const std::size_t dim = payload.at("dimension").get<std::size_t>();
    MatrixGroup::Parts parts;
    for (const json& g : payload.at("generators")) parts.generators.push_back(matrix_from_json(g, ring, dim));
    if (parts.generators.size() != generators.size()) return nullptr;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!(parts.generators[i] == generators[i])) return nullptr;
    }
    for (const json& g : payload.at("elements")) parts.elements.push_back(matrix_from_json(g, ring, dim));
    parts.parent = payload.at("parent").get<std::vector<std::uint32_t>>();
    parts.parent_generator = payload.at("parent_generator").get<std::vector<std::uint32_t>>();
    return std::make_shared<const MatrixGroup>(std::move(parts));
  } catch (const json::exception&) {
    return nullptr;
  } catch (const DomainError&) {
    return nullptr;
  }
}

void GroupCache::store(const std::string& key, const MatrixGroup& group) const {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw IoError("cannot create cache directory " + root_.string() + ": " + ec.message());
  json doc;
  doc["key"] = key;
  doc["payload"] = payload_of(group);
  doc["sha256"] = sha256_hex(doc["payload"].dump());

  // Write to a temporary name first so concurrent readers never see a torn file.
  const std::filesystem::path target = file_for(key);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::shared_ptr<const MatrixGroup> GroupCache::get(const RepresentationSpec& spec, GroupPath path,
                                                   std::span<const ResidueMatrix> generators, std::size_t cap) {
  const std::string k = key(spec, path);
  if (auto group = load(k, generators)) {
    if (group->order() <= cap) {
      ++stats_->hits;
      return group;
    }
  }
  ++stats_->misses;
  auto group = std::make_shared<const MatrixGroup>(close_group(generators, cap));
  store(k, *group);
  return group;
}

GroupSource GroupCache::source() {
  return [cache = *this](const RepresentationSpec& spec, GroupPath path, std::span<const ResidueMatrix> generators,
                         std::size_t cap) mutable { return cache.get(spec, path, generators, cap); };
}

}  // namespace modlift
