#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "modlift/lift_engine.hpp"
#include "modlift/matrix_group.hpp"
#include "modlift/modular_rep.hpp"
#include "modlift/sl2.hpp"

namespace modlift {

// On-disk store of closed matrix groups (element list plus discovery tree).
// Each file carries a SHA-256 of its payload; an entry whose hash, generators
// or group structure does not check out is ignored and rebuilt.
class GroupCache {
 public:
  explicit GroupCache(std::filesystem::path root);

  // Root from MODLIFT_CACHE_DIR, or nullopt when the variable is unset/empty.
  static std::optional<GroupCache> from_environment();

  const std::filesystem::path& root() const { return root_; }

  static std::string key(const RepresentationSpec& spec, GroupPath path);
  std::filesystem::path file_for(const std::string& key) const;

  std::shared_ptr<const MatrixGroup> load(const std::string& key, std::span<const ResidueMatrix> generators) const;
  void store(const std::string& key, const MatrixGroup& group) const;

  // Loads or closes and stores.
  std::shared_ptr<const MatrixGroup> get(const RepresentationSpec& spec, GroupPath path,
                                         std::span<const ResidueMatrix> generators, std::size_t cap);

  GroupSource source();

  // Shared by copies of this cache, including those captured by source().
  std::size_t hits() const { return stats_->hits; }
  std::size_t misses() const { return stats_->misses; }

 private:
  struct Stats {
    std::atomic<std::size_t> hits{0};
    std::atomic<std::size_t> misses{0};
  };
  std::filesystem::path root_;
  std::shared_ptr<Stats> stats_ = std::make_shared<Stats>();
};

// Lower-case hex SHA-256 of the bytes of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace modlift
