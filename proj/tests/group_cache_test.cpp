#include "modlift/group_cache.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "modlift/lift_engine.hpp"

namespace {

using namespace modlift;
namespace fs = std::filesystem;

class GroupCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("modlift_cache_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(GroupCacheTest, Keys) {
  const GroupCache cache(dir_);
  const auto spec = RepresentationSpec::parse(2, 2, "twist1(V1)");
  EXPECT_EQ(GroupCache::key(spec, GroupPath::Borel), "p2_r2_twist1_V1__borel_L1");
  EXPECT_EQ(cache.file_for("k"), dir_ / "k.json");
}

TEST_F(GroupCacheTest, WarmRunsHitAndDecideTheSame) {
  GroupCache cache(dir_);
  LiftOptions options;
  options.s_max = 2;
  options.path = LiftPath::Both;
  options.group_source = cache.source();
  std::vector<bool> cold;
  for (const char* label : {"V1", "V2", "V3", "Lambda"})
    cold.push_back(lift_to_precision(RepresentationSpec::parse(3, 1, label), options).liftable);
  EXPECT_EQ(cache.misses(), 8u);
  EXPECT_EQ(cache.hits(), 0u);

  std::vector<bool> warm;
  for (const char* label : {"V1", "V2", "V3", "Lambda"})
    warm.push_back(lift_to_precision(RepresentationSpec::parse(3, 1, label), options).liftable);
  EXPECT_EQ(cache.hits(), 8u);
  EXPECT_EQ(warm, cold);
}

TEST_F(GroupCacheTest, CorruptEntriesAreRebuilt) {
  GroupCache cache(dir_);
  const GaloisField f(3, 1);
  const auto spec = RepresentationSpec::basic(3, 1, 2);
  const auto gens = path_generators(generator_images(f, spec), GroupPath::Full);
  const auto group = cache.get(spec, GroupPath::Full, gens, kDefaultClosureCap);
  const std::string key = GroupCache::key(spec, GroupPath::Full);
  ASSERT_TRUE(cache.load(key, gens));

  // Tamper with one element: the hash no longer matches.
  nlohmann::json doc;
  std::ifstream(cache.file_for(key)) >> doc;
  doc["payload"]["elements"][3][0] = (doc["payload"]["elements"][3][0].get<int>() + 1) % 3;
  std::ofstream(cache.file_for(key)) << doc.dump();
  EXPECT_FALSE(cache.load(key, gens));

  // Re-hash the tampered payload: the structure check catches it instead.
  doc["sha256"] = sha256_hex(doc["payload"].dump());
  std::ofstream(cache.file_for(key)) << doc.dump();
  EXPECT_FALSE(cache.load(key, gens));

  std::ofstream(cache.file_for(key)) << "garbage";
  EXPECT_FALSE(cache.load(key, gens));

  const std::size_t misses = cache.misses();
  const auto rebuilt = cache.get(spec, GroupPath::Full, gens, kDefaultClosureCap);
  EXPECT_EQ(cache.misses(), misses + 1);
  EXPECT_EQ(rebuilt->order(), group->order());
  EXPECT_TRUE(cache.load(key, gens));
}

TEST_F(GroupCacheTest, DifferentGeneratorsMiss) {
  GroupCache cache(dir_);
  const GaloisField f(3, 1);
  const auto spec = RepresentationSpec::basic(3, 1, 1);
  const auto gens = path_generators(generator_images(f, spec), GroupPath::Borel);
  cache.get(spec, GroupPath::Borel, gens, kDefaultClosureCap);
  const std::vector<ResidueMatrix> swapped{gens[1], gens[0]};
  EXPECT_FALSE(cache.load(GroupCache::key(spec, GroupPath::Borel), swapped));
}

}  // namespace
