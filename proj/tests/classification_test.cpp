#include "modlift/classification.hpp"

#include <gtest/gtest.h>

#include "modlift/lift_engine.hpp"
#include "oracles.hpp"

namespace {

using namespace modlift;

TEST(Classification, PrimePowers) {
  EXPECT_EQ(factor_prime_power(8), (std::pair<std::uint32_t, unsigned>{2, 3}));
  EXPECT_EQ(factor_prime_power(49), (std::pair<std::uint32_t, unsigned>{7, 2}));
  EXPECT_EQ(factor_prime_power(13), (std::pair<std::uint32_t, unsigned>{13, 1}));
  EXPECT_FALSE(factor_prime_power(6));
  EXPECT_FALSE(factor_prime_power(1));
  EXPECT_FALSE(factor_prime_power(0));
  EXPECT_TRUE(is_supported_q(9));
  EXPECT_FALSE(is_supported_q(11));
  EXPECT_FALSE(is_supported_q(6));
}

TEST(Classification, Columns) {
  EXPECT_EQ(table_modules(3, 2), (std::vector<std::string>{"V1", "V2", "V3", "Lambda"}));
  EXPECT_EQ(table_modules(2, 1), (std::vector<std::string>{"V1", "V2", "Lambda"}));
}

TEST(Classification, KnownTable) {
  EXPECT_TRUE(known_lift(2, 1, "V1"));
  EXPECT_TRUE(known_lift(2, 1, "V2"));
  EXPECT_TRUE(known_lift(2, 1, "Lambda"));
  EXPECT_FALSE(known_lift(2, 2, "V1"));
  EXPECT_TRUE(known_lift(5, 1, "V3"));
  EXPECT_TRUE(known_lift(5, 1, "V4"));
  EXPECT_FALSE(known_lift(5, 1, "V5"));
  EXPECT_FALSE(known_lift(5, 1, "V2"));
  EXPECT_FALSE(known_lift(3, 2, "V2"));
  EXPECT_FALSE(known_lift(3, 1, "Lambda"));
}

// Every cell below the top degree agrees with the known table.  The V_p and
// Lambda columns for q > 2 are checked separately below.
TEST(Classification, LowerColumnsMatch) {
  TableOptions options;
  options.max_q = 9;
  options.lift.s_max = 2;
  for (const ClassificationRow& row : classify_table(options)) {
    const bool top = row.module == "Lambda" || row.module == "V" + std::to_string(row.p);
    if (top && row.q > 2) continue;
    EXPECT_TRUE(row.matches()) << row.module << " q=" << row.q;
  }
}

// For the top columns the engine finds lifts for q in {3, 4, 5, 7}.  Each
// full-group witness is closed independently over Z/p^2Z: the lifted group
// has the same order as the group over F_p and reduces onto it, so it is an
// isomorphic lift.
TEST(Classification, TopColumnWitnessesCloseToIsomorphicGroups) {
  struct Cell {
    std::uint32_t p;
    unsigned r;
    const char* module;
  };
  const Cell cells[] = {{3, 1, "V3"}, {3, 1, "Lambda"}, {2, 2, "V2"}, {2, 2, "Lambda"}, {5, 1, "V5"}};
  for (const Cell& c : cells) {
    LiftOptions options;
    options.s_max = 2;
    options.path = LiftPath::Full;
    const RepresentationSpec spec = RepresentationSpec::parse(c.p, c.r, c.module);
    const LiftReport report = lift_to_precision(spec, options);
    ASSERT_TRUE(report.liftable) << c.module;
    std::vector<oracle::IntMat> gens, base;
    for (const ResidueMatrix& m : report.witness->generator_images) {
      gens.push_back(oracle::from(m));
      base.push_back(oracle::reduce(gens.back(), c.p));
    }
    const auto lifted = oracle::closure(gens, std::int64_t{c.p} * c.p, report.group_order);
    ASSERT_TRUE(lifted) << c.module << ": lifted group is larger than " << report.group_order;
    EXPECT_EQ(lifted->size(), report.group_order);
    const auto reduced = oracle::closure(base, c.p, report.group_order);
    ASSERT_TRUE(reduced);
    EXPECT_EQ(reduced->size(), report.group_order);
    const GeneratorImages im = generator_images(GaloisField(c.p, c.r), spec);
    EXPECT_EQ(base[0], oracle::from(im.alpha));
    EXPECT_EQ(base[1], oracle::from(im.beta));
    EXPECT_EQ(base[2], oracle::from(im.gamma));
  }
}

TEST(Classification, ParallelRunIsDeterministic) {
  TableOptions serial;
  serial.max_q = 7;
  serial.lift.s_max = 2;
  TableOptions parallel = serial;
  parallel.jobs = 4;
  const auto a = classify_table(serial), b = classify_table(parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_EQ(a[i].module, b[i].module);
    EXPECT_EQ(a[i].lift, b[i].lift);
    EXPECT_EQ(a[i].precision, b[i].precision);
    EXPECT_EQ(a[i].group_order, b[i].group_order);
  }
  EXPECT_EQ(a.front().q, 2u);
  EXPECT_EQ(a.back().module, "Lambda");
  EXPECT_EQ(a.back().q, 7u);
}

}  // namespace
