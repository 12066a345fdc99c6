#include "modlift/matrix_group.hpp"

#include <gtest/gtest.h>

#include "modlift/errors.hpp"
#include "modlift/modular_rep.hpp"
#include "oracles.hpp"

namespace {

using namespace modlift;

std::size_t sl2_order(std::size_t q) { return q * (q * q - 1); }

TEST(MatrixGroup, NaturalModuleGivesSl2) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const GaloisField f(p, r);
    const std::size_t q = f.size();
    EXPECT_EQ(full_group(f, RepresentationSpec::basic(p, r, 1)).order(), sl2_order(q));
    EXPECT_EQ(borel_subgroup(f, RepresentationSpec::basic(p, r, 1)).order(), q * (q - 1));
  }
}

TEST(MatrixGroup, KnownOrders) {
  EXPECT_EQ(full_group(GaloisField(3, 1), RepresentationSpec::basic(3, 1, 1)).order(), 24u);
  EXPECT_EQ(full_group(GaloisField(3, 2), RepresentationSpec::basic(3, 2, 2)).order(), 360u);
  EXPECT_EQ(borel_subgroup(GaloisField(5, 1), RepresentationSpec::basic(5, 1, 1)).order(), 20u);
  EXPECT_EQ(borel_subgroup(GaloisField(2, 2), RepresentationSpec::lambda(2, 2)).order(), 12u);
  const ResidueMatrix a(ResidueRing(2, 1), 2, 2, std::vector<std::int64_t>{1, 0, 1, 1});
  EXPECT_EQ(close_group(std::vector<ResidueMatrix>{a}).order(), 2u);
}

// Even-degree modules kill -I, so the image is PSL_2.
TEST(MatrixGroup, EvenDegreeGivesPsl2) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GaloisField f(p, 1);
    EXPECT_EQ(full_group(f, RepresentationSpec::basic(p, 1, 2)).order(), sl2_order(p) / 2);
    EXPECT_EQ(full_group(f, RepresentationSpec::basic(p, 1, 3)).order(), sl2_order(p));
  }
}

TEST(MatrixGroup, TablesMatchMatrixProducts) {
  const GaloisField f(3, 1);
  const MatrixGroup g = full_group(f, RepresentationSpec::basic(3, 1, 2));
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_TRUE((g.element(i) * g.element(g.inverse(i))).is_identity());
    for (std::size_t j = 0; j < g.order(); ++j) EXPECT_EQ(g.element(g.multiply(i, j)), g.element(i) * g.element(j));
    for (std::size_t s = 0; s < g.num_generators(); ++s)
      EXPECT_EQ(g.times_generator(i, s), g.multiply(i, g.generator_index(s)));
    ResidueMatrix w = ResidueMatrix::identity(g.ring(), g.dimension());
    for (std::size_t s : g.word(i)) w = w * g.generator(s);
    EXPECT_EQ(w, g.element(i));
    EXPECT_EQ(g.index_of(g.element(i)), i);
  }
  EXPECT_TRUE(g.element(0).is_identity());
}

TEST(MatrixGroup, ClosureMatchesOracle) {
  const GaloisField f(2, 2);
  const GeneratorImages im = generator_images(f, RepresentationSpec::basic(2, 2, 2));
  const std::vector<ResidueMatrix> gens{im.alpha, im.gamma};
  const MatrixGroup g = close_group(gens);
  const auto want = oracle::closure({oracle::from(im.alpha), oracle::from(im.gamma)}, 2, 10000);
  ASSERT_TRUE(want);
  ASSERT_EQ(g.order(), want->size());
  for (const auto& m : g.elements()) EXPECT_TRUE(want->count(oracle::from(m)));
}

TEST(MatrixGroup, Errors) {
  const ResidueRing f3(3, 1);
  EXPECT_THROW(close_group(std::vector<ResidueMatrix>{}), DomainError);
  EXPECT_THROW(close_group(std::vector<ResidueMatrix>{ResidueMatrix(f3, 2, 2)}), SingularMatrix);
  EXPECT_THROW(full_group(GaloisField(3, 2), RepresentationSpec::basic(3, 2, 1), 100), CapExceeded);
}

TEST(MatrixGroup, RebuildFromParts) {
  const MatrixGroup g = borel_subgroup(GaloisField(5, 1), RepresentationSpec::basic(5, 1, 2));
  const MatrixGroup copy(g.parts());
  EXPECT_EQ(copy.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) EXPECT_EQ(copy.multiply(i, j), g.multiply(i, j));
  MatrixGroup::Parts broken = g.parts();
  broken.parent[3] = 7;
  EXPECT_THROW(MatrixGroup{broken}, DomainError);
}

TEST(ModularRep, NaturalAndDual) {
  const auto g = std::make_shared<const MatrixGroup>(full_group(GaloisField(3, 1), RepresentationSpec::basic(3, 1, 1)));
  const ModularRep rep = ModularRep::natural(g);
  EXPECT_TRUE(rep.is_homomorphism());
  const ModularRep d = dual_rep(rep);
  EXPECT_TRUE(d.is_homomorphism());
  ModularRep bad = rep;
  bad.images[1] = bad.images[2];
  EXPECT_FALSE(bad.is_homomorphism());
}

}  // namespace
