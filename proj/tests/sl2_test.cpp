#include "modlift/sl2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "modlift/errors.hpp"
#include "modlift/modular_rep.hpp"
#include "oracles.hpp"

namespace {

using namespace modlift;

Sl2Element random_sl2(const GaloisField& f, std::mt19937_64& rng) {
  while (true) {
    Sl2Element g{f.element(rng() % f.size()), f.element(rng() % f.size()), f.element(rng() % f.size()), f.zero()};
    if (f.is_zero(g.a)) continue;
    // d = (1 + b c) / a
    g.d = f.mul(f.add(f.one(), f.mul(g.b, g.c)), f.inv(g.a));
    return g;
  }
}

FieldMatrix to_field(const GaloisField& f, const oracle::IntMat& m) {
  FieldMatrix out{m.size(), m[0].size(), {}};
  for (const auto& row : m)
    for (auto v : row) out.entries.push_back(f.from_int(v));
  return out;
}

TEST(Sl2, Generators) {
  const GaloisField f(3, 2);
  const Sl2Generators g = sl2_generators(f);
  EXPECT_EQ(g.alpha, (Sl2Element{f.one(), f.zero(), f.one(), f.one()}));
  EXPECT_EQ(g.beta, (Sl2Element{f.one(), f.one(), f.zero(), f.one()}));
  EXPECT_EQ(g.gamma.a, f.generator());
  EXPECT_EQ(g.gamma.d, f.inv(f.generator()));
  for (const Sl2Element& x : {g.alpha, g.beta, g.gamma}) EXPECT_EQ(sl2_determinant(f, x), f.one());
}

TEST(Sl2, ActionOfAlphaIsPascal) {
  const GaloisField f(7, 1);
  const ResidueMatrix am = restrict_scalars(f, action_matrix(f, sl2_generators(f).alpha, 4));
  EXPECT_EQ(am, pascal_matrix(5, ResidueRing(7, 1)));
}

TEST(Sl2, ActionOfGammaIsDiagonal) {
  const GaloisField f(5, 1);
  const FieldMatrix am = action_matrix(f, sl2_generators(f).gamma, 3);
  const FieldElement l = f.generator();
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t j = 0; j <= 3; ++j)
      EXPECT_EQ(am.at(k, j), k == j ? f.pow(l, 3 - 2 * static_cast<std::int64_t>(k)) : f.zero());
}

// Direct expansion of (ax+by)^(n-k) (cx+dy)^k over the prime field.
TEST(Sl2, ActionMatchesFormExpansion) {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const GaloisField f(p, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const Sl2Element g = random_sl2(f, rng);
      const oracle::IntMat gm{{g.a.coeffs[0], g.b.coeffs[0]}, {g.c.coeffs[0], g.d.coeffs[0]}};
      for (unsigned n = 0; n <= p; ++n) EXPECT_EQ(action_matrix(f, g, n), to_field(f, oracle::form_action(gm, n, p)));
    }
  }
}

TEST(Sl2, RepresentationsAreHomomorphisms) {
  std::mt19937_64 rng(22);
  const std::pair<std::uint32_t, unsigned> fields[] = {{2, 2}, {3, 2}, {2, 3}, {5, 1}};
  for (const auto& [p, r] : fields) {
    const GaloisField f(p, r);
    const std::vector<RepresentationSpec> specs = {
        RepresentationSpec::basic(p, r, 1), RepresentationSpec::basic(p, r, p), RepresentationSpec::lambda(p, r),
        RepresentationSpec::dual(RepresentationSpec::basic(p, r, 2 % (p + 1))),
        RepresentationSpec::twist(RepresentationSpec::basic(p, r, 1), r - 1)};
    for (const auto& spec : specs)
      for (int trial = 0; trial < 10; ++trial) {
        const Sl2Element g = random_sl2(f, rng), h = random_sl2(f, rng);
        const ResidueMatrix gh = representation_image(f, spec, sl2_multiply(f, g, h));
        EXPECT_EQ(gh, representation_image(f, spec, g) * representation_image(f, spec, h)) << spec.label();
        EXPECT_EQ(gh.rows(), spec.dimension());
      }
  }
}

TEST(Sl2, RestrictionOfScalarsIsMultiplicative) {
  std::mt19937_64 rng(23);
  const GaloisField f(2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix a{3, 3, {}}, b{3, 3, {}};
    for (int i = 0; i < 9; ++i) {
      a.entries.push_back(f.element(rng() % 8));
      b.entries.push_back(f.element(rng() % 8));
    }
    EXPECT_EQ(restrict_scalars(f, field_multiply(f, a, b)), restrict_scalars(f, a) * restrict_scalars(f, b));
  }
}

TEST(Sl2, FrobeniusTwist) {
  const GaloisField f(2, 2);
  const FieldMatrix m{1, 2, {f.generator(), f.one()}};
  EXPECT_EQ(frobenius_twist(f, m, 1), (FieldMatrix{1, 2, {f.add(f.generator(), f.one()), f.one()}}));
  EXPECT_EQ(frobenius_twist(f, m, 2), m);
  EXPECT_EQ(frobenius_twist(f, m, 0), m);
}

TEST(Sl2, DualIsAnInvolution) {
  const GaloisField f(3, 2);
  const GeneratorImages im = generator_images(f, RepresentationSpec::basic(3, 2, 2));
  for (const ResidueMatrix* m : {&im.alpha, &im.beta, &im.gamma}) EXPECT_EQ(dual_matrix(dual_matrix(*m)), *m);
  EXPECT_THROW(dual_matrix(ResidueMatrix(ResidueRing(3, 1), 2, 2)), SingularMatrix);
}

TEST(Sl2, SpecParsing) {
  EXPECT_EQ(RepresentationSpec::parse(3, 1, "V3").dimension(), 4u);
  EXPECT_EQ(RepresentationSpec::parse(2, 2, "Lambda").dimension(), 6u);
  EXPECT_EQ(RepresentationSpec::parse(2, 2, "twist1(V1)").label(), "twist1(V1)");
  EXPECT_EQ(RepresentationSpec::parse(5, 1, "dual(V2)").label(), "dual(V2)");
  EXPECT_EQ(RepresentationSpec::parse(3, 2, "V0").dimension(), 2u);
  for (const char* bad : {"V4", "W1", "dual(V1", "twist1(V1)", "twistx(V1)", "Lambda2", "", "V"})
    EXPECT_THROW(RepresentationSpec::parse(3, 1, bad), DomainError) << bad;
  EXPECT_THROW(RepresentationSpec::basic(4, 1, 1), DomainError);
}

// x^p and y^p span a submodule of V_p: (ax+by)^p = a^p x^p + b^p y^p.
TEST(Sl2, FrobeniusSubmoduleOfVp) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GaloisField f(p, 1);
    const auto group = std::make_shared<const MatrixGroup>(full_group(f, RepresentationSpec::basic(p, 1, p)));
    const ModularRep rep = ModularRep::natural(group);
    std::vector<std::uint32_t> xp(p + 1, 0), yp(p + 1, 0), mid(p + 1, 0);
    xp[0] = 1;
    yp[p] = 1;
    mid[1] = 1;
    const std::vector<std::vector<std::uint32_t>> basis{xp, yp};
    EXPECT_TRUE(invariant_subspace_check(rep, basis));
    if (p > 2) {
      const std::vector<std::vector<std::uint32_t>> other{xp, mid};
      EXPECT_FALSE(invariant_subspace_check(rep, other));
    }
  }
}

}  // namespace
