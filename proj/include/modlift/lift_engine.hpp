#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "modlift/linear_system.hpp"
#include "modlift/matrix.hpp"
#include "modlift/matrix_group.hpp"
#include "modlift/modular_rep.hpp"
#include "modlift/sl2.hpp"

namespace modlift {

// The images of a level-p^k homomorphism with the same integer entries read
// in Z/p^(k+1)Z.  s(1) = I because the source image of 1 is I.
struct EntrywiseLift {
  ModularRep source;
  ResidueRing target;
  std::vector<ResidueMatrix> lifted;
};

EntrywiseLift entrywise_lift(const ModularRep& source);

// f(g, h) in M_m(F_p) with s(g) s(h) s(gh)^-1 = I + p^k f(g, h) for the
// entry-wise lift s of a level-p^k representation.  f satisfies the twisted
// cocycle identity
//   f(g,h) + f(gh,k) = rho(g) f(h,k) rho(g)^-1 + f(g,hk)
// where rho is the representation mod p.
class ObstructionCocycle {
 public:
  explicit ObstructionCocycle(EntrywiseLift lift);

  const EntrywiseLift& lift() const { return lift_; }
  const MatrixGroup& group() const { return *lift_.source.group; }
  std::uint32_t p() const { return lift_.target.p(); }
  unsigned source_level() const { return lift_.source.ring.s(); }
  std::size_t dimension() const { return dim_; }

  std::uint32_t entry(std::size_t g, std::size_t h, std::size_t i, std::size_t j) const {
    return values_[((g * group().order() + h) * dim_ + i) * dim_ + j];
  }
  ResidueMatrix value(std::size_t g, std::size_t h) const;

  // rho(g) and rho(g)^-1 over F_p.
  const ResidueMatrix& rho(std::size_t g) const { return rho_[g]; }
  const ResidueMatrix& rho_inverse(std::size_t g) const { return rho_inv_[g]; }

 private:
  EntrywiseLift lift_;
  std::size_t dim_;
  std::vector<std::uint8_t> values_;
  std::vector<ResidueMatrix> rho_;
  std::vector<ResidueMatrix> rho_inv_;
};

// Builds f on all |G|^2 pairs.  The cocycle identity is verified on a fixed
// pseudo-random sample of triples; throws std::logic_error if it fails.
ObstructionCocycle build_obstruction(const ModularRep& rep);

// Checks the cocycle identity on the given triples, or on every triple when
// `triples` is empty.  Returns the number of failures.
std::size_t cocycle_identity_failures(const ObstructionCocycle& f,
                                      std::span<const std::array<std::size_t, 3>> triples = {});

std::vector<std::array<std::size_t, 3>> sample_triples(std::size_t order, std::size_t count, std::uint64_t seed);

struct CoboundarySolution {
  bool consistent = false;
  // t(g) over F_p with t(1) = 0; empty when inconsistent.
  std::vector<ResidueMatrix> correction;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

// Solves f(g,h) = t(gh) - t(g) - rho(g) t(h) rho(g)^-1 for t with t(1) = 0.
//
// The discovery tree of the group expresses every t(g) as an affine function
// of the values on the generators, using the equations along tree edges.  The
// remaining equations f(g, x), x a generator, form a linear system in the
// generator values alone.  Equations on generator edges suffice: a lift that
// respects every product g * x is a homomorphism.  Free unknowns are set to 0.
CoboundarySolution solve_coboundary(const ObstructionCocycle& f);

// The same equations for every pair (g, h), with unknowns t(g), g != 1,
// numbered (g - 1) * m^2 + i * m + j.  Small groups only.
LinearSystemFp full_coboundary_system(const ObstructionCocycle& f);
std::vector<ResidueMatrix> corrections_from_full_solution(const ObstructionCocycle& f,
                                                          const std::vector<std::uint32_t>& x);

// s'(g) = (I + p^k t(g)) s(g) at level p^(k+1).
ModularRep apply_correction(const ObstructionCocycle& f, std::span<const ResidueMatrix> correction);

enum class LiftPath { Borel, Full, Both };

std::string to_string(LiftPath path);

// Supplies the matrix group for a spec/path; defaults to close_group.
using GroupSource = std::function<std::shared_ptr<const MatrixGroup>(
    const RepresentationSpec&, GroupPath, std::span<const ResidueMatrix>, std::size_t cap)>;

inline constexpr std::size_t kDefaultUnknownCap = 30000;

struct LiftOptions {
  unsigned s_max = 4;
  LiftPath path = LiftPath::Borel;
  std::size_t unknown_cap = kDefaultUnknownCap;
  std::size_t closure_cap = kDefaultClosureCap;
  GroupSource group_source;
};

// Generator images over Z/p^sZ certifying a lift of `source`.
struct Witness {
  ModularRep source;  // level 1
  ResidueRing ring;
  std::vector<ResidueMatrix> generator_images;  // one per group generator slot
};

struct LevelDiagnostics {
  unsigned from_level = 0;
  bool consistent = false;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

struct LiftReport {
  std::string label;
  std::uint32_t p = 0;
  unsigned r = 0;
  GroupPath path = GroupPath::Borel;
  bool liftable = false;               // lifts to Z/p^2Z
  unsigned achieved_precision = 1;     // largest s with a verified lift to Z/p^sZ
  std::size_t group_order = 0;
  std::size_t dimension = 0;
  std::vector<LevelDiagnostics> levels;
  std::optional<Witness> witness;      // at achieved_precision
  std::optional<bool> full_path_liftable;  // set when both paths ran
};

// Iterates obstruction + coboundary solve from level 1 up to s_max, stopping
// at the first inconsistent level.  Throws DomainError for s_max < 2.
LiftReport lift_rep(const ModularRep& level_one, unsigned s_max);

// Builds the group for the requested path and lifts its natural
// representation.  With LiftPath::Both, throws std::logic_error if the two
// paths disagree.  Throws CapExceeded if the full path needs more than
// unknown_cap unknowns (|G| m^2) or closure exceeds closure_cap.
LiftReport lift_to_precision(const RepresentationSpec& spec, const LiftOptions& options = {});

// Rebuilds all element images from the generator images along the group's
// discovery tree and checks: every Cayley-table product exactly at level
// p^s, reduction mod p to the source images, and that each generator image
// has order between the source order and the group order of that element.
bool witness_validate(const Witness& witness);
bool witness_validate(const LiftReport& report);

}  // namespace modlift
