#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modlift/lift_engine.hpp"
#include "modlift/linear_system.hpp"
#include "modlift/matrix.hpp"
#include "modlift/sl2.hpp"

namespace modlift {

// Which lift of the torus generator conjugates in the commuting condition.
//   Entrywise:   the integer entries of gamma's image read mod p^2.
//   PrimeToP:    the unique power of the entrywise lift that reduces to
//                gamma and has the same (prime-to-p) order as gamma.
enum class TorusLift { Entrywise, PrimeToP };

std::string to_string(TorusLift lift);

// Where a constraint row came from: condition 1 is b^p = I, condition 2 is
// b b^c = b^c b, for b = a + q.  Blocks are r x r and 1-based; (u, v) is the
// 0-based entry in the full matrix.
struct CosetRowOrigin {
  int condition = 0;
  std::size_t block_i = 0;
  std::size_t block_j = 0;
  std::size_t u = 0;
  std::size_t v = 0;
};

// Affine conditions over F_p on q = p Q with Q in M_m(F_p): unknown i*m + j
// is Q_{ij}.  b = a + q is a candidate lift of alpha's image with b^p = I
// commuting with its conjugate by c.  Any lift of the Borel image must admit
// such a q, so an inconsistent system rules out a lift to Z/p^2Z.
struct CosetConstraintSystem {
  std::uint32_t p = 0;
  unsigned r = 0;
  std::string label;
  ResidueMatrix a;   // over Z/p^2Z
  ResidueMatrix c;   // over Z/p^2Z
  ResidueMatrix a0;  // a - I
  LinearSystemFp system;
  std::vector<CosetRowOrigin> origins;  // one per system row

  std::size_t dimension() const { return a.rows(); }
};

CosetConstraintSystem build_coset_system(std::uint32_t p, unsigned r, const std::string& label,
                                         const ResidueMatrix& alpha_image, const ResidueMatrix& gamma_image,
                                         TorusLift torus = TorusLift::PrimeToP);

// V_n(p^r).
CosetConstraintSystem build_coset_system(std::uint32_t p, unsigned r, unsigned n,
                                         TorusLift torus = TorusLift::PrimeToP);

CosetConstraintSystem build_coset_system(const RepresentationSpec& spec, TorusLift torus = TorusLift::PrimeToP);

bool coset_consistent(const CosetConstraintSystem& system);

// Rows of the unreduced system whose coefficients all vanish but whose
// constant does not: each one is on its own a contradiction 0 = nonzero.
std::vector<std::size_t> contradictory_rows(const CosetConstraintSystem& system);

// a^p + sum_i a^i q a^(p-1-i) over Z/p^2Z, the expansion of (a + q)^p when
// every entry of q is divisible by p.
ResidueMatrix coset_power_closed_form(const ResidueMatrix& a, const ResidueMatrix& q, std::uint32_t p);

struct CosetCrossCheck {
  bool liftable = false;
  bool coset_consistent = false;
  // Fails only when a lift exists but the coset system is inconsistent.
  bool pass() const { return !liftable || coset_consistent; }
};

CosetCrossCheck coset_cross_check_detail(const RepresentationSpec& spec, const LiftOptions& options = {});
bool coset_cross_check(const RepresentationSpec& spec, const LiftOptions& options = {});

}  // namespace modlift
