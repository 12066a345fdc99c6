#include "modlift/coset_system.hpp"

#include <stdexcept>

#include "modlift/errors.hpp"
#include "modlift/galois_field.hpp"

namespace modlift {

std::string to_string(TorusLift lift) { return lift == TorusLift::Entrywise ? "entrywise" : "prime-to-p"; }

namespace {

// m / p over F_p for a matrix over Z/p^2Z whose entries are all multiples of p.
ResidueMatrix divide_by_p(const ResidueMatrix& m, const char* what) {
  const std::uint32_t p = m.ring().p();
  const ResidueRing fp(p, 1);
  ResidueMatrix out(fp, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) % p != 0) throw std::logic_error(std::string(what) + " is not divisible by p");
      out.set(i, j, static_cast<std::int64_t>(m(i, j) / p));
    }
  }
  return out;
}

ResidueMatrix prime_to_p_lift(const ResidueMatrix& c, const ResidueMatrix& gamma) {
  const std::uint32_t p = c.ring().p();
  const auto order = matrix_order(gamma, 1u << 20);
  if (!order) throw std::logic_error("coset system: torus generator order not found");
  const std::uint64_t d = *order;
  if (d % p == 0) throw DomainError("coset system: torus generator order is divisible by p");
  // c^(p u) with p u = 1 mod d reduces to gamma and has order d.
  std::uint64_t u = 0;
  if (d > 1) {
    for (u = 1; (static_cast<std::uint64_t>(p) * u) % d != 1; ++u) {
    }
  }
  return mat_pow(c, static_cast<std::uint64_t>(p) * u);
}

}  // namespace

CosetConstraintSystem build_coset_system(std::uint32_t p, unsigned r, const std::string& label,
                                         const ResidueMatrix& alpha_image, const ResidueMatrix& gamma_image,
                                         TorusLift torus) {
  const ResidueRing ring(p, 2);
  const std::size_t m = alpha_image.rows();
  if (alpha_image.ring().s() != 1 || gamma_image.ring().s() != 1 || alpha_image.ring().p() != p) {
    throw DomainError("build_coset_system: images must be over F_p");
  }
  if (m % r != 0 || gamma_image.rows() != m) throw DimensionMismatch("build_coset_system: block size mismatch");

  const ResidueMatrix a = alpha_image.reread(ring);
  const ResidueMatrix c = torus == TorusLift::Entrywise ? gamma_image.reread(ring)
                                                        : prime_to_p_lift(gamma_image.reread(ring), gamma_image);
  const ResidueMatrix identity = ResidueMatrix::identity(ring, m);
  const ResidueMatrix c_inv = mat_inverse(c);
  const ResidueMatrix a_c = c_inv * a * c;

  const ResidueRing fp(p, 1);
  const ResidueMatrix abar = alpha_image;
  const ResidueMatrix cbar = c.reread(fp);
  const ResidueMatrix cbar_inv = c_inv.reread(fp);
  const ResidueMatrix abar_c = a_c.reread(fp);
  const ResidueMatrix D = divide_by_p(mat_pow(a, p) - identity, "a^p - I");
  const ResidueMatrix E = divide_by_p(a * a_c - a_c * a, "a a^c - a^c a");

  CosetConstraintSystem out{p, r, label, a, c, a - identity, LinearSystemFp(p, m * m), {}};

  auto unknown = [m](std::size_t k, std::size_t l) { return static_cast<std::uint32_t>(k * m + l); };
  auto origin = [&](int condition, std::size_t u, std::size_t v) {
    return CosetRowOrigin{condition, u / r + 1, v / r + 1, u, v};
  };

  // (a + q)^p = I:  D + sum_i abar^i Q abar^(p-1-i) = 0.
  std::vector<ResidueMatrix> powers{ResidueMatrix::identity(fp, m)};
  for (std::uint32_t i = 1; i < p; ++i) powers.push_back(powers.back() * abar);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
      for (std::uint32_t i = 0; i < p; ++i) {
        const ResidueMatrix& left = powers[i];
        const ResidueMatrix& right = powers[p - 1 - i];
        for (std::size_t k = 0; k < m; ++k) {
          if (left(u, k) == 0) continue;
          for (std::size_t l = 0; l < m; ++l) {
            if (right(l, v) != 0) terms.emplace_back(unknown(k, l), static_cast<std::int64_t>(left(u, k) * right(l, v)));
          }
        }
      }
      out.system.add_row(terms, -static_cast<std::int64_t>(D(u, v)));
      out.origins.push_back(origin(1, u, v));
    }
  }

  // (a + q)(a + q)^c = (a + q)^c (a + q), dropping the q q^c terms:
  //   E + Q abar^c + abar cbar^-1 Q cbar - abar^c Q - cbar^-1 Q cbar abar = 0.
  const ResidueMatrix a_cinv = abar * cbar_inv;
  const ResidueMatrix c_a = cbar * abar;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
      for (std::size_t l = 0; l < m; ++l) terms.emplace_back(unknown(u, l), abar_c(l, v));
      for (std::size_t k = 0; k < m; ++k) terms.emplace_back(unknown(k, v), -static_cast<std::int64_t>(abar_c(u, k)));
      for (std::size_t k = 0; k < m; ++k) {
        const std::int64_t left_plus = a_cinv(u, k);
        const std::int64_t left_minus = cbar_inv(u, k);
        if (left_plus == 0 && left_minus == 0) continue;
        for (std::size_t l = 0; l < m; ++l) {
          const std::int64_t coeff = left_plus * static_cast<std::int64_t>(cbar(l, v)) -
                                     left_minus * static_cast<std::int64_t>(c_a(l, v));
          if (coeff != 0) terms.emplace_back(unknown(k, l), coeff);
        }
      }
      out.system.add_row(terms, -static_cast<std::int64_t>(E(u, v)));
      out.origins.push_back(origin(2, u, v));
    }
  }
  return out;
}

CosetConstraintSystem build_coset_system(const RepresentationSpec& spec, TorusLift torus) {
  const GaloisField field(spec.p(), spec.r());
  const GeneratorImages images = generator_images(field, spec);
  return build_coset_system(spec.p(), spec.r(), spec.label(), images.alpha, images.gamma, torus);
}

CosetConstraintSystem build_coset_system(std::uint32_t p, unsigned r, unsigned n, TorusLift torus) {
  if (n < 1) throw DomainError("build_coset_system: n must be >= 1");
  return build_coset_system(RepresentationSpec::basic(p, r, n), torus);
}

bool coset_consistent(const CosetConstraintSystem& system) { return solve_linear_fp(system.system).consistent; }

std::vector<std::size_t> contradictory_rows(const CosetConstraintSystem& system) {
  std::vector<std::size_t> out;
  const auto& rows = system.system.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].terms.empty() && rows[i].rhs != 0) out.push_back(i);
  }
  return out;
}

ResidueMatrix coset_power_closed_form(const ResidueMatrix& a, const ResidueMatrix& q, std::uint32_t p) {
  ResidueMatrix sum = mat_pow(a, p);
  ResidueMatrix left = ResidueMatrix::identity(a.ring(), a.rows());
  for (std::uint32_t i = 0; i < p; ++i) {
    sum = sum + left * q * mat_pow(a, p - 1 - i);
    left = left * a;
  }
  return sum;
}

CosetCrossCheck coset_cross_check_detail(const RepresentationSpec& spec, const LiftOptions& options) {
  LiftOptions two = options;
  two.s_max = 2;
  CosetCrossCheck out;
  out.liftable = lift_to_precision(spec, two).liftable;
  out.coset_consistent = coset_consistent(build_coset_system(spec));
  return out;
}

bool coset_cross_check(const RepresentationSpec& spec, const LiftOptions& options) {
  return coset_cross_check_detail(spec, options).pass();
}

}  // namespace modlift
