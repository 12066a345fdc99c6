#include "modlift/lift_engine.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "modlift/errors.hpp"

namespace modlift {

EntrywiseLift entrywise_lift(const ModularRep& source) {
  const ResidueRing target = source.ring.with_exponent(source.ring.s() + 1);
  EntrywiseLift lift{source, target, {}};
  lift.lifted.reserve(source.images.size());
  for (const ResidueMatrix& m : source.images) lift.lifted.push_back(m.reread(target));
  return lift;
}

ObstructionCocycle::ObstructionCocycle(EntrywiseLift lift) : lift_(std::move(lift)), dim_(lift_.source.dimension()) {
  const MatrixGroup& grp = group();
  const std::size_t n = grp.order();
  const ResidueRing fp(lift_.target.p(), 1);
  const std::uint64_t pk = lift_.source.ring.modulus();
  if (fp.p() > 255) throw DomainError("ObstructionCocycle: p must be < 256");

  rho_.reserve(n);
  rho_inv_.reserve(n);
  std::vector<ResidueMatrix> lifted_inv;
  lifted_inv.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    rho_.push_back(lift_.lifted[g].reread(fp));
    rho_inv_.push_back(mat_inverse(rho_.back()));
    lifted_inv.push_back(mat_inverse(lift_.lifted[g]));
  }

  const std::size_t mm = dim_ * dim_;
  values_.assign(n * n * mm, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const ResidueMatrix defect = lift_.lifted[g] * lift_.lifted[h] * lifted_inv[grp.multiply(g, h)] -
                                   ResidueMatrix::identity(lift_.target, dim_);
      std::uint8_t* out = &values_[(g * n + h) * mm];
      for (std::size_t e = 0; e < mm; ++e) {
        const std::uint64_t v = defect.values()[e];
        if (v % pk != 0) {
          throw std::logic_error("ObstructionCocycle: source is not a homomorphism at level p^" +
                                 std::to_string(lift_.source.ring.s()));
        }
        out[e] = static_cast<std::uint8_t>(v / pk);
      }
    }
  }
}

ResidueMatrix ObstructionCocycle::value(std::size_t g, std::size_t h) const {
  ResidueMatrix out(ResidueRing(p(), 1), dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out.set(i, j, entry(g, h, i, j));
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> sample_triples(std::size_t order, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, order - 1);
  std::vector<std::array<std::size_t, 3>> out(count);
  for (auto& t : out) t = {pick(rng), pick(rng), pick(rng)};
  return out;
}

std::size_t cocycle_identity_failures(const ObstructionCocycle& f,
                                      std::span<const std::array<std::size_t, 3>> triples) {
  const MatrixGroup& grp = f.group();
  std::size_t failures = 0;
  auto check = [&](std::size_t g, std::size_t h, std::size_t k) {
    const ResidueMatrix lhs = f.value(g, h) + f.value(grp.multiply(g, h), k);
    const ResidueMatrix rhs = f.rho(g) * f.value(h, k) * f.rho_inverse(g) + f.value(g, grp.multiply(h, k));
    if (!(lhs == rhs)) ++failures;
  };
  if (triples.empty()) {
    const std::size_t n = grp.order();
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < n; ++k) check(g, h, k);
      }
    }
  } else {
    for (const auto& t : triples) check(t[0], t[1], t[2]);
  }
  return failures;
}

ObstructionCocycle build_obstruction(const ModularRep& rep) {
  ObstructionCocycle f(entrywise_lift(rep));
  const auto triples = sample_triples(rep.group->order(), 256, 0x5eed);
  if (cocycle_identity_failures(f, triples) != 0) {
    throw std::logic_error("build_obstruction: cocycle identity violated");
  }
  return f;
}

CoboundarySolution solve_coboundary(const ObstructionCocycle& f) {
  const MatrixGroup& grp = f.group();
  const std::size_t n = grp.order();
  const std::size_t m = f.dimension();
  const std::size_t mm = m * m;
  const std::uint32_t p = f.p();

  // One block of m^2 unknowns per distinct non-identity generator element.
  std::vector<std::int64_t> block_of(n, -1);
  std::size_t blocks = 0;
  for (std::size_t slot = 0; slot < grp.num_generators(); ++slot) {
    const std::size_t x = grp.generator_index(slot);
    if (x != grp.identity_index() && block_of[x] < 0) block_of[x] = static_cast<std::int64_t>(blocks++);
  }
  const std::size_t unknowns = blocks * mm;
  const std::size_t width = unknowns + 1;  // coefficients, then constant

  // form[g] row e: t(g)_e = sum_u coeff_u * u + constant.
  std::vector<std::vector<std::uint32_t>> form(n, std::vector<std::uint32_t>(mm * width, 0));
  auto add_conjugated_block = [&](std::vector<std::int64_t>& row_coeffs, std::size_t g, std::size_t x,
                                  std::size_t i, std::size_t j, std::int64_t sign) {
    // coefficient of u_x[a][b] in (rho(g) u_x rho(g)^-1)_{ij}
    const std::size_t base = static_cast<std::size_t>(block_of[x]) * mm;
    for (std::size_t a = 0; a < m; ++a) {
      const std::uint64_t left = f.rho(g)(i, a);
      if (left == 0) continue;
      for (std::size_t b = 0; b < m; ++b) {
        row_coeffs[base + a * m + b] += sign * static_cast<std::int64_t>(left * f.rho_inverse(g)(b, j) % p);
      }
    }
  };

  for (std::size_t h = 1; h < n; ++h) {
    const std::size_t par = grp.parent(h);
    const std::size_t x = grp.generator_index(grp.parent_generator(h));
    std::vector<std::uint32_t>& out = form[h];
    if (block_of[h] >= 0) {
      const std::size_t base = static_cast<std::size_t>(block_of[h]) * mm;
      for (std::size_t e = 0; e < mm; ++e) out[e * width + base + e] = 1;
      continue;
    }
    // t(h) = t(par) + rho(par) t(x) rho(par)^-1 + f(par, x)
    const std::vector<std::uint32_t>& from = form[par];
    std::vector<std::int64_t> coeffs(unknowns);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t e = i * m + j;
        for (std::size_t u = 0; u < unknowns; ++u) coeffs[u] = from[e * width + u];
        add_conjugated_block(coeffs, par, x, i, j, 1);
        for (std::size_t u = 0; u < unknowns; ++u) out[e * width + u] = static_cast<std::uint32_t>(coeffs[u] % p);
        out[e * width + unknowns] = (from[e * width + unknowns] + f.entry(par, x, i, j)) % p;
      }
    }
  }

  LinearSystemFp system(p, unknowns);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t slot = 0; slot < grp.num_generators(); ++slot) {
      const std::size_t x = grp.generator_index(slot);
      if (x == grp.identity_index()) continue;
      const std::size_t h = grp.times_generator(g, slot);
      if (block_of[h] < 0 && grp.parent(h) == g && grp.parent_generator(h) == slot) continue;
      // t(g) + rho(g) t(x) rho(g)^-1 + f(g, x) - t(h) = 0
      std::vector<std::int64_t> coeffs(unknowns);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t e = i * m + j;
          for (std::size_t u = 0; u < unknowns; ++u) {
            coeffs[u] = static_cast<std::int64_t>(form[g][e * width + u]) -
                        static_cast<std::int64_t>(form[h][e * width + u]);
          }
          add_conjugated_block(coeffs, g, x, i, j, 1);
          const std::int64_t constant = static_cast<std::int64_t>(form[g][e * width + unknowns]) +
                                        f.entry(g, x, i, j) -
                                        static_cast<std::int64_t>(form[h][e * width + unknowns]);
          system.add_dense_row(coeffs, -constant);
        }
      }
    }
  }

  const FpSolution solved = solve_linear_fp(system);
  CoboundarySolution out;
  out.consistent = solved.consistent;
  out.unknowns = unknowns;
  out.equations = system.rows().size();
  out.rank = solved.rank;
  out.nullity = solved.nullity;
  if (!solved.consistent) return out;

  const ResidueRing fp(p, 1);
  out.correction.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    ResidueMatrix t(fp, m, m);
    for (std::size_t e = 0; e < mm; ++e) {
      std::uint64_t v = form[g][e * width + unknowns];
      for (std::size_t u = 0; u < unknowns; ++u) {
        v = (v + static_cast<std::uint64_t>(form[g][e * width + u]) * solved.solution[u]) % p;
      }
      t.set(e / m, e % m, static_cast<std::int64_t>(v));
    }
    out.correction.push_back(std::move(t));
  }
  return out;
}

LinearSystemFp full_coboundary_system(const ObstructionCocycle& f) {
  const MatrixGroup& grp = f.group();
  const std::size_t n = grp.order();
  const std::size_t m = f.dimension();
  const std::size_t mm = m * m;
  LinearSystemFp system(f.p(), (n - 1) * mm);
  auto unknown = [&](std::size_t g, std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>((g - 1) * mm + i * m + j);
  };
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = grp.multiply(g, h);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          // t(gh) - t(g) - rho(g) t(h) rho(g)^-1 = f(g, h)
          std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
          if (gh != 0) terms.emplace_back(unknown(gh, i, j), 1);
          if (g != 0) terms.emplace_back(unknown(g, i, j), -1);
          if (h != 0) {
            for (std::size_t a = 0; a < m; ++a) {
              const std::uint64_t left = f.rho(g)(i, a);
              if (left == 0) continue;
              for (std::size_t b = 0; b < m; ++b) {
                const std::uint64_t right = f.rho_inverse(g)(b, j);
                if (right != 0) terms.emplace_back(unknown(h, a, b), -static_cast<std::int64_t>(left * right));
              }
            }
          }
          system.add_row(terms, f.entry(g, h, i, j));
        }
      }
    }
  }
  return system;
}

std::vector<ResidueMatrix> corrections_from_full_solution(const ObstructionCocycle& f,
                                                          const std::vector<std::uint32_t>& x) {
  const std::size_t n = f.group().order();
  const std::size_t m = f.dimension();
  const ResidueRing fp(f.p(), 1);
  std::vector<ResidueMatrix> out;
  out.emplace_back(fp, m, m);
  for (std::size_t g = 1; g < n; ++g) {
    ResidueMatrix t(fp, m, m);
    for (std::size_t e = 0; e < m * m; ++e) t.set(e / m, e % m, x[(g - 1) * m * m + e]);
    out.push_back(std::move(t));
  }
  return out;
}

ModularRep apply_correction(const ObstructionCocycle& f, std::span<const ResidueMatrix> correction) {
  const EntrywiseLift& lift = f.lift();
  const std::size_t n = f.group().order();
  if (correction.size() != n) throw DimensionMismatch("apply_correction: one correction per element required");
  const std::int64_t pk = static_cast<std::int64_t>(lift.source.ring.modulus());
  const ResidueMatrix identity = ResidueMatrix::identity(lift.target, f.dimension());
  ModularRep out{lift.source.group, lift.target, {}};
  out.images.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    const ResidueMatrix step = identity + scale(correction[g].reread(lift.target), pk);
    out.images.push_back(step * lift.lifted[g]);
  }
  return out;
}

std::string to_string(LiftPath path) {
  switch (path) {
    case LiftPath::Borel: return "borel";
    case LiftPath::Full: return "full";
    case LiftPath::Both: return "both";
  }
  return {};
}

namespace {

Witness make_witness(const ModularRep& level_one, const ModularRep& current) {
  Witness w{level_one, current.ring, {}};
  for (std::size_t slot = 0; slot < current.group->num_generators(); ++slot) {
    w.generator_images.push_back(current.images[current.group->generator_index(slot)]);
  }
  return w;
}

}  // namespace

LiftReport lift_rep(const ModularRep& level_one, unsigned s_max) {
  if (s_max < 2) throw DomainError("lift_rep: target precision must be >= 2");
  if (level_one.ring.s() != 1) throw DomainError("lift_rep: source must be over F_p");
  LiftReport report;
  report.p = level_one.ring.p();
  report.group_order = level_one.group->order();
  report.dimension = level_one.dimension();

  ModularRep current = level_one;
  for (unsigned k = 1; k < s_max; ++k) {
    const ObstructionCocycle f = build_obstruction(current);
    const CoboundarySolution solution = solve_coboundary(f);
    report.levels.push_back(
        {k, solution.consistent, solution.unknowns, solution.equations, solution.rank, solution.nullity});
    if (!solution.consistent) break;
    ModularRep next = apply_correction(f, solution.correction);
    if (!next.is_homomorphism()) {
      throw std::logic_error("lift_rep: corrected lift is not a homomorphism at level p^" + std::to_string(k + 1));
    }
    current = std::move(next);
  }
  report.achieved_precision = current.level();
  report.liftable = report.achieved_precision >= 2;
  report.witness = make_witness(level_one, current);
  return report;
}

LiftReport lift_to_precision(const RepresentationSpec& spec, const LiftOptions& options) {
  const GaloisField field(spec.p(), spec.r());
  const GeneratorImages images = generator_images(field, spec);

  auto run = [&](GroupPath path) {
    const std::vector<ResidueMatrix> gens = path_generators(images, path);
    std::shared_ptr<const MatrixGroup> group =
        options.group_source ? options.group_source(spec, path, gens, options.closure_cap)
                             : std::make_shared<const MatrixGroup>(close_group(gens, options.closure_cap));
    const std::size_t m = spec.dimension();
    if (path == GroupPath::Full && group->order() * m * m > options.unknown_cap) {
      throw CapExceeded("full path for " + spec.label() + " over q=" + std::to_string(spec.q()) + " needs " +
                        std::to_string(group->order() * m * m) + " unknowns (cap " +
                        std::to_string(options.unknown_cap) + ")");
    }
    LiftReport report = lift_rep(ModularRep::natural(group), options.s_max);
    report.label = spec.label();
    report.r = spec.r();
    report.path = path;
    return report;
  };

  switch (options.path) {
    case LiftPath::Borel: return run(GroupPath::Borel);
    case LiftPath::Full: return run(GroupPath::Full);
    case LiftPath::Both: {
      LiftReport borel = run(GroupPath::Borel);
      const LiftReport full = run(GroupPath::Full);
      if (borel.liftable != full.liftable) {
        throw std::logic_error("lift_to_precision: borel and full paths disagree for " + spec.label() +
                               " over q=" + std::to_string(spec.q()));
      }
      borel.full_path_liftable = full.liftable;
      return borel;
    }
  }
  throw DomainError("lift_to_precision: unknown path");
}

namespace {

// Order of element i in the group, from the Cayley table.
std::size_t group_element_order(const MatrixGroup& grp, std::size_t i) {
  std::size_t order = 1;
  for (std::size_t x = i; x != grp.identity_index(); x = grp.multiply(x, i)) ++order;
  return order;
}

}  // namespace

bool witness_validate(const Witness& witness) {
  const ModularRep& source = witness.source;
  const MatrixGroup& grp = *source.group;
  const std::size_t n = grp.order();
  if (witness.generator_images.size() != grp.num_generators()) return false;
  const std::size_t m = source.dimension();
  for (const ResidueMatrix& w : witness.generator_images) {
    if (!(w.ring() == witness.ring) || w.rows() != m || w.cols() != m) return false;
  }

  std::vector<ResidueMatrix> images;
  images.reserve(n);
  images.push_back(ResidueMatrix::identity(witness.ring, m));
  for (std::size_t h = 1; h < n; ++h) {
    images.push_back(images[grp.parent(h)] * witness.generator_images[grp.parent_generator(h)]);
  }
  for (std::size_t slot = 0; slot < grp.num_generators(); ++slot) {
    if (!(images[grp.generator_index(slot)] == witness.generator_images[slot])) return false;
  }
  const ResidueRing fp(witness.ring.p(), 1);
  for (std::size_t g = 0; g < n; ++g) {
    if (!(images[g].reread(fp) == source.images[g])) return false;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (!(images[g] * images[h] == images[grp.multiply(g, h)])) return false;
    }
  }
  for (std::size_t slot = 0; slot < grp.num_generators(); ++slot) {
    const std::size_t x = grp.generator_index(slot);
    const std::size_t group_order = group_element_order(grp, x);
    const auto lifted_order = matrix_order(witness.generator_images[slot], group_order);
    const auto source_order = matrix_order(source.images[x], group_order);
    if (!lifted_order || !source_order) return false;
    if (group_order % *lifted_order != 0 || *lifted_order % *source_order != 0) return false;
  }
  return true;
}

bool witness_validate(const LiftReport& report) { return report.witness && witness_validate(*report.witness); }

}  // namespace modlift
