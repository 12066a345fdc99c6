#pragma once

// Slow, independent reference implementations used to check the library.
// Nothing here calls into modlift except for converting to and from
// ResidueMatrix at the boundary.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "modlift/matrix.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

inline IntMat identity(std::size_t n) {
  IntMat out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline IntMat mul(const IntMat& a, const IntMat& b, std::int64_t m) {
  IntMat out(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = mod(out[i][j] + a[i][k] * b[k][j], m);
  return out;
}

inline IntMat power(const IntMat& a, std::uint64_t e, std::int64_t m) {
  IntMat out = identity(a.size());
  for (std::uint64_t i = 0; i < e; ++i) out = mul(out, a, m);
  return out;
}

inline IntMat reduce(const IntMat& a, std::int64_t m) {
  IntMat out = a;
  for (auto& row : out)
    for (auto& v : row) v = mod(v, m);
  return out;
}

inline IntMat from(const modlift::ResidueMatrix& m) {
  IntMat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

inline modlift::ResidueMatrix to(const IntMat& a, const modlift::ResidueRing& ring) {
  modlift::ResidueMatrix out(ring, a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out.set(i, j, a[i][j]);
  return out;
}

// Laplace expansion along the first row.
inline std::int64_t cofactor_det(const IntMat& a, std::int64_t m) {
  const std::size_t n = a.size();
  if (n == 1) return mod(a[0][0], m);
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const std::int64_t term = mod(a[0][j] * cofactor_det(minor, m), m);
    total = mod(total + ((j % 2) ? -term : term), m);
  }
  return total;
}

// Breadth-first closure of the generated group over Z/mZ, giving up (nullopt)
// past `cap` elements.
inline std::optional<std::set<IntMat>> closure(const std::vector<IntMat>& gens, std::int64_t m,
                                                std::size_t cap) {
  std::set<IntMat> seen{identity(gens[0].size())};
  std::vector<IntMat> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        IntMat b = mul(a, g, m);
        if (seen.insert(b).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(b));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

// binom(n, k) by the additive recurrence.
inline std::vector<std::vector<std::int64_t>> pascal_triangle(std::size_t n) {
  std::vector<std::vector<std::int64_t>> c(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::int64_t>;

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
  const std::size_t r = f.size() - 1;  // f monic of degree r
  for (std::size_t d = prod.size(); d-- > r;) {
    const std::int64_t lead = prod[d];
    if (lead == 0) continue;
    for (std::size_t k = 0; k <= r; ++k) prod[d - r + k] = mod(prod[d - r + k] - lead * f[k], p);
  }
  prod.resize(r, 0);
  return prod;
}

// Action of the 2x2 matrix g = (a b; c d) on binary forms of degree n, with
// x -> a x + b y and y -> c x + d y; row k is the image of x^(n-k) y^k in
// the monomial basis.  Works over Z/mZ by expanding the products directly.
inline IntMat form_action(const IntMat& g, unsigned n, std::int64_t m) {
  IntMat out(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (unsigned k = 0; k <= n; ++k) {
    // coefficients indexed by power of y
    std::vector<std::int64_t> poly{1};
    auto times = [&](std::int64_t cx, std::int64_t cy) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = mod(next[i] + poly[i] * cx, m);
        next[i + 1] = mod(next[i + 1] + poly[i] * cy, m);
      }
      poly = std::move(next);
    };
    for (unsigned i = 0; i < n - k; ++i) times(g[0][0], g[0][1]);
    for (unsigned i = 0; i < k; ++i) times(g[1][0], g[1][1]);
    for (unsigned j = 0; j <= n; ++j) out[k][j] = poly[j];
  }
  return out;
}

// Every matrix over Z/p^2Z reducing to `base` mod p, one at a time.
inline void for_each_lift(const IntMat& base, std::int64_t p, const std::function<bool(const IntMat&)>& visit) {
  const std::size_t n = base.size();
  const std::size_t cells = n * n;
  std::vector<std::int64_t> digits(cells, 0);
  while (true) {
    IntMat lift = base;
    for (std::size_t c = 0; c < cells; ++c) lift[c / n][c % n] = mod(base[c / n][c % n] + p * digits[c], p * p);
    if (!visit(lift)) return;
    std::size_t c = 0;
    while (c < cells && ++digits[c] == p) digits[c++] = 0;
    if (c == cells) return;
  }
}

inline std::size_t element_order(const IntMat& a, std::int64_t m, std::size_t cap) {
  IntMat x = a;
  const IntMat id = identity(a.size());
  for (std::size_t k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = mul(x, a, m);
  }
  return 0;
}

// Exhaustive search for generator lifts over Z/p^2Z that generate a group of
// the same order as the group over F_p.  A generator's lift must keep its
// order, which prunes the candidates before any closure is tried.  Only for
// very small cases.
inline bool brute_force_lift_exists(const std::vector<IntMat>& gens, std::int64_t p) {
  const std::size_t order = closure(gens, p, 1u << 20)->size();
  std::vector<std::vector<IntMat>> candidates(gens.size());
  for (std::size_t slot = 0; slot < gens.size(); ++slot) {
    const std::size_t want = element_order(gens[slot], p, order);
    for_each_lift(gens[slot], p, [&](const IntMat& lift) {
      if (element_order(lift, p * p, want) == want) candidates[slot].push_back(lift);
      return true;
    });
  }
  std::vector<IntMat> chosen(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t slot) -> bool {
    if (slot == gens.size()) {
      auto group = closure(chosen, p * p, order);
      return group && group->size() == order;
    }
    for (const IntMat& lift : candidates[slot]) {
      chosen[slot] = lift;
      if (search(slot + 1)) return true;
    }
    return false;
  };
  return search(0);
}

inline IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t m) {
  std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
  IntMat out(rows, std::vector<std::int64_t>(cols));
  for (auto& row : out)
    for (auto& v : row) v = pick(rng);
  return out;
}

}  // namespace oracle
