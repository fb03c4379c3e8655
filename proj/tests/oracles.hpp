#pragma once

// Test-only oracles.  Each one re-derives its answer from the tiling picture
// (arc tables, dominoes, dividing lines) without touching the shift-algebra
// implementation it is used to check.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "truchet/collapse.hpp"
#include "truchet/dynamics.hpp"
#include "truchet/sequence.hpp"

namespace truchet::oracle {

struct Side {
  int dx, dy;  // outward direction of an edge of the current square
  bool operator==(const Side&) const = default;
};

// Which edge the tile's arc connects to `entry`.  The +1 tile joins
// {bottom,right} and {left,top}; the -1 tile joins {bottom,left} and
// {right,top}.  This is the picture-level definition of the two tiles.
inline Side arc_partner(Sym tile, Side entry) {
  const Side bottom{0, -1}, top{0, 1}, left{-1, 0}, right{1, 0};
  if (tile == Sym::Plus) {
    if (entry == bottom) return right;
    if (entry == right) return bottom;
    if (entry == left) return top;
    return left;
  }
  if (entry == bottom) return left;
  if (entry == left) return bottom;
  if (entry == right) return top;
  return right;
}

struct GeoState {
  std::int64_t m, n;  // current square center
  Side entered;       // edge through which the curve entered
};

inline GeoState geo_step(const Sequence& omega, const Sequence& omega_prime,
                         const GeoState& g) {
  const Sym tile = tile_at(omega, omega_prime, g.m, g.n);
  const Side exit = arc_partner(tile, g.entered);
  return {g.m + exit.dx, g.n + exit.dy, {-exit.dx, -exit.dy}};
}

inline GeoState geo_start(const State& x) {
  // The inward normal v is based at the edge on side -v.
  return {0, 0, {-x.v.a, -x.v.b}};
}

// Square centers visited by following arcs for `steps` steps.
inline std::vector<std::pair<std::int64_t, std::int64_t>> geo_visited(
    const State& x, std::int64_t steps) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  GeoState g = geo_start(x);
  out.emplace_back(g.m, g.n);
  for (std::int64_t i = 1; i < steps; ++i) {
    g = geo_step(x.omega, x.omega_prime, g);
    out.emplace_back(g.m, g.n);
  }
  return out;
}

// Follow arcs backwards: enter the previous square through the edge we would
// have exited from, using the same arc tables.
inline GeoState geo_step_back(const Sequence& omega, const Sequence& omega_prime,
                              const GeoState& g) {
  const Side back = g.entered;  // edge of the previous square, from its side: -back
  const std::int64_t pm = g.m + back.dx, pn = g.n + back.dy;
  const Side exited{-back.dx, -back.dy};
  const Sym tile = tile_at(omega, omega_prime, pm, pn);
  return {pm, pn, arc_partner(tile, exited)};
}

// Class of the first domino the curve traverses: the pair {start square,
// next square} read off the tiling, in standard position.
inline int domino_class(const State& x) {
  const GeoState g0 = geo_start(x);
  const GeoState g1 = geo_step(x.omega, x.omega_prime, g0);
  if (g1.n == g0.n) {
    const std::int64_t m = std::min(g0.m, g1.m);
    const Sym w0 = x.omega.at(m), w1 = x.omega.at(m + 1);
    if (w0 == Sym::Minus && w1 == Sym::Plus) return 1;
    if (w0 == Sym::Plus && w1 == Sym::Minus) return 2;
    return 3;
  }
  const std::int64_t n = std::min(g0.n, g1.n);
  const Sym w0 = x.omega_prime.at(n), w1 = x.omega_prime.at(n + 1);
  if (w0 == Sym::Minus && w1 == Sym::Plus) return 4;
  if (w0 == Sym::Plus && w1 == Sym::Minus) return 5;
  return 6;
}

// Four-square loop criterion via dividing lines: the arc through the normal's
// edge spans a corner; the curve is a four-loop exactly when the 2x2 block
// around that corner is crossed by a vertical and a horizontal dividing line
// of opposite signs.
inline bool p4_dividing_lines(const State& x) {
  const GeoState g = geo_start(x);
  const Sym tile = tile_at(x.omega, x.omega_prime, 0, 0);
  const Side exit = arc_partner(tile, g.entered);
  const int cx = g.entered.dx + exit.dx;  // corner direction, components in {-1,+1}
  const int cy = g.entered.dy + exit.dy;
  const std::int64_t m0 = cx > 0 ? 0 : -1;
  const std::int64_t n0 = cy > 0 ? 0 : -1;
  const Sym a0 = x.omega.at(m0), a1 = x.omega.at(m0 + 1);
  const Sym b0 = x.omega_prime.at(n0), b1 = x.omega_prime.at(n0 + 1);
  const bool omega_mp = a0 == Sym::Minus && a1 == Sym::Plus;
  const bool omega_pm = a0 == Sym::Plus && a1 == Sym::Minus;
  const bool prime_mp = b0 == Sym::Minus && b1 == Sym::Plus;
  const bool prime_pm = b0 == Sym::Plus && b1 == Sym::Minus;
  return (omega_mp && prime_pm) || (omega_pm && prime_mp);
}

// Rank of a kept parent index: how many kept indices lie in (0, m] (negative
// count for m < 0).  Used to splice traced curves across deleted lines.
inline std::int64_t kept_rank(const Sequence& omega, std::int64_t m) {
  std::int64_t r = 0;
  if (m > 0) {
    for (std::int64_t k = 1; k <= m; ++k)
      if (is_kept(omega, k)) ++r;
  } else {
    // Kept indices in (m, 0] counted negatively: kept m = k_{-j} maps to -j.
    for (std::int64_t k = m + 1; k <= 0; ++k)
      if (is_kept(omega, k)) --r;
  }
  return r;
}

}  // namespace truchet::oracle
