#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "truchet/dynamics.hpp"
#include "truchet/sequence.hpp"

namespace truchet {

struct RenderConfig {
  Sequence omega;
  Sequence omega_prime;

  // Inclusive square-center ranges: columns m0..m1, rows n0..n1.
  std::int64_t m0 = -8, m1 = 8;
  std::int64_t n0 = -8, n1 = 8;

  // When set, the curve through this normal at the origin square is traced
  // (up to highlight_budget steps) and overdrawn.
  std::optional<Normal> highlight;
  std::int64_t highlight_budget = 4096;

  bool shade_collapse = false;   // gray out squares deleted by one collapse
  bool dividing_lines = false;   // -+ lines solid, +- lines dashed

  double scale = 40.0;  // pixels per square
};

// Deterministic SVG 1.1 document: unit squares with exact quarter-circle
// arcs of radius 1/2 centered at tile corners.  Element order is fixed by
// the sweep order of the viewport, so equal configs give byte-equal output.
std::string render_tiling(const RenderConfig& config);

}  // namespace truchet
