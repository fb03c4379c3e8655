#include "truchet/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "truchet/collapse.hpp"

namespace truchet {

namespace {

// Geometry is exact in half-integer units; doubled integer coordinates keep
// the flag computations free of floats.
struct Pt2 {
  std::int64_t x, y;  // doubled math coordinates
};

class Canvas {
 public:
  Canvas(const RenderConfig& cfg)
      : cfg_(cfg),
        x0_(2 * cfg.m0 - 1),
        y1_(2 * cfg.n1 + 1) {}

  double px(std::int64_t xd) const {
    return static_cast<double>(xd - x0_) * 0.5 * cfg_.scale;
  }
  double py(std::int64_t yd) const {
    return static_cast<double>(y1_ - yd) * 0.5 * cfg_.scale;
  }

  std::string num(double v) const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
  }

  // Quarter arc from a to b around corner c, all in doubled coordinates.
  std::string arc_path(Pt2 a, Pt2 b, Pt2 c) const {
    // Screen frame flips y; the sweep flag is 1 exactly when the +90-degree
    // screen rotation of (a - c) lands on (b - c).
    const std::int64_t ux = a.x - c.x, uy = -(a.y - c.y);
    const std::int64_t wx = b.x - c.x, wy = -(b.y - c.y);
    const int sweep = (-uy == wx && ux == wy) ? 1 : 0;
    const double r = 0.5 * cfg_.scale;
    std::ostringstream s;
    s << "M " << num(px(a.x)) << ' ' << num(py(a.y)) << " A " << num(r) << ' '
      << num(r) << " 0 0 " << sweep << ' ' << num(px(b.x)) << ' '
      << num(py(b.y));
    return s.str();
  }

 private:
  const RenderConfig& cfg_;
  std::int64_t x0_, y1_;
};

// Edge midpoints and the shared corner of the quarter arc in square (m, n)
// that joins the edge of inward normal `in` to the edge exited toward `out`.
struct ArcGeom {
  Pt2 from, to, corner;
};

ArcGeom step_arc(std::int64_t m, std::int64_t n, Normal in, Normal out) {
  const std::int64_t cx = 2 * m, cy = 2 * n;
  return {{cx - in.a, cy - in.b},
          {cx + out.a, cy + out.b},
          {cx + out.a - in.a, cy + out.b - in.b}};
}

}  // namespace

std::string render_tiling(const RenderConfig& cfg) {
  if (cfg.m0 > cfg.m1 || cfg.n0 > cfg.n1)
    throw std::invalid_argument("viewport is empty");
  if (!(cfg.scale > 0.0)) throw std::invalid_argument("scale must be positive");

  const Canvas canvas(cfg);
  const double w = (static_cast<double>(cfg.m1 - cfg.m0) + 1.0) * cfg.scale;
  const double h = (static_cast<double>(cfg.n1 - cfg.n0) + 1.0) * cfg.scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.num(w)
      << "\" height=\"" << canvas.num(h) << "\">\n";

  // Square fills (kept squares white, deleted rows/columns gray).
  for (std::int64_t n = cfg.n0; n <= cfg.n1; ++n) {
    for (std::int64_t m = cfg.m0; m <= cfg.m1; ++m) {
      const bool gray = cfg.shade_collapse &&
                        (!is_kept(cfg.omega, m) || !is_kept(cfg.omega_prime, n));
      svg << "  <rect class=\"" << (gray ? "sq gray" : "sq") << "\" x=\""
          << canvas.num(canvas.px(2 * m - 1)) << "\" y=\""
          << canvas.num(canvas.py(2 * n + 1)) << "\" width=\""
          << canvas.num(cfg.scale) << "\" height=\"" << canvas.num(cfg.scale)
          << "\" fill=\"" << (gray ? "#c8c8c8" : "#ffffff")
          << "\" stroke=\"#e0e0e0\" stroke-width=\""
          << canvas.num(0.02 * cfg.scale) << "\"/>\n";
    }
  }

  // Tile arcs.
  const std::string arc_style = "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"";
  for (std::int64_t n = cfg.n0; n <= cfg.n1; ++n) {
    for (std::int64_t m = cfg.m0; m <= cfg.m1; ++m) {
      const Sym t = tile_at(cfg.omega, cfg.omega_prime, m, n);
      const std::int64_t cx = 2 * m, cy = 2 * n;
      ArcGeom a1, a2;
      if (t == Sym::Plus) {
        a1 = {{cx, cy - 1}, {cx + 1, cy}, {cx + 1, cy - 1}};
        a2 = {{cx - 1, cy}, {cx, cy + 1}, {cx - 1, cy + 1}};
      } else {
        a1 = {{cx, cy - 1}, {cx - 1, cy}, {cx - 1, cy - 1}};
        a2 = {{cx + 1, cy}, {cx, cy + 1}, {cx + 1, cy + 1}};
      }
      for (const ArcGeom& g : {a1, a2}) {
        svg << "  <path class=\"arc\" d=\"" << canvas.arc_path(g.from, g.to, g.corner)
            << arc_style << canvas.num(0.05 * cfg.scale) << "\"/>\n";
      }
    }
  }

  // Dividing lines between opposite adjacent symbols: -+ solid, +- dashed.
  if (cfg.dividing_lines) {
    const auto vline = [&](std::int64_t m, bool solid) {
      svg << "  <line class=\"" << (solid ? "div-mp" : "div-pm") << "\" x1=\""
          << canvas.num(canvas.px(2 * m + 1)) << "\" y1=\""
          << canvas.num(canvas.py(2 * cfg.n1 + 1)) << "\" x2=\""
          << canvas.num(canvas.px(2 * m + 1)) << "\" y2=\""
          << canvas.num(canvas.py(2 * cfg.n0 - 1))
          << "\" stroke=\"#303030\" stroke-width=\""
          << canvas.num(0.06 * cfg.scale) << "\""
          << (solid ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    };
    const auto hline = [&](std::int64_t n, bool solid) {
      svg << "  <line class=\"" << (solid ? "div-mp" : "div-pm") << "\" x1=\""
          << canvas.num(canvas.px(2 * cfg.m0 - 1)) << "\" y1=\""
          << canvas.num(canvas.py(2 * n + 1)) << "\" x2=\""
          << canvas.num(canvas.px(2 * cfg.m1 + 1)) << "\" y2=\""
          << canvas.num(canvas.py(2 * n + 1))
          << "\" stroke=\"#303030\" stroke-width=\""
          << canvas.num(0.06 * cfg.scale) << "\""
          << (solid ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    };
    for (std::int64_t m = cfg.m0 - 1; m <= cfg.m1; ++m) {
      const Sym s0 = cfg.omega.at(m), s1 = cfg.omega.at(m + 1);
      if (s0 == Sym::Minus && s1 == Sym::Plus) vline(m, true);
      else if (s0 == Sym::Plus && s1 == Sym::Minus) vline(m, false);
    }
    for (std::int64_t n = cfg.n0 - 1; n <= cfg.n1; ++n) {
      const Sym s0 = cfg.omega_prime.at(n), s1 = cfg.omega_prime.at(n + 1);
      if (s0 == Sym::Minus && s1 == Sym::Plus) hline(n, true);
      else if (s0 == Sym::Plus && s1 == Sym::Minus) hline(n, false);
    }
  }

  // Highlighted curve: the same squares the trace visits, one arc per step.
  if (cfg.highlight) {
    const State start{cfg.omega, cfg.omega_prime, *cfg.highlight};
    const TraceResult tr = trace(start, cfg.highlight_budget);
    std::int64_t px = 0, py = 0;
    Normal in = *cfg.highlight;
    for (std::int64_t k = 0; k < tr.steps; ++k) {
      const auto [nx, ny] = tr.displacement_trace[static_cast<std::size_t>(k)];
      const Normal out{static_cast<int>(nx - px), static_cast<int>(ny - py)};
      const ArcGeom g = step_arc(px, py, in, out);
      svg << "  <path class=\"curve\" d=\"" << canvas.arc_path(g.from, g.to, g.corner)
          << "\" fill=\"none\" stroke=\"#d03020\" stroke-width=\""
          << canvas.num(0.1 * cfg.scale) << "\"/>\n";
      px = nx;
      py = ny;
      in = out;
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace truchet
