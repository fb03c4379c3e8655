#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "truchet/sequence.hpp"

namespace truchet {

// One of the four inward normals (1,0), (-1,0), (0,1), (0,-1).
struct Normal {
  int a;
  int b;

  bool operator==(const Normal&) const = default;

  static constexpr Normal right() { return {1, 0}; }
  static constexpr Normal left() { return {-1, 0}; }
  static constexpr Normal up() { return {0, 1}; }
  static constexpr Normal down() { return {0, -1}; }

  static Normal from_index(int i);  // 0..3 -> right, up, left, down
  int index() const;
  bool horizontal_axis() const { return b == 0; }
};

// A point of the lifted system: two driving sequences and an inward normal.
struct State {
  Sequence omega;
  Sequence omega_prime;
  Normal v;
};

// Tile subscript at square (m, n): the product omega_m * omega'_n.
inline Sym tile_at(const Sequence& omega, const Sequence& omega_prime,
                   std::int64_t m, std::int64_t n) {
  return omega.at(m) * omega_prime.at(n);
}

// One step along the curve: with s = omega_0 * omega'_0 and v = (a,b), the
// next state is (shift by s*b, shift by s*a, s*(b,a)).
State phi(const State& x);
State phi_inverse(const State& x);

// The conserved sign b*omega_0 + a*omega'_0 (exactly one of a, b is nonzero).
Sym invariant_m(const State& x);

// Classes 1..6: {-+, +-, matching} x {horizontal, vertical}.  Horizontal
// steps read the word omega_0 omega_1 when s*b = 1 and omega_{-1} omega_0
// when s*b = -1; vertical steps read the primed word via s*a.
enum class StepClass : int {
  MinusPlusHorizontal = 1,
  PlusMinusHorizontal = 2,
  MatchingHorizontal = 3,
  MinusPlusVertical = 4,
  PlusMinusVertical = 5,
  MatchingVertical = 6,
};

StepClass step_class(const State& x);

inline int class_index(StepClass c) { return static_cast<int>(c); }

struct TraceOptions {
  bool record_path = true;  // keep per-step displacement and visited squares
};

// Outcome of following the curve through a state for up to `budget` steps.
struct TraceResult {
  enum class Status { Closed, OpenAtBudget };

  Status status = Status::OpenAtBudget;
  std::int64_t period = 0;  // squares visited (with multiplicity) when Closed
  std::int64_t steps = 0;   // phi applications performed
  std::array<std::int64_t, 6> step_counts{};

  // Partial displacement sums (a_k, b_k) for k = 1..steps, and the square
  // centers visited in the frame of the initial square.  Populated only when
  // TraceOptions::record_path is set.
  std::vector<std::pair<std::int64_t, std::int64_t>> displacement_trace;
  std::vector<std::pair<std::int64_t, std::int64_t>> visited;

  std::int64_t min_a = 0, max_a = 0, min_b = 0, max_b = 0;

  bool closed() const { return status == Status::Closed; }
};

// Iterates phi up to `budget` times.  Reports Closed at the smallest n where
// the accumulated displacement is (0,0) and the normal equals its initial
// value; that n counts the squares of the closed curve with multiplicity.
// OpenAtBudget is a statement about the budget, never about the curve.
TraceResult trace(const State& x, std::int64_t budget,
                  const TraceOptions& opts = {});

// True exactly when the curve closes after four squares.
bool is_period4(const State& x);

}  // namespace truchet
