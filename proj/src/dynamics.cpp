#include "truchet/dynamics.hpp"

#include <stdexcept>

namespace truchet {

Normal Normal::from_index(int i) {
  switch (i & 3) {
    case 0: return right();
    case 1: return up();
    case 2: return left();
    default: return down();
  }
}

int Normal::index() const {
  if (*this == right()) return 0;
  if (*this == up()) return 1;
  if (*this == left()) return 2;
  return 3;
}

State phi(const State& x) {
  const int s = to_int(x.omega.at(0)) * to_int(x.omega_prime.at(0));
  const int sb = s * x.v.b;
  const int sa = s * x.v.a;
  return {x.omega.shift(sb), x.omega_prime.shift(sa), Normal{sb, sa}};
}

State phi_inverse(const State& x) {
  const int t = to_int(x.omega.at(-x.v.a)) * to_int(x.omega_prime.at(-x.v.b));
  return {x.omega.shift(-x.v.a), x.omega_prime.shift(-x.v.b),
          Normal{t * x.v.b, t * x.v.a}};
}

Sym invariant_m(const State& x) {
  const int m = x.v.b * to_int(x.omega.at(0)) + x.v.a * to_int(x.omega_prime.at(0));
  return sym_of(m);
}

StepClass step_class(const State& x) {
  const int s = to_int(x.omega.at(0)) * to_int(x.omega_prime.at(0));
  const int sb = s * x.v.b;
  if (sb != 0) {
    const Sym w0 = sb == 1 ? x.omega.at(0) : x.omega.at(-1);
    const Sym w1 = sb == 1 ? x.omega.at(1) : x.omega.at(0);
    if (w0 == Sym::Minus && w1 == Sym::Plus) return StepClass::MinusPlusHorizontal;
    if (w0 == Sym::Plus && w1 == Sym::Minus) return StepClass::PlusMinusHorizontal;
    return StepClass::MatchingHorizontal;
  }
  const int sa = s * x.v.a;
  const Sym w0 = sa == 1 ? x.omega_prime.at(0) : x.omega_prime.at(-1);
  const Sym w1 = sa == 1 ? x.omega_prime.at(1) : x.omega_prime.at(0);
  if (w0 == Sym::Minus && w1 == Sym::Plus) return StepClass::MinusPlusVertical;
  if (w0 == Sym::Plus && w1 == Sym::Minus) return StepClass::PlusMinusVertical;
  return StepClass::MatchingVertical;
}

TraceResult trace(const State& x, std::int64_t budget, const TraceOptions& opts) {
  if (budget < 1) throw std::invalid_argument("trace budget must be >= 1");

  TraceResult out;
  if (opts.record_path) {
    out.displacement_trace.reserve(static_cast<std::size_t>(budget));
    out.visited.reserve(static_cast<std::size_t>(budget));
    out.visited.emplace_back(0, 0);
  }

  State cur = x;
  const Normal v0 = x.v;
  std::int64_t a = 0, b = 0;
  for (std::int64_t n = 1; n <= budget; ++n) {
    out.step_counts[class_index(step_class(cur)) - 1] += 1;
    cur = phi(cur);
    a += cur.v.a;
    b += cur.v.b;
    out.steps = n;
    if (a < out.min_a) out.min_a = a;
    if (a > out.max_a) out.max_a = a;
    if (b < out.min_b) out.min_b = b;
    if (b > out.max_b) out.max_b = b;
    if (opts.record_path) out.displacement_trace.emplace_back(a, b);
    if (a == 0 && b == 0 && cur.v == v0) {
      out.status = TraceResult::Status::Closed;
      out.period = n;
      return out;
    }
    if (opts.record_path) out.visited.emplace_back(a, b);
  }
  out.status = TraceResult::Status::OpenAtBudget;
  return out;
}

bool is_period4(const State& x) {
  const TraceResult r = trace(x, 4, TraceOptions{.record_path = false});
  return r.closed() && r.period == 4;
}

}  // namespace truchet
