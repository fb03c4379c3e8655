#include "truchet/renorm.hpp"

namespace truchet {

namespace {

CollapseWitness collapse_component(const Sequence& s, std::int64_t horizon,
                                   const char* which) {
  try {
    return collapse(s, horizon);
  } catch (const DomainError& e) {
    throw NotRenormalizable(which, e.what());
  }
}

}  // namespace

State rho(const State& x, std::int64_t horizon) {
  const CollapseWitness w = collapse_component(x.omega, horizon, "omega");
  const CollapseWitness wp =
      collapse_component(x.omega_prime, horizon, "omega_prime");
  return {w.eta, wp.eta, x.v};
}

bool in_renormalizable_set(const State& x) {
  return zero_collapsible(x.omega) && zero_collapsible(x.omega_prime);
}

ReturnBlock return_block(const State& x, std::int64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (!in_renormalizable_set(x))
    throw NotRenormalizable(zero_collapsible(x.omega) ? "omega_prime" : "omega",
                            "start state is outside the renormalizable set");

  ReturnBlock out{x, 0, {}};
  State cur = x;
  const Normal v0 = x.v;
  std::int64_t a = 0, b = 0;
  for (std::int64_t m = 1; m <= budget; ++m) {
    out.counts[class_index(step_class(cur)) - 1] += 1;
    cur = phi(cur);
    a += cur.v.a;
    b += cur.v.b;
    if (m == 4 && a == 0 && b == 0 && cur.v == v0)
      throw P4Detected("period-4 curve never returns to the renormalizable set");
    if (in_renormalizable_set(cur)) {
      out.next = cur;
      out.return_time = m;
      return out;
    }
  }
  throw BudgetExhausted("no return to the renormalizable set within budget");
}

ReturnResult first_return(const State& x, std::int64_t budget) {
  ReturnBlock blk = return_block(x, budget);
  return {blk.next, blk.return_time};
}

std::array<std::array<std::int64_t, 6>, 6> collapsed_step_matrix(std::int64_t m) {
  return {{
      {m, m - 1, 2, 0, 0, 2 * m},
      {m, m + 1, 0, 0, 0, 2 * m},
      {m, m, 1, 0, 0, 2 * m},
      {0, 0, 2 * m, m, m - 1, 2},
      {0, 0, 2 * m, m, m + 1, 0},
      {0, 0, 2 * m, m, m, 1},
  }};
}

std::string to_string(LevelOutcome::Status s) {
  switch (s) {
    case LevelOutcome::Status::Renormalized: return "renormalized";
    case LevelOutcome::Status::P4: return "period4";
    case LevelOutcome::Status::NotUnboundedCollapsible: return "not-unbounded-collapsible";
    case LevelOutcome::Status::HorizonExhausted: return "horizon-exhausted";
  }
  return "unknown";
}

namespace {

// Walk the orbit forward to the renormalizable set, allowing m = 0.
// Returns false on budget exhaustion; throws P4Detected on a 4-closure.
bool walk_to_renormalizable(State& cur, std::int64_t budget, std::int64_t& steps) {
  if (in_renormalizable_set(cur)) {
    steps = 0;
    return true;
  }
  const Normal v0 = cur.v;
  std::int64_t a = 0, b = 0;
  for (std::int64_t m = 1; m <= budget; ++m) {
    cur = phi(cur);
    a += cur.v.a;
    b += cur.v.b;
    if (m == 4 && a == 0 && b == 0 && cur.v == v0)
      throw P4Detected("orbit is a period-4 curve");
    if (in_renormalizable_set(cur)) {
      steps = m;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LevelOutcome> repeated_renormalize(const State& x, int depth,
                                               std::int64_t horizon,
                                               std::int64_t budget) {
  std::vector<LevelOutcome> out;
  State cur = x;
  for (int level = 0; level < depth; ++level) {
    LevelOutcome lo;
    lo.horizon_used = horizon;
    try {
      if (!walk_to_renormalizable(cur, budget, lo.steps_to_renormalizable)) {
        lo.status = LevelOutcome::Status::HorizonExhausted;
        out.push_back(lo);
        return out;
      }
      std::int64_t h = horizon;
      for (int attempt = 0;; ++attempt) {
        lo.horizon_used = h;
        try {
          cur = rho(cur, h);
          lo.status = LevelOutcome::Status::Renormalized;
          break;
        } catch (const NotRenormalizable&) {
          if (attempt >= 3) {
            lo.status = LevelOutcome::Status::NotUnboundedCollapsible;
            break;
          }
          h *= 2;
        }
      }
    } catch (const P4Detected&) {
      lo.status = LevelOutcome::Status::P4;
    } catch (const HorizonExhausted&) {
      // A deeper level scanned an already-collapsed sequence past its cap.
      lo.status = LevelOutcome::Status::HorizonExhausted;
    }
    out.push_back(lo);
    if (lo.status != LevelOutcome::Status::Renormalized) return out;
  }
  return out;
}

}  // namespace truchet
