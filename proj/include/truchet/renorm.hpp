#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "truchet/collapse.hpp"
#include "truchet/dynamics.hpp"

namespace truchet {

class NotRenormalizable : public DomainError {
 public:
  NotRenormalizable(std::string which, const std::string& reason)
      : DomainError(which + " component: " + reason), component(std::move(which)) {}
  std::string component;  // "omega" or "omega_prime"
};

class BudgetExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

// The curve closed after four squares; such states never reach the
// renormalizable set again.
class P4Detected : public DomainError {
 public:
  using DomainError::DomainError;
};

// Componentwise collapse; the normal is untouched.  Requires both driving
// sequences collapsible (within the horizon).
State rho(const State& x, std::int64_t horizon);

// Both components keep their origin under collapsing.  Zero-collapsibility is
// the only per-step membership test along an orbit: whether the kept set is
// unbounded never changes under shifts, so it is settled once by collapse().
bool in_renormalizable_set(const State& x);

struct ReturnResult {
  State state;              // the first iterate back in the renormalizable set
  std::int64_t return_time;
};

// Smallest m >= 1 with phi^m(x) renormalizable.  Throws P4Detected if the
// displacement closes after four steps first, BudgetExhausted past `budget`.
ReturnResult first_return(const State& x, std::int64_t budget);

struct ReturnBlock {
  State next;
  std::int64_t return_time;            // always 4m+1 for some m >= 0
  std::array<std::int64_t, 6> counts;  // step classes of x, phi(x), ..., phi^{ret-1}(x)
};

ReturnBlock return_block(const State& x, std::int64_t budget);

// Step classes seen over one full return block {x, ..., phi^{4m}(x)}.
inline std::array<std::int64_t, 6> collapsed_step_counts(const State& x,
                                                         std::int64_t budget) {
  return return_block(x, budget).counts;
}

// Expected per-class counts for a return block with return time 4m+1, one row
// per class of the collapsed step.  Row sums are 4m+1.
std::array<std::array<std::int64_t, 6>, 6> collapsed_step_matrix(std::int64_t m);

// Per-level outcome of driving the renormalization.  Budget exhaustion while
// hunting for a renormalizable iterate is reported as HorizonExhausted: both
// are resource verdicts, never statements about the orbit.
struct LevelOutcome {
  enum class Status { Renormalized, P4, NotUnboundedCollapsible, HorizonExhausted };

  Status status = Status::HorizonExhausted;
  std::int64_t steps_to_renormalizable = 0;  // phi steps consumed at this level
  std::int64_t horizon_used = 0;             // final collapse horizon attempted
};

std::string to_string(LevelOutcome::Status s);

// Applies rho up to `depth` times, walking each level's orbit forward to the
// renormalizable set first.  Collapse horizons start at `horizon` and double
// on exhaustion (up to three retries).  Outcomes are data, not errors; the
// vector ends at the first non-Renormalized level.
std::vector<LevelOutcome> repeated_renormalize(const State& x, int depth,
                                               std::int64_t horizon,
                                               std::int64_t budget);

}  // namespace truchet
