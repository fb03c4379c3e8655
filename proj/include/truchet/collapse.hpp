#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "truchet/sequence.hpp"

namespace truchet {

class NotZeroCollapsible : public DomainError {
 public:
  using DomainError::DomainError;
};

// Insertion between consecutive collapsed entries violates the rule that a
// -+ junction must receive at least one inserted block.
class InvariantViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

// Index k is kept iff the window around it is not part of a removable -+
// block: neither (omega_k, omega_{k+1}) nor (omega_{k-1}, omega_k) is (-,+).
bool is_kept(const Sequence& omega, std::int64_t k);

// Kept at index 0; collapsing does not delete the origin.
inline bool zero_collapsible(const Sequence& omega) { return is_kept(omega, 0); }

// Horizon-bounded evidence about the kept-index set.  Unboundedness of the
// kept set is a tail property no finite window can certify, so the verdict
// names the witnesses actually found:
//   Yes            kept indices beyond +horizon/2 and below -horizon/2 exist;
//   NoWitnessLeft  the right witness exists, the scanned left tail is one
//                  alternating block (and vice versa for NoWitnessRight);
//   Unknown        neither direction produced a witness within the horizon
//                  (the alternating sequence lands here at every horizon).
struct Collapsibility {
  enum class Unbounded { Yes, NoWitnessLeft, NoWitnessRight, Unknown };

  bool zero = false;
  Unbounded unbounded = Unbounded::Unknown;
  std::int64_t horizon = 0;  // the horizon actually searched

  bool collapsible_within_horizon() const {
    return zero && unbounded == Unbounded::Yes;
  }
};

Collapsibility collapsibility(const Sequence& omega, std::int64_t horizon);

// Per-gap insertion counts n_i: the word (-+)^{n_i} sits between collapsed
// entries i and i+1.  Indices absent from the map count as zero.
struct InsertionRule {
  std::map<std::int64_t, std::int64_t> counts;

  std::int64_t count_at(std::int64_t i) const {
    auto it = counts.find(i);
    return it == counts.end() ? 0 : it->second;
  }
};

// Result of collapsing omega: the collapsed sequence eta, the insertion rule
// that rebuilds omega from eta, and the kept-index map i -> k_i realized so
// far (k_0 = 0, strictly increasing).
struct CollapseWitness {
  Sequence eta;
  InsertionRule rule;
  std::map<std::int64_t, std::int64_t> kept_indices;
};

// Collapses omega: deletes maximal -+ runs and reindexes the survivors so
// the origin stays at 0.  The returned sequence realizes further entries on
// demand; any single deleted run longer than `horizon` symbols aborts the
// scan, which is the only non-terminating case.
//
// Errors: NotZeroCollapsible when index 0 is deleted; HorizonExhausted when
// the kept set shows no witness past +-horizon/2 (retry with a larger
// horizon).
CollapseWitness collapse(const Sequence& omega, std::int64_t horizon);

// Rebuilds a sequence from eta by writing eta_i at position m_i and the block
// (-+)^{n_i} in between, where m_0 = 0 and m_{i+1} - m_i = 1 + 2 n_i.
// Realization throws InvariantViolation if a -+ junction of eta has n_i = 0.
Sequence insert(const Sequence& eta, const InsertionRule& rule);

}  // namespace truchet
