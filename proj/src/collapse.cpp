#include "truchet/collapse.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <utility>
#include <vector>

namespace truchet {

bool is_kept(const Sequence& omega, std::int64_t k) {
  if (omega.at(k) == Sym::Minus && omega.at(k + 1) == Sym::Plus) return false;
  if (omega.at(k - 1) == Sym::Minus && omega.at(k) == Sym::Plus) return false;
  return true;
}

Collapsibility collapsibility(const Sequence& omega, std::int64_t horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  Collapsibility out;
  out.zero = zero_collapsible(omega);
  out.horizon = horizon;

  const std::int64_t half = horizon / 2;
  bool right = false, left = false;
  for (std::int64_t k = horizon; k > half; --k) {
    if (is_kept(omega, k)) { right = true; break; }
  }
  for (std::int64_t k = -horizon; k < -half; ++k) {
    if (is_kept(omega, k)) { left = true; break; }
  }
  using U = Collapsibility::Unbounded;
  out.unbounded = right ? (left ? U::Yes : U::NoWitnessLeft)
                        : (left ? U::NoWitnessRight : U::Unknown);
  return out;
}

namespace {

// Lazily enumerates the kept indices of a parent sequence outward from 0 and
// serves the collapsed entries.  A single deleted run longer than `gap_cap`
// parent symbols aborts with HorizonExhausted: that is the only way the scan
// can fail to terminate (an alternating tail is one infinite run), and the
// per-run bound lets collapsed sequences stack without absolute position
// caps that deeper renormalization levels would outgrow.
class CollapsedSource final : public SymbolSource {
 public:
  CollapsedSource(Sequence base, std::int64_t gap_cap)
      : base_(std::move(base)), gap_cap_(gap_cap) {
    if (!zero_collapsible(base_))
      throw NotZeroCollapsible("index 0 is deleted by collapsing");
    right_.push_back(0);
  }

  Sym at(std::int64_t i) const override { return base_.at(kept_index(i)); }

  // k_i: the i-th kept index of the parent, k_0 = 0.
  std::int64_t kept_index(std::int64_t i) const {
    if (i >= 0) {
      while (static_cast<std::int64_t>(right_.size()) <= i) {
        std::int64_t k = right_.back();
        const std::int64_t stop = k + gap_cap_;
        do {
          ++k;
          if (k > stop)
            throw HorizonExhausted("deleted run exceeds the horizon");
        } while (!is_kept(base_, k));
        right_.push_back(k);
      }
      return right_[static_cast<std::size_t>(i)];
    }
    while (static_cast<std::int64_t>(left_.size()) < -i) {
      std::int64_t k = left_.empty() ? 0 : left_.back();
      const std::int64_t stop = k - gap_cap_;
      do {
        --k;
        if (k < stop)
          throw HorizonExhausted("deleted run exceeds the horizon");
      } while (!is_kept(base_, k));
      left_.push_back(k);
    }
    return left_[static_cast<std::size_t>(-i - 1)];
  }

 private:
  Sequence base_;
  std::int64_t gap_cap_;
  mutable std::vector<std::int64_t> right_;  // k_0, k_1, ...
  mutable std::vector<std::int64_t> left_;   // k_{-1}, k_{-2}, ...
};

}  // namespace

CollapseWitness collapse(const Sequence& omega, std::int64_t horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  if (!zero_collapsible(omega))
    throw NotZeroCollapsible("index 0 is deleted by collapsing");

  auto src = std::make_shared<CollapsedSource>(omega, horizon);
  const std::int64_t half = horizon / 2;

  CollapseWitness out{Sequence(src), InsertionRule{}, {}};
  out.kept_indices[0] = 0;

  // Realize kept indices until they pass +-horizon/2; their existence is the
  // witness that the kept set extends beyond the half-window.
  try {
    for (std::int64_t i = 1;; ++i) {
      const std::int64_t k = src->kept_index(i);
      out.kept_indices[i] = k;
      if (k > half) break;
    }
    for (std::int64_t i = -1;; --i) {
      const std::int64_t k = src->kept_index(i);
      out.kept_indices[i] = k;
      if (k < -half) break;
    }
  } catch (const HorizonExhausted&) {
    throw HorizonExhausted("kept set has no witness beyond half the horizon");
  }

  for (auto it = out.kept_indices.begin(); std::next(it) != out.kept_indices.end(); ++it) {
    const auto next = std::next(it);
    if (next->first != it->first + 1) continue;
    const std::int64_t gap = next->second - it->second - 1;
    if (gap > 0) out.rule.counts[it->first] = gap / 2;
  }
  return out;
}

namespace {

class InsertedSource final : public SymbolSource {
 public:
  InsertedSource(Sequence eta, InsertionRule rule)
      : eta_(std::move(eta)), rule_(std::move(rule)) {
    marks_right_.push_back(0);  // m_0 = 0
  }

  Sym at(std::int64_t k) const override {
    const auto [i, mi] = bracket(k);
    if (k == mi) return eta_.at(i);
    // Inside the inserted block (-+)^{n_i}: odd offsets are -, even are +.
    return ((k - mi) % 2 == 1) ? Sym::Minus : Sym::Plus;
  }

 private:
  // Largest i with m_i <= k, returned with m_i.  An exact hit never grows
  // past its own mark, so entries of eta stay reachable without validating
  // the junction that follows them.
  std::pair<std::int64_t, std::int64_t> bracket(std::int64_t k) const {
    if (k >= 0) {
      while (marks_right_.back() < k) grow_right();
      if (marks_right_.back() == k)
        return {static_cast<std::int64_t>(marks_right_.size()) - 1, k};
      const auto it = std::upper_bound(marks_right_.begin(), marks_right_.end(), k);
      const std::int64_t idx = (it - marks_right_.begin()) - 1;
      return {idx, marks_right_[static_cast<std::size_t>(idx)]};
    }
    // marks_left_ is descending; find the first mark <= k.
    while (marks_left_.empty() || marks_left_.back() > k) grow_left();
    const auto it = std::lower_bound(marks_left_.begin(), marks_left_.end(), k,
                                     std::greater<std::int64_t>());
    const std::int64_t j = it - marks_left_.begin();
    return {-1 - j, marks_left_[static_cast<std::size_t>(j)]};
  }

  void check_gap(std::int64_t i, std::int64_t n) const {
    if (n == 0 && eta_.at(i) == Sym::Minus && eta_.at(i + 1) == Sym::Plus)
      throw InvariantViolation("-+ junction requires a nonempty insertion");
  }

  void grow_right() const {
    const std::int64_t i = static_cast<std::int64_t>(marks_right_.size()) - 1;
    const std::int64_t n = rule_.count_at(i);
    check_gap(i, n);
    marks_right_.push_back(marks_right_.back() + 1 + 2 * n);
  }

  void grow_left() const {
    const std::int64_t i = -static_cast<std::int64_t>(marks_left_.size()) - 1;
    const std::int64_t n = rule_.count_at(i);
    check_gap(i, n);
    const std::int64_t prev = marks_left_.empty() ? 0 : marks_left_.back();
    marks_left_.push_back(prev - 1 - 2 * n);
  }

  Sequence eta_;
  InsertionRule rule_;
  mutable std::vector<std::int64_t> marks_right_;  // m_0, m_1, ...
  mutable std::vector<std::int64_t> marks_left_;   // m_{-1}, m_{-2}, ...
};

}  // namespace

Sequence insert(const Sequence& eta, const InsertionRule& rule) {
  return Sequence(std::make_shared<InsertedSource>(eta, rule));
}

}  // namespace truchet
