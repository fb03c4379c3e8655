#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "truchet/collapse.hpp"
#include "truchet/rng.hpp"
#include "truchet/sequence.hpp"

using namespace truchet;

namespace {

double binom_sigma(double p, std::int64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Insertion rule with geometric counts on a finite support window, padded to
// respect the -+ junction requirement.
InsertionRule random_rule(const Sequence& eta, std::int64_t lo, std::int64_t hi,
                          std::uint64_t seed) {
  InsertionRule rule;
  for (std::int64_t i = lo; i <= hi; ++i) {
    std::int64_t n = 0;
    while (n < 6 && keyed_flip(seed, 77, i * 7 + n, 0.4)) ++n;
    if (eta.at(i) == Sym::Minus && eta.at(i + 1) == Sym::Plus && n == 0) n = 1;
    if (n > 0) rule.counts[i] = n;
  }
  return rule;
}

}  // namespace

TEST_CASE("zero collapsibility reads a three-symbol window") {
  CHECK(zero_collapsible(Sequence::constant(Sym::Plus)));
  CHECK_FALSE(zero_collapsible(Sequence::from_literal("^-+")));
  CHECK_FALSE(zero_collapsible(Sequence::from_literal("-^+")));
  CHECK(zero_collapsible(Sequence::from_literal("++^+-+")));  // -+ only after 0
}

TEST_CASE("collapsibility of the alternating sequence") {
  const Sequence alt = Sequence::alternating();
  for (std::int64_t horizon : {16, 256, 4096}) {
    const Collapsibility c = collapsibility(alt, horizon);
    CHECK_FALSE(c.zero);  // alt_{-1} = -1, alt_0 = +1 puts 0 in a deleted pair
    CHECK(c.unbounded == Collapsibility::Unbounded::Unknown);
    CHECK(c.horizon == horizon);
    CHECK_FALSE(c.collapsible_within_horizon());
  }
  CHECK_FALSE(zero_collapsible(alt.shift(1)));  // now omega_0 omega_1 = -+
}

TEST_CASE("collapsibility of constants and of a one-sided alternating tail") {
  const Collapsibility c = collapsibility(Sequence::constant(Sym::Plus), 64);
  CHECK(c.zero);
  CHECK(c.unbounded == Collapsibility::Unbounded::Yes);
  CHECK(c.collapsible_within_horizon());

  // Kept everywhere on the left, one long deleted run on the right.
  std::string text = std::string(40, '+') + "^+";
  for (int i = 0; i < 20; ++i) text += "-+";
  const Collapsibility tail = collapsibility(Sequence::from_literal(text), 16);
  CHECK(tail.zero);
  CHECK(tail.unbounded == Collapsibility::Unbounded::NoWitnessRight);
}

TEST_CASE("fraction of non-zero-collapsible samples is 1 - p") {
  const std::int64_t n = 100000;
  std::int64_t not_zero = 0;
  for (std::int64_t seed = 0; seed < n; ++seed)
    if (!zero_collapsible(
            Sequence::sample_markov(MarkovParams(0.5), static_cast<std::uint64_t>(seed))))
      ++not_zero;
  CHECK(std::abs(static_cast<double>(not_zero) / n - 0.5) <= 3 * binom_sigma(0.5, n));
}

TEST_CASE("worked collapse example") {
  // Deleting the -+ runs of ...-++---+-+[+]--+++... leaves ...+--[+]-++...
  const Sequence omega = Sequence::from_literal("-++---+-+^+--+++");
  const CollapseWitness w = collapse(omega, 12);
  CHECK(print_literal(w.eta, -3, 3) == "+--^+-++");

  CHECK(w.kept_indices.at(-3) == -7);
  CHECK(w.kept_indices.at(-2) == -6);
  CHECK(w.kept_indices.at(-1) == -5);
  CHECK(w.kept_indices.at(0) == 0);
  CHECK(w.kept_indices.at(1) == 1);
  CHECK(w.kept_indices.at(2) == 4);
  CHECK(w.rule.count_at(-1) == 2);  // (-+)^2 deleted between -5 and 0
  CHECK(w.rule.count_at(0) == 0);
  CHECK(w.rule.count_at(1) == 1);   // one -+ deleted between 1 and 4
}

TEST_CASE("collapse of a constant sequence is the identity") {
  const CollapseWitness w = collapse(Sequence::constant(Sym::Plus), 16);
  CHECK(equal_on(w.eta, Sequence::constant(Sym::Plus), -8, 8));
  for (const auto& [i, k] : w.kept_indices) CHECK(i == k);
  CHECK(w.rule.counts.empty());
}

TEST_CASE("collapse error cases") {
  CHECK_THROWS_AS(collapse(Sequence::from_literal("^-+"), 64), NotZeroCollapsible);
  CHECK_THROWS_AS(collapse(Sequence::constant(Sym::Plus), 1), std::invalid_argument);

  // A deleted run of 24 symbols right of the origin: fails at horizon 16,
  // succeeds once the horizon covers the run.
  std::string text = "+^+";
  for (int i = 0; i < 12; ++i) text += "-+";
  const Sequence omega = Sequence::from_literal(text);
  CHECK_THROWS_AS(collapse(omega, 16), HorizonExhausted);
  const CollapseWitness w = collapse(omega, 64);
  CHECK(w.rule.count_at(0) == 12);
}

TEST_CASE("insertion identity and the spacing recurrence") {
  const Sequence plus = Sequence::constant(Sym::Plus);
  CHECK(equal_on(insert(plus, InsertionRule{}), plus, -16, 16));

  InsertionRule rule;
  rule.counts[0] = 1;
  const Sequence out = insert(plus, rule);
  CHECK(out.at(0) == Sym::Plus);
  CHECK(out.at(1) == Sym::Minus);
  CHECK(out.at(2) == Sym::Plus);
  CHECK(out.at(3) == Sym::Plus);
  CHECK(out.at(-1) == Sym::Plus);
}

TEST_CASE("insertion rejects an empty word at a -+ junction") {
  const Sequence bad = insert(Sequence::from_literal("^-+"), InsertionRule{});
  CHECK_THROWS_AS((void)bad.at(1), InvariantViolation);
}

TEST_CASE("collapse then insert rebuilds the sequence") {
  std::int64_t done = 0;
  for (std::uint64_t seed = 0; done < 1000; ++seed) {
    const Sequence omega = Sequence::sample_markov(MarkovParams(0.5), seed);
    if (!zero_collapsible(omega)) continue;
    ++done;
    const CollapseWitness w = collapse(omega, 512);
    const Sequence rebuilt = insert(w.eta, w.rule);
    const std::int64_t lo = w.kept_indices.begin()->second;
    const std::int64_t hi = w.kept_indices.rbegin()->second;
    CHECK(equal_on(rebuilt, omega, lo, hi));
  }
}

TEST_CASE("insert then collapse recovers the pair") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Sequence eta = Sequence::sample_markov(MarkovParams(0.5), mix64(seed));
    // Support wide enough that the collapse scan never leaves it; counts are
    // capped at 6, so the witness is guaranteed to reach indices +-9.
    const InsertionRule rule = random_rule(eta, -160, 160, seed);
    const Sequence omega = insert(eta, rule);
    REQUIRE(zero_collapsible(omega));
    const CollapseWitness w = collapse(omega, 256);
    CHECK(equal_on(w.eta, eta, -9, 9));
    for (std::int64_t i = -9; i <= 9; ++i)
      CHECK(w.rule.count_at(i) == rule.count_at(i));
  }
}

TEST_CASE("collapse commutes with the shift to the next kept index") {
  std::int64_t done = 0;
  for (std::uint64_t seed = 100000; done < 500; ++seed) {
    const Sequence omega = Sequence::sample_markov(MarkovParams(0.5), seed);
    if (!zero_collapsible(omega)) continue;
    ++done;
    const CollapseWitness w = collapse(omega, 512);
    const std::int64_t k1 = w.kept_indices.at(1);
    const CollapseWitness shifted = collapse(omega.shift(k1), 512);
    CHECK(equal_on(shifted.eta, w.eta.shift(1), -8, 8));
  }
}
