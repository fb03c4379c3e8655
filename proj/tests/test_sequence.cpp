#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "truchet/rng.hpp"
#include "truchet/sequence.hpp"

using namespace truchet;

namespace {

double binom_sigma(double p, std::int64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

TEST_CASE("alternating and constant entries") {
  const Sequence alt = Sequence::alternating();
  CHECK(alt.at(0) == Sym::Plus);
  CHECK(alt.at(3) == Sym::Minus);
  CHECK(alt.at(-1) == Sym::Minus);
  CHECK(alt.at(-4) == Sym::Plus);

  const Sequence one = Sequence::constant(Sym::Plus);
  CHECK(one.at(-7) == Sym::Plus);
}

TEST_CASE("markov sampling is deterministic and order-independent") {
  const MarkovParams params(0.3);
  const Sequence a = Sequence::sample_markov(params, 42);
  const Sequence b = Sequence::sample_markov(params, 42);
  CHECK(a.at(100) == b.at(100));  // b realized 100 directly, a grew to it

  // Query in a different order; every index must agree.
  const Sequence c = Sequence::sample_markov(params, 42);
  (void)c.at(-50);
  (void)c.at(7);
  for (std::int64_t n = -50; n <= 100; ++n) CHECK(a.at(n) == c.at(n));

  const Sequence d = Sequence::sample_markov(params, 43);
  bool all_equal = true;
  for (std::int64_t n = -20; n <= 20; ++n) all_equal &= (a.at(n) == d.at(n));
  CHECK_FALSE(all_equal);
}

TEST_CASE("shift composition and identity") {
  const Sequence s = Sequence::sample_markov(MarkovParams(0.5), 7);
  CHECK(shift(Sequence::alternating(), 1).at(0) == Sym::Minus);
  CHECK(equal_on(shift(shift(s, 5), -5), s, -20, 20));
  CHECK(equal_on(shift(s, 0), s, -20, 20));

  const Sequence lhs = shift(shift(s, 3), -8);
  const Sequence rhs = shift(s, -5);
  CHECK(equal_on(lhs, rhs, -30, 30));
}

TEST_CASE("sequence literals parse and print exactly") {
  const std::string text = "-+^+--";
  const ParsedLiteral lit = parse_literal(text);
  CHECK(lit.lo == -2);
  CHECK(lit.hi == 2);

  const Sequence s = Sequence::from_literal(text);
  CHECK(s.at(-2) == Sym::Minus);
  CHECK(s.at(-1) == Sym::Plus);
  CHECK(s.at(0) == Sym::Plus);
  CHECK(s.at(1) == Sym::Minus);
  CHECK(s.at(2) == Sym::Minus);
  CHECK(print_literal(s, -2, 2) == text);

  CHECK_THROWS_AS(parse_literal("+-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_literal("+^-^+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_literal("^+x"), std::invalid_argument);
}

TEST_CASE("markov marginals match the defining law") {
  const std::int64_t n = 100000;

  // Frequency of omega_0 = +1 is 1/2 for any persistence.
  std::int64_t plus = 0;
  for (std::int64_t seed = 0; seed < n; ++seed)
    if (Sequence::sample_markov(MarkovParams(0.3), static_cast<std::uint64_t>(seed)).at(0) ==
        Sym::Plus)
      ++plus;
  CHECK(std::abs(static_cast<double>(plus) / n - 0.5) <= 3 * binom_sigma(0.5, n));

  // Frequency of omega_0 = omega_1 is p.
  std::int64_t match = 0;
  for (std::int64_t seed = 0; seed < n; ++seed) {
    const Sequence s =
        Sequence::sample_markov(MarkovParams(0.5), static_cast<std::uint64_t>(seed) + 900000);
    if (s.at(0) == s.at(1)) ++match;
  }
  CHECK(std::abs(static_cast<double>(match) / n - 0.5) <= 3 * binom_sigma(0.5, n));
}

TEST_CASE("degenerate persistence constructors") {
  const Sequence one = Sequence::sample_degenerate_markov(1, 5);
  for (std::int64_t k = -8; k <= 8; ++k) CHECK(one.at(k) == one.at(0));

  const Sequence alt = Sequence::sample_degenerate_markov(0, 5);
  for (std::int64_t k = -8; k < 8; ++k) CHECK(alt.at(k) == negate(alt.at(k + 1)));

  CHECK_THROWS_AS(MarkovParams(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MarkovParams(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Sequence::sample_degenerate_markov(2, 1), std::invalid_argument);
}

TEST_CASE("bernoulli sequences") {
  const Sequence sure = Sequence::bernoulli(1.0, 3);
  for (std::int64_t k = -5; k <= 5; ++k) CHECK(sure.at(k) == Sym::Plus);

  const std::int64_t n = 100000;
  double sum_fair = 0, sum_biased = 0;
  for (std::int64_t seed = 0; seed < n; ++seed) {
    sum_fair += to_int(Sequence::bernoulli(0.5, static_cast<std::uint64_t>(seed)).at(0));
    sum_biased += to_int(Sequence::bernoulli(0.8, static_cast<std::uint64_t>(seed)).at(0));
  }
  // Mean of a +-1 entry is 2r - 1; sigma of the mean is 2*binom_sigma.
  CHECK(std::abs(sum_fair / n - 0.0) <= 6 * binom_sigma(0.5, n));
  CHECK(std::abs(sum_biased / n - 0.6) <= 6 * binom_sigma(0.8, n));
}

TEST_CASE("cylinder measure closed form") {
  const MarkovParams half(0.5);
  CHECK(cylinder_measure(half, CylinderPattern::from_literal("^++")) ==
        doctest::Approx(0.25));
  CHECK(cylinder_measure(MarkovParams(0.123), CylinderPattern::from_literal("^+")) ==
        doctest::Approx(0.5));
  // Two symbols, one non-matching pair: (1/2)(1-p).
  CHECK(cylinder_measure(half, CylinderPattern::from_literal("^-+")) ==
        doctest::Approx(0.25));

  // Additivity when extending at either end.
  const MarkovParams p(0.37);
  const auto measure = [&](const std::string& lit) {
    return cylinder_measure(p, CylinderPattern::from_literal(lit));
  };
  CHECK(measure("^-+") == doctest::Approx(measure("^-++") + measure("^-+-")));
  CHECK(measure("^-+") == doctest::Approx(measure("+^-+") + measure("-^-+")));
}

TEST_CASE("cylinder measures on a fixed range sum to one") {
  const MarkovParams p(0.81);
  for (int len = 1; len <= 5; ++len) {
    double total = 0;
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<Sym> word;
      for (int j = 0; j < len; ++j)
        word.push_back(((bits >> j) & 1) ? Sym::Plus : Sym::Minus);
      total += cylinder_measure(p, CylinderPattern(0, len - 1, word));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sampler frequencies match cylinder measures") {
  // Every word of length <= 4 within 4 sigma at 10^6 samples, words read at
  // two different anchors to exercise shift invariance of the law.
  const double p = 0.5;
  const std::int64_t n = 1000000;
  std::map<std::string, std::int64_t> at_zero, at_five;
  for (std::int64_t seed = 0; seed < n; ++seed) {
    const Sequence s = Sequence::sample_markov(MarkovParams(p), static_cast<std::uint64_t>(seed));
    std::string w0, w5;
    for (int j = 0; j < 4; ++j) {
      w0.push_back(to_char(s.at(j)));
      w5.push_back(to_char(s.at(j + 5)));
    }
    ++at_zero[w0];
    ++at_five[w5];
  }
  for (int bits = 0; bits < 16; ++bits) {
    std::string w;
    std::vector<Sym> syms;
    for (int j = 0; j < 4; ++j) {
      const Sym s = ((bits >> j) & 1) ? Sym::Plus : Sym::Minus;
      w.push_back(to_char(s));
      syms.push_back(s);
    }
    const double expect = cylinder_measure(MarkovParams(p), CylinderPattern(0, 3, syms));
    const double band = 4 * binom_sigma(expect, n);
    CHECK(std::abs(static_cast<double>(at_zero[w]) / n - expect) <= band);
    CHECK(std::abs(static_cast<double>(at_five[w]) / n - expect) <= band);
  }
}

TEST_CASE("the chain law is stationary across the origin seam") {
  // Words spanning negative and positive indices exercise the junction of
  // the two one-sided chains; their frequencies must follow the same
  // cylinder formula as any other window.
  const double p = 0.3;
  const std::int64_t n = 500000;
  std::map<std::string, std::int64_t> counts;
  for (std::int64_t seed = 0; seed < n; ++seed) {
    const Sequence s =
        Sequence::sample_markov(MarkovParams(p), static_cast<std::uint64_t>(seed) + 5000000);
    std::string w;
    for (std::int64_t j = -2; j <= 1; ++j) w.push_back(to_char(s.at(j)));
    ++counts[w];
  }
  for (int bits = 0; bits < 16; ++bits) {
    std::string w;
    std::vector<Sym> syms;
    for (int j = 0; j < 4; ++j) {
      const Sym sym = ((bits >> j) & 1) ? Sym::Plus : Sym::Minus;
      w.push_back(to_char(sym));
      syms.push_back(sym);
    }
    const double expect = cylinder_measure(MarkovParams(p), CylinderPattern(-2, 1, syms));
    CHECK(std::abs(static_cast<double>(counts[w]) / n - expect) <=
          4 * binom_sigma(expect, n));
  }
}

TEST_CASE("monte carlo frequency of a two-symbol cylinder") {
  // Word -+ at the origin has mass (1/2)(1-p) = 1/4 at p = 1/2.
  const std::int64_t n = 1000000;
  std::int64_t hits = 0;
  for (std::int64_t seed = 0; seed < n; ++seed) {
    const Sequence s =
        Sequence::sample_markov(MarkovParams(0.5), static_cast<std::uint64_t>(seed) + 31);
    if (s.at(0) == Sym::Minus && s.at(1) == Sym::Plus) ++hits;
  }
  const double expect =
      cylinder_measure(MarkovParams(0.5), CylinderPattern::from_literal("^-+"));
  CHECK(expect == doctest::Approx(0.25));
  CHECK(std::abs(static_cast<double>(hits) / n - expect) <= 4 * binom_sigma(expect, n));
}
