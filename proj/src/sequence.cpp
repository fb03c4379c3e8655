#include "truchet/sequence.hpp"

#include <utility>

#include "truchet/rng.hpp"

namespace truchet {

namespace {

constexpr std::uint64_t kStreamOrigin = 0;
constexpr std::uint64_t kStreamRight = 1;
constexpr std::uint64_t kStreamLeft = 2;
constexpr std::uint64_t kStreamIid = 3;

class ConstantSource final : public SymbolSource {
 public:
  explicit ConstantSource(Sym s) : s_(s) {}
  Sym at(std::int64_t) const override { return s_; }

 private:
  Sym s_;
};

class AlternatingSource final : public SymbolSource {
 public:
  Sym at(std::int64_t n) const override {
    return (n % 2 == 0) ? Sym::Plus : Sym::Minus;
  }
};

class PeriodicWordSource final : public SymbolSource {
 public:
  PeriodicWordSource(std::vector<Sym> word, std::int64_t lo)
      : word_(std::move(word)), lo_(lo) {}
  Sym at(std::int64_t n) const override {
    const auto len = static_cast<std::int64_t>(word_.size());
    std::int64_t r = (n - lo_) % len;
    if (r < 0) r += len;
    return word_[static_cast<std::size_t>(r)];
  }

 private:
  std::vector<Sym> word_;
  std::int64_t lo_;
};

class BernoulliSource final : public SymbolSource {
 public:
  BernoulliSource(double r, std::uint64_t seed) : r_(r), seed_(seed) {}
  Sym at(std::int64_t n) const override {
    return keyed_flip(seed_, kStreamIid, n, r_) ? Sym::Plus : Sym::Minus;
  }

 private:
  double r_;
  std::uint64_t seed_;
};

// Chain sampler.  Entries are realized contiguously outward from 0; the draw
// that links index n to its outward neighbor is keyed by (seed, side, n), so
// extending one tail never consumes randomness owed to the other.
class MarkovSource final : public SymbolSource {
 public:
  MarkovSource(double p, std::uint64_t seed) : p_(p), seed_(seed) {
    right_.push_back(keyed_flip(seed_, kStreamOrigin, std::int64_t{0}, 0.5)
                         ? Sym::Plus
                         : Sym::Minus);
  }

  Sym at(std::int64_t n) const override {
    if (n >= 0) {
      while (static_cast<std::int64_t>(right_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(right_.size()) - 1;
        const Sym prev = right_.back();
        right_.push_back(keyed_flip(seed_, kStreamRight, i, p_) ? prev
                                                                : negate(prev));
      }
      return right_[static_cast<std::size_t>(n)];
    }
    while (static_cast<std::int64_t>(left_.size()) < -n) {
      const std::int64_t i = static_cast<std::int64_t>(left_.size());
      const Sym prev = left_.empty() ? right_.front() : left_.back();
      left_.push_back(keyed_flip(seed_, kStreamLeft, i, p_) ? prev
                                                            : negate(prev));
    }
    return left_[static_cast<std::size_t>(-n - 1)];
  }

 private:
  double p_;
  std::uint64_t seed_;
  mutable std::vector<Sym> right_;  // indices 0, 1, 2, ...
  mutable std::vector<Sym> left_;   // indices -1, -2, ...
};

}  // namespace

Sequence Sequence::constant(Sym s) {
  return Sequence(std::make_shared<ConstantSource>(s));
}

Sequence Sequence::alternating() {
  return Sequence(std::make_shared<AlternatingSource>());
}

Sequence Sequence::from_literal(const std::string& text) {
  ParsedLiteral lit = parse_literal(text);
  return Sequence(std::make_shared<PeriodicWordSource>(std::move(lit.word), lit.lo));
}

Sequence Sequence::sample_markov(const MarkovParams& params, std::uint64_t seed) {
  return Sequence(std::make_shared<MarkovSource>(params.p(), seed));
}

Sequence Sequence::bernoulli(double r, std::uint64_t seed) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("bernoulli rate must lie in [0,1]");
  return Sequence(std::make_shared<BernoulliSource>(r, seed));
}

Sequence Sequence::sample_degenerate_markov(int p, std::uint64_t seed) {
  const bool coin = keyed_flip(seed, kStreamOrigin, std::int64_t{0}, 0.5);
  if (p == 1) return constant(coin ? Sym::Plus : Sym::Minus);
  if (p == 0) return coin ? alternating() : alternating().shift(1);
  throw std::invalid_argument("degenerate persistence must be 0 or 1");
}

bool equal_on(const Sequence& a, const Sequence& b, std::int64_t lo,
              std::int64_t hi) {
  for (std::int64_t n = lo; n <= hi; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

ParsedLiteral parse_literal(const std::string& text) {
  ParsedLiteral out;
  std::int64_t caret_pos = -1;
  for (char c : text) {
    if (c == '^') {
      if (caret_pos >= 0)
        throw std::invalid_argument("literal has more than one caret");
      caret_pos = static_cast<std::int64_t>(out.word.size());
      continue;
    }
    out.word.push_back(sym_from_char(c));
  }
  if (out.word.empty()) throw std::invalid_argument("empty sequence literal");
  if (caret_pos < 0 || caret_pos >= static_cast<std::int64_t>(out.word.size()))
    throw std::invalid_argument("literal needs '^' before the index-0 symbol");
  out.lo = -caret_pos;
  out.hi = static_cast<std::int64_t>(out.word.size()) - 1 - caret_pos;
  return out;
}

std::string print_literal(const Sequence& s, std::int64_t lo, std::int64_t hi) {
  if (lo > 0 || hi < 0)
    throw std::invalid_argument("window must cover index 0");
  std::string out;
  out.reserve(static_cast<std::size_t>(hi - lo + 2));
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n == 0) out.push_back('^');
    out.push_back(to_char(s.at(n)));
  }
  return out;
}

CylinderPattern CylinderPattern::from_literal(const std::string& text) {
  ParsedLiteral lit = parse_literal(text);
  return CylinderPattern(lit.lo, lit.hi, std::move(lit.word));
}

}  // namespace truchet
