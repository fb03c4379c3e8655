#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "truchet/symbol.hpp"

namespace truchet {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lazily realized window ran past its scan cap.  Retriable: rebuild the
// offending object with a larger horizon.
class HorizonExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

// Stationary two-state Markov law with balanced marginals: adjacent entries
// agree with probability `p`.  The open interval is enforced here; the
// degenerate endpoints p=0 and p=1 have dedicated samplers below.
class MarkovParams {
 public:
  explicit MarkovParams(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0))
      throw std::invalid_argument("persistence must lie in (0,1)");
  }
  double p() const { return p_; }

 private:
  double p_;
};

// Deterministic rule index -> symbol behind a Sequence.  Implementations must
// be total and idempotent per index.  Sources that realize symbols
// incrementally memoize internally; queries are logically pure but instances
// are confined to one thread at a time (a Sequence value may be moved across
// threads, just not queried concurrently).
class SymbolSource {
 public:
  virtual ~SymbolSource() = default;
  virtual Sym at(std::int64_t n) const = 0;
};

// A bi-infinite +-1 sequence: a shared deterministic source plus an index
// offset.  Shifting is O(1) and shares the source's memo, so a sequence and
// its shifts agree extensionally by construction.
class Sequence {
 public:
  Sequence(std::shared_ptr<const SymbolSource> src, std::int64_t offset = 0)
      : src_(std::move(src)), offset_(offset) {}

  Sym at(std::int64_t n) const { return src_->at(n + offset_); }

  // shift(k).at(n) == at(n + k)
  Sequence shift(std::int64_t k) const { return Sequence(src_, offset_ + k); }

  std::int64_t offset() const { return offset_; }
  const std::shared_ptr<const SymbolSource>& source() const { return src_; }

  // Constructors for the closed-form sequences.
  static Sequence constant(Sym s);
  static Sequence alternating();  // n -> (-1)^n

  // Periodic extension of a finite literal; see parse_literal.
  static Sequence from_literal(const std::string& text);

  // Markov sample: entry 0 is a fair coin, then each neighbor matches its
  // predecessor (outward from 0) with probability p.  One keyed random stream
  // per direction, one draw per index.
  static Sequence sample_markov(const MarkovParams& params, std::uint64_t seed);

  // Independent entries, +1 with probability r (mean 2r-1).
  static Sequence bernoulli(double r, std::uint64_t seed);

  // Degenerate persistence endpoints: p=0 is supported on the two alternating
  // sequences, p=1 on the two constants; a fair coin picks the atom.
  static Sequence sample_degenerate_markov(int p_zero_or_one,
                                           std::uint64_t seed);

 private:
  std::shared_ptr<const SymbolSource> src_;
  std::int64_t offset_;
};

inline Sequence shift(const Sequence& s, std::int64_t k) { return s.shift(k); }

bool equal_on(const Sequence& a, const Sequence& b, std::int64_t lo,
              std::int64_t hi);

// Text form of a finite window: symbols over {+,-} with '^' marking index 0,
// e.g. "-+^+--" realizes indices -2..2.  parse/print round-trip exactly; the
// resulting sequence extends the window periodically.
struct ParsedLiteral {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Sym> word;  // word[i] is the symbol at index lo + i
};

ParsedLiteral parse_literal(const std::string& text);
std::string print_literal(const Sequence& s, std::int64_t lo, std::int64_t hi);

// Finite pattern with anchored indexing (lo <= 0 <= hi).
struct CylinderPattern {
  std::int64_t lo;
  std::int64_t hi;
  std::vector<Sym> word;

  CylinderPattern(std::int64_t lo_, std::int64_t hi_, std::vector<Sym> word_)
      : lo(lo_), hi(hi_), word(std::move(word_)) {
    if (lo > 0 || hi < 0 || word.size() != static_cast<std::size_t>(hi - lo + 1))
      throw std::invalid_argument("pattern must cover index 0 with matching word length");
  }

  static CylinderPattern from_literal(const std::string& text);

  Sym at(std::int64_t i) const { return word.at(static_cast<std::size_t>(i - lo)); }
  bool matches(const Sequence& s) const {
    for (std::int64_t i = lo; i <= hi; ++i)
      if (s.at(i) != at(i)) return false;
    return true;
  }
};

// Probability of the pattern under the persistence-p law:
//   (1/2) p^k (1-p)^{(hi-lo)-k},  k = #{i : word(i) == word(i+1)}.
// The exponent on (1-p) counts the non-matching adjacent pairs, the unique
// choice under which the measures of all words on a fixed range sum to 1.
template <typename T>
T cylinder_measure_t(const T& p, const CylinderPattern& pat) {
  T acc = T(1) / T(2);
  for (std::int64_t i = pat.lo; i < pat.hi; ++i)
    acc *= (pat.at(i) == pat.at(i + 1)) ? p : T(1) - p;
  return acc;
}

inline double cylinder_measure(const MarkovParams& params,
                               const CylinderPattern& pat) {
  return cylinder_measure_t<double>(params.p(), pat);
}

}  // namespace truchet
