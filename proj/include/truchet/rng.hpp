#pragma once

#include <cstdint>

namespace truchet {

// Counter-based random bits: the draw for (seed, stream, counter) depends on
// nothing else, so lazily grown sequences see the same randomness regardless
// of query order.

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t counter) {
  return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t stream,
                                std::int64_t counter) {
  return keyed_bits(seed, stream, static_cast<std::uint64_t>(counter));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline bool keyed_flip(std::uint64_t seed, std::uint64_t stream,
                       std::int64_t counter, double prob_true) {
  return unit_double(keyed_bits(seed, stream, counter)) < prob_true;
}

}  // namespace truchet
