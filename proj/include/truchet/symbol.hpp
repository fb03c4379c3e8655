#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace truchet {

// The two-letter alphabet {+1, -1}, printed as '+' and '-'.
enum class Sym : std::int8_t { Minus = -1, Plus = +1 };

constexpr int to_int(Sym s) { return static_cast<int>(s); }

constexpr Sym sym_of(int v) {
  return v >= 0 ? Sym::Plus : Sym::Minus;
}

constexpr Sym operator*(Sym a, Sym b) {
  return a == b ? Sym::Plus : Sym::Minus;
}

constexpr Sym negate(Sym a) {
  return a == Sym::Plus ? Sym::Minus : Sym::Plus;
}

constexpr char to_char(Sym s) { return s == Sym::Plus ? '+' : '-'; }

inline Sym sym_from_char(char c) {
  if (c == '+') return Sym::Plus;
  if (c == '-') return Sym::Minus;
  throw std::invalid_argument(std::string("not a symbol character: ") + c);
}

}  // namespace truchet
