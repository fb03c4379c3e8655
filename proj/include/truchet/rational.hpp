#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace truchet {

// Exact rational scalar for the closed-form measure calculus.  The
// convergence statements are delicate enough that roundoff must not be able
// to fake or break them; doubles remain available through the same templates
// for general real parameters.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace truchet
