#include "truchet/cocycle.hpp"

#include <cmath>
#include <cstdlib>

namespace truchet {

std::vector<Rational> l11_partial_sequence(int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(kmax));
  Vec<Rational, 2> w = {Rational(1), Rational(1)};
  const Rational twelfth = rational(1, 12);
  for (int k = 1; k <= kmax; ++k) {
    w = detail::normalized_factor(k) * w;
    out.push_back(twelfth * dot(detail::left_probe(k), w));
  }
  return out;
}

std::vector<Rational> reduced_limit_sequence(int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(kmax));
  Vec<Rational, 2> w = {Rational(1), Rational(1)};
  for (int k = 1; k <= kmax; ++k) {
    w = reduced_Nn<Rational>(k) * w;
    const Rational pref = Rational(1) / (Rational(k + 1) * Rational(k + 1));
    out.push_back(pref * dot(detail::left_probe(k), w));
  }
  return out;
}

std::vector<Rational> gamma_sequence(int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(kmax) + 1);
  g.push_back(Rational(2));
  for (std::int64_t k = 1; k <= kmax; ++k) {
    Rational acc(0);
    const Rational den = Rational(k) * Rational(k + 2) * Rational(k + 3);
    for (std::int64_t n = 0; n < k; ++n)
      acc += (Rational(2 * (n + 3) * (2 * k - 2 * n)) / den) * g[static_cast<std::size_t>(n)];
    g.push_back(acc);
  }
  return g;
}

Rational s_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Rational out(2L * (k + 1) * (k + 8), 3L * (k + 2) * (k + 3));
  out.canonicalize();
  return out;
}

double drift_lower_bound(double pbar, double qbar) {
  if (!(pbar >= -1.0 && pbar <= 1.0 && qbar >= -1.0 && qbar <= 1.0))
    throw std::invalid_argument("means must lie in [-1,1]");
  return std::max(std::abs(pbar), std::abs(qbar));
}

}  // namespace truchet
