#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "truchet/linalg.hpp"
#include "truchet/rational.hpp"
#include "truchet/sequence.hpp"
#include "truchet/symbol.hpp"

namespace truchet {

// Closed-form calculus for the renormalization cocycle acting on the
// six-dimensional space of step-class weights.  Everything here is generic
// over the scalar: instantiate with Rational for exact results (the
// persistence parameters m/(m+1) are rational) or with double for general
// real parameters.

template <typename T>
using StepMeasureVector = Vec<T, 6>;

template <typename T>
using Cocycle6 = Mat<T, 6>;

template <typename T>
using Reduced2 = Mat<T, 2>;

// Parameter of the collapsed law: persistence p maps to 1/(2-p).
template <typename T>
T transport_q(const T& p) {
  return T(1) / (T(2) - p);
}

// Persistence chain m/(m+1) -> (m+1)/(m+2): transport in coordinates where
// each collapse bumps the index by one.
template <typename T>
T persistence_of(const T& m) {
  return m / (m + T(1));
}

// (1-p)^2 / (p(2-p)): the expected number of inserted blocks at a junction
// whose collapsed word is not -+; a -+ junction carries one more.
template <typename T>
T insertion_excess(const T& p) {
  const T one_minus = T(1) - p;
  return one_minus * one_minus / (p * (T(2) - p));
}

template <typename T>
T expected_insertion(const T& p, Sym s0, Sym s1) {
  const T excess = insertion_excess(p);
  return (s0 == Sym::Minus && s1 == Sym::Plus) ? T(1) + excess : excess;
}

// Measures of the six step classes under persistence-(p, q) driving with a
// uniform normal: ((1-p)/4, (1-p)/4, p/2, (1-q)/4, (1-q)/4, q/2).
template <typename T>
StepMeasureVector<T> step_measure_vector(const T& p, const T& q) {
  return {(T(1) - p) / T(4), (T(1) - p) / T(4), p / T(2),
          (T(1) - q) / T(4), (T(1) - q) / T(4), q / T(2)};
}

// Transfer matrix assembled from the per-class expected insertion counts
// m_1..m_6.  Row j sums to 4*m_j + 1, the expected return time given that the
// collapsed step has class j.
template <typename T>
Cocycle6<T> cocycle_matrix(const StepMeasureVector<T>& m) {
  Cocycle6<T> M;
  M[0] = {m[0], m[0] - T(1), T(2), T(0), T(0), T(2) * m[0]};
  M[1] = {m[1], m[1] + T(1), T(0), T(0), T(0), T(2) * m[1]};
  M[2] = {m[2], m[2], T(1), T(0), T(0), T(2) * m[2]};
  M[3] = {T(0), T(0), T(2) * m[3], m[3], m[3] - T(1), T(2)};
  M[4] = {T(0), T(0), T(2) * m[4], m[4], m[4] + T(1), T(0)};
  M[5] = {T(0), T(0), T(2) * m[5], m[5], m[5], T(1)};
  return M;
}

// Expected insertion counts per collapsed step class: horizontal classes see
// the omega witness, vertical the primed one, and only the -+ classes carry
// the extra mandatory block.
template <typename T>
StepMeasureVector<T> insertion_means(const T& p, const T& q) {
  const T hp = insertion_excess(p);
  const T hq = insertion_excess(q);
  return {T(1) + hp, hp, hp, T(1) + hq, hq, hq};
}

template <typename T>
Cocycle6<T> matrix_mpq(const T& p, const T& q) {
  return cocycle_matrix(insertion_means(p, q));
}

// The same matrix as base + excess(p) * H + excess(q) * V; used as an
// algebraic cross-check of matrix_mpq.
template <typename T>
Cocycle6<T> matrix_mpq_split(const T& p, const T& q) {
  Cocycle6<T> base, H, V;
  base[0] = {T(1), T(0), T(2), T(0), T(0), T(2)};
  base[1] = {T(0), T(1), T(0), T(0), T(0), T(0)};
  base[2] = {T(0), T(0), T(1), T(0), T(0), T(0)};
  base[3] = {T(0), T(0), T(2), T(1), T(0), T(2)};
  base[4] = {T(0), T(0), T(0), T(0), T(1), T(0)};
  base[5] = {T(0), T(0), T(0), T(0), T(0), T(1)};
  for (int i = 0; i < 3; ++i) {
    H[i] = {T(1), T(1), T(0), T(0), T(0), T(2)};
    V[i + 3] = {T(0), T(0), T(2), T(1), T(1), T(0)};
  }
  return base + insertion_excess(p) * H + insertion_excess(q) * V;
}

// Symmetric reduction for equal parameters p(n) = q(n) = n/(n+1): row vectors
// of the shape s(w) = (a/4, a/4, b/2, a/4, a/4, b/2) are preserved, and the
// 6x6 action collapses to the 2x2 matrix [[1,2],[0,1]] + 2/(n(n+2)) * ones.
template <typename T>
Vec<T, 6> section_s(const Vec<T, 2>& w) {
  return {w[0] / T(4), w[0] / T(4), w[1] / T(2),
          w[0] / T(4), w[0] / T(4), w[1] / T(2)};
}

template <typename T>
Vec<T, 2> projection_pi(const Vec<T, 6>& v) {
  return {v[0] + v[1] + v[3] + v[4], v[2] + v[5]};
}

template <typename T>
Reduced2<T> reduced_Nn(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("reduction index must be >= 1");
  const T c = T(2) / (T(n) * T(n + 2));
  Reduced2<T> N;
  N[0] = {T(1) + c, T(2) + c};
  N[1] = {c, T(1) + c};
  return N;
}

// Mass of the k-times-renormalizable orbits under persistence parameters
// p(m+i), q(n+i): the prefactor m*n/((m+k)(n+k)) is the measure surviving k
// collapses, and the matrix product (applied right to left, innermost factor
// at i = 0) transports the constant function back down the tower.  Entry 0 of
// the result is 1 and the sequence is nonincreasing.
template <typename T>
std::vector<T> nu_on_sequence(const T& m, const T& n, int kmax) {
  if (!(m > T(0) && n > T(0)))
    throw std::invalid_argument("parameters must be positive");
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");

  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  Vec<T, 6> w = ones_vec<T, 6>();
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      const T mk = m + T(k - 1), nk = n + T(k - 1);
      w = matrix_mpq(persistence_of(mk), persistence_of(nk)) * w;
    }
    const T mk = m + T(k), nk = n + T(k);
    const T pref = (m * n) / (mk * nk);
    out.push_back(pref * dot(step_measure_vector(persistence_of(mk), persistence_of(nk)), w));
  }
  return out;
}

namespace detail {

// Factor (n+2)/(n+4) A + 2/(n+4) B/n of the normalized 2x2 product; equal to
// ((n+2)/(n+4)) N_n.
inline Reduced2<Rational> normalized_factor(std::int64_t n) {
  const Rational wa = rational(n + 2, n + 4);
  const Rational wb = Rational(2) / (Rational(n + 4) * Rational(n));
  Reduced2<Rational> F;
  F[0] = {wa + wb, 2 * wa + wb};
  F[1] = {wb, wa + wb};
  return F;
}

inline Vec<Rational, 2> left_probe(std::int64_t k) {
  return {rational(1, k + 1), rational(k, k + 1)};
}

}  // namespace detail

// Partial products of the fully reduced symmetric limit at m = n = 1, scaled
// by 1/12: entry k-1 holds
//   (1/12) * v_k * prod_{j=k..1} ((j+2)/(j+4) A + 2/(j+4) B_j) * (1,1)^T
// with v_k = (1/(k+1), k/(k+1)).
std::vector<Rational> l11_partial_sequence(int kmax);

inline Rational l11_partial(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return l11_partial_sequence(k).back();
}

// The same limit normalized by 1/(1+k)^2 instead: entry k-1 holds
//   (1/(1+k)^2) * v_k * (N_k ... N_1) * (1,1)^T.
// The two normalizations differ by the factor (1+k)^2/((k+3)(k+4)) exactly
// and therefore agree asymptotically.
std::vector<Rational> reduced_limit_sequence(int kmax);

// Recursion gamma_0 = 2, gamma_k = sum_{n<k} 2(n+3)(2k-2n)/(k(k+2)(k+3))
// gamma_n, evaluated exactly in O(k^2).  Dominates the reduced limit; tends
// to zero, but only at a polynomial-in-k crawl.
std::vector<Rational> gamma_sequence(int kmax);

// Coefficient sum of the gamma recursion: 2(k+1)(k+8) / (3(k+2)(k+3)).
Rational s_k(int k);

// Lower bound max(|pbar|, |qbar|) on the mass of non-closing curves when the
// driving marginals have means pbar and qbar.
double drift_lower_bound(double pbar, double qbar);

// Joint mass of (step class i, curve closes after four squares).  Classes 1
// and 5 carry mu_p(-+) * mu_q(+-), classes 2 and 4 the mirror product, and
// the matching classes never sit on a four-loop.
template <typename T>
StepMeasureVector<T> p4_class_probabilities(const T& p, const T& q) {
  const CylinderPattern mp = CylinderPattern::from_literal("^-+");
  const CylinderPattern pm = CylinderPattern::from_literal("^+-");
  const T a = cylinder_measure_t<T>(p, mp) * cylinder_measure_t<T>(q, pm);
  const T b = cylinder_measure_t<T>(p, pm) * cylinder_measure_t<T>(q, mp);
  return {a, b, T(0), b, a, T(0)};
}

}  // namespace truchet
