#pragma once

#include <array>
#include <cstddef>

namespace truchet {

// Just enough fixed-size linear algebra for the 6x6 transfer matrices and
// their 2x2 reduction, generic over the scalar (double or Rational).

template <typename T, std::size_t N>
using Vec = std::array<T, N>;

template <typename T, std::size_t N>
struct Mat {
  std::array<std::array<T, N>, N> a{};

  std::array<T, N>& operator[](std::size_t i) { return a[i]; }
  const std::array<T, N>& operator[](std::size_t i) const { return a[i]; }

  friend Vec<T, N> operator*(const Mat& m, const Vec<T, N>& v) {
    Vec<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      T acc = T(0);
      for (std::size_t j = 0; j < N; ++j) acc += m.a[i][j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend Vec<T, N> operator*(const Vec<T, N>& v, const Mat& m) {
    Vec<T, N> out{};
    for (std::size_t j = 0; j < N; ++j) {
      T acc = T(0);
      for (std::size_t i = 0; i < N; ++i) acc += v[i] * m.a[i][j];
      out[j] = acc;
    }
    return out;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        T acc = T(0);
        for (std::size_t k = 0; k < N; ++k) acc += x.a[i][k] * y.a[k][j];
        out.a[i][j] = acc;
      }
    return out;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.a[i][j] = x.a[i][j] + y.a[i][j];
    return out;
  }

  friend Mat operator*(const T& c, const Mat& m) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.a[i][j] = c * m.a[i][j];
    return out;
  }

  bool operator==(const Mat&) const = default;
};

template <typename T, std::size_t N>
T dot(const Vec<T, N>& x, const Vec<T, N>& y) {
  T acc = T(0);
  for (std::size_t i = 0; i < N; ++i) acc += x[i] * y[i];
  return acc;
}

template <typename T, std::size_t N>
Vec<T, N> ones_vec() {
  Vec<T, N> v;
  v.fill(T(1));
  return v;
}

}  // namespace truchet
