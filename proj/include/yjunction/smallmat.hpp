#pragma once

// Fixed-shape complex linear algebra for the 2x2 and 3x3 matrices that appear
// in Y-junction scattering: products, adjoints, the explicit 2x2 inverse, the
// Gell-Mann basis and closed-form exponentials of the generators used by the
// Euler-angle parametrization of SU(3).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace yjunction {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
struct Vec {
  std::array<Complex, N> v{};

  Complex& operator[](std::size_t i) { return v[i]; }
  const Complex& operator[](std::size_t i) const { return v[i]; }
};

/// Dense row-major N x N complex matrix.
template <std::size_t N>
struct Mat {
  std::array<Complex, N * N> a{};

  Complex& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat diagonal(const std::array<Complex, N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;
using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <std::size_t N>
Mat<N> operator+(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <std::size_t N>
Mat<N> operator-(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <std::size_t N>
Mat<N> operator*(Complex s, const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = s * x.a[i];
  return r;
}

template <std::size_t N>
Vec<N> operator+(const Vec<N>& x, const Vec<N>& y) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

template <std::size_t N>
Vec<N> operator-(const Vec<N>& x, const Vec<N>& y) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

template <std::size_t N>
Vec<N> operator*(Complex s, const Vec<N>& x) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
  return r;
}

template <std::size_t N>
Mat<N> mul(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <std::size_t N>
Vec<N> mul(const Mat<N>& x, const Vec<N>& y) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += x(i, j) * y[j];
  return r;
}

/// Row vector times matrix.
template <std::size_t N>
Vec<N> mul(const Vec<N>& row, const Mat<N>& x) {
  Vec<N> r;
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) r[j] += row[i] * x(i, j);
  return r;
}

/// Bilinear (non-conjugating) dot product.
template <std::size_t N>
Complex dot(const Vec<N>& x, const Vec<N>& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
  return s;
}

template <std::size_t N>
Mat<N> dagger(const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = x(j, i);
  return r;
}

template <std::size_t N>
Complex trace(const Mat<N>& x) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += x(i, i);
  return t;
}

/// Largest entry modulus.
template <std::size_t N>
double max_norm(const Mat<N>& x) {
  double m = 0.0;
  for (const auto& z : x.a) m = std::max(m, std::abs(z));
  return m;
}

template <std::size_t N>
double max_norm(const Vec<N>& x) {
  double m = 0.0;
  for (const auto& z : x.v) m = std::max(m, std::abs(z));
  return m;
}

/// Induced infinity norm (maximum absolute row sum).
template <std::size_t N>
double row_sum_norm(const Mat<N>& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += std::abs(x(i, j));
    m = std::max(m, s);
  }
  return m;
}

template <std::size_t N>
double l1_norm(const Vec<N>& x) {
  double s = 0.0;
  for (const auto& z : x.v) s += std::abs(z);
  return s;
}

template <std::size_t N>
bool all_finite(const Mat<N>& x) {
  for (const auto& z : x.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

/// max |x x^dagger - I|.
template <std::size_t N>
double unitarity_error(const Mat<N>& x) {
  return max_norm(mul(x, dagger(x)) - Mat<N>::identity());
}

Complex det2(const Mat2& x);

/// Explicit 2x2 inverse. Throws SingularMatrixError when
/// |det| <= 1e-13 * max_norm(x)^2.
Mat2 inverse2(const Mat2& x);

/// Gell-Mann matrix lambda_index, index in 1..8. Throws std::invalid_argument.
Mat3 gell_mann(int index);

/// exp(i * angle * lambda_index) in closed form for index in {2, 3, 5, 8}.
/// lambda_2 and lambda_5 give real rotations in the (1,2) and (1,3) planes;
/// lambda_3 and lambda_8 give diagonal phases. Other indices throw
/// std::invalid_argument.
Mat3 exp_i_generator(int index, double angle);

}  // namespace yjunction
