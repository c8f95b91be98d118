/// @file scalars.hpp
/// Coefficient field backends for the superspace algebra templates.
///
/// Two interchangeable scalar types:
///   - RationalComplex: exact Gaussian-rational arithmetic (elements of Q(i)).
///     Used wherever an identity is supposed to hold exactly, so the test
///     either yields literal zero or a genuine counterexample.
///   - Complex (std::complex<double>): used for anything involving square
///     roots (mass shells, boosts) or numerical rank decisions.
///
/// The free functions below form the small interface every algebra template
/// relies on; both backends satisfy it.
#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>

namespace superspace {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// ============================================================================
// Exact Gaussian-rational scalar
// ============================================================================

/// Element re + im*i of Q(i). Arithmetic is exact; equality is decidable.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit RationalComplex(long r) : re(r), im(0) {}

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
  RationalComplex& operator-=(const RationalComplex& o) { return *this = *this - o; }
  RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// ============================================================================
// Unified scalar interface
// ============================================================================

/// Maps a scalar backend to its real (momentum-entry) type and constants.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static Complex from_real(Real r) { return {r, 0.0}; }
};

template <>
struct ScalarTraits<RationalComplex> {
  using Real = Rational;
  static RationalComplex zero() { return {}; }
  static RationalComplex one() { return {Rational(1), Rational(0)}; }
  static RationalComplex imag_unit() { return {Rational(0), Rational(1)}; }
  static RationalComplex from_int(long n) { return {Rational(n), Rational(0)}; }
  static RationalComplex from_real(Real r) { return {std::move(r), Rational(0)}; }
};

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline RationalComplex conj_of(const RationalComplex& z) { return {z.re, -z.im}; }

/// Exact zero test (pruning and support bookkeeping, not a tolerance check).
inline bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool is_zero(const RationalComplex& z) { return z.re == 0 && z.im == 0; }

inline double to_double(double r) { return r; }
inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const RationalComplex& z) {
  return {to_double(z.re), to_double(z.im)};
}

/// Magnitude for residual reports; exact scalars are converted first.
template <class Scalar>
double abs_approx(const Scalar& z) {
  return std::abs(to_complex(z));
}

// ============================================================================
// Momenta
// ============================================================================

/// Real 4-covector p_mu; the real type follows the scalar backend.
template <class Real>
using Covector = std::array<Real, 4>;

template <class Real>
Covector<Real> negated(const Covector<Real>& p) {
  return {-p[0], -p[1], -p[2], -p[3]};
}

template <class Real>
Covector<double> to_double_covector(const Covector<Real>& p) {
  return {to_double(p[0]), to_double(p[1]), to_double(p[2]), to_double(p[3])};
}

}  // namespace superspace
