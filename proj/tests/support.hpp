/// @file support.hpp
/// Shared helpers for the test suites: exact scalar shorthands, deterministic
/// random data, and exact rational points on the positive mass shell.
#pragma once

#include <superspace/superspace.hpp>

#include <array>
#include <cmath>

namespace testsupport {

using superspace::Complex;
using superspace::Covector;
using superspace::ExactRng;
using superspace::GrassmannElement;
using superspace::Rational;
using superspace::RationalComplex;

[[nodiscard]] inline RationalComplex rc(long re, long im = 0) {
  return RationalComplex(Rational(re), Rational(im));
}

[[nodiscard]] inline Rational q(long num, long den = 1) {
  return Rational(num) / Rational(den);
}

/// Dense exact Grassmann element with every blade coefficient drawn.
[[nodiscard]] inline GrassmannElement<RationalComplex> dense_exact(ExactRng& rng) {
  GrassmannElement<RationalComplex> x;
  for (int m = 0; m < superspace::kBladeCount; ++m) x.c[m] = rng.coefficient();
  return x;
}

/// Dense complex Grassmann element with coefficients in the unit box.
[[nodiscard]] inline GrassmannElement<Complex> dense_complex(ExactRng& rng) {
  GrassmannElement<Complex> x;
  for (int m = 0; m < superspace::kBladeCount; ++m)
    x.c[m] = Complex(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0));
  return x;
}

/// Exact rational covector on the positive mass-m shell with every spatial
/// entry nonzero. Built by chaining the parametrization
///   left = (s + r^2/s)/2,  q = (s - r^2/s)/2   =>   left^2 - q^2 = r^2
/// once per spatial axis, starting from r = m.
[[nodiscard]] inline Covector<Rational> rational_on_shell(const Rational& m, ExactRng& rng) {
  Rational r = m;
  std::array<Rational, 3> spatial;
  for (int axis = 2; axis >= 0; --axis) {
    const Rational k = Rational(rng.int_in(1, 3)) / 2;
    const Rational s = r * (1 + k);
    const Rational left = (s + r * r / s) / 2;
    Rational qq = (s - r * r / s) / 2;
    if (rng.int_in(0, 1) == 1) qq = -qq;
    spatial[static_cast<std::size_t>(axis)] = qq;
    r = left;
  }
  return {r, spatial[0], spatial[1], spatial[2]};
}

/// Random double covector on the positive mass-m shell.
[[nodiscard]] inline Covector<double> random_double_on_shell(double m, ExactRng& rng) {
  Covector<double> p;
  for (int mu = 1; mu < 4; ++mu) p[mu] = rng.real_in(-2.0, 2.0);
  p[0] = std::sqrt(m * m + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  return p;
}

/// Random element of SL(2, C): generic complex matrix scaled to determinant 1.
[[nodiscard]] inline Eigen::Matrix2cd random_unimodular(ExactRng& rng) {
  Eigen::Matrix2cd h;
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        h(i, j) = Complex(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0));
  } while (std::abs(h.determinant()) < 0.2);
  return h / std::sqrt(h.determinant());
}

/// Random element of SU(2) via a normalized quaternion.
[[nodiscard]] inline Eigen::Matrix2cd random_su2(ExactRng& rng) {
  double a, b, c, d, n;
  do {
    a = rng.real_in(-1.0, 1.0);
    b = rng.real_in(-1.0, 1.0);
    c = rng.real_in(-1.0, 1.0);
    d = rng.real_in(-1.0, 1.0);
    n = std::sqrt(a * a + b * b + c * c + d * d);
  } while (n < 0.2);
  Eigen::Matrix2cd h;
  h << Complex(a / n, b / n), Complex(c / n, d / n), Complex(-c / n, d / n), Complex(a / n, -b / n);
  return h;
}

}  // namespace testsupport
