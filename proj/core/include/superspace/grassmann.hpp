/// @file grassmann.hpp
/// Exact arithmetic in the exterior algebra on four odd generators.
///
/// The generator order is fixed globally as
///     g0 = theta^1 < g1 = theta^2 < g2 = thetabar^1 < g3 = thetabar^2
/// every Koszul sign in the library derives from this single order. On the
/// momentum side the same masks are read as tau^1, tau^2, taubar^1, taubar^2.
///
/// A blade is a bitmask over the generators; the empty mask is the unit, the
/// full mask is the top blade. Elements are dense arrays of 2^N coefficients
/// over either scalar backend. A width-8 instantiation (the doubled algebra
/// on tau- and theta-generators together) backs the odd kernel transform.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "superspace/scalars.hpp"

namespace superspace {

inline constexpr int kOddGenerators = 4;
inline constexpr int kBladeCount = 16;
inline constexpr unsigned kTopBlade = 0xFu;

/// Degree-1 masks in generator order.
inline constexpr unsigned kGen[4] = {1u, 2u, 4u, 8u};

// ============================================================================
// Blade arithmetic
// ============================================================================

/// Product of two blades: zero iff the masks intersect, otherwise the union
/// with the Koszul sign of merging a before b into sorted order.
/// Merge count: each generator of b passes every generator of a above it.
[[nodiscard]] constexpr std::pair<int, unsigned> blade_mul(unsigned a, unsigned b) noexcept {
  if (a & b) return {0, 0u};
  int swaps = 0;
  unsigned rest = b;
  while (rest != 0) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    swaps += std::popcount(a >> (bit + 1));
    rest &= rest - 1;
  }
  return {(swaps & 1) ? -1 : +1, a | b};
}

/// Sign of striking generator g out of blade mask by a left derivative:
/// (-1)^(number of generators of the blade below g). Requires g in mask.
[[nodiscard]] constexpr int left_strike_sign(unsigned mask, unsigned g) noexcept {
  const int below = std::popcount(mask & ((1u << g) - 1u));
  return (below & 1) ? -1 : +1;
}

// ============================================================================
// Elements
// ============================================================================

/// Dense element of the exterior algebra on N generators.
template <class Scalar, int N = kOddGenerators>
struct GrassmannElement {
  static constexpr int kSize = 1 << N;
  std::array<Scalar, kSize> c{};

  [[nodiscard]] static GrassmannElement zero() { return {}; }
  [[nodiscard]] static GrassmannElement unit() {
    GrassmannElement x;
    x.c[0] = ScalarTraits<Scalar>::one();
    return x;
  }
  [[nodiscard]] static GrassmannElement generator(int g) {
    GrassmannElement x;
    x.c[1u << g] = ScalarTraits<Scalar>::one();
    return x;
  }
  [[nodiscard]] static GrassmannElement blade(unsigned mask, Scalar coeff) {
    GrassmannElement x;
    x.c[mask] = std::move(coeff);
    return x;
  }

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement r;
    for (int m = 0; m < kSize; ++m) r.c[m] = a.c[m] + b.c[m];
    return r;
  }
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement r;
    for (int m = 0; m < kSize; ++m) r.c[m] = a.c[m] - b.c[m];
    return r;
  }
  friend GrassmannElement operator-(const GrassmannElement& a) {
    GrassmannElement r;
    for (int m = 0; m < kSize; ++m) r.c[m] = -a.c[m];
    return r;
  }
  friend GrassmannElement operator*(const Scalar& s, const GrassmannElement& a) {
    GrassmannElement r;
    for (int m = 0; m < kSize; ++m) r.c[m] = s * a.c[m];
    return r;
  }
  GrassmannElement& operator+=(const GrassmannElement& o) { return *this = *this + o; }
  GrassmannElement& operator-=(const GrassmannElement& o) { return *this = *this - o; }

  [[nodiscard]] bool is_identically_zero() const {
    for (const Scalar& v : c)
      if (!is_zero(v)) return false;
    return true;
  }
};

/// Bilinear extension of blade_mul.
template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> mul(const GrassmannElement<Scalar, N>& x,
                                              const GrassmannElement<Scalar, N>& y) {
  GrassmannElement<Scalar, N> r;
  for (int a = 0; a < x.kSize; ++a) {
    if (is_zero(x.c[a])) continue;
    for (int b = 0; b < y.kSize; ++b) {
      if (is_zero(y.c[b])) continue;
      const auto [sign, m] = blade_mul(static_cast<unsigned>(a), static_cast<unsigned>(b));
      if (sign == 0) continue;
      Scalar term = x.c[a] * y.c[b];
      if (sign < 0) term = -term;
      r.c[m] += term;
    }
  }
  return r;
}

template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> operator*(const GrassmannElement<Scalar, N>& x,
                                                    const GrassmannElement<Scalar, N>& y) {
  return mul(x, y);
}

// ============================================================================
// Derivations and multiplication operators
// ============================================================================

/// Left odd derivative with respect to generator g: strikes g from blades
/// containing it, with the sign of moving g to the front; annihilates the
/// rest. Squares to zero; distinct derivatives anticommute.
template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> odd_derivative(int g,
                                                         const GrassmannElement<Scalar, N>& x) {
  GrassmannElement<Scalar, N> r;
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < static_cast<unsigned>(x.kSize); ++m) {
    if (!(m & gb) || is_zero(x.c[m])) continue;
    Scalar v = x.c[m];
    if (left_strike_sign(m, static_cast<unsigned>(g)) < 0) v = -v;
    r.c[m ^ gb] += v;
  }
  return r;
}

/// Exterior multiplication by generator g from the left.
template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> exterior_mul(int g,
                                                       const GrassmannElement<Scalar, N>& x) {
  GrassmannElement<Scalar, N> r;
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < static_cast<unsigned>(x.kSize); ++m) {
    if ((m & gb) || is_zero(x.c[m])) continue;
    const auto [sign, out] = blade_mul(gb, m);
    Scalar v = x.c[m];
    if (sign < 0) v = -v;
    r.c[out] += v;
  }
  return r;
}

/// Contraction with the covector dual to generator g. For the dual basis this
/// equals the left odd derivative; the pair satisfies e_g i_g + i_g e_g = Id.
template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> contraction(int g, const GrassmannElement<Scalar, N>& x) {
  return odd_derivative(g, x);
}

// ============================================================================
// Berezin integral, parity, conjugation
// ============================================================================

/// Coefficient of the top blade, normalization +1. This is the odd part of
/// the superspace integration measure.
template <class Scalar, int N>
[[nodiscard]] Scalar berezin_integral(const GrassmannElement<Scalar, N>& x) {
  return x.c[(1u << N) - 1u];
}

/// Blade degree mod 2 selector: keep blades of the requested parity.
template <class Scalar, int N>
[[nodiscard]] GrassmannElement<Scalar, N> parity_part(const GrassmannElement<Scalar, N>& x,
                                                      int parity) {
  GrassmannElement<Scalar, N> r;
  for (unsigned m = 0; m < static_cast<unsigned>(x.kSize); ++m)
    if ((std::popcount(m) & 1) == parity) r.c[m] = x.c[m];
  return r;
}

/// Antilinear involution: coefficients conjugate, theta^a <-> thetabar^a
/// (generator swap 0<->2, 1<->3), factors kept in place and the image blade
/// resorted with its Koszul sign, so conj(xy) = conj(x) conj(y) and
/// conj(theta^1 theta^2) = +thetabar^1 thetabar^2 (the sign the reality
/// structure of the massive superfield equation requires). Applied twice it
/// is the identity.
template <class Scalar>
[[nodiscard]] GrassmannElement<Scalar, 4> conjugate(const GrassmannElement<Scalar, 4>& x) {
  static constexpr int kSwap[4] = {2, 3, 0, 1};
  GrassmannElement<Scalar, 4> r;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (is_zero(x.c[m])) continue;
    // Walk the sorted blade in order, mapping generators; count the
    // inversions needed to resort the image sequence.
    int image[4];
    int len = 0;
    for (int g = 0; g < 4; ++g)
      if (m & (1u << g)) image[len++] = kSwap[g];
    int inversions = 0;
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        if (image[i] > image[j]) ++inversions;
    unsigned out = 0;
    for (int i = 0; i < len; ++i) out |= 1u << image[i];
    Scalar v = conj_of(x.c[m]);
    if (inversions & 1) v = -v;
    r.c[out] += v;
  }
  return r;
}

// ============================================================================
// Hodge dual
// ============================================================================

/// Frozen degree-reversing blade table, indexed by source mask: target mask
/// and factor (encoded 0 -> +1, 1 -> +i, 2 -> -1). The table is pinned by
/// the component expansion of the odd kernel transform; the transform module
/// recomputes the same map from the kernel and the equality is asserted
/// blade-by-blade in the test suite.
struct HodgeEntry {
  unsigned mask;
  int factor;  // 0: +1, 1: +i, 2: -1
};

inline constexpr std::array<HodgeEntry, kBladeCount> kHodgeTable = {{
    {15u, 0},  // 1           -> top
    {13u, 1},  // g0          -> i g0 g2 g3
    {14u, 1},  // g1          -> i g1 g2 g3
    {12u, 0},  // g0 g1       -> g2 g3
    {7u, 1},   // g2          -> i g0 g1 g2
    {5u, 2},   // g0 g2       -> -(g0 g2)
    {6u, 2},   // g1 g2       -> -(g1 g2)
    {4u, 1},   // g0 g1 g2    -> i g2
    {11u, 1},  // g3          -> i g0 g1 g3
    {9u, 2},   // g0 g3       -> -(g0 g3)
    {10u, 2},  // g1 g3       -> -(g1 g3)
    {8u, 1},   // g0 g1 g3    -> i g3
    {3u, 0},   // g2 g3       -> g0 g1
    {1u, 1},   // g0 g2 g3    -> i g0
    {2u, 1},   // g1 g2 g3    -> i g1
    {0u, 0},   // top         -> 1
}};

/// Degree-reversing linear bijection of the 16-dimensional algebra; equals
/// the purely odd kernel transform (asserted in tests, not assumed here).
template <class Scalar>
[[nodiscard]] GrassmannElement<Scalar, 4> hodge_dual(const GrassmannElement<Scalar, 4>& x) {
  GrassmannElement<Scalar, 4> r;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (is_zero(x.c[m])) continue;
    const HodgeEntry e = kHodgeTable[m];
    Scalar v = x.c[m];
    if (e.factor == 1) v = ScalarTraits<Scalar>::imag_unit() * v;
    if (e.factor == 2) v = -v;
    r.c[e.mask] += v;
  }
  return r;
}

/// Largest coefficient magnitude (residual reporting).
template <class Scalar, int N>
[[nodiscard]] double max_abs(const GrassmannElement<Scalar, N>& x) {
  double m = 0.0;
  for (const Scalar& v : x.c) m = std::max(m, abs_approx(v));
  return m;
}

}  // namespace superspace
