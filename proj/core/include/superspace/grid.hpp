/// @file grid.hpp
/// Numeric sample-grid backend: superfunctions as complex samples on a
/// periodic N^4 lattice, with derivatives taken spectrally. The plane-wave
/// backend is authoritative; this backend exists to show the transform and
/// the derivative identities survive on honest sampled data.
///
/// Conventions: lattice sites x^mu = (L/N) * index; resolvable momenta
/// p_mu = (2 pi / L) * k_sym with k_sym in [-N/2+1, N/2] the symmetrized
/// frequency. Forward transform is the plain sum over sites with kernel
/// e^{-i<p,x>} (no prefactor); the inverse carries 1/N^4. Normalized mode
/// amplitudes (sum / N^4) match plane-wave amplitudes on commensurate waves.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "superspace/fourier.hpp"
#include "superspace/grassmann.hpp"
#include "superspace/superfield.hpp"

namespace superspace {

struct GridSpec {
  int n = 8;          // sites per axis; power of two
  double length = 2.0 * std::numbers::pi;  // box length per axis

  [[nodiscard]] std::size_t site_count() const {
    return static_cast<std::size_t>(n) * n * n * n;
  }
  /// Symmetrized integer frequency of axis index k.
  [[nodiscard]] int freq(int k) const { return k <= n / 2 ? k : k - n; }
  /// Physical momentum component of axis index k.
  [[nodiscard]] double momentum(int k) const {
    return 2.0 * std::numbers::pi * freq(k) / length;
  }
  [[nodiscard]] std::size_t index(int t, int x, int y, int z) const {
    return ((static_cast<std::size_t>(t) * n + x) * n + y) * n + z;
  }
  /// True iff every component of p is a resolvable lattice momentum.
  [[nodiscard]] bool commensurate(const Covector<double>& p, double tol = 1e-9) const {
    for (int mu = 0; mu < 4; ++mu) {
      const double k = p[mu] * length / (2.0 * std::numbers::pi);
      const double r = std::round(k);
      if (std::abs(k - r) > tol || r > n / 2 || r < -n / 2 + 1) return false;
    }
    return true;
  }
};

inline bool operator==(const GridSpec& a, const GridSpec& b) {
  return a.n == b.n && a.length == b.length;
}

using GridFn = std::vector<Complex>;  // site_count() samples

struct GridSuperfunction {
  GridSpec spec;
  std::array<GridFn, kBladeCount> blades;

  [[nodiscard]] static GridSuperfunction zero(const GridSpec& spec) {
    GridSuperfunction f;
    f.spec = spec;
    for (auto& b : f.blades) b.assign(spec.site_count(), Complex(0.0));
    return f;
  }
};

/// Samples a plane-wave superfunction on the lattice. Momenta need not be
/// commensurate (sampling is pointwise evaluation), but only commensurate
/// waves round-trip through the discrete transform.
[[nodiscard]] inline GridSuperfunction sample_on_grid(const Superfunction<Complex>& f,
                                                      const GridSpec& spec) {
  GridSuperfunction g = GridSuperfunction::zero(spec);
  const double h = spec.length / spec.n;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    for (const auto& term : f.blades[m].terms) {
      // Separable phases per axis.
      std::array<std::vector<Complex>, 4> phase;
      for (int mu = 0; mu < 4; ++mu) {
        phase[mu].resize(spec.n);
        for (int k = 0; k < spec.n; ++k)
          phase[mu][k] = std::exp(Complex(0.0, term.p[mu] * h * k));
      }
      for (int t = 0; t < spec.n; ++t)
        for (int x = 0; x < spec.n; ++x)
          for (int y = 0; y < spec.n; ++y)
            for (int z = 0; z < spec.n; ++z)
              g.blades[m][spec.index(t, x, y, z)] +=
                  term.amp * phase[0][t] * phase[1][x] * phase[2][y] * phase[3][z];
    }
  }
  return g;
}

namespace detail {

/// In-place DFT along one axis of the 4D array; sign = -1 forward kernel
/// e^{-2 pi i j k / n}, sign = +1 inverse kernel (caller normalizes).
inline void dft_axis(GridFn& data, const GridSpec& spec, int axis, int sign) {
  const int n = spec.n;
  std::vector<Complex> twiddle(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      twiddle[j * n + k] =
          std::exp(Complex(0.0, sign * 2.0 * std::numbers::pi * j * k / n));
  // Stride pattern of the chosen axis.
  std::size_t stride = 1;
  for (int a = 3; a > axis; --a) stride *= n;
  const std::size_t block = stride * n;
  std::vector<Complex> line(n);
  for (std::size_t base = 0; base < data.size(); base += block)
    for (std::size_t off = 0; off < stride; ++off) {
      for (int j = 0; j < n; ++j) line[j] = data[base + off + j * stride];
      for (int k = 0; k < n; ++k) {
        Complex acc(0.0);
        for (int j = 0; j < n; ++j) acc += line[j] * twiddle[j * n + k];
        data[base + off + k * stride] = acc;
      }
    }
}

inline void dft4(GridFn& data, const GridSpec& spec, int sign) {
  for (int axis = 0; axis < 4; ++axis) dft_axis(data, spec, axis, sign);
}

}  // namespace detail

/// Spectral derivative d/dx^mu: forward DFT, multiply mode k by i p_mu(k),
/// inverse DFT. Exact (to rounding) on commensurate band-limited data.
[[nodiscard]] inline GridFn grid_partial_x_fn(int mu, GridFn data, const GridSpec& spec) {
  detail::dft4(data, spec, -1);
  const int n = spec.n;
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const int k[4] = {t, x, y, z};
          data[spec.index(t, x, y, z)] *= Complex(0.0, spec.momentum(k[mu]));
        }
  detail::dft4(data, spec, +1);
  const double inv = 1.0 / static_cast<double>(spec.site_count());
  for (auto& v : data) v *= inv;
  return data;
}

[[nodiscard]] inline GridSuperfunction grid_partial_x(int mu, const GridSuperfunction& f) {
  GridSuperfunction r = f;
  for (auto& b : r.blades) b = grid_partial_x_fn(mu, std::move(b), f.spec);
  return r;
}

namespace detail {

inline void axpy_blade(GridFn& dst, const GridFn& src, Complex w) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += w * src[i];
}

}  // namespace detail

/// Left odd derivative along generator g (samples are even coefficients).
[[nodiscard]] inline GridSuperfunction grid_odd_derivative(int g, const GridSuperfunction& f) {
  GridSuperfunction r = GridSuperfunction::zero(f.spec);
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (!(m & gb)) continue;
    detail::axpy_blade(r.blades[m ^ gb], f.blades[m],
                       Complex(left_strike_sign(m, static_cast<unsigned>(g))));
  }
  return r;
}

[[nodiscard]] inline GridSuperfunction grid_exterior_mul(int g, const GridSuperfunction& f) {
  GridSuperfunction r = GridSuperfunction::zero(f.spec);
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (m & gb) continue;
    const auto [sign, out] = blade_mul(gb, m);
    detail::axpy_blade(r.blades[out], f.blades[m], Complex(sign));
  }
  return r;
}

/// D_a on the grid, same formula as the plane-wave backend with the spectral
/// derivative substituted.
[[nodiscard]] inline GridSuperfunction grid_D(int a, const GridSuperfunction& f) {
  GridSuperfunction r = grid_odd_derivative(a - 1, f);
  for (int bdot = 1; bdot <= 2; ++bdot)
    for (int mu = 0; mu < 4; ++mu) {
      const Complex g = gamma_entry<Complex>(mu, a - 1, bdot - 1);
      if (g == Complex(0.0)) continue;
      const GridSuperfunction term = grid_exterior_mul(2 + (bdot - 1), grid_partial_x(mu, f));
      for (unsigned m = 0; m < kBladeCount; ++m)
        detail::axpy_blade(r.blades[m], term.blades[m], -g);
    }
  return r;
}

[[nodiscard]] inline GridSuperfunction grid_Dbar(int adot, const GridSuperfunction& f) {
  GridSuperfunction r = grid_odd_derivative(2 + (adot - 1), f);
  for (int b = 1; b <= 2; ++b)
    for (int mu = 0; mu < 4; ++mu) {
      const Complex g = gamma_entry<Complex>(mu, b - 1, adot - 1);
      if (g == Complex(0.0)) continue;
      const GridSuperfunction term = grid_exterior_mul(b - 1, grid_partial_x(mu, f));
      for (unsigned m = 0; m < kBladeCount; ++m)
        detail::axpy_blade(r.blades[m], term.blades[m], -g);
    }
  return r;
}

[[nodiscard]] inline GridSuperfunction operator+(const GridSuperfunction& a,
                                                 const GridSuperfunction& b) {
  GridSuperfunction r = a;
  for (unsigned m = 0; m < kBladeCount; ++m)
    detail::axpy_blade(r.blades[m], b.blades[m], Complex(1.0));
  return r;
}

[[nodiscard]] inline GridSuperfunction operator-(const GridSuperfunction& a,
                                                 const GridSuperfunction& b) {
  GridSuperfunction r = a;
  for (unsigned m = 0; m < kBladeCount; ++m)
    detail::axpy_blade(r.blades[m], b.blades[m], Complex(-1.0));
  return r;
}

[[nodiscard]] inline double max_abs(const GridSuperfunction& f) {
  double mx = 0.0;
  for (const auto& b : f.blades)
    for (const auto& v : b) mx = std::max(mx, std::abs(v));
  return mx;
}

/// Grid super Fourier transform: normalized forward DFT per blade, then the
/// odd kernel transform fiberwise at each nonzero mode. Output momenta are
/// the symmetrized lattice momenta; amplitudes match the plane-wave backend
/// on commensurate waves.
[[nodiscard]] inline MomentumSuperfunction<Complex> grid_super_fourier(
    const GridSuperfunction& f, double prune_tol = 1e-12) {
  const GridSpec& spec = f.spec;
  std::array<GridFn, kBladeCount> modes;
  const double inv = 1.0 / static_cast<double>(spec.site_count());
  for (unsigned m = 0; m < kBladeCount; ++m) {
    modes[m] = f.blades[m];
    detail::dft4(modes[m], spec, -1);
    for (auto& v : modes[m]) v *= inv;
  }
  MomentumSuperfunction<Complex> out;
  const int n = spec.n;
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const std::size_t idx = spec.index(t, x, y, z);
          GrassmannElement<Complex> fiber;
          bool nonzero = false;
          for (unsigned m = 0; m < kBladeCount; ++m) {
            fiber.c[m] = modes[m][idx];
            nonzero = nonzero || std::abs(fiber.c[m]) > prune_tol;
          }
          if (!nonzero) continue;
          out.add_term(
              Covector<double>{spec.momentum(t), spec.momentum(x), spec.momentum(y),
                               spec.momentum(z)},
              odd_fourier(fiber));
        }
  return out;
}

}  // namespace superspace
