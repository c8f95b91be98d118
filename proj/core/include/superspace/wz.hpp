/// @file wz.hpp
/// The massive chiral-superfield pipeline: validated on-shell plane-wave
/// data, the explicit solver for (D)^2 f = 2m conjugate(f), position- and
/// momentum-space verification reports, and the invariant inner product on
/// orbit samples.
///
/// Solver construction: assemble the chiral superfunction A at momentum p
/// from the kernel relations with the auxiliary component F = -2m conj(phi),
/// then set B := conjugate((D)^2 A) / (2m). B is chiral automatically (three
/// undotted derivatives annihilate everything), supported at -p, and f = A+B
/// satisfies the full equation; the independent arbiter is wz_residual.
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "superspace/clifford.hpp"
#include "superspace/fourier.hpp"
#include "superspace/superfield.hpp"
#include "superspace/symbols.hpp"

namespace superspace {

// ============================================================================
// On-shell data
// ============================================================================

/// Spinor-contraction matrix M(p)_{bc} = eps^{ac} Gamma^mu_{ab} p_mu (row:
/// dotted index b, column: undotted index c). Entrywise conj(M(p)) M(p) =
/// -|p|^2 Id, so the pointwise equation M(p) psi = +-i m conj(psi) only has
/// the zero solution; the reality pairing of a solution instead ties the
/// spinor at p to its conjugate at -p: M(p) psi(p) = i m conj(psi(-p)).
template <class Scalar>
[[nodiscard]] std::array<std::array<Scalar, 2>, 2> dirac_matrix(
    const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  std::array<std::array<Scalar, 2>, 2> M{};
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      Scalar acc = T::zero();
      for (int a = 0; a < 2; ++a) {
        const int e = eps_upper(a, c);
        if (e == 0) continue;
        for (int mu = 0; mu < 4; ++mu) {
          Scalar term = gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]);
          if (e < 0) term = -term;
          acc += term;
        }
      }
      M[b][c] = acc;
    }
  return M;
}

/// Free data of a plane-wave solution: the scalar and spinor amplitudes at
/// one positive-energy shell momentum. The solver supplies the conjugate
/// partner at -p, so no pointwise constraint ties psi_hat to its own
/// conjugate and all of C x C^2 is admissible.
template <class Scalar>
struct OnShellData {
  using Real = typename ScalarTraits<Scalar>::Real;
  Real m{};                       // positive mass
  Covector<Real> p{};             // positive-energy mass-m shell
  Scalar phi_hat{};
  std::array<Scalar, 2> psi_hat{};
};

/// Checks the OnShellData invariants; throws std::invalid_argument with a
/// description on violation. Exact backends satisfy the bounds with residual
/// exactly zero.
template <class Scalar>
void validate_on_shell(const OnShellData<Scalar>& d, double tol = kOnShellTol) {
  if (!(to_double(d.m) > 0.0)) throw std::invalid_argument("on-shell data: mass must be positive");
  if (!(to_double(d.p[0]) > 0.0))
    throw std::invalid_argument("on-shell data: energy must be positive");
  const double shell = std::abs(to_double(minkowski_sq(d.p)) - to_double(d.m * d.m));
  const double scale = std::max(1.0, to_double(d.m * d.m));
  if (shell > tol * scale)
    throw std::invalid_argument("on-shell data: momentum is off the mass shell");
}

// ============================================================================
// Solver
// ============================================================================

/// Chiral candidate at a single momentum built from the kernel relations (no
/// validation, no conjugate partner): used by the solver and by off-shell
/// probes.
template <class Scalar>
[[nodiscard]] Superfunction<Scalar> wz_chiral_part(
    const typename ScalarTraits<Scalar>::Real& m,
    const Covector<typename ScalarTraits<Scalar>::Real>& p, const Scalar& phi_hat,
    const std::array<Scalar, 2>& psi_hat) {
  using T = ScalarTraits<Scalar>;
  using Fn = PlaneWaveFn<Scalar>;
  const Scalar i = T::imag_unit();
  Components<Scalar> k;
  k.phi = Fn::wave(p, phi_hat);
  for (int c = 0; c < 2; ++c) k.psi[c] = Fn::wave(p, psi_hat[c]);
  k.F = Fn::wave(p, -(T::from_real(m + m)) * conj_of(phi_hat));
  for (int mu = 0; mu < 4; ++mu)
    k.A[mu] = Fn::wave(p, -(i * T::from_real(p[mu])) * phi_hat);
  const auto M = dirac_matrix<Scalar>(p);
  for (int b = 0; b < 2; ++b)
    k.lambda[b] = Fn::wave(p, i * (M[b][0] * psi_hat[0] + M[b][1] * psi_hat[1]));
  k.H = Fn::wave(p, T::from_real(minkowski_sq(p)) * phi_hat);
  return from_components(k);
}

/// Solves the mass-m equation for validated data: f = A + conj((D)^2 A)/(2m)
/// with A the chiral part at p. Output is chiral, supported on {p, -p}, and
/// has identically vanishing wz_residual.
template <class Scalar>
[[nodiscard]] Superfunction<Scalar> wz_solve_plane_wave(const OnShellData<Scalar>& data,
                                                        double tol = kOnShellTol) {
  using T = ScalarTraits<Scalar>;
  validate_on_shell(data, tol);
  const Superfunction<Scalar> A =
      wz_chiral_part<Scalar>(data.m, data.p, data.phi_hat, data.psi_hat);
  const Scalar inv_2m = T::one() / T::from_real(data.m + data.m);
  const Superfunction<Scalar> B = inv_2m * conjugate(D_squared(A));
  return A + B;
}

// ============================================================================
// Verification reports
// ============================================================================

struct WzReport {
  double chirality[2] = {0.0, 0.0};  // max |Dbar_1 f|, |Dbar_2 f|
  double equation = 0.0;             // max |(D)^2 f - 2m conj f|
  double klein_gordon = 0.0;         // max |(box + m^2) phi|
  double dirac = 0.0;                // max |eps Gamma d psi + m conj(psi)|
  [[nodiscard]] double max_residual() const {
    return std::max(std::max(std::max(chirality[0], chirality[1]), equation),
                    std::max(klein_gordon, dirac));
  }
};

template <class Scalar>
[[nodiscard]] WzReport wz_verify(const Superfunction<Scalar>& f,
                                 const typename ScalarTraits<Scalar>::Real& m) {
  WzReport rep;
  rep.chirality[0] = max_abs(Dbar(1, f));
  rep.chirality[1] = max_abs(Dbar(2, f));
  rep.equation = max_abs(wz_residual(f, m));
  const Components<Scalar> k = to_components(f);
  const auto comp = component_residuals(k.phi, k.psi, m);
  rep.klein_gordon = max_abs(comp.klein_gordon);
  rep.dirac = std::max(max_abs(comp.dirac[0]), max_abs(comp.dirac[1]));
  return rep;
}

struct MomentumShellReport {
  double equation = 0.0;         // max |zeta_{(d)^2} v(p) - 2m conj-field v(p)|
  double scalar_condition = 0.0; // max |(|p|^2 - m^2) phi(p)|
  double dirac_condition = 0.0;  // max |M(p) psi(p) - i m conj(psi(-p))|
  [[nodiscard]] double max_residual() const {
    return std::max(equation, std::max(scalar_condition, dirac_condition));
  }
};

/// Evaluates the imposed momentum-space equation and the scalar conditions it
/// forces. The conjugation is the transform of position-space conjugation
/// (momentum_conjugate), so the equation couples the fibers at p and -p; the
/// derived spinor condition M(p) psi(p) = i m conj(psi(-p)) does too.
template <class Scalar>
[[nodiscard]] MomentumShellReport momentum_mass_shell(
    const MomentumSuperfunction<Scalar>& star_fhat,
    const typename ScalarTraits<Scalar>::Real& m) {
  using T = ScalarTraits<Scalar>;
  MomentumShellReport rep;
  const Scalar two_m = T::from_real(m + m);
  const MomentumSuperfunction<Scalar> conj_field = momentum_conjugate(star_fhat);
  for (const auto& term : star_fhat.terms) {
    const GrassmannElement<Scalar> lhs = act(zeta_d2<Scalar>(term.p), term.fiber);
    const GrassmannElement<Scalar> rhs = two_m * conj_field.fiber_at(term.p);
    rep.equation = std::max(rep.equation, max_abs(lhs - rhs));

    const MomentumComponents<Scalar> comp = momentum_chart_extract(term.fiber);
    const Scalar shell = T::from_real(minkowski_sq(term.p)) - T::from_real(m * m);
    rep.scalar_condition = std::max(rep.scalar_condition, abs_approx(shell * comp.phi));

    const MomentumComponents<Scalar> opp =
        momentum_chart_extract(star_fhat.fiber_at(negated(term.p)));
    const auto M = dirac_matrix<Scalar>(term.p);
    const Scalar im = T::imag_unit() * T::from_real(m);
    for (int b = 0; b < 2; ++b) {
      const Scalar r =
          M[b][0] * comp.psi[0] + M[b][1] * comp.psi[1] - im * conj_of(opp.psi[b]);
      rep.dirac_condition = std::max(rep.dirac_condition, abs_approx(r));
    }
  }
  return rep;
}

// ============================================================================
// Invariant inner product on orbit samples
// ============================================================================

/// Multiplicative extension of a pair of 2x2 generator substitutions to the
/// 16-dimensional blade space: tau^a -> sum_c Mplus(c,a) tau^c and
/// taubar^a -> sum_c Mminus(c,a) taubar^c.
[[nodiscard]] inline Eigen::MatrixXcd odd_fiber_action(const Eigen::Matrix2cd& Mplus,
                                                       const Eigen::Matrix2cd& Mminus) {
  std::array<Mat16<Complex>, 4> gen_image;
  for (int g = 0; g < 4; ++g) {
    const bool dotted = g >= 2;
    const Eigen::Matrix2cd& M = dotted ? Mminus : Mplus;
    const int col = dotted ? g - 2 : g;
    Mat16<Complex> img;
    for (int c = 0; c < 2; ++c) {
      const Complex w = M(c, col);
      if (w == Complex(0.0)) continue;
      img = img + w * exterior_matrix<Complex>(dotted ? 2 + c : c);
    }
    gen_image[g] = img;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(16, 16);
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    GrassmannElement<Complex> v = GrassmannElement<Complex>::unit();
    for (int g = 3; g >= 0; --g)  // right-to-left so products come out in blade order
      if (mask & (1u << g)) v = act(gen_image[g], v);
    for (unsigned row = 0; row < kBladeCount; ++row) out(row, mask) = v.c[row];
  }
  return out;
}

/// Fiber action of a Lorentz spin transformation h: tau's move by the dual
/// representation h^{-T}, taubar's by its conjugate.
[[nodiscard]] inline Eigen::MatrixXcd fiber_spin_action(const Eigen::Matrix2cd& h) {
  return odd_fiber_action(rho_plus(h), rho_minus(h));
}

struct OrbitSample {
  Covector<double> p;   // on the positive mass-m shell
  Eigen::VectorXcd v;   // 16-component fiber
  double weight = 1.0;  // quadrature cell volume in d^3p
};

/// Hermitian inner product sum_k w_k/(2 E_k) <U_k v1_k, U_k v2_k>_0 with
/// U_k the fiber action of boost(p_k, m)^{-1} and <,>_0 the blade-orthonormal
/// form (antilinear in the first argument). The 1/(2E) factor completes the
/// invariant orbit measure; invariance under a common boost with re-weighted
/// cells w' = w E'/E is exact up to rounding.
[[nodiscard]] inline Complex invariant_inner_product(const std::vector<OrbitSample>& s1,
                                                     const std::vector<OrbitSample>& s2,
                                                     double m) {
  if (s1.size() != s2.size())
    throw std::invalid_argument("invariant_inner_product: mismatched supports");
  Complex acc(0.0);
  for (std::size_t k = 0; k < s1.size(); ++k) {
    if (s1[k].p != s2[k].p)
      throw std::invalid_argument("invariant_inner_product: mismatched supports");
    const Eigen::Matrix2cd h_inv = boost(s1[k].p, m).inverse();
    const Eigen::MatrixXcd U = fiber_spin_action(h_inv);
    const Eigen::VectorXcd a = U * s1[k].v;
    const Eigen::VectorXcd b = U * s2[k].v;
    acc += (s1[k].weight / (2.0 * s1[k].p[0])) * a.dot(b);
  }
  return acc;
}

/// Transports an orbit sample by the spin transformation h: momentum by the
/// vector action, fiber by the induced blade action, weight by the Jacobian
/// E'/E that keeps the invariant measure exact per sample.
[[nodiscard]] inline OrbitSample transport(const OrbitSample& s, const Eigen::Matrix2cd& h) {
  OrbitSample out;
  out.p = momentum_action(h, s.p);
  out.v = fiber_spin_action(h) * s.v;
  out.weight = s.weight * out.p[0] / s.p[0];
  return out;
}

}  // namespace superspace
