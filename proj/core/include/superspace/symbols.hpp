/// @file symbols.hpp
/// Momentum-space symbols of the covariant derivatives as explicit 16x16
/// matrices on the tau-blade basis:
///   zeta_{d_a}(p)    = i eps_{ab} e_{tau^b}  -  eps^{cd} Gamma^mu_{ac} p_mu iota_{taubar^d}
///   zeta_{dbar_a}(p) = i eps_{ab} e_{taubar^b} - eps^{cd} Gamma^mu_{ca} p_mu iota_{tau^d}
///   zeta_{(d)^2}     = (1/2) eps^{ab} zeta_{d_a} o zeta_{d_b}   (and the bar mirror)
/// plus the algebraic endomorphisms at the basepoint e^0, the chiral subspace
/// (joint kernel of the dotted symbols), its explicit chart, and the literal
/// second-order expansion used for term-by-term comparison.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <stdexcept>
#include <string>
#include <vector>

#include "superspace/clifford.hpp"
#include "superspace/grassmann.hpp"
#include "superspace/scalars.hpp"

namespace superspace {

// ============================================================================
// 16x16 matrices over an arbitrary scalar backend
// ============================================================================

template <class Scalar>
struct Mat16 {
  // Row-major: m[row][col]; action on blade coefficient vectors.
  std::array<std::array<Scalar, kBladeCount>, kBladeCount> m{};

  [[nodiscard]] static Mat16 zero() { return {}; }
  [[nodiscard]] static Mat16 identity() {
    Mat16 r;
    for (unsigned i = 0; i < kBladeCount; ++i) r.m[i][i] = ScalarTraits<Scalar>::one();
    return r;
  }
};

template <class Scalar>
Mat16<Scalar> operator+(const Mat16<Scalar>& a, const Mat16<Scalar>& b) {
  Mat16<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

template <class Scalar>
Mat16<Scalar> operator-(const Mat16<Scalar>& a, const Mat16<Scalar>& b) {
  Mat16<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

template <class Scalar>
Mat16<Scalar> operator*(const Scalar& s, const Mat16<Scalar>& a) {
  Mat16<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

/// Composition a o b (apply b first).
template <class Scalar>
Mat16<Scalar> operator*(const Mat16<Scalar>& a, const Mat16<Scalar>& b) {
  Mat16<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned k = 0; k < kBladeCount; ++k) {
      if (is_zero(a.m[i][k])) continue;
      for (unsigned j = 0; j < kBladeCount; ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
    }
  return r;
}

template <class Scalar>
GrassmannElement<Scalar> act(const Mat16<Scalar>& a, const GrassmannElement<Scalar>& v) {
  GrassmannElement<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if (is_zero(a.m[i][j]) || is_zero(v.c[j])) continue;
      r.c[i] += a.m[i][j] * v.c[j];
    }
  return r;
}

template <class Scalar>
Mat16<Scalar> anticommutator(const Mat16<Scalar>& a, const Mat16<Scalar>& b) {
  return a * b + b * a;
}

template <class Scalar>
[[nodiscard]] double max_abs(const Mat16<Scalar>& a) {
  double mx = 0.0;
  for (const auto& row : a.m)
    for (const auto& v : row) mx = std::max(mx, abs_approx(v));
  return mx;
}

/// Matrix of left exterior multiplication by generator g.
template <class Scalar>
[[nodiscard]] Mat16<Scalar> exterior_matrix(int g) {
  Mat16<Scalar> r;
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (m & gb) continue;
    const auto [sign, out] = blade_mul(gb, m);
    r.m[out][m] = sign > 0 ? ScalarTraits<Scalar>::one() : -ScalarTraits<Scalar>::one();
  }
  return r;
}

/// Matrix of the left odd derivative (interior product) along generator g.
template <class Scalar>
[[nodiscard]] Mat16<Scalar> derivative_matrix(int g) {
  Mat16<Scalar> r;
  const unsigned gb = 1u << g;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (!(m & gb)) continue;
    const int sign = left_strike_sign(m, static_cast<unsigned>(g));
    r.m[m ^ gb][m] = sign > 0 ? ScalarTraits<Scalar>::one() : -ScalarTraits<Scalar>::one();
  }
  return r;
}

// ============================================================================
// First- and second-order symbols
// ============================================================================

/// zeta_{d_a}(p), 1-based spinor index a.
template <class Scalar>
[[nodiscard]] Mat16<Scalar> zeta_d(int a, const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  Mat16<Scalar> r;
  for (int b = 0; b < 2; ++b) {
    const int e = eps_lower(a - 1, b);
    if (e == 0) continue;
    const Scalar w = e > 0 ? T::imag_unit() : -T::imag_unit();
    r = r + w * exterior_matrix<Scalar>(b);
  }
  for (int cdot = 0; cdot < 2; ++cdot)
    for (int ddot = 0; ddot < 2; ++ddot) {
      const int e = eps_upper(cdot, ddot);
      if (e == 0) continue;
      for (int mu = 0; mu < 4; ++mu) {
        const Scalar g = gamma_entry<Scalar>(mu, a - 1, cdot);
        if (is_zero(g)) continue;
        Scalar w = g * T::from_real(p[mu]);
        if (e < 0) w = -w;
        r = r - w * derivative_matrix<Scalar>(2 + ddot);
      }
    }
  return r;
}

/// zeta_{dbar_adot}(p), 1-based dotted index.
template <class Scalar>
[[nodiscard]] Mat16<Scalar> zeta_dbar(int adot,
                                      const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  Mat16<Scalar> r;
  for (int b = 0; b < 2; ++b) {
    const int e = eps_lower(adot - 1, b);
    if (e == 0) continue;
    const Scalar w = e > 0 ? T::imag_unit() : -T::imag_unit();
    r = r + w * exterior_matrix<Scalar>(2 + b);
  }
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d) {
      const int e = eps_upper(c, d);
      if (e == 0) continue;
      for (int mu = 0; mu < 4; ++mu) {
        const Scalar g = gamma_entry<Scalar>(mu, c, adot - 1);
        if (is_zero(g)) continue;
        Scalar w = g * T::from_real(p[mu]);
        if (e < 0) w = -w;
        r = r - w * derivative_matrix<Scalar>(d);
      }
    }
  return r;
}

template <class Scalar>
[[nodiscard]] Mat16<Scalar> zeta_d2(const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  const Scalar half = T::one() / (T::one() + T::one());
  Mat16<Scalar> r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const int e = eps_upper(a - 1, b - 1);
      if (e == 0) continue;
      const Scalar w = e > 0 ? half : -half;
      r = r + w * (zeta_d<Scalar>(a, p) * zeta_d<Scalar>(b, p));
    }
  return r;
}

template <class Scalar>
[[nodiscard]] Mat16<Scalar> zeta_dbar2(const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  const Scalar half = T::one() / (T::one() + T::one());
  Mat16<Scalar> r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const int e = eps_upper(a - 1, b - 1);
      if (e == 0) continue;
      const Scalar w = e > 0 ? half : -half;
      r = r + w * (zeta_dbar<Scalar>(a, p) * zeta_dbar<Scalar>(b, p));
    }
  return r;
}

/// Algebraic endomorphisms at the unit basepoint e^0 (the mass is carried by
/// the orbit and recovered by scaling p = m e^0).
template <class Scalar>
[[nodiscard]] Mat16<Scalar> algebraic_d(int a) {
  using Real = typename ScalarTraits<Scalar>::Real;
  return zeta_d<Scalar>(a, Covector<Real>{Real(1), Real(0), Real(0), Real(0)});
}

template <class Scalar>
[[nodiscard]] Mat16<Scalar> algebraic_dbar(int adot) {
  using Real = typename ScalarTraits<Scalar>::Real;
  return zeta_dbar<Scalar>(adot, Covector<Real>{Real(1), Real(0), Real(0), Real(0)});
}

/// Clifford action of a spinor pair s = (s_plus, s_minus) at momentum q:
/// rho_q(s) = sum_a s_plus[a] zeta_{d_a}(q) + sum_b s_minus[b] zeta_{dbar_b}(q).
/// Satisfies {rho(s1), rho(s2)} = 2 i <s1,s2>_q with the spinor pairing of
/// clifford.hpp.
[[nodiscard]] inline Mat16<Complex> rho_clifford(const SpinorPair& s, const Covector<double>& q) {
  Mat16<Complex> r;
  for (int a = 0; a < 2; ++a) {
    r = r + Complex(s.plus[a]) * zeta_d<Complex>(a + 1, q);
    r = r + Complex(s.minus[a]) * zeta_dbar<Complex>(a + 1, q);
  }
  return r;
}

// ============================================================================
// Chiral subspace and chart
// ============================================================================

[[nodiscard]] inline Eigen::MatrixXcd to_eigen(const Mat16<Complex>& a) {
  Eigen::MatrixXcd r(16, 16);
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j) r(i, j) = a.m[i][j];
  return r;
}

/// Orthonormal basis of the joint kernel of zeta_{dbar_1}(p), zeta_{dbar_2}(p)
/// via SVD of the stacked 32x16 matrix. Throws if the rank decision is
/// ambiguous at the relative tolerance.
[[nodiscard]] inline std::vector<Eigen::VectorXcd> joint_dbar_kernel(const Covector<double>& p,
                                                                     double rank_tol = 1e-9) {
  Eigen::MatrixXcd stacked(32, 16);
  stacked.topRows(16) = to_eigen(zeta_dbar<Complex>(1, p));
  stacked.bottomRows(16) = to_eigen(zeta_dbar<Complex>(2, p));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const auto& sing = svd.singularValues();
  const double top = sing(0);
  int rank = 0;
  for (int i = 0; i < sing.size(); ++i)
    if (sing(i) > rank_tol * top) ++rank;
  // Ambiguity guard: the gap at the cut must be decisive.
  if (rank < sing.size() && rank > 0 && sing(rank) > 0.1 * rank_tol * top &&
      sing(rank - 1) < 10.0 * rank_tol * top)
    throw std::runtime_error("joint_dbar_kernel: ambiguous numerical rank");
  std::vector<Eigen::VectorXcd> basis;
  for (int i = rank; i < 16; ++i) basis.push_back(svd.matrixV().col(i));
  return basis;
}

/// Joint kernel of the algebraic dbar's at basepoint q = m e^0.
[[nodiscard]] inline std::vector<Eigen::VectorXcd> chiral_subspace(double m,
                                                                   double rank_tol = 1e-9) {
  if (!(m > 0.0)) throw std::invalid_argument("chiral_subspace: mass must be positive");
  return joint_dbar_kernel(Covector<double>{m, 0.0, 0.0, 0.0}, rank_tol);
}

/// Explicit 16x4 chart of the joint dbar-kernel at momentum p: columns are
/// the images of the free components (phi, psi_1, psi_2, F). Derived by
/// solving the kernel relations in the momentum component chart:
///   mu_a = G = eta_b = 0,  A_mu = -i p_mu phi,  H = |p|^2 phi,
///   lambda_b = i eps^{ac} Gamma^mu_{ab} p_mu psi_c.
template <class Scalar>
[[nodiscard]] std::array<GrassmannElement<Scalar>, 4> chiral_chart(
    const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  const Scalar i = T::imag_unit();
  const Scalar p2 = T::from_real(minkowski_sq(p));
  std::array<GrassmannElement<Scalar>, 4> cols;

  // Column 0: phi = 1.
  {
    GrassmannElement<Scalar>& v = cols[0];
    v.c[kMaskPhi] = p2;  // H-slot coefficient is H itself
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Scalar acc = T::zero();
        for (int mu = 0; mu < 4; ++mu) acc += gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]);
        v.c[kMaskAB[a][b]] = i * acc;  // -Gamma.A with A = -i p phi
      }
    v.c[kMaskH] = T::one();
  }
  // Columns 1, 2: psi_c = 1 (c = column index).
  for (int c = 0; c < 2; ++c) {
    GrassmannElement<Scalar>& v = cols[1 + c];
    for (int b = 0; b < 2; ++b) {
      Scalar acc = T::zero();
      for (int a = 0; a < 2; ++a) {
        const int e = eps_upper(a, c);
        if (e == 0) continue;
        for (int mu = 0; mu < 4; ++mu) {
          Scalar g = gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]);
          if (e < 0) g = -g;
          acc += g;
        }
      }
      v.c[kMaskEta[b]] = -acc;  // i lambda_b with lambda_b = i eps Gamma p psi
    }
    v.c[kMaskMu[c]] = i;  // i psi_c
  }
  // Column 3: F = 1.
  cols[3].c[kMaskG] = T::one();
  return cols;
}

/// Residuals of the kernel relation families for one fiber, reported with
/// formula-content labels. All four residual groups vanish (<= tol) iff the
/// fiber lies in the joint dbar-kernel at p.
struct ChiralRelationReport {
  double vanishing = 0.0;    // mu_a = G = eta_b = 0
  double gauge_field = 0.0;  // A_mu + i p_mu phi = 0
  double auxiliary_H = 0.0;  // H - eta^{mu nu} i p_mu A_nu = 0
  double spinor = 0.0;       // lambda_b - i eps^{ac} Gamma^mu_{ab} p_mu psi_c = 0
  [[nodiscard]] double max_residual() const {
    return std::max(std::max(vanishing, gauge_field), std::max(auxiliary_H, spinor));
  }
};

template <class Scalar>
[[nodiscard]] ChiralRelationReport chiral_kernel_constraints(
    const Covector<typename ScalarTraits<Scalar>::Real>& p, const GrassmannElement<Scalar>& v);

// ============================================================================
// The literal second-order expansion
// ============================================================================

/// The printed expansion of zeta_{(d)^2} on a dbar-kernel fiber with free
/// components (phi, psi_1, psi_2, F):
///   -|p|^2 F
///   + (eps^{cd'} eps^{dc} Gamma^mu_{ac} Gamma^nu_{dd'} p_mu p_nu i psi_c
///      - |p|^2 i psi_a) tau^a
///   - 4 |p|^2 phi tau^1 tau^2
///   + i Gamma^mu_{ab} p_mu F tau^a taubar^b
///   + 2 eps^{ac} Gamma^mu_{ab} p_mu psi_c tau^1 tau^2 taubar^b
///   - F tau^1 tau^2 taubar^1 taubar^2.
/// Encoded term-for-term as written so the matrix action can be compared
/// against it blade group by blade group.
template <class Scalar>
[[nodiscard]] GrassmannElement<Scalar> d2_expansion_literal(
    const Covector<typename ScalarTraits<Scalar>::Real>& p, const Scalar& phi,
    const std::array<Scalar, 2>& psi, const Scalar& F) {
  using T = ScalarTraits<Scalar>;
  const Scalar i = T::imag_unit();
  const Scalar p2 = T::from_real(minkowski_sq(p));
  GrassmannElement<Scalar> out;

  out.c[kMaskPhi] = -p2 * F;

  for (int a = 0; a < 2; ++a) {
    Scalar coeff = -p2 * (i * psi[a]);
    for (int c = 0; c < 2; ++c) {
      Scalar quad = T::zero();
      for (int cdot = 0; cdot < 2; ++cdot)
        for (int ddot = 0; ddot < 2; ++ddot)
          for (int d = 0; d < 2; ++d) {
            const int e1 = eps_upper(cdot, ddot);
            const int e2 = eps_upper(d, c);
            if (e1 == 0 || e2 == 0) continue;
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu) {
                Scalar term = gamma_entry<Scalar>(mu, a, cdot) * gamma_entry<Scalar>(nu, d, ddot) *
                              T::from_real(p[mu]) * T::from_real(p[nu]);
                if (e1 * e2 < 0) term = -term;
                quad += term;
              }
          }
      coeff += quad * (i * psi[c]);
    }
    out.c[kMaskPsi[a]] = coeff;
  }

  out.c[kMaskF] = -(p2 + p2 + p2 + p2) * phi;

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Scalar acc = T::zero();
      for (int mu = 0; mu < 4; ++mu) acc += gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]);
      out.c[kMaskAB[a][b]] = i * acc * F;
    }

  for (int b = 0; b < 2; ++b) {
    Scalar acc = T::zero();
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        const int e = eps_upper(a, c);
        if (e == 0) continue;
        for (int mu = 0; mu < 4; ++mu) {
          Scalar term = gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]) * psi[c];
          if (e < 0) term = -term;
          acc += term;
        }
      }
    out.c[kMaskLambda[b]] = (acc + acc);
  }

  out.c[kMaskH] = -F;
  return out;
}

/// Blade-group labels for the term-by-term comparison report.
struct D2TermReport {
  struct Entry {
    std::string blade_group;
    double deviation;
  };
  std::vector<Entry> entries;
  [[nodiscard]] double max_deviation() const {
    double mx = 0.0;
    for (const auto& e : entries) mx = std::max(mx, e.deviation);
    return mx;
  }
};

/// Compares matrix action of zeta_{(d)^2} on the chart fiber against the
/// literal printed expansion, one blade group at a time.
template <class Scalar>
[[nodiscard]] D2TermReport d2_term_comparison(
    const Covector<typename ScalarTraits<Scalar>::Real>& p, const Scalar& phi,
    const std::array<Scalar, 2>& psi, const Scalar& F) {
  const auto chart = chiral_chart<Scalar>(p);
  GrassmannElement<Scalar> fiber = phi * chart[0];
  fiber += psi[0] * chart[1];
  fiber += psi[1] * chart[2];
  fiber += F * chart[3];
  const GrassmannElement<Scalar> via_matrix = act(zeta_d2<Scalar>(p), fiber);
  const GrassmannElement<Scalar> literal = d2_expansion_literal(p, phi, psi, F);

  auto group_dev = [&](std::initializer_list<unsigned> masks) {
    double mx = 0.0;
    for (unsigned m : masks) mx = std::max(mx, abs_approx(via_matrix.c[m] - literal.c[m]));
    return mx;
  };
  D2TermReport rep;
  rep.entries.push_back({"scalar term -|p|^2 F", group_dev({kMaskPhi})});
  rep.entries.push_back(
      {"tau^a term (eps eps Gamma Gamma p p i psi - |p|^2 i psi)", group_dev({kMaskPsi[0], kMaskPsi[1]})});
  rep.entries.push_back({"tau^1 tau^2 term -4|p|^2 phi", group_dev({kMaskF})});
  rep.entries.push_back(
      {"tau taubar term i Gamma p F", group_dev({kMaskAB[0][0], kMaskAB[0][1], kMaskAB[1][0], kMaskAB[1][1]})});
  rep.entries.push_back(
      {"tau^1 tau^2 taubar^b term 2 eps Gamma p psi", group_dev({kMaskLambda[0], kMaskLambda[1]})});
  rep.entries.push_back({"top term -F", group_dev({kMaskH})});
  rep.entries.push_back(
      {"off-expansion blades (taubar^b, taubar^1 taubar^2, tau^a taubar^1 taubar^2)",
       group_dev({kMaskEta[0], kMaskEta[1], kMaskG, kMaskMu[0], kMaskMu[1]})});
  return rep;
}

// ============================================================================
// Relation residuals (implementation)
// ============================================================================

template <class Scalar>
[[nodiscard]] ChiralRelationReport chiral_kernel_constraints(
    const Covector<typename ScalarTraits<Scalar>::Real>& p, const GrassmannElement<Scalar>& v) {
  using T = ScalarTraits<Scalar>;
  const Scalar i = T::imag_unit();
  ChiralRelationReport rep;

  // Components straight off the momentum chart.
  const Scalar H = v.c[kMaskPhi];
  const Scalar G = v.c[kMaskF];
  const Scalar F = v.c[kMaskG];
  const Scalar phi = v.c[kMaskH];
  Scalar mu_comp[2], lambda[2], eta[2], psi[2];
  for (int a = 0; a < 2; ++a) {
    mu_comp[a] = -i * v.c[kMaskPsi[a]];
    psi[a] = -i * v.c[kMaskMu[a]];
  }
  for (int b = 0; b < 2; ++b) {
    lambda[b] = -i * v.c[kMaskEta[b]];
    eta[b] = -i * v.c[kMaskLambda[b]];
  }
  // A_mu from the mixed blades by the Gamma-basis solve (closed form for the
  // frozen constants: B11 = A0+A3, B22 = A0-A3, B12 = A1-iA2, B21 = A1+iA2).
  const Scalar B11 = -v.c[kMaskAB[0][0]];
  const Scalar B12 = -v.c[kMaskAB[0][1]];
  const Scalar B21 = -v.c[kMaskAB[1][0]];
  const Scalar B22 = -v.c[kMaskAB[1][1]];
  const Scalar half = T::one() / (T::one() + T::one());
  Scalar A[4];
  A[0] = half * (B11 + B22);
  A[3] = half * (B11 - B22);
  A[1] = half * (B12 + B21);
  A[2] = (half * i) * (B12 - B21);

  for (int a = 0; a < 2; ++a) {
    rep.vanishing = std::max(rep.vanishing, abs_approx(mu_comp[a]));
    rep.vanishing = std::max(rep.vanishing, abs_approx(eta[a]));
  }
  rep.vanishing = std::max(rep.vanishing, abs_approx(G));

  for (int mu = 0; mu < 4; ++mu)
    rep.gauge_field =
        std::max(rep.gauge_field, abs_approx(A[mu] + i * T::from_real(p[mu]) * phi));

  Scalar divergence = T::zero();
  for (int mu = 0; mu < 4; ++mu) {
    Scalar term = i * T::from_real(p[mu]) * A[mu];
    if (eta_diag(mu) < 0) term = -term;
    divergence += term;
  }
  rep.auxiliary_H = abs_approx(H - divergence);

  for (int b = 0; b < 2; ++b) {
    Scalar expect = T::zero();
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        const int e = eps_upper(a, c);
        if (e == 0) continue;
        for (int mu = 0; mu < 4; ++mu) {
          Scalar term = i * gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]) * psi[c];
          if (e < 0) term = -term;
          expect += term;
        }
      }
    rep.spinor = std::max(rep.spinor, abs_approx(lambda[b] - expect));
  }
  return rep;
}

}  // namespace superspace
