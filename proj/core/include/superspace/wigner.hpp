/// @file wigner.hpp
/// SU(2) weight and tensor-product bookkeeping for symmetric-power spaces,
/// the equivariant contraction u: Sym^{2a}S+* (x) Sym^{2b}S-* -> E, its
/// momentum-dependent symbol zeta_u(p), the induced divergence-type operator
/// on plane-wave fields, and the boost-trivialization cross-checks.
///
/// Bases: Sym^n of a 2-dimensional space is the monomial basis x^{n-j} y^j,
/// j = 0..n; the tensor factor pair (j, k) flattens to j*(m+1)+k. The
/// canonical inclusion into (2-dim) (x) Sym^{n-1} splits one factor off with
/// multinomial weights, making it a section of symmetrization; contracting
/// the split-off pair with P(p) = p_mu Gamma^mu yields zeta_u(p).
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superspace/clifford.hpp"
#include "superspace/scalars.hpp"

namespace superspace {

// ============================================================================
// Exact half-integers
// ============================================================================

struct HalfInt {
  int twice = 0;  // twice the value, kept exact

  [[nodiscard]] static HalfInt from_twice(int t) { return HalfInt{t}; }
  [[nodiscard]] double value() const { return twice / 2.0; }
  /// Dimension of the spin-(this) irreducible: 2s+1.
  [[nodiscard]] int irrep_dim() const { return twice + 1; }

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }

  /// Renders "3/2" or "2".
  [[nodiscard]] std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  /// Parses "n", "n/2"; rejects negatives and malformed strings.
  [[nodiscard]] static std::optional<HalfInt> parse(const std::string& s) {
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) {
        std::size_t used = 0;
        const int whole = std::stoi(s, &used);
        if (used != s.size() || whole < 0) return std::nullopt;
        return HalfInt{2 * whole};
      }
      std::size_t used = 0;
      const int num = std::stoi(s.substr(0, slash), &used);
      if (used != slash || num < 0) return std::nullopt;
      const std::string den = s.substr(slash + 1);
      if (den != "2") return std::nullopt;
      return HalfInt{num};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
};

// ============================================================================
// Weights and decompositions
// ============================================================================

/// Weight ladder of Sym^{2a}S+* (x) Sym^{2b}S-*: the convolution of two
/// uniform ladders. Keys are twice the weight.
[[nodiscard]] inline std::map<int, int> weight_multiplicities(HalfInt alpha, HalfInt beta) {
  std::map<int, int> out;
  for (int ta = -alpha.twice; ta <= alpha.twice; ta += 2)
    for (int tb = -beta.twice; tb <= beta.twice; tb += 2) ++out[ta + tb];
  return out;
}

struct IrrepDecomposition {
  std::vector<std::pair<HalfInt, int>> parts;  // (spin, multiplicity), spin decreasing

  [[nodiscard]] int total_dimension() const {
    int d = 0;
    for (const auto& [s, mult] : parts) d += mult * s.irrep_dim();
    return d;
  }
};

/// Clebsch-Gordan ladder for alpha >= beta: spins alpha+beta down to
/// alpha-beta, each once. Rejects alpha < beta (caller swaps).
[[nodiscard]] inline IrrepDecomposition tensor_decomposition(HalfInt alpha, HalfInt beta) {
  if (alpha.twice < beta.twice)
    throw std::invalid_argument("tensor_decomposition: requires alpha >= beta");
  IrrepDecomposition out;
  for (int ts = alpha.twice + beta.twice; ts >= alpha.twice - beta.twice; ts -= 2)
    out.parts.push_back({HalfInt{ts}, 1});
  return out;
}

/// Brute-force oracle: peel irreducibles off a weight diagram. Multiplicity
/// of spin s equals count(weight s) - count(weight s+1).
[[nodiscard]] inline IrrepDecomposition decompose_by_peeling(const std::map<int, int>& weights) {
  IrrepDecomposition out;
  if (weights.empty()) return out;
  const int top = weights.rbegin()->first;
  for (int ts = top; ts >= 0; ts -= 2) {
    const auto here = weights.find(ts);
    const int count_here = here == weights.end() ? 0 : here->second;
    const auto above = weights.find(ts + 2);
    const int count_above = above == weights.end() ? 0 : above->second;
    const int mult = count_here - count_above;
    if (mult < 0) throw std::runtime_error("decompose_by_peeling: not a character");
    if (mult > 0) out.parts.push_back({HalfInt{ts}, mult});
  }
  return out;
}

// ============================================================================
// The contraction u and its symbol
// ============================================================================

/// Matrix (rows: E-monomials (j', k'), j' < n, k' < m; columns: W-monomials
/// (j, k)) of the split-and-contract map with pairing matrix P. Weights are
/// the multinomial factors of the symmetrization section:
///   (j,k) -> P11 (n-j)(m-k)/(nm) at (j,k)   + P12 (n-j)k/(nm) at (j,k-1)
///          + P21 j(m-k)/(nm)     at (j-1,k) + P22 jk/(nm)     at (j-1,k-1).
template <class Scalar>
[[nodiscard]] std::vector<std::vector<Scalar>> contraction_matrix(
    const std::array<std::array<Scalar, 2>, 2>& P, int n, int m) {
  using T = ScalarTraits<Scalar>;
  const int rows = (n > 0 && m > 0) ? n * m : 0;
  const int cols = (n + 1) * (m + 1);
  std::vector<std::vector<Scalar>> M(rows, std::vector<Scalar>(cols, T::zero()));
  if (rows == 0) return M;
  const Scalar inv_nm = T::one() / T::from_int(n * m);
  auto row_at = [&](int j, int k) { return j * m + k; };
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= m; ++k) {
      const int col = j * (m + 1) + k;
      if (j <= n - 1 && k <= m - 1)
        M[row_at(j, k)][col] += P[0][0] * T::from_int((n - j) * (m - k)) * inv_nm;
      if (j <= n - 1 && k >= 1)
        M[row_at(j, k - 1)][col] += P[0][1] * T::from_int((n - j) * k) * inv_nm;
      if (j >= 1 && k <= m - 1)
        M[row_at(j - 1, k)][col] += P[1][0] * T::from_int(j * (m - k)) * inv_nm;
      if (j >= 1 && k >= 1)
        M[row_at(j - 1, k - 1)][col] += P[1][1] * T::from_int(j * k) * inv_nm;
    }
  return M;
}

template <class Scalar>
[[nodiscard]] std::array<std::array<Scalar, 2>, 2> pairing_matrix(
    const Covector<typename ScalarTraits<Scalar>::Real>& p) {
  using T = ScalarTraits<Scalar>;
  std::array<std::array<Scalar, 2>, 2> P{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Scalar acc = T::zero();
      for (int mu = 0; mu < 4; ++mu) acc += gamma_entry<Scalar>(mu, a, b) * T::from_real(p[mu]);
      P[a][b] = acc;
    }
  return P;
}

/// The basepoint contraction u = zeta_u(e^0), exact over any backend.
template <class Scalar>
[[nodiscard]] std::vector<std::vector<Scalar>> u_map(HalfInt alpha, HalfInt beta) {
  using Real = typename ScalarTraits<Scalar>::Real;
  return contraction_matrix(
      pairing_matrix<Scalar>(Covector<Real>{Real(1), Real(0), Real(0), Real(0)}),
      alpha.twice, beta.twice);
}

[[nodiscard]] inline Eigen::MatrixXcd to_eigen_matrix(
    const std::vector<std::vector<Complex>>& M, int cols) {
  Eigen::MatrixXcd out(static_cast<int>(M.size()), cols);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = M[r][c];
  return out;
}

[[nodiscard]] inline Eigen::MatrixXcd zeta_u(const Covector<double>& p, HalfInt alpha,
                                             HalfInt beta) {
  const int cols = (alpha.twice + 1) * (beta.twice + 1);
  return to_eigen_matrix(contraction_matrix(pairing_matrix<Complex>(p), alpha.twice, beta.twice),
                         cols);
}

// ============================================================================
// Rank and kernel utilities
// ============================================================================

/// Exact rank by Gaussian elimination over an exact field backend.
template <class Scalar>
[[nodiscard]] int exact_rank(std::vector<std::vector<Scalar>> M) {
  using T = ScalarTraits<Scalar>;
  const int rows = static_cast<int>(M.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && is_zero(M[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    const Scalar inv = T::one() / M[rank][col];
    for (int j = col; j < cols; ++j) M[rank][j] = inv * M[rank][j];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || is_zero(M[r][col])) continue;
      const Scalar f = M[r][col];
      for (int j = col; j < cols; ++j) M[r][j] = M[r][j] - f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

[[nodiscard]] inline int svd_rank(const Eigen::MatrixXcd& M, double rel_tol = 1e-9) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& s = svd.singularValues();
  const double top = s(0);
  if (top == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * top) ++rank;
  return rank;
}

/// Columns spanning the numerical kernel.
[[nodiscard]] inline Eigen::MatrixXcd kernel_basis(const Eigen::MatrixXcd& M,
                                                   double rel_tol = 1e-9) {
  if (M.rows() == 0) return Eigen::MatrixXcd::Identity(M.cols(), M.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  const int rank = svd_rank(M, rel_tol);
  return svd.matrixV().rightCols(M.cols() - rank);
}

// ============================================================================
// Representation actions on symmetric powers
// ============================================================================

/// Matrix of the induced action on Sym^n of a 2x2 substitution M (columns of
/// M are the images of the basis covectors), computed by expanding
/// (M x)^{n-j} (M y)^j in the monomial basis.
[[nodiscard]] inline Eigen::MatrixXcd sym_rep(const Eigen::Matrix2cd& M, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  if (n == 0) {
    out(0, 0) = 1.0;
    return out;
  }
  for (int j = 0; j <= n; ++j) {
    // Polynomial coefficients over monomials y^deg, built by repeated
    // multiplication with the images of x and y.
    std::vector<Complex> poly{Complex(1.0)};
    auto mul_linear = [&](Complex cx, Complex cy) {
      std::vector<Complex> next(poly.size() + 1, Complex(0.0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += cx * poly[d];
        next[d + 1] += cy * poly[d];
      }
      poly = std::move(next);
    };
    for (int r = 0; r < n - j; ++r) mul_linear(M(0, 0), M(1, 0));
    for (int r = 0; r < j; ++r) mul_linear(M(0, 1), M(1, 1));
    for (int deg = 0; deg <= n; ++deg) out(deg, j) = poly[deg];
  }
  return out;
}

/// Action of a spin transformation h on W = Sym^{2a}S+* (x) Sym^{2b}S-*
/// (Kronecker product with the (j,k) flattening).
[[nodiscard]] inline Eigen::MatrixXcd rho_sym_pair(const Eigen::Matrix2cd& h, HalfInt alpha,
                                                   HalfInt beta) {
  const Eigen::MatrixXcd A = sym_rep(rho_plus(h), alpha.twice);
  const Eigen::MatrixXcd B = sym_rep(rho_minus(h), beta.twice);
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

/// E-side action: same construction one symmetric degree down.
[[nodiscard]] inline Eigen::MatrixXcd rho_sym_pair_E(const Eigen::Matrix2cd& h, HalfInt alpha,
                                                     HalfInt beta) {
  const Eigen::MatrixXcd A = sym_rep(rho_plus(h), alpha.twice - 1);
  const Eigen::MatrixXcd B = sym_rep(rho_minus(h), beta.twice - 1);
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

/// Max deviation of the boost-trivialization identity
/// zeta_u(p) = rho_E(h_p) (m u) rho_W(h_p)^{-1} at on-shell p.
[[nodiscard]] inline double trivialization_residual(const Covector<double>& p, double m,
                                                    HalfInt alpha, HalfInt beta) {
  if (alpha.twice < 1 || beta.twice < 1)
    throw std::invalid_argument("trivialization_residual: needs alpha, beta >= 1/2");
  const Eigen::Matrix2cd h = boost(p, m);
  const Eigen::MatrixXcd lhs = zeta_u(p, alpha, beta);
  const Eigen::MatrixXcd rhs = rho_sym_pair_E(h, alpha, beta) *
                               (m * zeta_u(Covector<double>{1, 0, 0, 0}, alpha, beta)) *
                               rho_sym_pair(h.inverse(), alpha, beta);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

/// Max deviation of equivariance zeta_u(h.p) = rho_E(h) zeta_u(p) rho_W(h)^{-1}
/// for an arbitrary spin transformation h (not necessarily a boost).
[[nodiscard]] inline double equivariance_residual(const Covector<double>& p,
                                                  const Eigen::Matrix2cd& h, HalfInt alpha,
                                                  HalfInt beta) {
  if (alpha.twice < 1 || beta.twice < 1)
    throw std::invalid_argument("equivariance_residual: needs alpha, beta >= 1/2");
  const Eigen::MatrixXcd lhs = zeta_u(momentum_action(h, p), alpha, beta);
  const Eigen::MatrixXcd rhs = rho_sym_pair_E(h, alpha, beta) * zeta_u(p, alpha, beta) *
                               rho_sym_pair(h.inverse(), alpha, beta);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

// ============================================================================
// The divergence-type operator on plane-wave fields
// ============================================================================

/// W-valued (or E-valued) plane-wave field: finite sum of w e^{i<p,x>}.
struct WField {
  struct Term {
    Eigen::VectorXcd w;
    Covector<double> p;
  };
  std::vector<Term> terms;
};

/// First-slot contraction Xi^(1): V* (x) W -> E applied to four W-vectors
/// A_mu (the covector components of a W-valued one-form).
[[nodiscard]] inline Eigen::VectorXcd Xi1(const std::array<Eigen::VectorXcd, 4>& A,
                                          HalfInt alpha, HalfInt beta) {
  const int rows = alpha.twice * beta.twice;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rows);
  for (int mu = 0; mu < 4; ++mu) {
    Covector<double> e{};
    e[mu] = 1.0;
    out += zeta_u(e, alpha, beta) * A[mu];
  }
  return out;
}

/// The divergence-type operator: per plane-wave term (w, p) the output term
/// is (zeta_u(p) w, p), i.e. Xi^(1)(-i d) applied to the field.
[[nodiscard]] inline WField delta_residual(const WField& field, HalfInt alpha, HalfInt beta) {
  WField out;
  for (const auto& t : field.terms) out.terms.push_back({zeta_u(t.p, alpha, beta) * t.w, t.p});
  return out;
}

struct SpinEquationsReport {
  double klein_gordon = 0.0;  // max |(m^2 - |p|^2) w|
  double divergence = 0.0;    // max |zeta_u(p) w|
  bool kernel_dims_ok = true; // dim Ker zeta_u(p) = 2(alpha+beta)+1 at each p
  [[nodiscard]] bool pass(double tol) const {
    return kernel_dims_ok && klein_gordon <= tol && divergence <= tol;
  }
};

/// Verifies that a W-valued field built from kernel data on the mass shell
/// satisfies both field equations, and that the kernel dimension matches the
/// exact-sequence count at every support momentum.
[[nodiscard]] inline SpinEquationsReport spin_s_equations_check(HalfInt alpha, HalfInt beta,
                                                                double m, const WField& field,
                                                                double rank_tol = 1e-9) {
  SpinEquationsReport rep;
  const int expected_kernel = alpha.twice + beta.twice + 1;
  for (const auto& t : field.terms) {
    const double shell = m * m - minkowski_sq(t.p);
    rep.klein_gordon = std::max(rep.klein_gordon, std::abs(shell) * t.w.cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd z = zeta_u(t.p, alpha, beta);
    if (z.rows() > 0)
      rep.divergence = std::max(rep.divergence, (z * t.w).cwiseAbs().maxCoeff());
    const int cols = static_cast<int>(z.cols());
    const int kdim = cols - svd_rank(z, rank_tol);
    if (kdim != expected_kernel) rep.kernel_dims_ok = false;
  }
  return rep;
}

}  // namespace superspace
