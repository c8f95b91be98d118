#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include <superspace/superspace.hpp>

#include "support.hpp"

using namespace superspace;
using testsupport::random_double_on_shell;
using testsupport::random_unimodular;
using testsupport::rc;

namespace {
using S = RationalComplex;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_SUITE("wigner") {

TEST_CASE("half integers parse, print and order") {
  CHECK(h(3).value() == 1.5);
  CHECK(h(3).irrep_dim() == 4);
  CHECK(h(0).irrep_dim() == 1);
  CHECK(h(1) < h(2));
  CHECK(h(4).str() == "2");
  CHECK(h(3).str() == "3/2");

  const auto three_halves = HalfInt::parse("3/2");
  REQUIRE(three_halves.has_value());
  CHECK(three_halves->twice == 3);
  const auto two = HalfInt::parse("2");
  REQUIRE(two.has_value());
  CHECK(two->twice == 4);
  for (const char* bad : {"", "x", "1/3", "-1/2", "3/"})
    CHECK(!HalfInt::parse(bad).has_value());
  CHECK(HalfInt::parse(h(5).str())->twice == 5);
}

TEST_CASE("weight multiplicities count product weights") {
  const auto half_half = weight_multiplicities(h(1), h(1));
  const std::map<int, int> expected{{-2, 1}, {0, 2}, {2, 1}};
  CHECK(half_half == expected);

  const auto pure = weight_multiplicities(h(3), h(0));
  const std::map<int, int> ladder{{-3, 1}, {-1, 1}, {1, 1}, {3, 1}};
  CHECK(pure == ladder);

  const auto one_one = weight_multiplicities(h(2), h(2));
  const std::map<int, int> pyramid{{-4, 1}, {-2, 2}, {0, 3}, {2, 2}, {4, 1}};
  CHECK(one_one == pyramid);
}

TEST_CASE("tensor products decompose along the spin ladder") {
  const auto half_half = tensor_decomposition(h(1), h(1));
  REQUIRE(half_half.parts.size() == 2);
  CHECK(half_half.parts[0] == std::pair(h(2), 1));
  CHECK(half_half.parts[1] == std::pair(h(0), 1));
  CHECK(half_half.total_dimension() == 4);

  const auto pure = tensor_decomposition(h(5), h(0));
  REQUIRE(pure.parts.size() == 1);
  CHECK(pure.parts[0] == std::pair(h(5), 1));

  const auto mixed = tensor_decomposition(h(3), h(2));
  REQUIRE(mixed.parts.size() == 3);
  CHECK(mixed.parts[0].first == h(5));
  CHECK(mixed.parts[1].first == h(3));
  CHECK(mixed.parts[2].first == h(1));
  CHECK(mixed.total_dimension() == 12);

  CHECK_THROWS_AS(tensor_decomposition(h(1), h(2)), std::invalid_argument);
}

TEST_CASE("peeling the weight diagram recovers the ladder decomposition") {
  for (const auto& [ta, tb] : {std::pair{1, 1}, {3, 2}, {4, 4}, {5, 0}}) {
    const auto expected = tensor_decomposition(h(ta), h(tb));
    const auto peeled = decompose_by_peeling(weight_multiplicities(h(ta), h(tb)));
    CHECK(peeled.parts == expected.parts);
  }
  const std::map<int, int> impostor{{-2, 2}, {0, 1}, {2, 2}};
  CHECK_THROWS_AS(decompose_by_peeling(impostor), std::runtime_error);
}

TEST_CASE("contraction map at rest momentum has the frozen matrix and ranks") {
  const auto u = u_map<S>(h(1), h(1));
  REQUIRE(u.size() == 1);
  REQUIRE(u[0].size() == 4);
  CHECK(u[0][0] == rc(1));
  CHECK(u[0][1] == rc(0));
  CHECK(u[0][2] == rc(0));
  CHECK(u[0][3] == rc(1));
  CHECK(exact_rank(u) == 1);

  const auto u21 = u_map<S>(h(2), h(1));
  REQUIRE(u21.size() == 2);
  REQUIRE(u21[0].size() == 6);
  CHECK(exact_rank(u21) == 2);

  // Degenerate factors contract to the empty map; its kernel is everything.
  CHECK(u_map<S>(h(0), h(0)).empty());
  CHECK(exact_rank(u_map<S>(h(0), h(0))) == 0);
  CHECK(exact_rank(u_map<S>(h(5), h(0))) == 0);
}

TEST_CASE("momentum symbol of the contraction map matches the frozen fiber values") {
  const auto rest = zeta_u({2.0, 0.0, 0.0, 0.0}, h(1), h(1));
  const auto u = to_eigen_matrix(u_map<Complex>(h(1), h(1)), 4);
  CHECK((rest - 2.0 * u).norm() <= 1e-14);

  const auto z = zeta_u({1.0, 2.0, 3.0, 4.0}, h(1), h(1));
  REQUIRE(z.rows() == 1);
  REQUIRE(z.cols() == 4);
  CHECK(std::abs(z(0, 0) - Complex(5.0, 0.0)) <= 1e-14);
  CHECK(std::abs(z(0, 1) - Complex(2.0, -3.0)) <= 1e-14);
  CHECK(std::abs(z(0, 2) - Complex(2.0, 3.0)) <= 1e-14);
  CHECK(std::abs(z(0, 3) - Complex(-3.0, 0.0)) <= 1e-14);
}

TEST_CASE("rank helpers agree and the kernel basis annihilates the matrix") {
  const std::vector<std::vector<S>> degenerate{{rc(1), rc(2)}, {rc(2), rc(4)}};
  CHECK(exact_rank(degenerate) == 1);
  const std::vector<std::vector<S>> id3{
      {rc(1), rc(0), rc(0)}, {rc(0), rc(1), rc(0)}, {rc(0), rc(0), rc(1)}};
  CHECK(exact_rank(id3) == 3);

  Eigen::MatrixXcd outer = Eigen::MatrixXcd::Zero(3, 4);
  const Eigen::Vector3cd a(1.0, Complex(0.0, 2.0), -1.0);
  const Eigen::Vector4cd b(1.0, 2.0, Complex(1.0, 1.0), 0.5);
  const Eigen::Vector3cd c(0.5, -1.0, Complex(2.0, -1.0));
  const Eigen::Vector4cd d(0.0, 1.0, -2.0, Complex(0.0, 1.0));
  outer += a * b.transpose() + c * d.transpose();
  CHECK(svd_rank(outer) == 2);

  ExactRng rng(71);
  const double m = 1.2;
  const Eigen::MatrixXcd z = zeta_u(random_double_on_shell(m, rng), h(2), h(1));
  const Eigen::MatrixXcd K = kernel_basis(z);
  CHECK(K.cols() == 4);
  CHECK((z * K).norm() <= 1e-9);
  CHECK((K.adjoint() * K - Eigen::MatrixXcd::Identity(4, 4)).norm() <= 1e-10);
}

TEST_CASE("on-shell fibers keep full rank so the kernel has the ladder dimension") {
  ExactRng rng(72);
  const double m = 0.9;
  for (const auto& [ta, tb] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const Covector<double> p = random_double_on_shell(m, rng);
    const Eigen::MatrixXcd z = zeta_u(p, h(ta), h(tb));
    CHECK(svd_rank(z) == ta * tb);
    CHECK(static_cast<int>(z.cols()) - svd_rank(z) == ta + tb + 1);
  }
}

TEST_CASE("symmetric powers pin the column convention and multiply") {
  ExactRng rng(73);
  const Eigen::Matrix2cd A = random_unimodular(rng);
  const Eigen::Matrix2cd B = random_unimodular(rng);
  CHECK((sym_rep(A, 1) - A).norm() <= 1e-14);
  for (int n = 0; n <= 3; ++n) {
    CHECK((sym_rep(Eigen::Matrix2cd::Identity(), n) -
           Eigen::MatrixXcd::Identity(n + 1, n + 1))
              .norm() <= 1e-14);
    const Eigen::MatrixXcd lhs = sym_rep(A * B, n);
    const Eigen::MatrixXcd rhs = sym_rep(A, n) * sym_rep(B, n);
    CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("paired spin actions have matching shapes on both bundle sides") {
  ExactRng rng(74);
  const Eigen::Matrix2cd g = random_unimodular(rng);
  const Eigen::MatrixXcd W = rho_sym_pair(g, h(2), h(1));
  CHECK(W.rows() == 6);
  CHECK(W.cols() == 6);
  const Eigen::MatrixXcd E = rho_sym_pair_E(g, h(2), h(1));
  CHECK(E.rows() == 2);
  CHECK(E.cols() == 2);
  const Eigen::MatrixXcd scalarE = rho_sym_pair_E(g, h(1), h(1));
  REQUIRE(scalarE.rows() == 1);
  CHECK(std::abs(scalarE(0, 0) - Complex(1.0)) <= 1e-14);
}

TEST_CASE("boosts trivialize the momentum symbol over the orbit") {
  ExactRng rng(75);
  const double m = 1.4;
  for (const auto& [ta, tb] : {std::pair{1, 1}, {2, 1}}) {
    const Covector<double> p = random_double_on_shell(m, rng);
    CHECK(trivialization_residual(p, m, h(ta), h(tb)) <= 1e-10);
  }
  CHECK_THROWS_AS(
      trivialization_residual({1.0, 0.0, 0.0, 0.0}, 1.0, h(0), h(2)),
      std::invalid_argument);
}

TEST_CASE("the momentum symbol is equivariant under spin transformations") {
  ExactRng rng(76);
  const Covector<double> p = random_double_on_shell(1.0, rng);
  const Eigen::Matrix2cd g = random_unimodular(rng);
  CHECK(equivariance_residual(p, g, h(2), h(2)) <= 1e-9);
}

TEST_CASE("first-order operator contracts gradients through the symbol") {
  ExactRng rng(77);
  const Covector<double> p = random_double_on_shell(1.1, rng);
  const int cols = 3 * 2;
  Eigen::VectorXcd w(cols);
  for (int i = 0; i < cols; ++i) w(i) = Complex(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0));
  std::array<Eigen::VectorXcd, 4> A;
  for (int mu = 0; mu < 4; ++mu) A[mu] = p[mu] * w;
  const Eigen::VectorXcd lhs = Xi1(A, h(2), h(1));
  const Eigen::VectorXcd rhs = zeta_u(p, h(2), h(1)) * w;
  CHECK((lhs - rhs).norm() <= 1e-12);
}

TEST_CASE("field equations accept kernel data and flag violations") {
  ExactRng rng(78);
  const double m = 1.1;
  const HalfInt ta = h(2);
  const HalfInt tb = h(1);

  WField field;
  for (int k = 0; k < 2; ++k) {
    const Covector<double> p = random_double_on_shell(m, rng);
    const Eigen::MatrixXcd K = kernel_basis(zeta_u(p, ta, tb));
    field.terms.push_back({K.col(k % K.cols()), p});
  }
  const WField resid = delta_residual(field, ta, tb);
  for (const auto& t : resid.terms) CHECK(t.w.norm() <= 1e-9);

  const SpinEquationsReport rep = spin_s_equations_check(ta, tb, m, field);
  CHECK(rep.kernel_dims_ok);
  CHECK(rep.divergence <= 1e-9);
  CHECK(rep.klein_gordon <= 1e-9);
  CHECK(rep.pass(1e-8));

  // Off the mass shell the scalar equation picks up |p|^2 - m^2.
  WField off;
  const double ms = std::sqrt(2.0);
  const Covector<double> q{2.0, 0.0, 0.0, 0.0};
  const Eigen::MatrixXcd Kq = kernel_basis(zeta_u(q, ta, tb));
  off.terms.push_back({Kq.col(0), q});
  const SpinEquationsReport orep = spin_s_equations_check(ta, tb, ms, off);
  CHECK(orep.klein_gordon ==
        doctest::Approx(2.0 * Kq.col(0).cwiseAbs().maxCoeff()).epsilon(1e-9));
  CHECK(orep.divergence <= 1e-9);

  // Row-space data never lies in the kernel, so the divergence must fire.
  WField stray;
  const Covector<double> ps = random_double_on_shell(m, rng);
  const Eigen::MatrixXcd zs = zeta_u(ps, ta, tb);
  const Eigen::VectorXcd v = zs.adjoint() * Eigen::Vector2cd(1.0, Complex(0.0, 1.0));
  stray.terms.push_back({v, ps});
  const SpinEquationsReport srep = spin_s_equations_check(ta, tb, m, stray);
  CHECK(!srep.pass(1e-8));

  // Zero momentum collapses the rank, so the kernel dimension leaves the ladder.
  WField origin;
  origin.terms.push_back({Eigen::VectorXcd::Zero(6), {0.0, 0.0, 0.0, 0.0}});
  CHECK(!spin_s_equations_check(ta, tb, m, origin).kernel_dims_ok);
}

}  // TEST_SUITE
