#include <doctest.h>

#include <superspace/superspace.hpp>

#include "support.hpp"

using namespace superspace;
using testsupport::random_double_on_shell;
using testsupport::random_unimodular;

TEST_SUITE("clifford") {

TEST_CASE("frozen gamma constants: identity and the three Pauli matrices") {
  CHECK(gamma_entry<Complex>(0, 0, 0) == Complex(1.0));
  CHECK(gamma_entry<Complex>(0, 0, 1) == Complex(0.0));
  CHECK(gamma_entry<Complex>(1, 0, 1) == Complex(1.0));
  CHECK(gamma_entry<Complex>(1, 1, 0) == Complex(1.0));
  CHECK(gamma_entry<Complex>(2, 0, 1) == Complex(0.0, -1.0));
  CHECK(gamma_entry<Complex>(2, 1, 0) == Complex(0.0, 1.0));
  CHECK(gamma_entry<Complex>(3, 0, 0) == Complex(1.0));
  CHECK(gamma_entry<Complex>(3, 1, 1) == Complex(-1.0));
}

TEST_CASE("epsilon contracts to minus the identity") {
  CHECK(eps_lower(0, 1) == 1);
  CHECK(eps_lower(1, 0) == -1);
  CHECK(eps_upper(0, 1) == 1);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      int acc = 0;
      for (int b = 0; b < 2; ++b) acc += eps_upper(a, b) * eps_lower(b, c);
      CHECK(acc == (a == c ? -1 : 0));
    }
}

TEST_CASE("minkowski square uses the mostly-minus signature") {
  CHECK(minkowski_sq(Covector<double>{3.0, 0.0, 0.0, 0.0}) == 9.0);
  CHECK(minkowski_sq(Covector<double>{2.0, 0.0, 0.0, 2.0}) == 0.0);
  CHECK(minkowski_sq(Covector<double>{2.0, 1.0, 0.0, 0.0}) == 3.0);
  CHECK(minkowski_sq(Covector<Rational>{Rational(2), Rational(1), Rational(0), Rational(0)}) ==
        Rational(3));
}

TEST_CASE("gamma pairing identity holds exactly and pins the signature") {
  CHECK(gamma_identity_check());
  CHECK(gamma_identity_max_deviation() == 0.0);
  // The symmetrized determinant form reproduces eta^{mu nu} entry by entry;
  // flipping any diagonal entry would leave a deviation of 2.
  auto det_form = [](int m, int n) {
    return gamma_entry<Complex>(m, 0, 0) * gamma_entry<Complex>(n, 1, 1) -
           gamma_entry<Complex>(m, 0, 1) * gamma_entry<Complex>(n, 1, 0);
  };
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Complex sym = 0.5 * (det_form(mu, nu) + det_form(nu, mu));
      const double want = mu == nu ? eta_diag(mu) : 0.0;
      CHECK(std::abs(sym - Complex(want)) == 0.0);
    }
}

TEST_CASE("pauli matrix of a covector has the frozen entry layout") {
  const Eigen::Matrix2cd P = pauli_matrix(Covector<double>{1.0, 2.0, 3.0, 4.0});
  CHECK(P(0, 0) == Complex(5.0));
  CHECK(P(1, 1) == Complex(-3.0));
  CHECK(P(0, 1) == Complex(2.0, -3.0));
  CHECK(P(1, 0) == Complex(2.0, 3.0));
  CHECK((P - P.adjoint()).norm() == 0.0);
}

TEST_CASE("hermitian square root squares back to the input") {
  ExactRng rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    Eigen::Matrix2cd A;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) A(i, j) = Complex(rng.real_in(-1, 1), rng.real_in(-1, 1));
    const Eigen::Matrix2cd M = A * A.adjoint();  // Hermitian positive semidefinite
    const Eigen::Matrix2cd R = hermitian_sqrt(M);
    CHECK((R * R - M).norm() < 1e-12);
    CHECK((R - R.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("boost at the rest momentum is the identity") {
  const Eigen::Matrix2cd h = superspace::boost(Covector<double>{2.0, 0.0, 0.0, 0.0}, 2.0);
  CHECK((h - Eigen::Matrix2cd::Identity()).norm() < 1e-14);
}

TEST_CASE("boost along the z axis is the rapidity diagonal") {
  const double m = 2.0, r = 0.7;
  const Covector<double> p{m * std::cosh(r), 0.0, 0.0, m * std::sinh(r)};
  const Eigen::Matrix2cd h = superspace::boost(p, m);
  CHECK(std::abs(h(0, 0) - Complex(std::exp(r / 2))) < 1e-12);
  CHECK(std::abs(h(1, 1) - Complex(std::exp(-r / 2))) < 1e-12);
  CHECK(std::abs(h(0, 1)) < 1e-14);
  CHECK(std::abs(h(1, 0)) < 1e-14);
}

TEST_CASE("boost rejects invalid mass or off-shell momenta") {
  CHECK_THROWS_AS((void)superspace::boost(Covector<double>{1.0, 0.0, 0.0, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)superspace::boost(Covector<double>{2.0, 0.0, 0.0, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("boost transports the rest momentum to its defining point") {
  ExactRng rng(22);
  for (int trial = 0; trial < 6; ++trial) {
    const double m = rng.real_in(0.5, 3.0);
    const Covector<double> p = random_double_on_shell(m, rng);
    const Covector<double> moved = momentum_action(superspace::boost(p, m), Covector<double>{m, 0, 0, 0});
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(moved[mu] - p[mu]) < 1e-12);
  }
}

TEST_CASE("unimodular matrices preserve the minkowski square") {
  ExactRng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const Eigen::Matrix2cd h = random_unimodular(rng);
    Covector<double> p;
    for (int mu = 0; mu < 4; ++mu) p[mu] = rng.real_in(-2.0, 2.0);
    const Covector<double> hp = momentum_action(h, p);
    CHECK(std::abs(minkowski_sq(hp) - minkowski_sq(p)) < 1e-10);
  }
}

TEST_CASE("on-shell detector accepts the shell and rejects the rest") {
  CHECK(on_positive_shell(Covector<double>{std::sqrt(2.0), 1.0, 0.0, 0.0}, 1.0));
  CHECK(!on_positive_shell(Covector<double>{2.0, 0.0, 0.0, 0.0}, 1.0));
  CHECK(!on_positive_shell(Covector<double>{-1.0, 0.0, 0.0, 0.0}, 1.0));
}

TEST_CASE("spinor pairing reduces to minus mass times gamma0 on basis spinors") {
  const double m = 1.5;
  const Covector<double> q{m, 0.0, 0.0, 0.0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      SpinorPair plus_only{Eigen::Vector2cd::Unit(a), Eigen::Vector2cd::Zero()};
      SpinorPair minus_only{Eigen::Vector2cd::Zero(), Eigen::Vector2cd::Unit(b)};
      const Complex val = spinor_pairing_q(plus_only, minus_only, q);
      const Complex want = -m * gamma_entry<Complex>(0, a, b);
      CHECK(std::abs(val - want) == 0.0);
      // Equal chirality pairs are isotropic.
      CHECK(spinor_pairing_q(plus_only, plus_only, q) == Complex(0.0));
      CHECK(spinor_pairing_q(minus_only, minus_only, q) == Complex(0.0));
    }
}

TEST_CASE("spinor pairing is symmetric and bilinear") {
  ExactRng rng(24);
  Covector<double> q;
  for (int mu = 0; mu < 4; ++mu) q[mu] = rng.real_in(-2.0, 2.0);
  auto draw = [&] {
    SpinorPair s;
    for (int i = 0; i < 2; ++i) {
      s.plus(i) = Complex(rng.real_in(-1, 1), rng.real_in(-1, 1));
      s.minus(i) = Complex(rng.real_in(-1, 1), rng.real_in(-1, 1));
    }
    return s;
  };
  const SpinorPair s1 = draw(), s2 = draw();
  CHECK(std::abs(spinor_pairing_q(s1, s2, q) - spinor_pairing_q(s2, s1, q)) < 1e-14);
  const Complex lambda(0.5, -2.0);
  SpinorPair scaled{lambda * s1.plus, lambda * s1.minus};
  CHECK(std::abs(spinor_pairing_q(scaled, s2, q) - lambda * spinor_pairing_q(s1, s2, q)) < 1e-13);
}

TEST_CASE("dual spinor actions are group homomorphisms") {
  ExactRng rng(25);
  const Eigen::Matrix2cd h1 = random_unimodular(rng);
  const Eigen::Matrix2cd h2 = random_unimodular(rng);
  CHECK((rho_plus(h1 * h2) - rho_plus(h1) * rho_plus(h2)).norm() < 1e-10);
  CHECK((rho_minus(h1 * h2) - rho_minus(h1) * rho_minus(h2)).norm() < 1e-10);
  CHECK((rho_plus(Eigen::Matrix2cd::Identity()) - Eigen::Matrix2cd::Identity()).norm() == 0.0);
}

}  // TEST_SUITE
