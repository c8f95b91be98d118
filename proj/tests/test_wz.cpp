#include <doctest.h>

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <superspace/superspace.hpp>

#include "support.hpp"

using namespace superspace;
using testsupport::random_double_on_shell;
using testsupport::random_su2;
using testsupport::random_unimodular;
using testsupport::rational_on_shell;
using testsupport::rc;

namespace {
using S = RationalComplex;
using G = GrassmannElement<S>;

const S kI = ScalarTraits<S>::imag_unit();

Covector<Rational> rp(long p0, long p1, long p2, long p3) {
  return {Rational(p0), Rational(p1), Rational(p2), Rational(p3)};
}

Eigen::VectorXcd rand_vec(ExactRng& rng, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0));
  return v;
}

/// Exact fixed data on the rational shell point (5/4, 3/4, 0, 0) of mass 1.
const Covector<Rational> kShell5434 = {Rational(5, 4), Rational(3, 4), Rational(0), Rational(0)};
}  // namespace

TEST_SUITE("wz") {

TEST_CASE("dirac matrix determinant equals the squared momentum") {
  for (const auto& p : {rp(1, 0, 0, 0), rp(3, 1, -2, 2), kShell5434}) {
    const auto M = dirac_matrix<S>(p);
    const S det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    CHECK(det == ScalarTraits<S>::from_real(minkowski_sq(p)));
  }
}

TEST_CASE("conjugated dirac matrix composes to minus the squared mass on shell") {
  ExactRng rng(61);
  const Rational m(2);
  const Covector<Rational> p = rational_on_shell(m, rng);
  const auto M = dirac_matrix<S>(p);
  // conj(M(p)) M(p) = -m^2 Id, so a pointwise pairing M psi = +-i m conj(psi)
  // would force psi = 0; the reality pairing of solutions couples p to -p.
  const S m2 = ScalarTraits<S>::from_real(m * m);
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      const S entry = conj_of(M[b][0]) * M[0][c] + conj_of(M[b][1]) * M[1][c];
      CHECK(entry == (b == c ? -m2 : ScalarTraits<S>::zero()));
    }
}

TEST_CASE("on-shell data validation rejects inadmissible input") {
  const Covector<double> pd{std::sqrt(2.0), 1.0, 0.0, 0.0};
  OnShellData<Complex> d;
  d.m = 1.0;
  d.p = pd;
  d.phi_hat = Complex(0.5, 0.0);
  // Any spinor amplitude is admissible; the conjugate partner lives at -p.
  d.psi_hat = {Complex(1.0, -0.5), Complex(0.0, 2.0)};
  CHECK_NOTHROW(validate_on_shell(d));

  OnShellData<Complex> bad = d;
  bad.m = 0.0;
  CHECK_THROWS_AS(validate_on_shell(bad), std::invalid_argument);
  bad = d;
  bad.p[0] = -std::sqrt(2.0);
  CHECK_THROWS_AS(validate_on_shell(bad), std::invalid_argument);
  bad = d;
  bad.p = {2.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(validate_on_shell(bad), std::invalid_argument);
}

TEST_CASE("solver produces the scalar solution with frozen component amplitudes") {
  OnShellData<S> data;
  data.m = Rational(1);
  data.p = rp(1, 0, 0, 0);
  data.phi_hat = rc(1);
  const Superfunction<S> f = wz_solve_plane_wave(data);
  const WzReport rep = wz_verify(f, Rational(1));
  CHECK(rep.chirality[0] == 0.0);
  CHECK(rep.chirality[1] == 0.0);
  CHECK(rep.equation == 0.0);
  CHECK(rep.klein_gordon == 0.0);
  CHECK(rep.dirac == 0.0);

  const Components<S> k = to_components(f);
  CHECK(k.A[0].amplitude_at(data.p) == -kI);
  for (int mu = 1; mu < 4; ++mu) CHECK(is_zero(k.A[mu].amplitude_at(data.p)));
  CHECK(k.F.amplitude_at(data.p) == rc(-2));
  CHECK(k.H.amplitude_at(data.p) == rc(1));

  // The conjugate partner at -p carries the same relations for the
  // conjugated scalar amplitude.
  const Covector<Rational> q = rp(-1, 0, 0, 0);
  CHECK(k.phi.amplitude_at(q) == rc(1));
  CHECK(k.F.amplitude_at(q) == rc(-2));
  CHECK(k.A[0].amplitude_at(q) == kI);
  CHECK(k.H.amplitude_at(q) == rc(1));
}

TEST_CASE("solver handles exact spinor data and survives all verifications") {
  ExactRng rng(62);
  OnShellData<S> data;
  data.m = Rational(2);
  data.p = rational_on_shell(data.m, rng);
  data.phi_hat = rc(1, 1);
  data.psi_hat = {rc(1), rc(0, 1)};

  const Superfunction<S> f = wz_solve_plane_wave(data);
  CHECK(wz_verify(f, data.m).max_residual() == 0.0);
  CHECK(momentum_mass_shell(super_fourier(f), data.m).max_residual() == 0.0);

  // A wrong mass keeps chirality but breaks the field equation.
  const WzReport wrong = wz_verify(f, Rational(3));
  CHECK(wrong.chirality[0] == 0.0);
  CHECK(wrong.chirality[1] == 0.0);
  CHECK(wrong.equation > 0.0);
  CHECK(wrong.klein_gordon > 0.0);

  // A stray antichiral generator breaks chirality.
  Superfunction<S> g = f;
  g.blades[4] = g.blades[4] + PlaneWaveFn<S>::constant(rc(1));
  CHECK(wz_verify(g, data.m).chirality[0] > 0.0);
}

TEST_CASE("solver handles spinor data on an irrational shell point") {
  const Covector<double> pd{std::sqrt(2.0), 1.0, 0.0, 0.0};
  OnShellData<Complex> data;
  data.m = 1.0;
  data.p = pd;
  data.psi_hat = {Complex(1.0, 0.5), Complex(-0.3, 0.0)};
  const auto f = wz_solve_plane_wave(data);
  CHECK(wz_verify(f, 1.0).max_residual() <= 1e-12);
  CHECK(momentum_mass_shell(super_fourier(f), 1.0).max_residual() <= 1e-12);
}

TEST_CASE("solver rejects off-shell momenta") {
  OnShellData<S> data;
  data.m = Rational(1);
  data.p = rp(2, 0, 0, 0);
  data.phi_hat = rc(1);
  CHECK_THROWS_AS(wz_solve_plane_wave(data), std::invalid_argument);
}

TEST_CASE("off-shell spinor assembly surfaces in the component equations") {
  // Assemble the candidate directly so validation cannot refuse it. The
  // chiral-part relations keep both chirality residuals at zero for any
  // momentum, but off the shell the equation and its spinor component fail.
  const Rational m(1);
  const Covector<Rational> off = rp(2, 0, 0, 1);  // <p,p> = 3 != m^2
  const Superfunction<S> A = wz_chiral_part<S>(m, off, rc(0), {rc(1), rc(0)});
  const S half(Rational(1, 2), Rational(0));
  const Superfunction<S> f = A + half * conjugate(D_squared(A));
  const WzReport rep = wz_verify(f, m);
  CHECK(rep.chirality[0] == 0.0);
  CHECK(rep.chirality[1] == 0.0);
  CHECK(rep.equation > 0.0);
  CHECK(rep.dirac > 0.0);
}

TEST_CASE("momentum-space verification isolates the scalar condition off shell") {
  const double m = std::sqrt(2.0);
  const Covector<double> p{2.0, 0.0, 0.0, 0.0};
  const Superfunction<Complex> A = wz_chiral_part<Complex>(m, p, Complex(1.0), {});
  const Superfunction<Complex> f =
      A + (Complex(1.0) / Complex(2.0 * m)) * conjugate(D_squared(A));
  const MomentumShellReport rep = momentum_mass_shell(super_fourier(f), m);
  CHECK(rep.scalar_condition == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("massless light-cone data satisfies every shell condition exactly") {
  const Superfunction<S> A =
      wz_chiral_part<S>(Rational(0), rp(1, 0, 0, 1), rc(3), {rc(2), rc(0)});
  const MomentumShellReport rep = momentum_mass_shell(super_fourier(A), Rational(0));
  CHECK(rep.equation == 0.0);
  CHECK(rep.scalar_condition == 0.0);
  CHECK(rep.dirac_condition == 0.0);
}

TEST_CASE("odd fiber action respects degrees and composes as a representation") {
  const Eigen::MatrixXcd id_action =
      odd_fiber_action(Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity());
  CHECK((id_action - Eigen::MatrixXcd::Identity(16, 16)).norm() <= 1e-14);

  ExactRng rng(63);
  const Eigen::Matrix2cd h1 = random_unimodular(rng);
  const Eigen::Matrix2cd h2 = random_unimodular(rng);
  const Eigen::MatrixXcd lhs = fiber_spin_action(h1 * h2);
  const Eigen::MatrixXcd rhs = fiber_spin_action(h1) * fiber_spin_action(h2);
  CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, rhs.norm()));

  const Eigen::MatrixXcd u = fiber_spin_action(random_su2(rng));
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(16, 16)).norm() <= 1e-10);

  const Eigen::MatrixXcd blocky = fiber_spin_action(h1);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if (std::popcount(static_cast<unsigned>(i)) != std::popcount(static_cast<unsigned>(j)))
        CHECK(std::abs(blocky(i, j)) <= 1e-14);
}

TEST_CASE("invariant inner product reduces to the fiber pairing at rest") {
  ExactRng rng(64);
  const double m = 1.7;
  const Eigen::VectorXcd v = rand_vec(rng, 16);
  const Eigen::VectorXcd u = rand_vec(rng, 16);
  const Covector<double> rest{m, 0.0, 0.0, 0.0};
  const std::vector<OrbitSample> s1{{rest, v, 2.0 * m}};
  const std::vector<OrbitSample> s2{{rest, u, 2.0 * m}};
  CHECK(std::abs(invariant_inner_product(s1, s2, m) - v.dot(u)) <= 1e-10);

  const Complex self = invariant_inner_product(s1, s1, m);
  CHECK(self.real() > 0.0);
  CHECK(std::abs(self.imag()) <= 1e-12);

  const std::vector<OrbitSample> other{{random_double_on_shell(m, rng), u, 1.0}};
  CHECK_THROWS_AS((void)invariant_inner_product(s1, other, m), std::invalid_argument);
  const std::vector<OrbitSample> longer{{rest, v, 1.0}, {rest, u, 1.0}};
  CHECK_THROWS_AS((void)invariant_inner_product(s1, longer, m), std::invalid_argument);
}

TEST_CASE("transport moves samples along the shell covariantly") {
  ExactRng rng(65);
  const double m = 1.3;
  OrbitSample s{random_double_on_shell(m, rng), rand_vec(rng, 16), 1.5};
  const Eigen::Matrix2cd h1 = random_unimodular(rng);
  const Eigen::Matrix2cd h2 = random_unimodular(rng);

  const OrbitSample t1 = transport(s, h1);
  CHECK(on_positive_shell(t1.p, m));
  CHECK(t1.weight == doctest::Approx(1.5 * t1.p[0] / s.p[0]).epsilon(1e-12));

  const OrbitSample t21 = transport(t1, h2);
  const OrbitSample tc = transport(s, h2 * h1);
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(t21.p[mu] - tc.p[mu]) <= 1e-10);
  CHECK((t21.v - tc.v).norm() <= 1e-8 * std::max(1.0, tc.v.norm()));
  CHECK(t21.weight == doctest::Approx(tc.weight).epsilon(1e-10));
}

TEST_CASE("inner product is invariant under simultaneous transport") {
  ExactRng rng(66);
  const double m = 1.0;
  const Covector<double> p1 = random_double_on_shell(m, rng);
  const Covector<double> p2 = random_double_on_shell(m, rng);
  std::vector<OrbitSample> s1{{p1, rand_vec(rng, 16), 0.7}, {p2, rand_vec(rng, 16), 1.1}};
  std::vector<OrbitSample> s2{{p1, rand_vec(rng, 16), 0.7}, {p2, rand_vec(rng, 16), 1.1}};
  const Complex value = invariant_inner_product(s1, s2, m);

  const Eigen::Matrix2cd h = random_su2(rng) * random_unimodular(rng);
  std::vector<OrbitSample> t1;
  std::vector<OrbitSample> t2;
  for (std::size_t k = 0; k < s1.size(); ++k) {
    t1.push_back(transport(s1[k], h));
    t2.push_back(transport(s2[k], h));
  }
  const Complex moved = invariant_inner_product(t1, t2, m);
  CHECK(std::abs(moved - value) <= 1e-10 * std::max(1.0, std::abs(value)));
}

TEST_CASE("positivity holds on chiral fiber data") {
  ExactRng rng(67);
  const double m = 1.0;
  const auto basis = chiral_subspace(m);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  for (const auto& b : basis)
    v += Complex(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0)) * b;
  const std::vector<OrbitSample> s{{random_double_on_shell(m, rng), v, 1.0}};
  const Complex norm2 = invariant_inner_product(s, s, m);
  CHECK(norm2.real() > 0.0);
  CHECK(std::abs(norm2.imag()) <= 1e-12);
}

}  // TEST_SUITE
