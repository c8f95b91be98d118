/// Command-line surface for the superspace calculus toolkit.
///
/// Commands: verify-identities, wz check|solve, fourier, decompose, symbol.
/// Global flags: --seed, --tol, --backend {planewave, grid}.
/// Exit codes: 0 all checks pass, 1 check failure, 2 usage/parse error.
#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "superspace/superspace.hpp"

namespace {

using namespace superspace;

struct GlobalOptions {
  std::uint64_t seed = 20260825;
  double tol = 1e-12;
  std::string backend = "planewave";

  [[nodiscard]] Backend backend_enum() const {
    return backend == "grid" ? Backend::grid : Backend::planewave;
  }
};

void print_check_line(const CheckResult& c) {
  char tolbuf[32];
  if (c.tolerance == 0.0)
    std::snprintf(tolbuf, sizeof tolbuf, "(exact)");
  else
    std::snprintf(tolbuf, sizeof tolbuf, "tol %.1e", c.tolerance);
  std::printf("[%s] %-34s max residual %.3e  %-12s %s\n", c.pass ? "PASS" : "FAIL",
              c.name.c_str(), c.max_residual, tolbuf, c.anchor.c_str());
}

void print_residual_line(const char* name, double residual, double tol, const char* anchor,
                         bool& all_pass) {
  const bool pass = residual <= tol;
  all_pass = all_pass && pass;
  std::printf("[%s] %-34s max residual %.3e  tol %.1e    %s\n", pass ? "PASS" : "FAIL", name,
              residual, tol, anchor);
}

int cmd_verify_identities(const GlobalOptions& g, bool flip_eps, int cases) {
  SuiteOptions opts;
  opts.seed = g.seed;
  opts.tol = g.tol;
  opts.backend = g.backend_enum();
  opts.eps_sign = flip_eps ? -1 : +1;
  opts.cases = cases > 0 ? cases : (opts.backend == Backend::grid ? 8 : 100);
  std::printf("identity suite: backend %s, seed %llu, %d random superfunctions\n",
              backend_name(opts.backend).c_str(), static_cast<unsigned long long>(opts.seed),
              opts.cases);
  if (flip_eps)
    std::printf("note: odd kernel built with flipped epsilon sign (debug); "
                "convention-sensitive checks are expected to fail\n");
  const auto results = run_identity_suite(opts);
  bool all = true;
  for (const auto& c : results) {
    print_check_line(c);
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "all checks passed" : "CHECK FAILURES PRESENT");
  return all ? 0 : 1;
}

int cmd_wz_check(const GlobalOptions& g, const std::string& path) {
  const SuperfieldFile file = load_superfield_file(path);
  if (!(file.mass > 0.0)) throw std::invalid_argument("superfield file: mass must be positive");
  const Superfunction<Complex> f = to_superfunction(file);
  const WzReport rep = wz_verify(f, file.mass);
  std::printf("superfield check: %s (mass %g)\n", path.c_str(), file.mass);
  bool all = true;
  print_residual_line("chirality Dbar_1", rep.chirality[0], g.tol, "mu_a = G = eta_b = 0", all);
  print_residual_line("chirality Dbar_2", rep.chirality[1], g.tol, "mu_a = G = eta_b = 0", all);
  print_residual_line("superfield equation", rep.equation, g.tol, "(D)^2 f = 2m conj(f)", all);
  print_residual_line("scalar component", rep.klein_gordon, g.tol, "(box + m^2) phi = 0", all);
  print_residual_line("spinor component", rep.dirac, g.tol,
                      "eps^ac Gamma^mu_ab d_mu psi_c + m conj(psi)_b = 0", all);
  std::printf("%s\n", all ? "all checks passed" : "CHECK FAILURES PRESENT");
  return all ? 0 : 1;
}

int cmd_wz_solve(const GlobalOptions& g, double mass, const std::vector<double>& momentum,
                 const std::vector<double>& phi, const std::vector<double>& psi1,
                 const std::vector<double>& psi2, const std::string& output) {
  auto as_complex = [](const std::vector<double>& v) {
    return Complex(v.empty() ? 0.0 : v[0], v.size() > 1 ? v[1] : 0.0);
  };
  OnShellData<Complex> data;
  data.m = mass;
  for (int mu = 0; mu < 4; ++mu) data.p[mu] = momentum[mu];
  data.phi_hat = as_complex(phi);
  data.psi_hat = {as_complex(psi1), as_complex(psi2)};
  const Superfunction<Complex> f = wz_solve_plane_wave(data, g.tol > 0 ? g.tol : kOnShellTol);
  const SuperfieldFile out = from_superfunction(f, mass);
  const WzReport rep = wz_verify(f, mass);

  std::FILE* report_stream = output.empty() ? stderr : stdout;
  std::fprintf(report_stream,
               "solved mass-%g superfield at p = (%g, %g, %g, %g); residuals: chirality %.3e, "
               "equation %.3e, scalar %.3e, spinor %.3e\n",
               mass, momentum[0], momentum[1], momentum[2], momentum[3],
               std::max(rep.chirality[0], rep.chirality[1]), rep.equation, rep.klein_gordon,
               rep.dirac);
  if (output.empty()) {
    std::cout << to_json(out).dump(2) << "\n";
  } else {
    save_superfield_file(output, out);
    std::printf("wrote %s\n", output.c_str());
  }
  return 0;
}

std::string blade_label(unsigned mask) {
  static const char* gen[4] = {"tau1", "tau2", "taubar1", "taubar2"};
  if (mask == 0) return "1";
  std::string s;
  for (int gbit = 0; gbit < 4; ++gbit)
    if (mask & (1u << gbit)) {
      if (!s.empty()) s += " ";
      s += gen[gbit];
    }
  return s;
}

int cmd_fourier(const GlobalOptions& g, const std::string& path) {
  const SuperfieldFile file = load_superfield_file(path);
  const Superfunction<Complex> f = to_superfunction(file);
  MomentumSuperfunction<Complex> ms;
  if (g.backend_enum() == Backend::grid) {
    const GridSpec spec;
    for (const auto& p : f.support())
      if (!spec.commensurate(p))
        throw std::invalid_argument(
            "grid backend: a support momentum is not resolvable on the 8^4 lattice");
    ms = grid_super_fourier(sample_on_grid(f, spec));
  } else {
    ms = super_fourier(f);
  }
  std::printf("transform support: %zu momenta (backend %s)\n", ms.terms.size(),
              backend_name(g.backend_enum()).c_str());
  for (const auto& t : ms.terms) {
    std::printf("p = (%g, %g, %g, %g)\n", t.p[0], t.p[1], t.p[2], t.p[3]);
    for (unsigned mask = 0; mask < kBladeCount; ++mask) {
      const Complex c = t.fiber.c[mask];
      if (std::abs(c) == 0.0) continue;
      std::printf("  %-24s %+.12g %+.12g i\n", blade_label(mask).c_str(), c.real(), c.imag());
    }
  }
  return 0;
}

int cmd_decompose(const std::string& alpha_str, const std::string& beta_str) {
  const auto alpha_opt = HalfInt::parse(alpha_str);
  const auto beta_opt = HalfInt::parse(beta_str);
  if (!alpha_opt || !beta_opt)
    throw std::invalid_argument("alpha and beta must be half-integers like 2 or 3/2");
  HalfInt alpha = *alpha_opt;
  HalfInt beta = *beta_opt;
  if (alpha < beta) {
    std::swap(alpha, beta);
    std::printf("note: swapped to alpha = %s, beta = %s (decomposition needs alpha >= beta)\n",
                alpha.str().c_str(), beta.str().c_str());
  }
  const int dim_w = alpha.irrep_dim() * beta.irrep_dim();
  std::printf("W = Sym^%d (x) Sym^%d, dim %d\n", alpha.twice, beta.twice, dim_w);
  const IrrepDecomposition dec = tensor_decomposition(alpha, beta);
  for (const auto& [spin, mult] : dec.parts)
    std::printf("  spin %-4s multiplicity %d  dim %d\n", spin.str().c_str(), mult,
                spin.irrep_dim());
  const bool dims_ok = dec.total_dimension() == dim_w;
  std::printf("dimension sum %d %s dim W\n", dec.total_dimension(), dims_ok ? "=" : "!=");

  const auto u = u_map<RationalComplex>(alpha, beta);
  const int rank = exact_rank(u);
  const int kernel = dim_w - rank;
  const int expected_kernel = alpha.twice + beta.twice + 1;
  const int expected_rank = alpha.twice * beta.twice;
  const bool kernel_ok = kernel == expected_kernel && rank == expected_rank;
  std::printf("contraction u: rank %d (4 alpha beta = %d), dim Ker %d (2(alpha+beta)+1 = %d)\n",
              rank, expected_rank, kernel, expected_kernel);
  std::printf("%s\n", dims_ok && kernel_ok ? "all checks passed" : "CHECK FAILURES PRESENT");
  return dims_ok && kernel_ok ? 0 : 1;
}

int cmd_symbol(const GlobalOptions& g, const std::string& alpha_str, const std::string& beta_str,
               double mass, const std::vector<double>& momentum) {
  const auto alpha_opt = HalfInt::parse(alpha_str);
  const auto beta_opt = HalfInt::parse(beta_str);
  if (!alpha_opt || !beta_opt)
    throw std::invalid_argument("alpha and beta must be half-integers like 2 or 3/2");
  HalfInt alpha = *alpha_opt;
  HalfInt beta = *beta_opt;
  if (alpha < beta) std::swap(alpha, beta);
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  Covector<double> p{};
  for (int mu = 0; mu < 4; ++mu) p[mu] = momentum[mu];
  if (!on_positive_shell(p, mass))
    throw std::invalid_argument("momentum is not on the positive mass-m shell");

  const Eigen::MatrixXcd z = zeta_u(p, alpha, beta);
  const int rank = svd_rank(z);
  const int kernel = static_cast<int>(z.cols()) - rank;
  const int expected = alpha.twice + beta.twice + 1;
  std::printf("zeta_u(p) for (alpha, beta) = (%s, %s), m = %g, p = (%g, %g, %g, %g)\n",
              alpha.str().c_str(), beta.str().c_str(), mass, p[0], p[1], p[2], p[3]);
  std::printf("  rank %d, dim Ker %d, 2s+1 = %d -> %s\n", rank, kernel, expected,
              kernel == expected ? "match" : "MISMATCH");
  bool ok = kernel == expected;
  if (alpha.twice >= 1 && beta.twice >= 1) {
    const double triv = trivialization_residual(p, mass, alpha, beta);
    const bool triv_ok = triv <= std::max(g.tol, 1e-10);
    ok = ok && triv_ok;
    std::printf("  boost trivialization h_p u h_p^{-1}: residual %.3e -> %s\n", triv,
                triv_ok ? "ok" : "FAIL");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superspace calculus toolkit: Grassmann plane-wave superfields, the odd Fourier "
               "transform and its symbols, the massive chiral-superfield solver, and the "
               "symmetric-power contraction symbols."};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--tol", g.tol, "Pass tolerance for residual checks")->capture_default_str();
  app.add_option("--backend", g.backend, "Coefficient backend")
      ->check(CLI::IsMember({"planewave", "grid"}))
      ->capture_default_str();

  // verify-identities
  bool flip_eps = false;
  int cases = 0;
  auto* verify = app.add_subcommand("verify-identities",
                                    "Run the bracket/Hodge/exchange/intertwining suite");
  verify->fallthrough();
  verify->add_flag("--flip-eps", flip_eps,
                   "Debug: build the odd kernel with the epsilon sign flipped");
  verify->add_option("--cases", cases, "Random superfunctions per family (0 = default)");

  // wz check | solve
  auto* wz = app.add_subcommand("wz", "Massive chiral-superfield equation");
  wz->fallthrough();
  wz->require_subcommand(1);
  std::string check_path;
  auto* wz_check = wz->add_subcommand("check", "Verify a superfield file");
  wz_check->fallthrough();
  wz_check->add_option("file", check_path, "Superfield JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  double mass = 0.0;
  std::vector<double> momentum, phi_flag, psi1_flag, psi2_flag;
  std::string output;
  auto* wz_solve = wz->add_subcommand("solve", "Construct a solution from on-shell data");
  wz_solve->fallthrough();
  wz_solve->add_option("--mass", mass, "Positive mass")->required();
  wz_solve->add_option("--momentum", momentum, "Four momentum components p0 p1 p2 p3")
      ->expected(4)
      ->required();
  wz_solve->add_option("--phi", phi_flag, "Scalar amplitude RE [IM]")
      ->expected(1, 2)
      ->required();
  wz_solve->add_option("--psi1", psi1_flag, "First spinor amplitude RE [IM]")->expected(1, 2);
  wz_solve->add_option("--psi2", psi2_flag, "Second spinor amplitude RE [IM]")->expected(1, 2);
  wz_solve->add_option("--output,-o", output, "Write the solution here (default: stdout)");

  // fourier
  std::string fourier_path;
  auto* fourier = app.add_subcommand("fourier", "Print the transform of a superfield file");
  fourier->fallthrough();
  fourier->add_option("file", fourier_path, "Superfield JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  // decompose
  std::string alpha_str, beta_str;
  auto* decompose = app.add_subcommand("decompose",
                                       "Tensor-product decomposition and contraction kernel");
  decompose->fallthrough();
  decompose->add_option("--alpha", alpha_str, "Half-integer spin, e.g. 3/2")->required();
  decompose->add_option("--beta", beta_str, "Half-integer spin, e.g. 1")->required();

  // symbol
  std::string s_alpha, s_beta;
  double s_mass = 0.0;
  std::vector<double> s_momentum;
  auto* symbol = app.add_subcommand("symbol", "Rank/kernel table of zeta_u at an on-shell p");
  symbol->fallthrough();
  symbol->add_option("--alpha", s_alpha, "Half-integer spin")->required();
  symbol->add_option("--beta", s_beta, "Half-integer spin")->required();
  symbol->add_option("--mass", s_mass, "Positive mass")->required();
  symbol->add_option("--momentum", s_momentum, "Four momentum components")
      ->expected(4)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify_identities(g, flip_eps, cases);
    if (wz_check->parsed()) return cmd_wz_check(g, check_path);
    if (wz_solve->parsed())
      return cmd_wz_solve(g, mass, momentum, phi_flag, psi1_flag, psi2_flag, output);
    if (fourier->parsed()) return cmd_fourier(g, fourier_path);
    if (decompose->parsed()) return cmd_decompose(alpha_str, beta_str);
    if (symbol->parsed()) return cmd_symbol(g, s_alpha, s_beta, s_mass, s_momentum);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
