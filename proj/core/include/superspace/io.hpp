/// @file io.hpp
/// JSON (de)serialization of plane-wave superfields. A file holds a mass and
/// one term list per component field; each term is {re, im, p: [4]}.
#pragma once

#include <array>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "superspace/scalars.hpp"
#include "superspace/superfield.hpp"

namespace superspace {

/// One plane wave c e^{i<p,x>} in serialized form.
struct FileTerm {
  double re = 0.0;
  double im = 0.0;
  std::array<double, 4> p{};
};

/// Serialized superfield: mass plus the sixteen component term lists.
struct SuperfieldFile {
  double mass = 0.0;
  std::vector<FileTerm> phi, psi1, psi2, eta1, eta2, F, G;
  std::vector<FileTerm> A0, A1, A2, A3;
  std::vector<FileTerm> lambda1, lambda2, mu1, mu2, H;
};

namespace detail {

inline void terms_to_json(nlohmann::json& j, const char* key,
                          const std::vector<FileTerm>& terms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms)
    arr.push_back({{"re", t.re}, {"im", t.im}, {"p", {t.p[0], t.p[1], t.p[2], t.p[3]}}});
  j[key] = arr;
}

inline std::vector<FileTerm> terms_from_json(const nlohmann::json& j, const char* key) {
  std::vector<FileTerm> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string(key) + ": expected an array");
  // Translate library type errors (e.g. a string where a number belongs) into
  // the documented std::invalid_argument.
  try {
    for (const auto& e : arr) {
      FileTerm t;
      t.re = e.value("re", 0.0);
      t.im = e.value("im", 0.0);
      const auto& p = e.at("p");
      if (!p.is_array() || p.size() != 4)
        throw std::invalid_argument(std::string(key) + ": term needs p with 4 entries");
      for (int mu = 0; mu < 4; ++mu) t.p[mu] = p[mu].get<double>();
      out.push_back(t);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(key) + ": " + e.what());
  }
  return out;
}

inline PlaneWaveFn<Complex> fn_from_terms(const std::vector<FileTerm>& terms) {
  PlaneWaveFn<Complex> fn;
  for (const auto& t : terms) fn.add_term(t.p, Complex(t.re, t.im));
  return fn;
}

inline std::vector<FileTerm> terms_from_fn(const PlaneWaveFn<Complex>& fn) {
  std::vector<FileTerm> out;
  for (const auto& t : fn.terms) out.push_back(FileTerm{t.amp.real(), t.amp.imag(), t.p});
  return out;
}

}  // namespace detail

[[nodiscard]] inline nlohmann::json to_json(const SuperfieldFile& f) {
  nlohmann::json j;
  j["mass"] = f.mass;
  detail::terms_to_json(j, "phi", f.phi);
  detail::terms_to_json(j, "psi1", f.psi1);
  detail::terms_to_json(j, "psi2", f.psi2);
  detail::terms_to_json(j, "eta1", f.eta1);
  detail::terms_to_json(j, "eta2", f.eta2);
  detail::terms_to_json(j, "F", f.F);
  detail::terms_to_json(j, "G", f.G);
  detail::terms_to_json(j, "A0", f.A0);
  detail::terms_to_json(j, "A1", f.A1);
  detail::terms_to_json(j, "A2", f.A2);
  detail::terms_to_json(j, "A3", f.A3);
  detail::terms_to_json(j, "lambda1", f.lambda1);
  detail::terms_to_json(j, "lambda2", f.lambda2);
  detail::terms_to_json(j, "mu1", f.mu1);
  detail::terms_to_json(j, "mu2", f.mu2);
  detail::terms_to_json(j, "H", f.H);
  return j;
}

/// Throws std::invalid_argument on malformed input (missing mass, bad term
/// shape, non-numeric entries).
[[nodiscard]] inline SuperfieldFile superfield_file_from_json(const nlohmann::json& j) {
  SuperfieldFile f;
  if (!j.contains("mass") || !j.at("mass").is_number())
    throw std::invalid_argument("superfield file: missing numeric \"mass\"");
  f.mass = j.at("mass").get<double>();
  f.phi = detail::terms_from_json(j, "phi");
  f.psi1 = detail::terms_from_json(j, "psi1");
  f.psi2 = detail::terms_from_json(j, "psi2");
  f.eta1 = detail::terms_from_json(j, "eta1");
  f.eta2 = detail::terms_from_json(j, "eta2");
  f.F = detail::terms_from_json(j, "F");
  f.G = detail::terms_from_json(j, "G");
  f.A0 = detail::terms_from_json(j, "A0");
  f.A1 = detail::terms_from_json(j, "A1");
  f.A2 = detail::terms_from_json(j, "A2");
  f.A3 = detail::terms_from_json(j, "A3");
  f.lambda1 = detail::terms_from_json(j, "lambda1");
  f.lambda2 = detail::terms_from_json(j, "lambda2");
  f.mu1 = detail::terms_from_json(j, "mu1");
  f.mu2 = detail::terms_from_json(j, "mu2");
  f.H = detail::terms_from_json(j, "H");
  return f;
}

[[nodiscard]] inline SuperfieldFile load_superfield_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return superfield_file_from_json(j);
}

inline void save_superfield_file(const std::string& path, const SuperfieldFile& f) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << to_json(f).dump(2) << "\n";
}

/// Assembles the superfunction from serialized components via the component
/// chart (mixed-blade coefficients B_ab = Gamma^mu_ab A_mu, etc.).
[[nodiscard]] inline Superfunction<Complex> to_superfunction(const SuperfieldFile& f) {
  Components<Complex> c;
  c.phi = detail::fn_from_terms(f.phi);
  c.psi[0] = detail::fn_from_terms(f.psi1);
  c.psi[1] = detail::fn_from_terms(f.psi2);
  c.eta[0] = detail::fn_from_terms(f.eta1);
  c.eta[1] = detail::fn_from_terms(f.eta2);
  c.F = detail::fn_from_terms(f.F);
  c.G = detail::fn_from_terms(f.G);
  c.A[0] = detail::fn_from_terms(f.A0);
  c.A[1] = detail::fn_from_terms(f.A1);
  c.A[2] = detail::fn_from_terms(f.A2);
  c.A[3] = detail::fn_from_terms(f.A3);
  c.lambda[0] = detail::fn_from_terms(f.lambda1);
  c.lambda[1] = detail::fn_from_terms(f.lambda2);
  c.mu[0] = detail::fn_from_terms(f.mu1);
  c.mu[1] = detail::fn_from_terms(f.mu2);
  c.H = detail::fn_from_terms(f.H);
  return from_components(c);
}

[[nodiscard]] inline SuperfieldFile from_superfunction(const Superfunction<Complex>& f,
                                                       double mass) {
  const Components<Complex> c = to_components(f);
  SuperfieldFile out;
  out.mass = mass;
  out.phi = detail::terms_from_fn(c.phi);
  out.psi1 = detail::terms_from_fn(c.psi[0]);
  out.psi2 = detail::terms_from_fn(c.psi[1]);
  out.eta1 = detail::terms_from_fn(c.eta[0]);
  out.eta2 = detail::terms_from_fn(c.eta[1]);
  out.F = detail::terms_from_fn(c.F);
  out.G = detail::terms_from_fn(c.G);
  out.A0 = detail::terms_from_fn(c.A[0]);
  out.A1 = detail::terms_from_fn(c.A[1]);
  out.A2 = detail::terms_from_fn(c.A[2]);
  out.A3 = detail::terms_from_fn(c.A[3]);
  out.lambda1 = detail::terms_from_fn(c.lambda[0]);
  out.lambda2 = detail::terms_from_fn(c.lambda[1]);
  out.mu1 = detail::terms_from_fn(c.mu[0]);
  out.mu2 = detail::terms_from_fn(c.mu[1]);
  out.H = detail::terms_from_fn(c.H);
  return out;
}

}  // namespace superspace
