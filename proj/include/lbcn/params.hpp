#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lbcn {

/// All public numeric parameters of one named parameter set.
struct SystemParams {
  std::string name;
  std::uint64_t p = 0;  // prime share modulus
  std::uint64_t q = 0;  // ciphertext modulus, q = p^2
  std::size_t u = 0;    // LWE sample dimension
  std::size_t v = 0;    // LWE secret dimension
  double alpha = 0.0;   // key Gaussian rate; key width is alpha*q
  double beta = 0.0;    // ciphertext noise rate; noise width is beta*q
  double r_enc = 0.0;   // encryption randomness width
  std::size_t n = 0;    // default participant count
  std::size_t t = 0;    // default threshold
  std::uint32_t lambda_sec = 0;
  std::uint32_t rep = 0;  // proof repetitions

  double alpha_q() const { return alpha * static_cast<double>(q); }
  double beta_q() const { return beta * static_cast<double>(q); }

  /// Structural invariants (p prime, q = p^2, t < n/2); throws invalid-params.
  void check_structure() const;
};

/// Worst-case decryption noise budget, evaluated against p/2, plus the check
/// that beta matches its defining formula sqrt(u)*log2(u)*(alpha + 1/(2q)).
struct NoiseBudgetReport {
  double worst_noise_bound = 0.0;
  double p_half = 0.0;
  double margin = 0.0;  // p_half / worst_noise_bound
  bool noise_ok = false;
  double beta_expected = 0.0;
  double beta_rel_err = 0.0;
  bool beta_formula_ok = false;

  bool pass() const { return noise_ok && beta_formula_ok; }
};

NoiseBudgetReport validate_params(const SystemParams& params);

/// Byte width of one canonically encoded mod-q integer: smallest w with
/// 256^w >= q.
std::size_t int_width(std::uint64_t q);

/// Named parameter sets loaded from a flat key-value config file with lines
/// "set.key = value".
struct ParamConfig {
  std::map<std::string, SystemParams> sets;

  const SystemParams& get(const std::string& name) const;
};

ParamConfig parse_param_config(const std::string& text);
ParamConfig load_param_config(const std::string& path);

}  // namespace lbcn
