#include "lbcn/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lbcn/error.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

void SystemParams::check_structure() const {
  if (p < 2 || !is_prime_u64(p)) {
    throw Error(ErrorCode::invalid_params, "p must be prime (set " + name + ")");
  }
  if (q != p * p) {
    throw Error(ErrorCode::invalid_params, "q must equal p^2 (set " + name + ")");
  }
  if (u == 0 || v == 0) {
    throw Error(ErrorCode::invalid_params, "u, v must be positive");
  }
  if (!(alpha > 0.0) || !(beta > 0.0) || !(r_enc > 0.0)) {
    throw Error(ErrorCode::invalid_params, "alpha, beta, r_enc must be positive");
  }
  if (n < 2 || 2 * t >= n) {
    throw Error(ErrorCode::invalid_params, "need t < n/2");
  }
  if (rep == 0) {
    throw Error(ErrorCode::invalid_params, "rep must be positive");
  }
}

NoiseBudgetReport validate_params(const SystemParams& params) {
  NoiseBudgetReport rep;
  const double su = std::sqrt(static_cast<double>(params.u));
  // Key noise is bounded by the keygen retry loop; encryption randomness by
  // its Gaussian norm (tail factor 1); encryption noise by the 12-sigma cut.
  const double tail_factor = 1.0;
  rep.worst_noise_bound =
      su * params.alpha_q() * su * params.r_enc * tail_factor + 12.0 * params.beta_q();
  rep.p_half = static_cast<double>(params.p) / 2.0;
  rep.noise_ok = rep.worst_noise_bound < rep.p_half;
  rep.margin = rep.p_half / rep.worst_noise_bound;

  rep.beta_expected = su * std::log2(static_cast<double>(params.u)) *
                      (params.alpha + 1.0 / (2.0 * static_cast<double>(params.q)));
  rep.beta_rel_err = std::abs(params.beta - rep.beta_expected) / rep.beta_expected;
  rep.beta_formula_ok = rep.beta_rel_err <= std::ldexp(1.0, -20);
  return rep;
}

std::size_t int_width(std::uint64_t q) {
  std::size_t w = 1;
  // smallest w with 256^w >= q
  unsigned __int128 cap = 256;
  while (cap < q) {
    cap *= 256;
    ++w;
  }
  return w;
}

const SystemParams& ParamConfig::get(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) {
    throw Error(ErrorCode::config_error, "unknown parameter set '" + name + "'");
  }
  return it->second;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParamConfig parse_param_config(const std::string& text) {
  ParamConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    std::size_t dot = line.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
      throw Error(ErrorCode::config_error,
                  "config line " + std::to_string(lineno) + ": expected set.key = value");
    }
    std::string set = trim(line.substr(0, dot));
    std::string key = trim(line.substr(dot + 1, eq - dot - 1));
    std::string value = trim(line.substr(eq + 1));
    if (set.empty() || key.empty() || value.empty()) {
      throw Error(ErrorCode::config_error, "config line " + std::to_string(lineno) + ": empty field");
    }
    SystemParams& ps = cfg.sets[set];
    ps.name = set;
    try {
      if (key == "p") {
        ps.p = std::stoull(value);
      } else if (key == "q") {
        ps.q = std::stoull(value);
      } else if (key == "u") {
        ps.u = std::stoull(value);
      } else if (key == "v") {
        ps.v = std::stoull(value);
      } else if (key == "alphaq") {
        ps.alpha = std::stod(value);  // rescaled below once q is known
      } else if (key == "betaq") {
        ps.beta = std::stod(value);
      } else if (key == "r_enc") {
        ps.r_enc = std::stod(value);
      } else if (key == "n") {
        ps.n = std::stoull(value);
      } else if (key == "t") {
        ps.t = std::stoull(value);
      } else if (key == "lambda") {
        ps.lambda_sec = static_cast<std::uint32_t>(std::stoul(value));
      } else if (key == "rep") {
        ps.rep = static_cast<std::uint32_t>(std::stoul(value));
      } else {
        throw Error(ErrorCode::config_error,
                    "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::config_error, "config line " + std::to_string(lineno) + ": bad number");
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::config_error, "config line " + std::to_string(lineno) + ": number out of range");
    }
  }
  // Config stores the width products alphaq/betaq; convert to the rates the
  // rest of the code expects.
  for (auto& [name, ps] : cfg.sets) {
    if (ps.q == 0) ps.q = ps.p * ps.p;
    if (ps.q == 0) throw Error(ErrorCode::config_error, "set " + name + ": missing p/q");
    ps.alpha /= static_cast<double>(ps.q);
    ps.beta /= static_cast<double>(ps.q);
  }
  return cfg;
}

ParamConfig load_param_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::config_error, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_param_config(ss.str());
}

}  // namespace lbcn
