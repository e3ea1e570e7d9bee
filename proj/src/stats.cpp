#include "lbcn/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "lbcn/error.hpp"

namespace lbcn {

double chi_square_sf(double statistic, double dof) {
  if (dof <= 0.0) return 1.0;
  boost::math::chi_squared dist(dof);
  if (statistic <= 0.0) return 1.0;
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                               const std::vector<double>& expected, double min_expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw Error(ErrorCode::invalid_params, "chi-square: size mismatch");
  }
  // Pool sparse bins so the chi-square approximation stays valid.
  std::vector<double> obs, exp;
  double pool_o = 0.0, pool_e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] < min_expected) {
      pool_o += observed[i];
      pool_e += expected[i];
    } else {
      obs.push_back(observed[i]);
      exp.push_back(expected[i]);
    }
  }
  if (pool_e > 0.0) {
    obs.push_back(pool_o);
    exp.push_back(pool_e);
  }
  if (obs.size() < 2) throw Error(ErrorCode::too_few_samples, "chi-square: too few usable bins");
  ChiSquareResult r;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    double d = obs[i] - exp[i];
    r.statistic += d * d / exp[i];
  }
  r.dof = obs.size() - 1;
  r.p_value = chi_square_sf(r.statistic, static_cast<double>(r.dof));
  return r;
}

ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& values, std::uint64_t p) {
  if (values.empty()) throw Error(ErrorCode::too_few_samples, "no samples");
  std::vector<double> counts(p, 0.0);
  for (std::uint64_t v : values) {
    if (v >= p) throw Error(ErrorCode::invalid_params, "value outside Z_p");
    counts[v] += 1.0;
  }
  std::vector<double> expected(p, static_cast<double>(values.size()) / static_cast<double>(p));
  return chi_square_gof(counts, expected);
}

ChiSquareResult serial_chi_square(const std::vector<std::uint64_t>& values, std::uint64_t p) {
  if (values.size() < 2) throw Error(ErrorCode::too_few_samples, "need at least 2 samples");
  std::vector<double> counts(p * p, 0.0);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] >= p || values[i + 1] >= p) {
      throw Error(ErrorCode::invalid_params, "value outside Z_p");
    }
    counts[values[i] * p + values[i + 1]] += 1.0;
  }
  const double total = static_cast<double>(values.size() - 1);
  std::vector<double> expected(p * p, total / static_cast<double>(p * p));
  return chi_square_gof(counts, expected, 1.0);
}

ChiSquareResult two_sample_chi_square(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b, std::size_t bins) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::too_few_samples, "empty sample");
  std::int64_t lo = std::min(*std::min_element(a.begin(), a.end()),
                             *std::min_element(b.begin(), b.end()));
  std::int64_t hi = std::max(*std::max_element(a.begin(), a.end()),
                             *std::max_element(b.begin(), b.end()));
  const double width = (static_cast<double>(hi) - static_cast<double>(lo) + 1.0) /
                       static_cast<double>(bins);
  auto bin_of = [&](std::int64_t x) {
    auto k = static_cast<std::size_t>((static_cast<double>(x) - static_cast<double>(lo)) / width);
    return std::min(k, bins - 1);
  };
  std::vector<double> ca(bins, 0.0), cb(bins, 0.0);
  for (std::int64_t x : a) ca[bin_of(x)] += 1.0;
  for (std::int64_t x : b) cb[bin_of(x)] += 1.0;

  // Standard homogeneity statistic with both margins estimated.
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double stat = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < bins; ++k) {
    const double tot = ca[k] + cb[k];
    if (tot < 10.0) continue;  // skip sparse bins
    const double ea = tot * na / (na + nb);
    const double eb = tot * nb / (na + nb);
    stat += (ca[k] - ea) * (ca[k] - ea) / ea + (cb[k] - eb) * (cb[k] - eb) / eb;
    ++used;
  }
  if (used < 2) throw Error(ErrorCode::too_few_samples, "two-sample chi-square: sparse data");
  ChiSquareResult r;
  r.statistic = stat;
  r.dof = used - 1;
  r.p_value = chi_square_sf(stat, static_cast<double>(r.dof));
  return r;
}

double mean_z_test(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2) throw Error(ErrorCode::too_few_samples, "need 2+ samples");
  auto stats = [](const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= static_cast<double>(x.size() - 1);
    return std::pair<double, double>{mean, var};
  };
  auto [ma, va] = stats(a);
  auto [mb, vb] = stats(b);
  double se = std::sqrt(va / static_cast<double>(a.size()) + vb / static_cast<double>(b.size()));
  if (se == 0.0) return ma == mb ? 1.0 : 0.0;
  double z = (ma - mb) / se;
  boost::math::normal norm;
  return 2.0 * boost::math::cdf(boost::math::complement(norm, std::abs(z)));
}

}  // namespace lbcn
