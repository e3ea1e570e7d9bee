#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lbcn {

struct ChiSquareResult {
  double statistic = 0.0;
  std::uint64_t dof = 0;
  double p_value = 0.0;
};

/// Upper tail of the chi-squared distribution.
double chi_square_sf(double statistic, double dof);

/// Goodness of fit of observed counts against expected counts (same total).
/// Bins with expected mass below min_expected are pooled into a rest bin.
ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                               const std::vector<double>& expected, double min_expected = 5.0);

/// Uniformity of values over Z_p.
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& values, std::uint64_t p);

/// Lag-1 serial test: pairs (x_i, x_{i+1}) against uniformity on Z_p x Z_p.
ChiSquareResult serial_chi_square(const std::vector<std::uint64_t>& values, std::uint64_t p);

/// Two-sample homogeneity chi-square over integer samples binned together.
ChiSquareResult two_sample_chi_square(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b, std::size_t bins);

/// Welch two-sample z-test; returns the two-sided p-value.
double mean_z_test(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace lbcn
