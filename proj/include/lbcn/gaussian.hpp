#pragma once

#include <cstdint>
#include <vector>

#include "lbcn/rng.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

/// Discrete Gaussian on Z with mass proportional to exp(-pi*x^2/sigma^2),
/// truncated to [-tail_cut, tail_cut].
struct GaussianParams {
  double sigma;
  std::size_t dim;
  std::int64_t tail_cut;

  GaussianParams(double sigma_, std::size_t dim_);
  GaussianParams(double sigma_, std::size_t dim_, std::int64_t tail_cut_);
};

std::int64_t default_tail_cut(double sigma);

/// Inverse-CDT sampler over the truncated support. Widths beyond the direct
/// table limit are sampled as K*y1 + y2 from two narrower CDT stages (the
/// usual convolution of discrete Gaussians); the tail_cut contract is then
/// enforced by a final resample-on-overflow check that in practice never
/// fires.
class GaussianSampler {
 public:
  explicit GaussianSampler(const GaussianParams& gp);

  std::int64_t draw(Rng& rng) const;
  ZVector draw_vector(Rng& rng) const;  // gp.dim coordinates

  const GaussianParams& params() const { return gp_; }

 private:
  struct Table {
    // thresholds[k] is the 64-bit cumulative weight of magnitudes <= k
    std::vector<std::uint64_t> thresholds;
    std::int64_t draw_magnitude(std::uint64_t u) const;
  };

  static Table build_table(double sigma, std::int64_t tail);
  std::int64_t draw_stage(const Table& t, Rng& rng) const;

  GaussianParams gp_;
  bool two_stage_ = false;
  std::int64_t stage_scale_ = 1;  // K
  Table t1_, t2_;
};

ZVector gauss_sample(const GaussianParams& gp, Rng& rng);

/// Process-wide sampler cache keyed by (sigma, tail_cut); CDT tables are
/// pure functions of their parameters, so sharing them is safe.
const GaussianSampler& cached_sampler(double sigma, std::int64_t tail_cut);

}  // namespace lbcn
