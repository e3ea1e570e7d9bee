#include "lbcn/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "lbcn/error.hpp"

namespace lbcn {

namespace {
constexpr double kDirectSigmaLimit = 4096.0;
constexpr double kBaseSigma = 1024.0;
}  // namespace

std::int64_t default_tail_cut(double sigma) {
  return static_cast<std::int64_t>(std::ceil(12.0 * sigma));
}

GaussianParams::GaussianParams(double sigma_, std::size_t dim_)
    : GaussianParams(sigma_, dim_, default_tail_cut(sigma_)) {}

GaussianParams::GaussianParams(double sigma_, std::size_t dim_, std::int64_t tail_cut_)
    : sigma(sigma_), dim(dim_), tail_cut(tail_cut_) {
  if (!(sigma > 0.0) || dim == 0) {
    throw Error(ErrorCode::invalid_params, "gaussian: sigma must be > 0 and dim > 0");
  }
  if (tail_cut < static_cast<std::int64_t>(std::ceil(sigma))) {
    throw Error(ErrorCode::invalid_params, "gaussian: tail_cut below ceil(sigma)");
  }
}

GaussianSampler::Table GaussianSampler::build_table(double sigma, std::int64_t tail) {
  // Exact-probability table: weight(0) = 1, weight(k) = 2*exp(-pi k^2/sigma^2)
  // covering both signs of magnitude k.  Thresholds are the cumulative
  // distribution scaled to 64-bit fixed point.
  std::vector<long double> weights(static_cast<std::size_t>(tail) + 1);
  weights[0] = 1.0L;
  long double total = 1.0L;
  const long double s2 = static_cast<long double>(sigma) * sigma;
  for (std::int64_t k = 1; k <= tail; ++k) {
    long double w = 2.0L * std::exp(-static_cast<long double>(M_PI) * k * k / s2);
    weights[static_cast<std::size_t>(k)] = w;
    total += w;
  }
  Table t;
  t.thresholds.resize(weights.size());
  long double cum = 0.0L;
  const long double scale = std::ldexp(1.0L, 64);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    cum += weights[k];
    long double v = cum / total * scale;
    t.thresholds[k] =
        v >= scale ? ~std::uint64_t{0} : static_cast<std::uint64_t>(v);
  }
  t.thresholds.back() = ~std::uint64_t{0};
  return t;
}

std::int64_t GaussianSampler::Table::draw_magnitude(std::uint64_t u) const {
  auto it = std::upper_bound(thresholds.begin(), thresholds.end(), u);
  if (it == thresholds.end()) --it;
  return static_cast<std::int64_t>(it - thresholds.begin());
}

GaussianSampler::GaussianSampler(const GaussianParams& gp) : gp_(gp) {
  if (gp_.sigma <= kDirectSigmaLimit) {
    t1_ = build_table(gp_.sigma, gp_.tail_cut);
    return;
  }
  two_stage_ = true;
  const double rem = std::sqrt(gp_.sigma * gp_.sigma - kBaseSigma * kBaseSigma);
  stage_scale_ = static_cast<std::int64_t>(std::ceil(rem / kBaseSigma));
  const double sigma1 = rem / static_cast<double>(stage_scale_);
  t1_ = build_table(sigma1, default_tail_cut(sigma1));
  t2_ = build_table(kBaseSigma, default_tail_cut(kBaseSigma));
}

std::int64_t GaussianSampler::draw_stage(const Table& t, Rng& rng) const {
  std::int64_t mag = t.draw_magnitude(rng.next_u64());
  if (mag == 0) return 0;
  return rng.bit() ? mag : -mag;
}

std::int64_t GaussianSampler::draw(Rng& rng) const {
  for (;;) {
    std::int64_t v;
    if (!two_stage_) {
      v = draw_stage(t1_, rng);
    } else {
      v = stage_scale_ * draw_stage(t1_, rng) + draw_stage(t2_, rng);
    }
    if (v >= -gp_.tail_cut && v <= gp_.tail_cut) return v;
  }
}

ZVector GaussianSampler::draw_vector(Rng& rng) const {
  ZVector out(gp_.dim);
  for (auto& x : out) x = draw(rng);
  return out;
}

ZVector gauss_sample(const GaussianParams& gp, Rng& rng) {
  GaussianSampler s(gp);
  return s.draw_vector(rng);
}

const GaussianSampler& cached_sampler(double sigma, std::int64_t tail_cut) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::int64_t>, std::unique_ptr<GaussianSampler>> cache;
  std::uint64_t bits;
  std::memcpy(&bits, &sigma, sizeof(bits));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{bits, tail_cut}];
  if (!slot) {
    slot = std::make_unique<GaussianSampler>(GaussianParams(sigma, 1, tail_cut));
  }
  return *slot;
}

}  // namespace lbcn
