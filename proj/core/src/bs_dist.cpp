#include "bsppcc/bs_dist.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bsppcc/normal.hpp"

namespace bsppcc {
namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("Birnbaum-Saunders functions need t > 0");
  }
}

// sqrt(t/beta) as a function of the standard-normal argument z, i.e. the
// positive root of s - 1/s = alpha z. The negative-z branch avoids the
// cancellation in h + sqrt(h^2 + 1).
double sqrt_ratio_from_z(double z, double alpha) {
  const double h = 0.5 * alpha * z;
  return h >= 0.0 ? h + std::sqrt(h * h + 1.0)
                  : 1.0 / (std::sqrt(h * h + 1.0) - h);
}

}  // namespace

BsParams::BsParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("BsParams: shape alpha must be positive");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("BsParams: scale beta must be positive");
  }
}

double bs_pdf(double t, const BsParams& params) {
  require_positive_t(t);
  const double a = params.alpha();
  const double ratio = params.beta() / t;
  const double bracket = std::sqrt(ratio) + ratio * std::sqrt(ratio);
  const double expo = -(t / params.beta() - 2.0 + ratio) / (2.0 * a * a);
  return 0.5 * kInvSqrt2Pi / (a * params.beta()) * bracket * std::exp(expo);
}

double bs_cdf(double t, const BsParams& params) {
  require_positive_t(t);
  const double s = std::sqrt(t / params.beta());
  return std_normal_cdf((s - 1.0 / s) / params.alpha());
}

double bs_quantile(double p, const BsParams& params) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("bs_quantile: p must be in (0, 1)");
  }
  const double s = sqrt_ratio_from_z(std_normal_quantile(p), params.alpha());
  return params.beta() * s * s;
}

double bs_draw(const BsParams& params, Philox& rng) {
  const double s = sqrt_ratio_from_z(rng.next_normal(), params.alpha());
  return params.beta() * s * s;
}

void bs_sample_into(std::span<double> out, const BsParams& params,
                    Philox& rng) {
  for (double& value : out) {
    value = bs_draw(params, rng);
  }
}

Sample bs_sample(std::size_t n, const BsParams& params, Philox& rng) {
  if (n == 0) {
    throw std::invalid_argument("bs_sample: n must be at least 1");
  }
  std::vector<double> values(n);
  bs_sample_into(values, params, rng);
  return Sample(std::move(values));
}

}  // namespace bsppcc
