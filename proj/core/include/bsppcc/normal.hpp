#pragma once

namespace bsppcc {

/// Standard normal CDF. Absolute error below 1e-12; throws
/// std::domain_error for non-finite input.
double std_normal_cdf(double z);

/// Inverse standard normal CDF for p in (0, 1). Inputs are clamped to
/// [1e-300, 1 - 1e-16] before evaluation; plotting positions never reach
/// those extremes for any n up to 1e6.
double std_normal_quantile(double p);

}  // namespace bsppcc
