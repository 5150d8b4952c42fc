#pragma once

#include <cstddef>
#include <span>

#include "bsppcc/rng.hpp"
#include "bsppcc/sample.hpp"

namespace bsppcc {

/// Shape (alpha) and scale (beta) of a Birnbaum-Saunders distribution.
/// Both must be strictly positive.
class BsParams {
 public:
  BsParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Density f(t) for t > 0.
double bs_pdf(double t, const BsParams& params);

/// Distribution function F(t) = Phi[(sqrt(t/beta) - sqrt(beta/t)) / alpha].
double bs_cdf(double t, const BsParams& params);

/// Quantile by the closed-form inversion of the CDF:
/// t = beta * (a z/2 + sqrt((a z/2)^2 + 1))^2 with z = Phi^-1(p).
double bs_quantile(double p, const BsParams& params);

/// One draw by exact quantile inversion; always positive.
double bs_draw(const BsParams& params, Philox& rng);

/// n independent draws (n >= 1); deterministic given the generator state.
Sample bs_sample(std::size_t n, const BsParams& params, Philox& rng);

/// Same draws written into a caller-owned buffer, one per element.
void bs_sample_into(std::span<double> out, const BsParams& params, Philox& rng);

}  // namespace bsppcc
