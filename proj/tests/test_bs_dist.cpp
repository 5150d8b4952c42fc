#include "bsppcc/bs_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bsppcc/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsppcc;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(BsParams(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(BsParams(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(BsParams(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(BsParams(1.0, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(BsParams(std::numeric_limits<double>::infinity(), 1.0),
                  std::domain_error);
}

TEST_CASE("pdf value at the scale parameter") {
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{
           {0.5, 1.0}, {1.0, 1.0}, {2.0, 3.0}}) {
    const BsParams params(a, b);
    const double expected = 1.0 / (a * b * std::sqrt(2.0 * M_PI));
    CHECK(std::fabs(bs_pdf(b, params) - expected) <= 1e-14 * expected);
  }
  CHECK_THROWS_AS(bs_pdf(0.0, BsParams(1, 1)), std::domain_error);
  CHECK_THROWS_AS(bs_pdf(-2.0, BsParams(1, 1)), std::domain_error);
}

TEST_CASE("pdf integrates to one") {
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{
           {0.5, 1.0}, {1.0, 1.0}, {2.0, 3.0}}) {
    const BsParams params(a, b);
    const double lo = bs_quantile(1e-10, params);
    const double hi = bs_quantile(1.0 - 1e-10, params);
    const double mass = oracle::integrate(
        [&](double t) { return bs_pdf(t, params); }, lo, hi, 1e-10);
    CHECK(std::fabs(mass - 1.0) <= 1e-6);
  }
}

TEST_CASE("pdf is the derivative of the cdf") {
  const BsParams params(0.8, 2.0);
  for (double t : {0.3, 0.9, 2.0, 4.5, 11.0}) {
    const double h = 1e-5 * t;
    const double slope =
        oracle::derivative([&](double x) { return bs_cdf(x, params); }, t, h);
    CHECK(std::fabs(slope - bs_pdf(t, params)) <= 1e-6);
  }
}

TEST_CASE("cdf values and shape") {
  CHECK(bs_cdf(1.0, BsParams(0.7, 1.0)) == 0.5);
  CHECK(bs_cdf(3.0, BsParams(2.0, 3.0)) == 0.5);
  // Phi(sqrt(2) - 1/sqrt(2)) from the normal oracle
  CHECK(std::fabs(bs_cdf(2.0, BsParams(1.0, 1.0)) - 0.76024993890652327) <=
        1e-12);
  CHECK_THROWS_AS(bs_cdf(0.0, BsParams(1, 1)), std::domain_error);

  // Keep the grid inside the region where the cdf is strictly below 1 in
  // double precision.
  const BsParams params(1.5, 2.0);
  double prev = 0.0;
  for (double log_t = -6.0; log_t <= 5.0; log_t += 0.25) {
    const double value = bs_cdf(std::exp(log_t), params);
    CHECK(value > prev);
    prev = value;
  }
  CHECK(bs_cdf(1e-8, params) < 1e-12);
  CHECK(bs_cdf(1e8, params) > 1.0 - 1e-12);
}

TEST_CASE("quantile inverts the cdf") {
  CHECK(std::fabs(bs_quantile(0.5, BsParams(0.3, 7.5)) - 7.5) <= 1e-14);
  CHECK(std::fabs(bs_quantile(0.76024993890652327, BsParams(1.0, 1.0)) - 2.0) <=
        1e-9);
  CHECK_THROWS_AS(bs_quantile(0.0, BsParams(1, 1)), std::domain_error);
  CHECK_THROWS_AS(bs_quantile(1.0, BsParams(1, 1)), std::domain_error);

  const BsParams params(2.0, 3.0);
  double worst = 0.0;
  for (int i = 1; i < 2000; ++i) {
    const double p = i / 2000.0;
    worst =
        std::max(worst, std::fabs(bs_cdf(bs_quantile(p, params), params) - p));
  }
  CHECK(worst <= 1e-9);
  for (double t : {0.1, 0.8, 3.0, 40.0}) {
    CHECK(std::fabs(bs_quantile(bs_cdf(t, params), params) - t) <= 1e-9 * t);
  }
}

TEST_CASE("scale equivariance of the cdf") {
  const BsParams base(0.9, 1.7);
  for (double c : {0.1, 7.0, 1000.0}) {
    const BsParams scaled(0.9, c * 1.7);
    for (double t : {0.4, 1.0, 2.6, 19.0}) {
      CHECK(std::fabs(bs_cdf(c * t, scaled) - bs_cdf(t, base)) <= 1e-12);
    }
  }
}

TEST_CASE("sampler determinism and positivity") {
  const BsParams params(1.0, 1.0);
  Philox rng_a(99), rng_b(99), rng_c(100);
  const Sample a = bs_sample(64, params, rng_a);
  const Sample b = bs_sample(64, params, rng_b);
  const Sample c = bs_sample(64, params, rng_c);
  const std::vector<double> va(a.values().begin(), a.values().end());
  const std::vector<double> vb(b.values().begin(), b.values().end());
  const std::vector<double> vc(c.values().begin(), c.values().end());
  CHECK(va == vb);
  CHECK(va != vc);
  for (double t : va) CHECK(t > 0.0);

  Philox rng_d(0);
  CHECK_THROWS_AS(bs_sample(0, params, rng_d), std::invalid_argument);
}

TEST_CASE("sampler matches the distribution: DKW band") {
  const std::size_t n = 100000;
  const BsParams params(1.0, 1.0);
  Philox rng(2024);
  std::vector<double> draws(n);
  bs_sample_into(draws, params, rng);
  std::sort(draws.begin(), draws.end());
  const double eps = oracle::dkw_epsilon(n, 0.999);
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = bs_cdf(draws[i], params);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    sup = std::max({sup, std::fabs(f - lo), std::fabs(f - hi)});
  }
  CHECK(sup <= eps);
}

TEST_CASE("sampler median equals the scale parameter") {
  const std::size_t n = 100000;
  const BsParams params(0.5, 2.0);
  Philox rng(17);
  std::vector<double> draws(n);
  bs_sample_into(draws, params, rng);
  std::nth_element(draws.begin(), draws.begin() + n / 2, draws.end());
  CHECK(std::fabs(draws[n / 2] - 2.0) <= 0.02);
}
