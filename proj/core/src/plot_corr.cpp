#include "bsppcc/plot_corr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsppcc/error.hpp"
#include "bsppcc/normal.hpp"

namespace bsppcc {

std::vector<double> plotting_positions(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("plotting_positions: n must be at least 1");
  }
  std::vector<double> p(n);
  if (n <= 10) {
    const double denom = static_cast<double>(n) + 0.25;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = (static_cast<double>(i) + 0.625) / denom;
    }
  } else {
    const double denom = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = (static_cast<double>(i) + 0.5) / denom;
    }
  }
  return p;
}

std::vector<PlotPoint> linearize(const Sample& sample) {
  const std::size_t n = sample.size();
  if (n < 3) {
    throw std::invalid_argument("linearize: at least 3 observations required");
  }
  const std::vector<double> positions = plotting_positions(n);
  const std::span<const double> order = sample.sorted();
  std::vector<PlotPoint> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = order[i];
    points[i] = {positions[i], u,
                 std::sqrt(u) * std_normal_quantile(positions[i])};
  }
  return points;
}

namespace detail {

double pearson(std::span<const double> u, std::span<const double> v) {
  const std::size_t n = u.size();
  double mean_u = 0.0;
  double mean_v = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_u += u[i];
    mean_v += v[i];
  }
  mean_u /= static_cast<double>(n);
  mean_v /= static_cast<double>(n);

  double suu = 0.0, svv = 0.0, suv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double du = u[i] - mean_u;
    const double dv = v[i] - mean_v;
    suu += du * du;
    svv += dv * dv;
    suv += du * dv;
  }
  if (suu == 0.0 || svv == 0.0) {
    throw DegenerateDataError(
        "correlation undefined: zero variance in a plot coordinate");
  }
  return std::clamp(suv / std::sqrt(suu * svv), -1.0, 1.0);
}

}  // namespace detail

CorrelationStat correlation(std::span<const PlotPoint> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw std::invalid_argument("correlation: at least 3 points required");
  }
  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = points[i].u;
    v[i] = points[i].v;
  }
  return {detail::pearson(u, v), n};
}

CorrelationStat bs_plot_statistic(const Sample& sample) {
  const std::vector<PlotPoint> points = linearize(sample);
  return correlation(points);
}

}  // namespace bsppcc
