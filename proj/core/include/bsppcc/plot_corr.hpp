#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bsppcc/sample.hpp"

namespace bsppcc {

/// One point of the linearized probability plot.
struct PlotPoint {
  double p;  ///< plotting position
  double u;  ///< order statistic t_(i)
  double v;  ///< sqrt(t_(i)) * Phi^-1(p_i)
};

/// The test statistic: sample correlation of the plot coordinates.
struct CorrelationStat {
  double r;
  std::size_t n;
};

/// Plotting positions: (i - 1/2)/n for n >= 11, Blom's (i - 3/8)/(n + 1/4)
/// for n <= 10. Strictly increasing, symmetric about 1/2.
std::vector<double> plotting_positions(std::size_t n);

/// The linearized Birnbaum-Saunders probability plot of a sample (n >= 3).
/// Tied observations keep distinct consecutive positions by rank.
std::vector<PlotPoint> linearize(const Sample& sample);

/// Pearson correlation of (u, v) over the plot points, computed in the
/// centered two-pass form. Throws DegenerateDataError when either
/// coordinate has zero variance.
CorrelationStat correlation(std::span<const PlotPoint> points);

/// The goodness-of-fit statistic R = correlation(linearize(sample)).
CorrelationStat bs_plot_statistic(const Sample& sample);

namespace detail {

/// Centered two-pass Pearson correlation of two equal-length arrays.
double pearson(std::span<const double> u, std::span<const double> v);

}  // namespace detail

}  // namespace bsppcc
