#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bsppcc {

/// The twelve tabulated significance levels, 0.5% through 50%.
std::span<const double> default_levels();

/// Null-simulation parameters. beta is fixed at 1: the statistic is scale
/// invariant, so the scale of the generator cannot matter.
struct SimConfig {
  std::size_t n = 0;              ///< sample size per replicate, >= 3
  std::uint64_t iterations = 0;   ///< replicate count I
  std::uint64_t seed = 0;         ///< master seed
  double alpha_gen = 1.0;         ///< generator shape
  std::vector<double> levels;     ///< strictly increasing, each in (0, 1)

  void validate() const;
};

/// Provenance carried with every table.
struct TableMeta {
  std::string source;            ///< "builtin", "simulated", or "file:<path>"
  std::uint64_t iterations = 0;  ///< replicates per row
  std::uint64_t seed = 0;        ///< 0 when not recorded
  double alpha_gen = 1.0;
  std::string generator;         ///< RNG identifier, "" when unknown
};

/// Critical values r_gamma by sample size. Rows are non-decreasing across
/// levels, all values inside (-1, 1).
class CriticalValueTable {
 public:
  CriticalValueTable(std::vector<double> levels,
                     std::map<int, std::vector<double>> rows, TableMeta meta);

  const std::vector<double>& levels() const { return levels_; }
  const std::map<int, std::vector<double>>& rows() const { return rows_; }
  const TableMeta& meta() const { return meta_; }
  int min_n() const { return rows_.begin()->first; }
  int max_n() const { return rows_.rbegin()->first; }

 private:
  std::vector<double> levels_;
  std::map<int, std::vector<double>> rows_;
  TableMeta meta_;
};

/// Replicates per RNG substream. Fixed so that the work partition, and
/// therefore every drawn value, is independent of the worker count.
inline constexpr std::uint64_t kChunkReplicates = 1u << 16;

/// Null distribution sample: `iterations` values of the statistic R, each
/// from a fresh size-n sample of BS(alpha_gen, 1). Returned sorted
/// ascending; bit-identical for a given config at any worker count
/// (workers = 0 picks the hardware concurrency).
std::vector<double> simulate_null_r(const SimConfig& config,
                                    unsigned workers = 0);

/// k-th order statistic with k = ceil(gamma * I): the left-continuous
/// inverse of the empirical CDF at gamma.
double empirical_quantile(std::span<const double> sorted_values, double gamma);

/// One table row: the empirical critical value at each configured level.
/// Requires iterations >= 1000.
std::vector<double> critical_row(const SimConfig& config, unsigned workers = 0);

/// Rows for every n in n_set, simulated with the template config.
CriticalValueTable build_table(const std::vector<int>& n_set,
                               const SimConfig& config_template,
                               unsigned workers = 0);

/// Worst-case standard-deviation proxy for an empirical quantile out of I
/// replicates: 0.5/sqrt(I), the p = 1/2 value of sqrt(p(1-p)/I).
double accuracy_bound(std::uint64_t iterations);

/// The built-in critical-value table, precomputed at 1e8 replicates per
/// row for n = 3..50, 55..100 by 5, 110..500 by 10, and 550..1000 by 50.
/// The embedded asset is checksum-verified on first use.
const CriticalValueTable& reference_table();

/// Critical values per generator shape, plus the largest pairwise
/// deviation at each level. Informational: quantifies how (in)sensitive
/// the null distribution is to the shape used by the generator.
struct AlphaSensitivityReport {
  std::vector<double> alphas;
  std::vector<double> levels;
  std::vector<std::vector<double>> rows;  ///< rows[a][l], one row per alpha
  std::vector<double> max_deviation;      ///< per level
};

AlphaSensitivityReport alpha_sensitivity(std::size_t n,
                                         std::uint64_t iterations,
                                         std::span<const double> alphas,
                                         std::span<const double> levels,
                                         std::uint64_t seed,
                                         unsigned workers = 0);

namespace detail {

/// The k smallest replicate statistics for the config, sorted ascending.
/// Bounded memory: critical_row uses this above its in-memory limit, with
/// k sized by the largest configured level.
std::vector<double> smallest_statistics(const SimConfig& config,
                                        std::uint64_t k, unsigned workers = 0);

struct ReferenceRow {
  int n;
  std::array<int, 12> scaled;  // r * 1e4
};
extern const ReferenceRow kReferenceRows[];
extern const std::size_t kReferenceRowCount;
extern const std::uint64_t kReferenceChecksum;

}  // namespace detail

}  // namespace bsppcc
