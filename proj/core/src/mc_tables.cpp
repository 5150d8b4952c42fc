#include "bsppcc/mc_tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <new>
#include <queue>
#include <stdexcept>
#include <thread>

#include "bsppcc/bs_dist.hpp"
#include "bsppcc/error.hpp"
#include "bsppcc/normal.hpp"
#include "bsppcc/plot_corr.hpp"
#include "bsppcc/rng.hpp"

namespace bsppcc {
namespace {

constexpr double kDefaultLevels[12] = {0.005, 0.01,  0.02, 0.025, 0.05, 0.075,
                                       0.10,  0.125, 0.15, 0.20,  0.25, 0.50};

// Above this many replicates critical_row switches from a full in-memory
// sort to bounded-memory selection of the k smallest statistics.
constexpr std::uint64_t kInMemoryLimit = 10'000'000;

void check_levels(std::span<const double> levels) {
  if (levels.empty()) {
    throw std::invalid_argument("levels must not be empty");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0 && levels[i] < 1.0)) {
      throw std::invalid_argument("levels must lie in (0, 1)");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw std::invalid_argument("levels must be strictly increasing");
    }
  }
}

// Statistic of one replicate. t is sorted in place; zq holds the normal
// quantiles of the plotting positions, v is scratch. Arithmetically
// identical to correlation(linearize(...)) on the same draws.
double replicate_statistic(std::span<double> t, std::span<const double> zq,
                           std::span<double> v) {
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i) {
    v[i] = std::sqrt(t[i]) * zq[i];
  }
  return detail::pearson(t, v);
}

// 1-based rank of the gamma quantile among `count` order statistics,
// k = ceil(gamma * count). The slack keeps decimal levels whose product
// with count is an exact integer (e.g. 0.075 * 1e6) on the intended rank
// despite binary representation.
std::uint64_t order_index(std::uint64_t count, double gamma) {
  const double scaled = gamma * static_cast<double>(count) - 1e-9;
  std::uint64_t k =
      scaled <= 0.0 ? 1 : static_cast<std::uint64_t>(std::ceil(scaled));
  return std::min<std::uint64_t>(std::max<std::uint64_t>(k, 1), count);
}

// Runs the replicate chunks across a worker pool and hands each finished
// block to sink(first_replicate_index, values). Chunk boundaries depend
// only on kChunkReplicates, and each chunk's RNG stream is keyed by
// (seed, n, chunk), so the produced multiset of values is independent of
// the worker count.
template <typename Sink>
void run_chunks(const SimConfig& config, unsigned workers, Sink&& sink) {
  const std::size_t n = config.n;
  const BsParams params(config.alpha_gen, 1.0);
  std::vector<double> zq(n);
  {
    const std::vector<double> positions = plotting_positions(n);
    for (std::size_t i = 0; i < n; ++i) {
      zq[i] = std_normal_quantile(positions[i]);
    }
  }

  const std::uint64_t chunks =
      (config.iterations + kChunkReplicates - 1) / kChunkReplicates;
  std::atomic<std::uint64_t> next_chunk{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<double> t(n), v(n), block(kChunkReplicates);
    try {
      for (;;) {
        const std::uint64_t chunk = next_chunk.fetch_add(1);
        if (chunk >= chunks) break;
        Philox rng(substream_key(config.seed, n, chunk));
        const std::uint64_t begin = chunk * kChunkReplicates;
        const std::uint64_t end =
            std::min(begin + kChunkReplicates, config.iterations);
        const std::size_t count = static_cast<std::size_t>(end - begin);
        for (std::size_t k = 0; k < count; ++k) {
          bs_sample_into(t, params, rng);
          block[k] = replicate_statistic(t, zq, v);
        }
        sink(begin, std::span<const double>(block.data(), count));
      }
    } catch (...) {
      const std::scoped_lock lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  unsigned count = workers != 0 ? workers : std::thread::hardware_concurrency();
  count = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1u, count), chunks));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::span<const double> default_levels() { return kDefaultLevels; }

void SimConfig::validate() const {
  if (n < 3) {
    throw std::invalid_argument("SimConfig: n must be at least 3");
  }
  if (iterations == 0) {
    throw std::invalid_argument("SimConfig: iterations must be at least 1");
  }
  if (!(alpha_gen > 0.0) || !std::isfinite(alpha_gen)) {
    throw std::invalid_argument("SimConfig: alpha_gen must be positive");
  }
  check_levels(levels);
}

CriticalValueTable::CriticalValueTable(std::vector<double> levels,
                                       std::map<int, std::vector<double>> rows,
                                       TableMeta meta)
    : levels_(std::move(levels)),
      rows_(std::move(rows)),
      meta_(std::move(meta)) {
  check_levels(levels_);
  if (rows_.empty()) {
    throw std::invalid_argument("CriticalValueTable: no rows");
  }
  for (const auto& [n, values] : rows_) {
    if (n < 3) {
      throw std::invalid_argument("CriticalValueTable: rows start at n = 3");
    }
    if (values.size() != levels_.size()) {
      throw std::invalid_argument("CriticalValueTable: row width mismatch");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] > -1.0 && values[i] < 1.0)) {
        throw std::invalid_argument(
            "CriticalValueTable: critical values must lie in (-1, 1)");
      }
      if (i > 0 && values[i] < values[i - 1]) {
        throw std::invalid_argument(
            "CriticalValueTable: row not monotone across levels");
      }
    }
  }
}

std::vector<double> simulate_null_r(const SimConfig& config, unsigned workers) {
  config.validate();
  std::vector<double> out;
  try {
    out.resize(config.iterations);
  } catch (const std::bad_alloc&) {
    throw CapacityError(
        "simulate_null_r: cannot hold " + std::to_string(config.iterations) +
        " replicates in memory; use critical_row, which selects in chunks");
  }
  run_chunks(config, workers,
             [&out](std::uint64_t begin, std::span<const double> values) {
               std::copy(values.begin(), values.end(), out.begin() + begin);
             });
  std::sort(out.begin(), out.end());
  return out;
}

double empirical_quantile(std::span<const double> sorted_values, double gamma) {
  if (sorted_values.empty()) {
    throw std::invalid_argument("empirical_quantile: no values");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error("empirical_quantile: gamma must be in (0, 1)");
  }
  return sorted_values[order_index(sorted_values.size(), gamma) - 1];
}

namespace detail {

std::vector<double> smallest_statistics(const SimConfig& config,
                                        std::uint64_t k, unsigned workers) {
  config.validate();
  if (k == 0 || k > config.iterations) {
    throw std::invalid_argument("smallest_statistics: bad selection count");
  }
  std::priority_queue<double> heap;
  std::mutex heap_mutex;
  run_chunks(config, workers,
             [&](std::uint64_t, std::span<const double> values) {
               const std::scoped_lock lock(heap_mutex);
               for (const double r : values) {
                 if (heap.size() < k) {
                   heap.push(r);
                 } else if (r < heap.top()) {
                   heap.pop();
                   heap.push(r);
                 }
               }
             });
  std::vector<double> out(heap.size());
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = heap.top();
    heap.pop();
  }
  return out;
}

}  // namespace detail

std::vector<double> critical_row(const SimConfig& config, unsigned workers) {
  if (config.iterations < 1000) {
    throw std::invalid_argument(
        "critical_row: at least 1000 iterations required for quantile output");
  }
  config.validate();
  std::vector<double> row;
  row.reserve(config.levels.size());
  if (config.iterations <= kInMemoryLimit) {
    const std::vector<double> values = simulate_null_r(config, workers);
    for (const double gamma : config.levels) {
      row.push_back(empirical_quantile(values, gamma));
    }
    return row;
  }
  const std::uint64_t k_max =
      order_index(config.iterations, config.levels.back());
  const std::vector<double> smallest =
      detail::smallest_statistics(config, k_max, workers);
  for (const double gamma : config.levels) {
    row.push_back(smallest[order_index(config.iterations, gamma) - 1]);
  }
  return row;
}

CriticalValueTable build_table(const std::vector<int>& n_set,
                               const SimConfig& config_template,
                               unsigned workers) {
  if (n_set.empty()) {
    throw std::invalid_argument("build_table: empty n set");
  }
  std::map<int, std::vector<double>> rows;
  for (const int n : n_set) {
    if (n < 3) {
      throw std::invalid_argument("build_table: every n must be at least 3");
    }
    SimConfig config = config_template;
    config.n = static_cast<std::size_t>(n);
    rows[n] = critical_row(config, workers);
  }
  TableMeta meta{"simulated", config_template.iterations, config_template.seed,
                 config_template.alpha_gen, "philox4x32-10"};
  return CriticalValueTable(config_template.levels, std::move(rows),
                            std::move(meta));
}

double accuracy_bound(std::uint64_t iterations) {
  if (iterations == 0) {
    throw std::invalid_argument("accuracy_bound: iterations must be positive");
  }
  return 0.5 / std::sqrt(static_cast<double>(iterations));
}

const CriticalValueTable& reference_table() {
  static const CriticalValueTable table = [] {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto absorb = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    std::map<int, std::vector<double>> rows;
    for (std::size_t r = 0; r < detail::kReferenceRowCount; ++r) {
      const detail::ReferenceRow& row = detail::kReferenceRows[r];
      absorb(static_cast<std::uint64_t>(row.n));
      std::vector<double> values(row.scaled.size());
      for (std::size_t i = 0; i < row.scaled.size(); ++i) {
        absorb(static_cast<std::uint64_t>(row.scaled[i]));
        values[i] = row.scaled[i] / 1e4;
      }
      rows[row.n] = std::move(values);
    }
    if (h != detail::kReferenceChecksum) {
      throw TableIntegrityError(
          "reference table asset failed its checksum; rebuild from source");
    }
    TableMeta meta{"builtin", 100000000, 0, 1.0, "precomputed"};
    return CriticalValueTable(
        std::vector<double>(kDefaultLevels, kDefaultLevels + 12),
        std::move(rows), std::move(meta));
  }();
  return table;
}

AlphaSensitivityReport alpha_sensitivity(std::size_t n,
                                         std::uint64_t iterations,
                                         std::span<const double> alphas,
                                         std::span<const double> levels,
                                         std::uint64_t seed, unsigned workers) {
  if (alphas.empty()) {
    throw std::invalid_argument("alpha_sensitivity: no alphas");
  }
  AlphaSensitivityReport report;
  report.alphas.assign(alphas.begin(), alphas.end());
  report.levels.assign(levels.begin(), levels.end());
  for (const double alpha : alphas) {
    SimConfig config{n, iterations, seed, alpha,
                     std::vector<double>(levels.begin(), levels.end())};
    report.rows.push_back(critical_row(config, workers));
  }
  report.max_deviation.assign(levels.size(), 0.0);
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      for (std::size_t b = a + 1; b < alphas.size(); ++b) {
        report.max_deviation[l] =
            std::max(report.max_deviation[l],
                     std::fabs(report.rows[a][l] - report.rows[b][l]));
      }
    }
  }
  return report;
}

}  // namespace bsppcc
