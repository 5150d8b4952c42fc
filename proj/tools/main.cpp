#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsppcc/dataio.hpp"
#include "bsppcc/error.hpp"
#include "bsppcc/gof_test.hpp"
#include "bsppcc/mc_tables.hpp"
#include "bsppcc/plot_corr.hpp"
#include "bsppcc/table_io.hpp"
#include "report_format.hpp"

namespace {

volatile std::sig_atomic_t g_interrupted = 0;

void handle_interrupt(int) { g_interrupted = 1; }

// Explicit --table wins, then the BSPPCC_TABLE environment variable,
// then the built-in table.
bsppcc::CriticalValueTable resolve_table(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("BSPPCC_TABLE"); env && *env) {
      path = env;
    }
  }
  if (path.empty()) return bsppcc::reference_table();
  return bsppcc::load_table_file(path);
}

struct TestOptions {
  std::string data;
  std::string table;
  std::string format = "json";
  std::vector<double> levels;
};

int cmd_test(const TestOptions& opt) {
  const bsppcc::Sample sample = bsppcc::read_sample_file(opt.data);
  const bsppcc::CriticalValueTable table = resolve_table(opt.table);
  const bsppcc::GofReport report =
      opt.levels.empty() ? bsppcc::run_test(sample, table)
                         : bsppcc::run_test(sample, opt.levels, table);
  std::cout << (opt.format == "text" ? bsppcc::cli::report_text(report)
                                     : bsppcc::cli::report_json(report));
  return 0;
}

struct PlotOptions {
  std::string data;
  std::string out_prefix;
  bool svg = false;
};

int cmd_plot(const PlotOptions& opt) {
  const bsppcc::Sample sample = bsppcc::read_sample_file(opt.data);
  const std::vector<bsppcc::PlotPoint> points = bsppcc::linearize(sample);

  const std::string csv_path = opt.out_prefix + ".csv";
  std::ofstream csv(csv_path);
  if (!csv) {
    throw std::runtime_error("cannot open '" + csv_path + "' for writing");
  }
  bsppcc::cli::write_plot_csv(csv, points);
  csv.flush();
  if (!csv) {
    throw std::runtime_error("write to '" + csv_path + "' failed");
  }
  std::fprintf(stderr, "wrote %s\n", csv_path.c_str());

  if (opt.svg) {
    const std::string svg_path = opt.out_prefix + ".svg";
    std::ofstream svg_file(svg_path);
    if (!svg_file) {
      throw std::runtime_error("cannot open '" + svg_path + "' for writing");
    }
    bsppcc::cli::write_plot_svg(svg_file, points);
    svg_file.flush();
    if (!svg_file) {
      throw std::runtime_error("write to '" + svg_path + "' failed");
    }
    std::fprintf(stderr, "wrote %s\n", svg_path.c_str());
  }
  return 0;
}

struct GenTableOptions {
  int n_from = 0;
  int n_to = 0;
  int n_step = 1;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  double alpha = 1.0;
  unsigned workers = 0;
  std::string out;
};

int cmd_gen_table(const GenTableOptions& opt) {
  if (opt.n_from < 3 || opt.n_from > opt.n_to || opt.n_to > 1000000) {
    throw std::invalid_argument(
        "gen-table: need 3 <= --n-from <= --n-to <= 1000000");
  }
  if (opt.n_step < 1) {
    throw std::invalid_argument("gen-table: --n-step must be at least 1");
  }
  if (opt.iterations < 1000) {
    throw std::invalid_argument("gen-table: --iterations must be at least 1000");
  }

  const std::span<const double> level_span = bsppcc::default_levels();
  const std::vector<double> levels(level_span.begin(), level_span.end());
  const bsppcc::TableMeta meta{"simulated", opt.iterations, opt.seed,
                               opt.alpha, "philox4x32-10"};

  std::ofstream out(opt.out);
  if (!out) {
    throw std::runtime_error("cannot open '" + opt.out + "' for writing");
  }
  out << bsppcc::table_header(meta, levels) << "\n";
  out.flush();

  std::fprintf(stderr, "quantile accuracy ~%g (0.5/sqrt(I))\n",
               bsppcc::accuracy_bound(opt.iterations));
  std::signal(SIGINT, handle_interrupt);

  for (int n = opt.n_from; n <= opt.n_to; n += opt.n_step) {
    if (g_interrupted) {
      out << "# partial\n";
      out.flush();
      std::fprintf(stderr, "interrupted before n=%d, partial table kept\n", n);
      return 2;
    }
    bsppcc::SimConfig config;
    config.n = static_cast<std::size_t>(n);
    config.iterations = opt.iterations;
    config.seed = opt.seed;
    config.alpha_gen = opt.alpha;
    config.levels = levels;
    const std::vector<double> row = bsppcc::critical_row(config, opt.workers);
    out << bsppcc::table_row_line(n, row) << "\n";
    out.flush();
    if (!out) {
      throw std::runtime_error("write to '" + opt.out + "' failed");
    }
    std::fprintf(stderr, "n %d done\n", n);
  }
  return 0;
}

struct ShowTableOptions {
  std::string table;
  int n = 0;
  bool n_given = false;
};

int cmd_show_table(const ShowTableOptions& opt) {
  const bsppcc::CriticalValueTable table = resolve_table(opt.table);
  if (!opt.n_given) {
    bsppcc::write_table(std::cout, table);
    return 0;
  }
  const std::vector<double> row =
      bsppcc::criticals_for(table, static_cast<std::size_t>(opt.n));
  std::cout << bsppcc::table_header(table.meta(), table.levels()) << "\n";
  if (table.rows().count(opt.n) == 0) {
    std::cout << "# n " << opt.n << " interpolated from neighbouring rows\n";
  }
  std::cout << bsppcc::table_row_line(opt.n, row) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Goodness-of-fit test for the Birnbaum-Saunders distribution "
      "(probability-plot correlation coefficient)"};
  app.require_subcommand(1);

  TestOptions test_opt;
  CLI::App* test_cmd =
      app.add_subcommand("test", "Run the test on a data file");
  test_cmd->add_option("--data", test_opt.data, "Sample data file")
      ->required();
  test_cmd->add_option("--levels", test_opt.levels,
                       "Significance levels (default: all tabulated)")
      ->delimiter(',');
  test_cmd->add_option("--table", test_opt.table,
                       "Critical-value table file (default: built-in)");
  test_cmd->add_option("--format", test_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  PlotOptions plot_opt;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "Export probability-plot data");
  plot_cmd->add_option("--data", plot_opt.data, "Sample data file")
      ->required();
  plot_cmd->add_option("--out", plot_opt.out_prefix, "Output path prefix")
      ->required();
  plot_cmd->add_flag("--svg", plot_opt.svg, "Also write an SVG scatter");

  GenTableOptions gen_opt;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen-table", "Regenerate a critical-value table by simulation");
  gen_cmd->add_option("--n-from", gen_opt.n_from, "First sample size")
      ->required();
  gen_cmd->add_option("--n-to", gen_opt.n_to, "Last sample size")->required();
  gen_cmd->add_option("--n-step", gen_opt.n_step, "Sample-size stride");
  gen_cmd->add_option("--iterations", gen_opt.iterations,
                      "Replicates per sample size")
      ->required();
  gen_cmd->add_option("--seed", gen_opt.seed, "Master seed")->required();
  gen_cmd->add_option("--alpha", gen_opt.alpha, "Generator shape");
  gen_cmd->add_option("--workers", gen_opt.workers,
                      "Worker threads (0 = all cores)");
  gen_cmd->add_option("--out", gen_opt.out, "Output table file")->required();

  ShowTableOptions show_opt;
  CLI::App* show_cmd =
      app.add_subcommand("show-table", "Print the critical-value table");
  CLI::Option* show_n =
      show_cmd->add_option("--n", show_opt.n, "Single sample size");
  show_cmd->add_option("--table", show_opt.table,
                       "Critical-value table file (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  show_opt.n_given = show_n->count() > 0;

  try {
    if (test_cmd->parsed()) return cmd_test(test_opt);
    if (plot_cmd->parsed()) return cmd_plot(plot_opt);
    if (gen_cmd->parsed()) return cmd_gen_table(gen_opt);
    if (show_cmd->parsed()) return cmd_show_table(show_opt);
  } catch (const bsppcc::TableRangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
