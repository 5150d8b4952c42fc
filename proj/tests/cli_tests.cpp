#include <sys/wait.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int rc = ::pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string exe() { return std::string("\"") + BSPPCC_CLI_EXE + "\""; }

std::string data_file(const char* name) {
  return std::string(BSPPCC_DATA_DIR) + "/" + name;
}

struct TempDirGuard {
  fs::path path;
  TempDirGuard() : path(fs::temp_directory_path() / "bsppcc_cli_tests") {
    fs::create_directories(path);
  }
  ~TempDirGuard() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

const fs::path& temp_dir() {
  static TempDirGuard guard;
  return guard.path;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("test subcommand reports the repair-time analysis as JSON") {
  const auto result =
      run(exe() + " test --data " + data_file("repair_times.txt"));
  REQUIRE(result.status == 0);
  const json j = json::parse(result.out);

  CHECK(std::fabs(j.at("r").get<double>() - 0.991069) <= 1e-12);
  CHECK(j.at("n").get<int>() == 46);
  REQUIRE(j.at("p_value").is_number());
  CHECK(std::fabs(j.at("p_value").get<double>() - 0.4418) <= 1e-12);
  CHECK_FALSE(j.contains("p_value_bound"));

  const json& decisions = j.at("decisions");
  REQUIRE(decisions.size() == 12);
  CHECK(decisions[4].at("gamma").get<double>() == 0.05);
  CHECK(std::fabs(decisions[4].at("critical").get<double>() - 0.9784) <=
        1e-12);
  CHECK_FALSE(decisions[4].at("reject").get<bool>());
  CHECK(decisions[10].at("gamma").get<double>() == 0.25);
  CHECK_FALSE(decisions[10].at("reject").get<bool>());
  CHECK(decisions[11].at("gamma").get<double>() == 0.50);
  CHECK(decisions[11].at("reject").get<bool>());

  CHECK(j.at("table_meta").at("source").get<std::string>() == "builtin");
  CHECK(j.at("table_meta").at("iterations").get<std::uint64_t>() ==
        100000000ull);
}

TEST_CASE("test subcommand reports an off-scale p-value as a bound") {
  const auto result =
      run(exe() + " test --data " + data_file("glass_fibers.txt"));
  REQUIRE(result.status == 0);
  const json j = json::parse(result.out);

  CHECK(std::fabs(j.at("r").get<double>() - 0.921468) <= 1e-12);
  REQUIRE(j.at("p_value").is_string());
  CHECK(j.at("p_value").get<std::string>() == "<0.005");
  CHECK(j.at("p_value_bound").get<double>() == 0.005);
  for (const json& d : j.at("decisions")) {
    CHECK(d.at("reject").get<bool>());
  }
}

TEST_CASE("test subcommand restricts decisions to the requested levels") {
  const auto result = run(exe() + " test --data " +
                          data_file("repair_times.txt") +
                          " --levels 0.25,0.5");
  REQUIRE(result.status == 0);
  const json j = json::parse(result.out);
  const json& decisions = j.at("decisions");
  REQUIRE(decisions.size() == 2);
  CHECK(decisions[0].at("gamma").get<double>() == 0.25);
  CHECK(decisions[1].at("gamma").get<double>() == 0.50);
  CHECK_FALSE(decisions[0].at("reject").get<bool>());
  CHECK(decisions[1].at("reject").get<bool>());
}

TEST_CASE("test subcommand renders a text report on request") {
  const auto result = run(exe() + " test --data " +
                          data_file("repair_times.txt") + " --format text");
  REQUIRE(result.status == 0);
  CHECK(result.out.find("0.991069") != std::string::npos);
  CHECK(result.out.find("p-value") != std::string::npos);
  CHECK(result.out.find("accept") != std::string::npos);
  CHECK(result.out.find("reject") != std::string::npos);
}

TEST_CASE("test subcommand failure modes map to exit codes") {
  SUBCASE("missing data file") {
    const auto result = run(exe() + " test --data /nonexistent/missing.txt");
    CHECK(result.status == 2);
    CHECK(result.out.empty());
  }
  SUBCASE("too few values") {
    const fs::path path = temp_dir() / "two_values.txt";
    write_file(path, "1.0 2.0\n");
    const auto result = run(exe() + " test --data " + path.string());
    CHECK(result.status == 2);
  }
  SUBCASE("level not in the table") {
    const auto result = run(exe() + " test --data " +
                            data_file("repair_times.txt") + " --levels 0.3");
    CHECK(result.status == 2);
  }
  SUBCASE("sample size beyond the table range") {
    const fs::path path = temp_dir() / "huge_sample.txt";
    std::string content;
    for (int i = 0; i < 1001; ++i) {
      content += std::to_string(1.0 + 0.001 * i) + "\n";
    }
    write_file(path, content);
    const auto result = run(exe() + " test --data " + path.string());
    CHECK(result.status == 3);
  }
}

TEST_CASE("plot subcommand writes the linearized points") {
  const fs::path prefix = temp_dir() / "repair_plot";
  const fs::path csv = temp_dir() / "repair_plot.csv";
  const auto result = run(exe() + " plot --data " +
                          data_file("repair_times.txt") + " --out " +
                          prefix.string());
  REQUIRE(result.status == 0);
  const std::string first = read_file(csv);
  CHECK(count_lines(first) == 47);
  CHECK(first.rfind("i,p,u,v\n", 0) == 0);
  CHECK(first.find("\n1,0.010870,0.2,-1.0263083378212332\n") !=
        std::string::npos);

  const auto rerun = run(exe() + " plot --data " +
                         data_file("repair_times.txt") + " --out " +
                         prefix.string());
  REQUIRE(rerun.status == 0);
  CHECK(read_file(csv) == first);

  const auto with_svg = run(exe() + " plot --data " +
                            data_file("repair_times.txt") + " --out " +
                            prefix.string() + " --svg");
  REQUIRE(with_svg.status == 0);
  const std::string svg = read_file(temp_dir() / "repair_plot.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("gen-table regenerates published critical values") {
  const fs::path out = temp_dir() / "gen46.txt";
  const std::string base = exe() +
                           " gen-table --n-from 46 --n-to 46"
                           " --iterations 100000 --seed 7 --out ";
  const auto result = run(base + out.string());
  REQUIRE(result.status == 0);
  const std::string first = read_file(out);

  CHECK(first.rfind("bsppcc-table v1 I=100000 seed=7 alpha_gen=1 "
                    "levels=0.005,0.01,0.02,0.025,0.05,0.075,0.1,0.125,"
                    "0.15,0.2,0.25,0.5\n",
                    0) == 0);
  REQUIRE(count_lines(first) == 2);

  std::istringstream row(first.substr(first.find('\n') + 1));
  int n = 0;
  row >> n;
  REQUIRE(n == 46);
  std::vector<double> values;
  double v = 0.0;
  while (row >> v) values.push_back(v);
  REQUIRE(values.size() == 12);
  CHECK(std::fabs(values[4] - 0.9784) <= 0.01);

  const fs::path out2 = temp_dir() / "gen46_again.txt";
  const auto rerun = run(base + out2.string());
  REQUIRE(rerun.status == 0);
  CHECK(read_file(out2) == first);

  const fs::path out3 = temp_dir() / "gen46_workers.txt";
  const auto many_workers = run(base + out3.string() + " --workers 8");
  REQUIRE(many_workers.status == 0);
  CHECK(read_file(out3) == first);
}

TEST_CASE("gen-table validates its arguments") {
  const std::string out = (temp_dir() / "invalid.txt").string();
  CHECK(run(exe() + " gen-table --n-from 46 --n-to 46 --iterations 500"
                    " --seed 1 --out " +
            out)
            .status == 2);
  CHECK(run(exe() + " gen-table --n-from 2 --n-to 5 --iterations 10000"
                    " --seed 1 --out " +
            out)
            .status == 2);
  CHECK(run(exe() + " gen-table --n-from 10 --n-to 5 --iterations 10000"
                    " --seed 1 --out " +
            out)
            .status == 2);
}

TEST_CASE("show-table prints the embedded table and single rows") {
  const auto full = run(exe() + " show-table");
  REQUIRE(full.status == 0);
  CHECK(count_lines(full.out) == 109);
  CHECK(full.out.rfind("bsppcc-table v1 I=100000000 seed=0 alpha_gen=1 "
                       "levels=0.005,0.01,0.02,0.025,0.05,0.075,0.1,0.125,"
                       "0.15,0.2,0.25,0.5\n",
                       0) == 0);

  const auto row = run(exe() + " show-table --n 46");
  REQUIRE(row.status == 0);
  CHECK(count_lines(row.out) == 2);
  CHECK(row.out.find("\n46 ") != std::string::npos);
  CHECK(row.out.find("0.978400") != std::string::npos);

  const auto interpolated = run(exe() + " show-table --n 105");
  REQUIRE(interpolated.status == 0);
  CHECK(count_lines(interpolated.out) == 3);
  CHECK(interpolated.out.find("interpolated") != std::string::npos);
  CHECK(interpolated.out.find("0.987500") != std::string::npos);

  CHECK(run(exe() + " show-table --n 2000").status == 3);
  CHECK(run(exe() + " show-table --n 2").status == 2);
}

TEST_CASE("a dumped table can be loaded back through --table and the "
          "environment") {
  const fs::path dump = temp_dir() / "builtin_dump.txt";
  const auto full = run(exe() + " show-table");
  REQUIRE(full.status == 0);
  write_file(dump, full.out);

  const auto reprint =
      run(exe() + " show-table --table " + dump.string());
  REQUIRE(reprint.status == 0);
  CHECK(reprint.out == full.out);

  const auto via_env =
      run("BSPPCC_TABLE=" + dump.string() + " " + exe() + " show-table");
  REQUIRE(via_env.status == 0);
  CHECK(via_env.out == full.out);

  const auto builtin =
      run(exe() + " test --data " + data_file("repair_times.txt"));
  const auto from_file = run(exe() + " test --data " +
                             data_file("repair_times.txt") + " --table " +
                             dump.string());
  REQUIRE(builtin.status == 0);
  REQUIRE(from_file.status == 0);
  const json a = json::parse(builtin.out);
  const json b = json::parse(from_file.out);
  CHECK(a.at("r") == b.at("r"));
  CHECK(a.at("p_value") == b.at("p_value"));
  CHECK(a.at("decisions") == b.at("decisions"));
  CHECK(b.at("table_meta").at("source").get<std::string>().rfind("file:", 0) ==
        0);
  CHECK(b.at("table_meta").at("iterations").get<std::uint64_t>() ==
        100000000ull);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run(exe()).status == 2);
  CHECK(run(exe() + " test").status == 2);
  CHECK(run(exe() + " frobnicate").status == 2);
  CHECK(run(exe() + " --help").status == 0);
}
