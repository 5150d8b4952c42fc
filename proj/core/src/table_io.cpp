#include "bsppcc/table_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "bsppcc/error.hpp"

namespace bsppcc {
namespace {

constexpr const char* kMagic = "bsppcc-table";
constexpr const char* kVersion = "v1";

std::string format_double(double value, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& what) {
  throw TableFormatError(name + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(std::move(token));
  return tokens;
}

double parse_full_double(const std::string& token, const std::string& name,
                         std::size_t line, const char* what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail(name, line, std::string("malformed ") + what + " '" + token + "'");
  }
  return value;
}

std::uint64_t parse_full_u64(const std::string& token, const std::string& name,
                             std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail(name, line, std::string("malformed ") + what + " '" + token + "'");
  }
  return value;
}

// Strips "key=" from token and returns the value part.
std::string expect_kv(const std::string& token, const char* key,
                      const std::string& name, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    fail(name, line, "expected '" + prefix + "...', got '" + token + "'");
  }
  return token.substr(prefix.size());
}

}  // namespace

std::string table_header(const TableMeta& meta,
                         std::span<const double> levels) {
  std::string out = std::string(kMagic) + " " + kVersion;
  out += " I=" + std::to_string(meta.iterations);
  out += " seed=" + std::to_string(meta.seed);
  out += " alpha_gen=" + format_double(meta.alpha_gen, "%g");
  out += " levels=";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) out += ",";
    out += format_double(levels[i], "%g");
  }
  return out;
}

std::string table_row_line(int n, std::span<const double> values) {
  std::string out = std::to_string(n);
  for (const double v : values) {
    out += " " + format_double(v, "%.6f");
  }
  return out;
}

void write_table(std::ostream& out, const CriticalValueTable& table) {
  out << table_header(table.meta(), table.levels()) << "\n";
  for (const auto& [n, values] : table.rows()) {
    out << table_row_line(n, values) << "\n";
  }
}

void write_table_file(const std::string& path,
                      const CriticalValueTable& table) {
  std::ofstream out(path);
  if (!out) {
    throw TableFormatError("cannot open '" + path + "' for writing");
  }
  write_table(out, table);
  out.flush();
  if (!out) {
    throw TableFormatError("write to '" + path + "' failed");
  }
}

CriticalValueTable parse_table(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw TableFormatError(name + ": empty input");
  }
  ++line_no;
  const std::vector<std::string> head = split_ws(line);
  if (head.size() != 6 || head[0] != kMagic) {
    fail(name, line_no, "not a bsppcc-table file");
  }
  if (head[1] != kVersion) {
    fail(name, line_no, "unsupported version '" + head[1] + "'");
  }
  TableMeta meta;
  meta.iterations =
      parse_full_u64(expect_kv(head[2], "I", name, line_no), name, line_no,
                     "iteration count");
  meta.seed = parse_full_u64(expect_kv(head[3], "seed", name, line_no), name,
                             line_no, "seed");
  meta.alpha_gen = parse_full_double(
      expect_kv(head[4], "alpha_gen", name, line_no), name, line_no,
      "alpha_gen");
  std::vector<double> levels;
  {
    const std::string list = expect_kv(head[5], "levels", name, line_no);
    std::string item;
    std::istringstream stream(list);
    while (std::getline(stream, item, ',')) {
      levels.push_back(parse_full_double(item, name, line_no, "level"));
    }
    if (levels.empty()) {
      fail(name, line_no, "empty level list");
    }
  }
  meta.source = "stream:" + name;
  meta.generator = "file";

  std::map<int, std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::vector<std::string> tokens = split_ws(line);
    if (tokens.size() != levels.size() + 1) {
      fail(name, line_no,
           "expected " + std::to_string(levels.size() + 1) + " columns, got " +
               std::to_string(tokens.size()));
    }
    const std::uint64_t n_value =
        parse_full_u64(tokens[0], name, line_no, "sample size");
    if (n_value < 3 || n_value > 1000000) {
      fail(name, line_no, "sample size " + tokens[0] + " out of range");
    }
    const int n = static_cast<int>(n_value);
    if (rows.count(n) != 0) {
      fail(name, line_no, "duplicate row for n = " + tokens[0]);
    }
    std::vector<double> values;
    values.reserve(levels.size());
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const double v =
          parse_full_double(tokens[i], name, line_no, "critical value");
      if (!(v > -1.0 && v < 1.0)) {
        fail(name, line_no, "critical value " + tokens[i] + " outside (-1, 1)");
      }
      if (!values.empty() && v < values.back()) {
        fail(name, line_no, "row not monotone across levels");
      }
      values.push_back(v);
    }
    rows[n] = std::move(values);
  }
  if (rows.empty()) {
    throw TableFormatError(name + ": no data rows");
  }
  try {
    return CriticalValueTable(std::move(levels), std::move(rows),
                              std::move(meta));
  } catch (const std::invalid_argument& e) {
    throw TableFormatError(name + ": " + e.what());
  }
}

CriticalValueTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TableFormatError("cannot open '" + path + "'");
  }
  CriticalValueTable table = parse_table(in, path);
  TableMeta meta = table.meta();
  meta.source = "file:" + path;
  return CriticalValueTable(table.levels(), table.rows(), std::move(meta));
}

}  // namespace bsppcc
