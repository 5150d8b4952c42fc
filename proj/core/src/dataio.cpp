#include "bsppcc/dataio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "bsppcc/error.hpp"

namespace bsppcc {

Sample read_sample(std::istream& in, const std::string& name) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    }
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size() || line[pos] == '#') break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '#') ++end;
      double value = 0.0;
      const char* first = line.data() + pos;
      const char* last = line.data() + end;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw DataError(name + ":" + std::to_string(line_no) +
                        ": malformed number '" + std::string(first, last) +
                        "'");
      }
      if (!std::isfinite(value) || value <= 0.0) {
        throw DataError(name + ":" + std::to_string(line_no) + ": value " +
                        std::string(first, last) +
                        " is not a positive finite number");
      }
      values.push_back(value);
      pos = end;
    }
  }
  if (values.size() < 3) {
    throw DataError(name + ": need at least 3 values, found " +
                    std::to_string(values.size()));
  }
  return Sample(std::move(values));
}

Sample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open '" + path + "'");
  }
  return read_sample(in, path);
}

}  // namespace bsppcc
