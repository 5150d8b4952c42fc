#pragma once

#include <iosfwd>
#include <string>

#include "bsppcc/sample.hpp"

namespace bsppcc {

/// Reads whitespace- or comma-separated numbers into a Sample. Blank
/// lines and lines starting with '#' are skipped; `name` labels the
/// stream in error messages. Throws DataError for malformed tokens
/// (with line numbers), values that are not finite and positive, or
/// fewer than 3 values.
Sample read_sample(std::istream& in, const std::string& name);

/// read_sample from a file. Throws DataError when the file cannot be
/// opened.
Sample read_sample_file(const std::string& path);

}  // namespace bsppcc
