#pragma once

#include <stdexcept>

namespace bsppcc {

/// Invalid observation in an input data set; the message names the
/// offending index or source line.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample admits no correlation statistic (zero variance on an axis).
class DegenerateDataError : public DataError {
 public:
  using DataError::DataError;
};

/// Malformed critical-value table file.
class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample size outside the tabulated range; tables are never extrapolated.
class TableRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Significance level not present in the table.
class LevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Embedded table asset failed its checksum.
class TableIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replicate storage could not be allocated.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bsppcc
