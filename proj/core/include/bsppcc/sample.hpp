#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bsppcc {

/// Positive, finite observations kept in input order, with the sorted
/// order statistics available alongside.
class Sample {
 public:
  /// Throws DataError naming the first invalid index (1-based), or
  /// std::invalid_argument when empty.
  explicit Sample(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> sorted() const { return sorted_; }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

}  // namespace bsppcc
