#include "bsppcc/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bsppcc/error.hpp"

namespace bsppcc {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("Sample: no observations");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("Sample: observation " + std::to_string(i + 1) +
                      " is not finite");
    }
    if (values_[i] <= 0.0) {
      throw DataError("Sample: observation " + std::to_string(i + 1) +
                      " is not positive (" + std::to_string(values_[i]) + ")");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

}  // namespace bsppcc
