#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace lozenge {

/// Weakly decreasing parts; trailing zeros are kept so the length records the
/// number of variables the partition was built for.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw std::invalid_argument("partition parts must be nonnegative and weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  long size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
  std::size_t nonzero_parts() const noexcept {
    std::size_t n = 0;
    while (n < parts_.size() && parts_[n] > 0) ++n;
    return n;
  }
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace lozenge
