#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "viewsel/rng.hpp"
#include "viewsel/viewpoint.hpp"

namespace viewsel {

/// Raised when a category has nothing to sample; callers fall back to fresh selection.
class PoolMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-category archive of selected viewpoints, insertion ordered, FIFO-bounded.
class ViewpointPool {
 public:
  static constexpr std::size_t kDefaultCapacity = 1024;

  explicit ViewpointPool(std::size_t capacity = kDefaultCapacity);

  void record(const std::string& category, std::span<const Viewpoint> views);

  /// `count` uniform draws with replacement from the category.
  [[nodiscard]] std::vector<Viewpoint> sample_by_category(const std::string& category,
                                                          std::size_t count, Rng& rng) const;

  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] bool has(const std::string& category) const;
  [[nodiscard]] const std::deque<Viewpoint>& views(const std::string& category) const;
  [[nodiscard]] const std::map<std::string, std::deque<Viewpoint>>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const ViewpointPool& a, const ViewpointPool& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::size_t capacity_;
  std::map<std::string, std::deque<Viewpoint>> entries_;
};

/// Canonical JSON: {"category": [{"yaw": .., "pitch": ..}, ...]}, keys sorted, no whitespace.
[[nodiscard]] std::string save_pool(const ViewpointPool& pool);

/// Throws FormatError (with byte offset) on malformed input.
[[nodiscard]] ViewpointPool load_pool(const std::string& json,
                                      std::size_t capacity = ViewpointPool::kDefaultCapacity);

}  // namespace viewsel
