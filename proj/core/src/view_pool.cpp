#include "viewsel/view_pool.hpp"

#include "json_convert.hpp"

namespace viewsel {

ViewpointPool::ViewpointPool(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("pool capacity must be positive");
}

void ViewpointPool::record(const std::string& category, std::span<const Viewpoint> views) {
  if (category.empty()) throw std::invalid_argument("pool category must be non-empty");
  auto& seq = entries_[category];
  seq.insert(seq.end(), views.begin(), views.end());
  while (seq.size() > capacity_) seq.pop_front();
}

bool ViewpointPool::has(const std::string& category) const {
  const auto it = entries_.find(category);
  return it != entries_.end() && !it->second.empty();
}

const std::deque<Viewpoint>& ViewpointPool::views(const std::string& category) const {
  const auto it = entries_.find(category);
  if (it == entries_.end()) throw PoolMiss("no pooled viewpoints for category '" + category + "'");
  return it->second;
}

std::vector<Viewpoint> ViewpointPool::sample_by_category(const std::string& category,
                                                         std::size_t count, Rng& rng) const {
  if (!has(category)) throw PoolMiss("no pooled viewpoints for category '" + category + "'");
  const auto& seq = entries_.at(category);
  std::vector<Viewpoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(seq[rng.below(seq.size())]);
  return out;
}

std::string save_pool(const ViewpointPool& pool) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [category, views] : pool.entries()) {
    auto& arr = j[category] = nlohmann::json::array();
    for (const auto& v : views) arr.push_back(v);
  }
  return j.dump();
}

ViewpointPool load_pool(const std::string& json, std::size_t capacity) {
  const nlohmann::json j = parse_json(json, "pool");
  if (!j.is_object()) throw FormatError("pool: top level must be an object", 0);
  ViewpointPool pool(capacity);
  for (const auto& [category, arr] : j.items()) {
    if (!arr.is_array()) throw FormatError("pool: category '" + category + "' is not an array", 0);
    std::vector<Viewpoint> views;
    views.reserve(arr.size());
    for (const auto& item : arr) {
      try {
        views.push_back(viewpoint_from_json(item));
      } catch (const std::invalid_argument& e) {
        throw FormatError("pool: category '" + category + "': " + e.what(), 0);
      }
    }
    pool.record(category, views);
  }
  return pool;
}

}  // namespace viewsel
