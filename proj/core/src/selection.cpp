#include "viewsel/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "viewsel/parallel.hpp"
#include "viewsel/rotation.hpp"

namespace viewsel {

double ErrorProjectionMap::sum() const noexcept {
  double s = 0.0;
  for (float p : pixels) s += p;
  return s;
}

ErrorProjectionMap project_first_hit(const VoxelGrid& rotated) {
  const auto& d = rotated.dims();
  ErrorProjectionMap map{d.y, d.z, std::vector<float>(static_cast<std::size_t>(d.y) * d.z, 0.0f)};
  const auto values = rotated.values();
  // x is the fastest axis, so each line of sight is a contiguous run.
  for (std::size_t ray = 0; ray < map.pixels.size(); ++ray) {
    const auto line = values.subspan(ray * d.x, d.x);
    const auto hit = std::find_if(line.begin(), line.end(),
                                  [](float v) { return v > kFirstHitCutoff; });
    if (hit != line.end()) map.pixels[ray] = *hit;
  }
  return map;
}

double score_view(const VoxelGrid& error, const Viewpoint& v) {
  return project_first_hit(rotate_grid(error, v)).sum();
}

std::vector<ViewScore> score_all(const VoxelGrid& error, const ViewpointLattice& lattice) {
  if (!error.dims().cubic()) {
    throw DimensionMismatch("score_all requires a cubic grid, got " + error.dims().str());
  }
  std::vector<ViewScore> scores(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t i) {
    const Viewpoint& v = lattice.centers()[i];
    scores[i] = ViewScore{v, score_view(error, v), lattice.index_of(i)};
  });
  return scores;
}

std::vector<Viewpoint> select_top_n(std::span<const ViewScore> scores, std::size_t n) {
  if (n == 0 || n > scores.size()) {
    throw std::invalid_argument("select_top_n: n=" + std::to_string(n) + " but " +
                                std::to_string(scores.size()) + " scores available");
  }
  std::vector<const ViewScore*> order(scores.size());
  std::transform(scores.begin(), scores.end(), order.begin(), [](const ViewScore& s) { return &s; });
  auto before = [](const ViewScore* a, const ViewScore* b) {
    if (a->score != b->score) return a->score > b->score;
    if (a->lattice_index.pitch != b->lattice_index.pitch) {
      return a->lattice_index.pitch < b->lattice_index.pitch;
    }
    return a->lattice_index.yaw < b->lattice_index.yaw;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    before);
  std::vector<Viewpoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(order[i]->viewpoint);
  return out;
}

SelectionResult select_views(const VoxelGrid& pred, const VoxelGrid& gt, int interval_deg,
                             std::size_t n, Rng& rng) {
  if (!pred.dims().cubic()) {
    throw DimensionMismatch("select_views requires cubic grids, got " + pred.dims().str());
  }
  const VoxelGrid error = error_grid(pred, gt);
  const ViewpointLattice lattice = discretize_viewpoints(interval_deg);
  SelectionResult result;
  result.scores = score_all(error, lattice);
  result.selected = select_top_n(result.scores, n);
  const double sigma = sampling_sigma(interval_deg);
  result.sampled.reserve(n);
  for (const auto& center : result.selected) {
    result.sampled.push_back(sample_gaussian_view(center, sigma, rng));
  }
  return result;
}

std::vector<Viewpoint> select_and_sample(const VoxelGrid& pred, const VoxelGrid& gt,
                                         int interval_deg, std::size_t n, Rng& rng) {
  return select_views(pred, gt, interval_deg, n, rng).sampled;
}

}  // namespace viewsel
