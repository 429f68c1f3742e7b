#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "viewsel/rng.hpp"
#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

/// Values at or below this count as empty when scanning a line of sight.
/// Binary error grids hold exact 0/1, so the cutoff only matters for soft grids.
inline constexpr double kFirstHitCutoff = 1e-9;

/// First-hit image of a grid seen along +X. Pixel index = z * dims_y + y.
struct ErrorProjectionMap {
  std::uint32_t dims_y = 0;
  std::uint32_t dims_z = 0;
  std::vector<float> pixels;

  [[nodiscard]] float at(std::uint32_t y, std::uint32_t z) const {
    return pixels.at(static_cast<std::size_t>(z) * dims_y + y);
  }
  [[nodiscard]] double sum() const noexcept;
};

struct ViewScore {
  Viewpoint viewpoint;
  double score = 0.0;
  LatticeIndex lattice_index;
};

/// For each (y,z) ray, the value at the smallest x whose value exceeds the cutoff (0 if none).
[[nodiscard]] ErrorProjectionMap project_first_hit(const VoxelGrid& rotated);

/// Pixel sum of the first-hit projection of `error` seen from v.
[[nodiscard]] double score_view(const VoxelGrid& error, const Viewpoint& v);

/// One score per lattice center, in lattice order. Centers are evaluated in parallel.
[[nodiscard]] std::vector<ViewScore> score_all(const VoxelGrid& error,
                                               const ViewpointLattice& lattice);

/// The n highest-scoring viewpoints. Equal scores keep lattice order
/// (pitch bucket, then yaw bucket, i.e. the yaw index varies fastest).
/// Throws std::invalid_argument if n is 0 or exceeds scores.size().
[[nodiscard]] std::vector<Viewpoint> select_top_n(std::span<const ViewScore> scores,
                                                  std::size_t n);

struct SelectionResult {
  std::vector<ViewScore> scores;
  std::vector<Viewpoint> selected;
  std::vector<Viewpoint> sampled;
};

/// Error grid -> lattice scores -> top n -> one Gaussian sample (sigma = K/6) per pick.
[[nodiscard]] SelectionResult select_views(const VoxelGrid& pred, const VoxelGrid& gt,
                                           int interval_deg, std::size_t n, Rng& rng);

/// The sampled viewpoints of select_views.
[[nodiscard]] std::vector<Viewpoint> select_and_sample(const VoxelGrid& pred, const VoxelGrid& gt,
                                                       int interval_deg, std::size_t n, Rng& rng);

}  // namespace viewsel
