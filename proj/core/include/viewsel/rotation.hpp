#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

using Mat3 = std::array<std::array<double, 3>, 3>;

/// R = Rz(yaw) * Ry(pitch) * Rx(roll), right-handed, roll = 0.
/// Sines and cosines of exact multiples of 90 degrees are exact.
[[nodiscard]] Mat3 rotation_matrix(const Viewpoint& v) noexcept;

/// Nearest-neighbour map between a cubic world grid and the camera frame of
/// one viewpoint. Voxel coordinates are taken relative to the continuous
/// grid center (dim-1)/2. Camera-frame cell c samples the world voxel nearest
/// to R*c, so the camera looks along +X of its frame from the -X side.
class RotationFrame {
 public:
  /// Largest supported cube edge; keeps flat indices within int32.
  static constexpr std::uint32_t kMaxDim = 1024;
  static constexpr std::int32_t kOutside = -1;

  RotationFrame(const Viewpoint& v, std::uint32_t dim);

  [[nodiscard]] std::uint32_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Mat3& matrix() const noexcept { return r_; }

  /// World voxel sampled by camera-frame cell (x,y,z), or kOutside.
  [[nodiscard]] std::int32_t source_of(std::uint32_t x, std::uint32_t y,
                                       std::uint32_t z) const noexcept;

  /// source_of for every camera-frame cell, x-fastest.
  [[nodiscard]] std::vector<std::int32_t> sampling_map() const;

  /// Continuous camera-frame position (voxel coordinates) of a world voxel center.
  [[nodiscard]] std::array<double, 3> forward(std::uint32_t x, std::uint32_t y,
                                              std::uint32_t z) const noexcept;

 private:
  Mat3 r_;
  std::uint32_t dim_;
  double center_;
};

/// Resamples a cubic grid into the camera frame of v (nearest neighbour,
/// out-of-bounds reads are 0). Throws DimensionMismatch for non-cubic grids.
[[nodiscard]] VoxelGrid rotate_grid(const VoxelGrid& grid, const Viewpoint& v);

}  // namespace viewsel
