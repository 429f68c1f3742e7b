#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "viewsel/synthesis.hpp"
#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

struct ViewObservation {
  Viewpoint viewpoint;
  SilhouetteImage silhouette;
};

/// Multi-view reconstruction model: observations in, occupancy grid out.
/// Output dims are fixed by the model, whatever the number of observations.
class Reconstructor {
 public:
  virtual ~Reconstructor() = default;
  [[nodiscard]] virtual GridDims dims() const noexcept = 0;
  [[nodiscard]] virtual VoxelGrid reconstruct(std::span<const ViewObservation> observations) const = 0;
};

/// Visual-hull space carving on a cubic grid.
class SpaceCarver final : public Reconstructor {
 public:
  explicit SpaceCarver(std::uint32_t dim);
  [[nodiscard]] GridDims dims() const noexcept override { return {dim_, dim_, dim_}; }
  [[nodiscard]] VoxelGrid reconstruct(std::span<const ViewObservation> observations) const override;

 private:
  std::uint32_t dim_;
};

/// A voxel survives iff no observation rules it out (see project_voxel).
/// Output is binary. Throws std::invalid_argument for an empty observation
/// list and DimensionMismatch when a silhouette is not dim x dim.
[[nodiscard]] VoxelGrid carve(std::span<const ViewObservation> observations, std::uint32_t dim);

struct PixelIndex {
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  friend bool operator==(const PixelIndex&, const PixelIndex&) = default;
};

/// Where one world voxel lands in a view's image, under the same nearest-
/// neighbour map that rotate_grid and render_silhouette use.
///
/// The footprint lists the pixels of every camera-frame cell that samples the
/// voxel. Nearest-neighbour resampling under a general rotation is not a
/// bijection, so a voxel may be sampled by several cells (footprint > 1) or by
/// none (footprint empty while still on the image). A voxel whose rotated
/// center leaves the frame is off_image.
struct VoxelProjection {
  bool off_image = false;
  std::vector<PixelIndex> footprint;

  /// The view neither confirms nor contradicts this voxel.
  [[nodiscard]] bool unconstrained() const noexcept { return !off_image && footprint.empty(); }
  /// Carving rule: on-image and every footprint pixel set in the silhouette.
  [[nodiscard]] bool inside(const SilhouetteImage& silhouette) const;
};

[[nodiscard]] VoxelProjection project_voxel(std::size_t voxel_index, const Viewpoint& v,
                                            std::uint32_t dim);

}  // namespace viewsel
