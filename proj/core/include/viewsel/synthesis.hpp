#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viewsel/rng.hpp"
#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

/// Binary image over (y, z), y-fastest like ErrorProjectionMap.
class SilhouetteImage {
 public:
  SilhouetteImage(std::uint32_t dims_y, std::uint32_t dims_z);

  [[nodiscard]] std::uint32_t dims_y() const noexcept { return dims_y_; }
  [[nodiscard]] std::uint32_t dims_z() const noexcept { return dims_z_; }
  [[nodiscard]] std::size_t size() const noexcept { return pixels_.size(); }
  [[nodiscard]] bool test(std::size_t i) const { return pixels_[i]; }
  [[nodiscard]] bool test(std::uint32_t y, std::uint32_t z) const {
    return pixels_.at(static_cast<std::size_t>(z) * dims_y_ + y);
  }
  void set(std::size_t i, bool value = true) { pixels_.at(i) = value; }
  [[nodiscard]] std::size_t count() const noexcept;

  friend bool operator==(const SilhouetteImage&, const SilhouetteImage&) = default;

 private:
  std::uint32_t dims_y_;
  std::uint32_t dims_z_;
  std::vector<bool> pixels_;
};

/// Orthographic silhouette of gt (thresholded at tau) seen from v: pixel set
/// iff the first-hit projection of the rotated occupancy is nonzero.
[[nodiscard]] SilhouetteImage render_silhouette(const VoxelGrid& gt, const Viewpoint& v,
                                                double tau = kDefaultOccupancyThreshold);

enum class ViewDistributionKind { aligned, hemispherical, spherical };

[[nodiscard]] std::string_view to_string(ViewDistributionKind kind) noexcept;
[[nodiscard]] ViewDistributionKind parse_view_distribution(std::string_view name);

struct ViewDistribution {
  ViewDistributionKind kind = ViewDistributionKind::aligned;
  std::size_t views_per_object = 24;
};

inline constexpr double kAlignedPitchDeg = 60.0;
inline constexpr double kAlignedYawStepDeg = 15.0;
inline constexpr std::size_t kAlignedViewCount = 24;

/// Aligned: pitch 60, yaw -180 + 15k. Hemispherical / Spherical: independent
/// uniform-in-angle draws, yaw in [-180, 180), pitch in [0, 90] / [-90, 90].
[[nodiscard]] std::vector<Viewpoint> sample_dataset_viewpoints(const ViewDistribution& dist,
                                                               Rng& rng);

/// Something that can show an object from a viewpoint. Stands in for a
/// learned novel-view generator; must be deterministic per (object, viewpoint).
class ViewProvider {
 public:
  virtual ~ViewProvider() = default;
  [[nodiscard]] virtual SilhouetteImage render(std::size_t object_id,
                                               const Viewpoint& v) const = 0;
};

/// Exact silhouettes of ground-truth grids.
class GroundTruthProvider final : public ViewProvider {
 public:
  GroundTruthProvider(std::span<const VoxelGrid> objects,
                      double tau = kDefaultOccupancyThreshold);
  [[nodiscard]] SilhouetteImage render(std::size_t object_id, const Viewpoint& v) const override;

 private:
  std::span<const VoxelGrid> objects_;
  double tau_;
};

/// Flips each pixel of an inner provider with probability p. The flip pattern
/// is a pure function of (seed, object id, viewpoint bits).
class NoisyProvider final : public ViewProvider {
 public:
  NoisyProvider(const ViewProvider& inner, double flip_probability, std::uint64_t seed);
  [[nodiscard]] SilhouetteImage render(std::size_t object_id, const Viewpoint& v) const override;

 private:
  const ViewProvider& inner_;
  double p_;
  std::uint64_t seed_;
};

enum class ShapeKind { box, sphere, ell, cross, union_of_boxes, random_blob };

[[nodiscard]] std::string_view to_string(ShapeKind kind) noexcept;
[[nodiscard]] ShapeKind parse_shape_kind(std::string_view name);
[[nodiscard]] std::span<const ShapeKind> all_shape_kinds() noexcept;

/// Shape descriptor. Unset parameters are drawn from the random source.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::sphere;
  std::optional<double> radius;                     // sphere, in voxels
  std::optional<std::array<std::uint32_t, 3>> size;  // box edge lengths, in voxels
};

/// Fraction bounds every generated shape satisfies.
inline constexpr double kMinShapeFill = 0.01;
inline constexpr double kMaxShapeFill = 0.60;

/// Binary grid of edge `dim` (>= 8). Shapes are placed around the grid center and
/// clipped to the inscribed ball of radius (dim-1)/2, so no rotation moves an
/// occupied voxel outside the cube. Throws std::invalid_argument when explicit
/// parameters violate the fill bounds.
[[nodiscard]] VoxelGrid generate_shape(const ShapeSpec& spec, std::uint32_t dim, Rng& rng);

}  // namespace viewsel
