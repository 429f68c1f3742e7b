#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace viewsel {

/// Occupancy cutoff used to binarize soft predictions.
inline constexpr double kDefaultOccupancyThreshold = 0.4;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridDims {
  std::uint32_t x = 1;
  std::uint32_t y = 1;
  std::uint32_t z = 1;

  [[nodiscard]] std::size_t count() const noexcept {
    return static_cast<std::size_t>(x) * y * z;
  }
  [[nodiscard]] bool cubic() const noexcept { return x == y && y == z; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Dense scalar grid with values in [0,1]. Storage is x-fastest:
/// index = (z * dims.y + y) * dims.x + x.
class VoxelGrid {
 public:
  explicit VoxelGrid(GridDims dims, float fill = 0.0f);
  VoxelGrid(GridDims dims, std::vector<float> values);

  static VoxelGrid cube(std::uint32_t dim, float fill = 0.0f) {
    return VoxelGrid(GridDims{dim, dim, dim}, fill);
  }

  [[nodiscard]] const GridDims& dims() const noexcept { return dims_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const float> values() const noexcept { return values_; }

  [[nodiscard]] std::size_t index(std::uint32_t x, std::uint32_t y,
                                  std::uint32_t z) const noexcept {
    return (static_cast<std::size_t>(z) * dims_.y + y) * dims_.x + x;
  }

  [[nodiscard]] float operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] float at(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    return values_.at(index(x, y, z));
  }

  /// Throws std::invalid_argument for values outside [0,1] or non-finite.
  void set(std::size_t i, float value);
  void set(std::uint32_t x, std::uint32_t y, std::uint32_t z, float value) {
    set(index(x, y, z), value);
  }

  /// Number of voxels with a value strictly greater than zero.
  [[nodiscard]] std::size_t count_nonzero() const noexcept;

  friend bool operator==(const VoxelGrid&, const VoxelGrid&) = default;

 private:
  GridDims dims_;
  std::vector<float> values_;
};

/// Binary occupancy over the same indexing as VoxelGrid.
class OccupancySet {
 public:
  explicit OccupancySet(GridDims dims);

  [[nodiscard]] const GridDims& dims() const noexcept { return dims_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool test(std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value = true) { bits_[i] = value; }
  [[nodiscard]] std::size_t count() const noexcept;

  /// Grid view with 1.0 for set bits and 0.0 otherwise.
  [[nodiscard]] VoxelGrid to_grid() const;

  friend bool operator==(const OccupancySet&, const OccupancySet&) = default;

 private:
  GridDims dims_;
  std::vector<bool> bits_;
};

/// Bit i is set iff values[i] >= tau.
[[nodiscard]] OccupancySet threshold_grid(const VoxelGrid& grid,
                                          double tau = kDefaultOccupancyThreshold);

/// Elementwise |pred - gt|.
[[nodiscard]] VoxelGrid error_grid(const VoxelGrid& pred, const VoxelGrid& gt);

/// Intersection over union; 1.0 when both sets are empty.
[[nodiscard]] double iou(const OccupancySet& pred, const OccupancySet& gt);

/// Voxel-level F1 of precision |pred∩gt|/|pred| and recall |pred∩gt|/|gt|.
/// 1.0 when both sets are empty, 0.0 when exactly one is.
[[nodiscard]] double f_score(const OccupancySet& pred, const OccupancySet& gt);

/// Number of voxels set in pred but not in gt.
[[nodiscard]] std::size_t excess_count(const OccupancySet& pred, const OccupancySet& gt);

inline constexpr double kBceEpsilon = 1e-7;
inline constexpr double kDiceSmoothing = 1e-6;

/// Mean binary cross entropy with predictions clamped to [eps, 1-eps].
[[nodiscard]] double bce_loss(const VoxelGrid& pred, const VoxelGrid& gt);

/// 1 - (2 Σpg + s) / (Σp + Σg + s).
[[nodiscard]] double dice_loss(const VoxelGrid& pred, const VoxelGrid& gt);

}  // namespace viewsel
