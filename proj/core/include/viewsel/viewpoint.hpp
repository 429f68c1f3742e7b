#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "viewsel/rng.hpp"

namespace viewsel {

/// Wraps an angle in degrees into [-180, 180).
[[nodiscard]] double wrap_yaw(double degrees) noexcept;

/// Camera orientation in degrees: yaw about z, pitch about y, roll fixed at 0.
/// Construction normalizes yaw into [-180, 180) and clamps pitch to [-90, 90].
class Viewpoint {
 public:
  Viewpoint() = default;
  Viewpoint(double yaw_deg, double pitch_deg);

  [[nodiscard]] double yaw() const noexcept { return yaw_; }
  [[nodiscard]] double pitch() const noexcept { return pitch_; }
  [[nodiscard]] static constexpr double roll() noexcept { return 0.0; }

  friend bool operator==(const Viewpoint&, const Viewpoint&) = default;

 private:
  double yaw_ = 0.0;
  double pitch_ = 0.0;
};

/// Cell of the view lattice: yaw bucket and pitch bucket, both 0-based.
struct LatticeIndex {
  std::uint32_t yaw = 0;
  std::uint32_t pitch = 0;

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Interval-median discretization of the (yaw, pitch) rectangle.
/// Centers are stored with the yaw index varying fastest.
class ViewpointLattice {
 public:
  [[nodiscard]] int interval_deg() const noexcept { return interval_; }
  [[nodiscard]] std::uint32_t n_yaw() const noexcept { return n_yaw_; }
  [[nodiscard]] std::uint32_t n_pitch() const noexcept { return n_pitch_; }
  [[nodiscard]] std::size_t size() const noexcept { return centers_.size(); }
  [[nodiscard]] const std::vector<Viewpoint>& centers() const noexcept { return centers_; }
  [[nodiscard]] const Viewpoint& center(LatticeIndex idx) const {
    return centers_.at(static_cast<std::size_t>(idx.pitch) * n_yaw_ + idx.yaw);
  }
  [[nodiscard]] LatticeIndex index_of(std::size_t flat) const noexcept {
    return {static_cast<std::uint32_t>(flat % n_yaw_), static_cast<std::uint32_t>(flat / n_yaw_)};
  }
  /// Cell containing v. Cells are half-open [lo, lo+K); pitch +90 falls in the top row.
  [[nodiscard]] LatticeIndex cell_of(const Viewpoint& v) const noexcept;

 private:
  friend ViewpointLattice discretize_viewpoints(int interval_deg);

  int interval_ = 0;
  std::uint32_t n_yaw_ = 0;
  std::uint32_t n_pitch_ = 0;
  std::vector<Viewpoint> centers_;
};

/// Throws std::invalid_argument unless interval_deg is a positive divisor of 180.
[[nodiscard]] ViewpointLattice discretize_viewpoints(int interval_deg);

/// Gaussian perturbation of a center: yaw wrapped, pitch clamped, one
/// standard-normal draw per component (yaw first).
[[nodiscard]] Viewpoint sample_gaussian_view(const Viewpoint& center, double sigma_deg, Rng& rng);

/// Gaussian sampling width used for a lattice interval: K / 6.
[[nodiscard]] constexpr double sampling_sigma(int interval_deg) noexcept {
  return static_cast<double>(interval_deg) / 6.0;
}

/// Unit vector from the object center towards the camera (world frame).
struct Direction {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};
[[nodiscard]] Direction camera_direction(const Viewpoint& v) noexcept;

/// Great-circle angle between two directions, degrees.
[[nodiscard]] double angle_between_deg(const Direction& a, const Direction& b) noexcept;

}  // namespace viewsel
