#include "viewsel/viewpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "viewsel/rotation.hpp"

namespace viewsel {

double wrap_yaw(double degrees) noexcept {
  double w = std::fmod(degrees + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  w -= 180.0;
  // fmod of tiny negatives can round up to exactly +180.
  return w >= 180.0 ? -180.0 : w;
}

Viewpoint::Viewpoint(double yaw_deg, double pitch_deg)
    : yaw_(wrap_yaw(yaw_deg)), pitch_(std::clamp(pitch_deg, -90.0, 90.0)) {
  if (!std::isfinite(yaw_deg) || !std::isfinite(pitch_deg)) {
    throw std::invalid_argument("viewpoint angles must be finite");
  }
}

LatticeIndex ViewpointLattice::cell_of(const Viewpoint& v) const noexcept {
  const double k = interval_;
  auto yi = static_cast<std::int64_t>(std::floor((v.yaw() + 180.0) / k));
  auto pi = static_cast<std::int64_t>(std::floor((v.pitch() + 90.0) / k));
  yi = std::clamp<std::int64_t>(yi, 0, n_yaw_ - 1);
  pi = std::clamp<std::int64_t>(pi, 0, n_pitch_ - 1);
  return {static_cast<std::uint32_t>(yi), static_cast<std::uint32_t>(pi)};
}

ViewpointLattice discretize_viewpoints(int interval_deg) {
  if (interval_deg <= 0 || 180 % interval_deg != 0) {
    throw std::invalid_argument("interval must be a positive divisor of 180, got " +
                                std::to_string(interval_deg));
  }
  ViewpointLattice lattice;
  lattice.interval_ = interval_deg;
  lattice.n_yaw_ = static_cast<std::uint32_t>(360 / interval_deg);
  lattice.n_pitch_ = static_cast<std::uint32_t>(180 / interval_deg);
  lattice.centers_.reserve(static_cast<std::size_t>(lattice.n_yaw_) * lattice.n_pitch_);
  const double k = interval_deg;
  for (std::uint32_t j = 1; j <= lattice.n_pitch_; ++j) {
    for (std::uint32_t i = 1; i <= lattice.n_yaw_; ++i) {
      lattice.centers_.emplace_back(-180.0 + (i - 0.5) * k, -90.0 + (j - 0.5) * k);
    }
  }
  return lattice;
}

Viewpoint sample_gaussian_view(const Viewpoint& center, double sigma_deg, Rng& rng) {
  if (!(sigma_deg >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");
  const double g_yaw = rng.normal();
  const double g_pitch = rng.normal();
  return Viewpoint(center.yaw() + g_yaw * sigma_deg, center.pitch() + g_pitch * sigma_deg);
}

Direction camera_direction(const Viewpoint& v) noexcept {
  // The camera sits on the -X side of its own frame; in world coordinates
  // that is -R * e_x.
  const Mat3 r = rotation_matrix(v);
  return {-r[0][0], -r[1][0], -r[2][0]};
}

double angle_between_deg(const Direction& a, const Direction& b) noexcept {
  const double dot = a.x * b.x + a.y * b.y + a.z * b.z;
  const double na = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
  const double nb = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
  return std::acos(std::clamp(dot / (na * nb), -1.0, 1.0)) * 180.0 / std::numbers::pi;
}

}  // namespace viewsel
