#include "viewsel/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace viewsel {

namespace {

struct SinCos {
  double s;
  double c;
};

SinCos sincos_deg(double deg) noexcept {
  const double q = deg / 90.0;
  if (q == std::floor(q) && std::fabs(q) < 1e9) {
    switch (((static_cast<long long>(q) % 4) + 4) % 4) {
      case 0: return {0.0, 1.0};
      case 1: return {1.0, 0.0};
      case 2: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  const double rad = deg * std::numbers::pi / 180.0;
  return {std::sin(rad), std::cos(rad)};
}

std::int64_t round_half_up(double v) noexcept {
  return static_cast<std::int64_t>(std::floor(v + 0.5));
}

}  // namespace

Mat3 rotation_matrix(const Viewpoint& v) noexcept {
  const auto [sy, cy] = sincos_deg(v.yaw());
  const auto [sp, cp] = sincos_deg(v.pitch());
  // Rz(yaw) * Ry(pitch); Rx(0) is the identity.
  return Mat3{{{cy * cp, -sy, cy * sp},
               {sy * cp, cy, sy * sp},
               {-sp, 0.0, cp}}};
}

RotationFrame::RotationFrame(const Viewpoint& v, std::uint32_t dim)
    : r_(rotation_matrix(v)), dim_(dim), center_((static_cast<double>(dim) - 1.0) / 2.0) {
  if (dim == 0 || dim > kMaxDim) {
    throw std::invalid_argument("rotation frame dim must be in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(dim));
  }
}

std::int32_t RotationFrame::source_of(std::uint32_t x, std::uint32_t y,
                                      std::uint32_t z) const noexcept {
  const double cx = x - center_;
  const double cy = y - center_;
  const double cz = z - center_;
  const std::int64_t d = dim_;
  std::int64_t idx[3];
  for (int row = 0; row < 3; ++row) {
    const double w = r_[row][0] * cx + r_[row][1] * cy + r_[row][2] * cz + center_;
    idx[row] = round_half_up(w);
    if (idx[row] < 0 || idx[row] >= d) return kOutside;
  }
  return static_cast<std::int32_t>((idx[2] * d + idx[1]) * d + idx[0]);
}

std::vector<std::int32_t> RotationFrame::sampling_map() const {
  std::vector<std::int32_t> map(static_cast<std::size_t>(dim_) * dim_ * dim_);
  std::size_t i = 0;
  for (std::uint32_t z = 0; z < dim_; ++z)
    for (std::uint32_t y = 0; y < dim_; ++y)
      for (std::uint32_t x = 0; x < dim_; ++x) map[i++] = source_of(x, y, z);
  return map;
}

std::array<double, 3> RotationFrame::forward(std::uint32_t x, std::uint32_t y,
                                             std::uint32_t z) const noexcept {
  const double wx = x - center_;
  const double wy = y - center_;
  const double wz = z - center_;
  // Camera-frame position is R^T * w.
  std::array<double, 3> out{};
  for (int col = 0; col < 3; ++col) {
    out[col] = r_[0][col] * wx + r_[1][col] * wy + r_[2][col] * wz + center_;
  }
  return out;
}

VoxelGrid rotate_grid(const VoxelGrid& grid, const Viewpoint& v) {
  if (!grid.dims().cubic()) {
    throw DimensionMismatch("rotate_grid requires a cubic grid, got " + grid.dims().str());
  }
  const RotationFrame frame(v, grid.dims().x);
  const auto map = frame.sampling_map();
  std::vector<float> out(map.size(), 0.0f);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != RotationFrame::kOutside) out[i] = grid[static_cast<std::size_t>(map[i])];
  }
  return VoxelGrid(grid.dims(), std::move(out));
}

}  // namespace viewsel
