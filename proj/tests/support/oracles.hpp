#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// None of these share code with the library kernels.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "viewsel/rng.hpp"
#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel::oracle {

/// Per-ray scan: walk x upward for every (y,z) and keep the first value above the cutoff.
inline std::vector<float> first_hit_scan(const VoxelGrid& g) {
  const auto& d = g.dims();
  std::vector<float> out(static_cast<std::size_t>(d.y) * d.z, 0.0f);
  for (std::uint32_t z = 0; z < d.z; ++z) {
    for (std::uint32_t y = 0; y < d.y; ++y) {
      for (std::uint32_t x = 0; x < d.x; ++x) {
        const float v = g.at(x, y, z);
        if (v > 1e-9f) {
          out[static_cast<std::size_t>(z) * d.y + y] = v;
          break;
        }
      }
    }
  }
  return out;
}

using IMat3 = std::array<std::array<int, 3>, 3>;

inline int icos(int deg) {
  switch (((deg % 360) + 360) % 360) {
    case 0: return 1;
    case 180: return -1;
    default: return 0;
  }
}
inline int isin(int deg) { return icos(deg - 90); }

/// Integer Rz(yaw) * Ry(pitch) for multiples of 90 degrees.
inline IMat3 axis_rotation(int yaw, int pitch) {
  const int cy = icos(yaw), sy = isin(yaw), cp = icos(pitch), sp = isin(pitch);
  const IMat3 rz{{{cy, -sy, 0}, {sy, cy, 0}, {0, 0, 1}}};
  const IMat3 ry{{{cp, 0, sp}, {0, 1, 0}, {-sp, 0, cp}}};
  IMat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += rz[i][k] * ry[k][j];
  return m;
}

/// Camera cell c takes the world voxel at M * (c - center) + center. Worked in
/// doubled integer coordinates so the half-voxel center of even grids is exact.
inline VoxelGrid permute_grid(const VoxelGrid& g, int yaw, int pitch) {
  const std::uint32_t d = g.dims().x;
  const int n = static_cast<int>(d) - 1;
  const IMat3 m = axis_rotation(yaw, pitch);
  VoxelGrid out = VoxelGrid::cube(d);
  for (std::uint32_t z = 0; z < d; ++z)
    for (std::uint32_t y = 0; y < d; ++y)
      for (std::uint32_t x = 0; x < d; ++x) {
        const int c[3] = {2 * int(x) - n, 2 * int(y) - n, 2 * int(z) - n};
        int w[3];
        for (int i = 0; i < 3; ++i) w[i] = (m[i][0] * c[0] + m[i][1] * c[1] + m[i][2] * c[2] + n) / 2;
        out.set(x, y, z, g.at(std::uint32_t(w[0]), std::uint32_t(w[1]), std::uint32_t(w[2])));
      }
  return out;
}

/// Direct trigonometric resampling for arbitrary angles.
inline VoxelGrid resample(const VoxelGrid& g, double yaw, double pitch) {
  const std::uint32_t d = g.dims().x;
  const double pi = std::acos(-1.0);
  const double a = yaw * pi / 180.0, b = pitch * pi / 180.0;
  const double m[3][3] = {{std::cos(a) * std::cos(b), -std::sin(a), std::cos(a) * std::sin(b)},
                          {std::sin(a) * std::cos(b), std::cos(a), std::sin(a) * std::sin(b)},
                          {-std::sin(b), 0.0, std::cos(b)}};
  const double h = (d - 1.0) / 2.0;
  VoxelGrid out = VoxelGrid::cube(d);
  for (std::uint32_t z = 0; z < d; ++z)
    for (std::uint32_t y = 0; y < d; ++y)
      for (std::uint32_t x = 0; x < d; ++x) {
        const double c[3] = {x - h, y - h, z - h};
        long w[3];
        bool inside = true;
        for (int i = 0; i < 3; ++i) {
          w[i] = static_cast<long>(std::floor(m[i][0] * c[0] + m[i][1] * c[1] + m[i][2] * c[2] + h + 0.5));
          inside = inside && w[i] >= 0 && w[i] < long(d);
        }
        if (inside) out.set(x, y, z, g.at(std::uint32_t(w[0]), std::uint32_t(w[1]), std::uint32_t(w[2])));
      }
  return out;
}

inline double brute_score(const VoxelGrid& error, const Viewpoint& v) {
  double s = 0.0;
  for (float p : first_hit_scan(resample(error, v.yaw(), v.pitch()))) s += p;
  return s;
}

inline VoxelGrid random_grid(std::uint32_t d, double density, Rng& rng, bool soft = false) {
  VoxelGrid g = VoxelGrid::cube(d);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (rng.uniform() < density) g.set(i, soft ? static_cast<float>(rng.uniform(0.05, 1.0)) : 1.0f);
  }
  return g;
}

/// Solid box [lo, hi) in voxel indices.
inline VoxelGrid box_grid(std::uint32_t d, std::array<std::uint32_t, 3> lo,
                          std::array<std::uint32_t, 3> hi) {
  VoxelGrid g = VoxelGrid::cube(d);
  for (std::uint32_t z = lo[2]; z < hi[2]; ++z)
    for (std::uint32_t y = lo[1]; y < hi[1]; ++y)
      for (std::uint32_t x = lo[0]; x < hi[0]; ++x) g.set(x, y, z, 1.0f);
  return g;
}

/// Voxels whose centers lie within `r` of the grid center.
inline std::size_t ball_count(std::uint32_t d, double r) {
  const double h = (d - 1.0) / 2.0;
  std::size_t n = 0;
  for (std::uint32_t z = 0; z < d; ++z)
    for (std::uint32_t y = 0; y < d; ++y)
      for (std::uint32_t x = 0; x < d; ++x) {
        const double dx = x - h, dy = y - h, dz = z - h;
        if (dx * dx + dy * dy + dz * dz <= r * r) ++n;
      }
  return n;
}

/// The twelve distinct orientations reachable with yaw, pitch in 90 degree steps.
inline std::vector<std::array<int, 2>> axis_viewpoints() {
  std::vector<std::array<int, 2>> out;
  for (int pitch : {-90, 0, 90})
    for (int yaw : {-180, -90, 0, 90}) out.push_back({yaw, pitch});
  return out;
}

}  // namespace viewsel::oracle
