#pragma once

// Constructed error grids with a known "best" viewing side.
//
// A binary error blob projects to the same area from opposite directions, so
// first-hit scores alone cannot tell the two apart. These fixtures grade the
// error so that the outward-facing surface carries the largest values, as a
// soft prediction that is most wrong on its exposed side would.

#include <algorithm>
#include <cmath>

#include "viewsel/voxel_grid.hpp"

namespace viewsel::fixture {

/// Error confined to the polar cap (elevation >= 60 degrees) of a ball of
/// radius 0.45*d, graded by height above the center.
inline VoxelGrid pitch_cap(std::uint32_t d) {
  const double h = (d - 1.0) / 2.0;
  const double radius = 0.45 * d;
  const double pi = std::acos(-1.0);
  VoxelGrid g = VoxelGrid::cube(d);
  for (std::uint32_t z = 0; z < d; ++z)
    for (std::uint32_t y = 0; y < d; ++y)
      for (std::uint32_t x = 0; x < d; ++x) {
        const double dx = x - h, dy = y - h, dz = z - h;
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (r > radius || r == 0.0) continue;
        if (std::asin(dz / r) < pi / 3) continue;
        g.set(x, y, z, static_cast<float>(std::clamp(dz / radius, 0.05, 1.0)));
      }
  return g;
}

/// A ball sitting in the (+x, +y, +z) octant, graded along the outward diagonal.
inline VoxelGrid octant_blob(std::uint32_t d) {
  const double h = (d - 1.0) / 2.0;
  const double off = 0.22 * d;
  const double radius = 0.18 * d;
  const double k = 1.0 / std::sqrt(3.0);
  VoxelGrid g = VoxelGrid::cube(d);
  for (std::uint32_t z = 0; z < d; ++z)
    for (std::uint32_t y = 0; y < d; ++y)
      for (std::uint32_t x = 0; x < d; ++x) {
        const double dx = x - h - off, dy = y - h - off, dz = z - h - off;
        if (dx * dx + dy * dy + dz * dz > radius * radius) continue;
        const double along = (dx + dy + dz) * k / radius;  // -1 .. 1
        g.set(x, y, z, static_cast<float>(0.55 + 0.45 * along));
      }
  return g;
}

/// Camera-facing direction of the octant blob (unit vector from center outward).
inline constexpr double kOctantDir = 0.57735026918962576;

}  // namespace viewsel::fixture
