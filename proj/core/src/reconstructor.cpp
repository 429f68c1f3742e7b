#include "viewsel/reconstructor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "viewsel/rotation.hpp"

namespace viewsel {

namespace {

bool outside_frame(const std::array<double, 3>& p, std::uint32_t dim) noexcept {
  const double hi = dim - 0.5;
  return std::any_of(p.begin(), p.end(), [hi](double c) { return c < -0.5 || c >= hi; });
}

}  // namespace

SpaceCarver::SpaceCarver(std::uint32_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("carver dim must be positive");
}

VoxelGrid SpaceCarver::reconstruct(std::span<const ViewObservation> observations) const {
  return carve(observations, dim_);
}

VoxelGrid carve(std::span<const ViewObservation> observations, std::uint32_t dim) {
  if (observations.empty()) throw std::invalid_argument("carve needs at least one observation");
  for (const auto& obs : observations) {
    if (obs.silhouette.dims_y() != dim || obs.silhouette.dims_z() != dim) {
      throw DimensionMismatch("silhouette is " + std::to_string(obs.silhouette.dims_y()) + "x" +
                              std::to_string(obs.silhouette.dims_z()) + ", expected " +
                              std::to_string(dim) + "x" + std::to_string(dim));
    }
  }

  const std::size_t n = static_cast<std::size_t>(dim) * dim * dim;
  std::vector<std::uint8_t> keep(n, 1);
  for (const auto& obs : observations) {
    const RotationFrame frame(obs.viewpoint, dim);
    const auto map = frame.sampling_map();
    // Any sampling cell whose ray misses the silhouette removes its source voxel.
    for (std::size_t q = 0; q < n; ++q) {
      if (map[q] == RotationFrame::kOutside) continue;
      if (!obs.silhouette.test(q / dim)) keep[static_cast<std::size_t>(map[q])] = 0;
    }
    std::size_t p = 0;
    for (std::uint32_t z = 0; z < dim; ++z)
      for (std::uint32_t y = 0; y < dim; ++y)
        for (std::uint32_t x = 0; x < dim; ++x, ++p) {
          if (keep[p] && outside_frame(frame.forward(x, y, z), dim)) keep[p] = 0;
        }
  }

  std::vector<float> values(n);
  std::transform(keep.begin(), keep.end(), values.begin(),
                 [](std::uint8_t k) { return k ? 1.0f : 0.0f; });
  return VoxelGrid(GridDims{dim, dim, dim}, std::move(values));
}

bool VoxelProjection::inside(const SilhouetteImage& silhouette) const {
  if (off_image) return false;
  return std::all_of(footprint.begin(), footprint.end(),
                     [&](const PixelIndex& px) { return silhouette.test(px.y, px.z); });
}

VoxelProjection project_voxel(std::size_t voxel_index, const Viewpoint& v, std::uint32_t dim) {
  const std::size_t n = static_cast<std::size_t>(dim) * dim * dim;
  if (voxel_index >= n) throw std::out_of_range("voxel index outside the grid");
  const RotationFrame frame(v, dim);
  const auto x = static_cast<std::uint32_t>(voxel_index % dim);
  const auto y = static_cast<std::uint32_t>((voxel_index / dim) % dim);
  const auto z = static_cast<std::uint32_t>(voxel_index / (static_cast<std::size_t>(dim) * dim));

  VoxelProjection out;
  const auto f = frame.forward(x, y, z);
  if (outside_frame(f, dim)) {
    out.off_image = true;
    return out;
  }
  // A sampling cell lies within sqrt(3)/2 of the forward position, so the
  // 3x3x3 block around its rounded position holds every candidate.
  std::int64_t base[3];
  for (int k = 0; k < 3; ++k) base[k] = static_cast<std::int64_t>(std::floor(f[k] + 0.5));
  const std::int64_t d = dim;
  for (std::int64_t dz = -1; dz <= 1; ++dz)
    for (std::int64_t dy = -1; dy <= 1; ++dy)
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        const std::int64_t qx = base[0] + dx, qy = base[1] + dy, qz = base[2] + dz;
        if (qx < 0 || qy < 0 || qz < 0 || qx >= d || qy >= d || qz >= d) continue;
        const auto src = frame.source_of(static_cast<std::uint32_t>(qx),
                                         static_cast<std::uint32_t>(qy),
                                         static_cast<std::uint32_t>(qz));
        if (src < 0 || static_cast<std::size_t>(src) != voxel_index) continue;
        const PixelIndex px{static_cast<std::uint32_t>(qy), static_cast<std::uint32_t>(qz)};
        if (std::find(out.footprint.begin(), out.footprint.end(), px) == out.footprint.end()) {
          out.footprint.push_back(px);
        }
      }
  return out;
}

}  // namespace viewsel
