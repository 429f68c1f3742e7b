#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "viewsel/reconstructor.hpp"

using namespace viewsel;

namespace {

std::vector<ViewObservation> observe(const VoxelGrid& gt, const std::vector<Viewpoint>& views) {
  std::vector<ViewObservation> out;
  for (const auto& v : views) out.push_back({v, render_silhouette(gt, v)});
  return out;
}

bool subset(const VoxelGrid& a, const VoxelGrid& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0.0f && b[i] == 0.0f) return false;
  }
  return true;
}

std::vector<Viewpoint> random_views(Rng& rng, std::size_t n) {
  std::vector<Viewpoint> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(rng.uniform(-180, 180), rng.uniform(-90, 90));
  return out;
}

VoxelGrid random_shape(Rng& rng, std::uint32_t d) {
  ShapeSpec spec;
  spec.kind = all_shape_kinds()[rng.below(all_shape_kinds().size())];
  return generate_shape(spec, d, rng);
}

}  // namespace

TEST(Carve, SixAxisViewsRecoverABox) {
  const auto cube = oracle::box_grid(16, {3, 5, 4}, {11, 12, 9});
  const std::vector<Viewpoint> axes{Viewpoint(0, 0),  Viewpoint(180, 0), Viewpoint(90, 0),
                                    Viewpoint(-90, 0), Viewpoint(0, 90), Viewpoint(0, -90)};
  // intersection of the three axis extrusions of a box is the box
  EXPECT_EQ(carve(observe(cube, axes), 16), cube);
}

TEST(Carve, SingleViewIsTheExtrudedSilhouette) {
  Rng rng(71);
  const auto gt = random_shape(rng, 16);
  const auto obs = observe(gt, {Viewpoint(0, 0)});
  const auto rec = carve(obs, 16);
  for (std::uint32_t z = 0; z < 16; ++z)
    for (std::uint32_t y = 0; y < 16; ++y)
      for (std::uint32_t x = 0; x < 16; ++x)
        EXPECT_EQ(rec.at(x, y, z) != 0.0f, obs[0].silhouette.test(y, z));
}

// Two orthogonal views of a radius-10 ball at D=32; IoU measured once and frozen.
TEST(Carve, TwoViewsOfASphereOverfill) {
  ShapeSpec spec;
  spec.kind = ShapeKind::sphere;
  spec.radius = 10.0;
  Rng rng(0);
  const auto ball = generate_shape(spec, 32, rng);
  const auto rec = carve(observe(ball, {Viewpoint(0, 0), Viewpoint(90, 0)}), 32);
  EXPECT_TRUE(subset(ball, rec));
  EXPECT_GT(rec.count_nonzero(), ball.count_nonzero());
  const double j = iou(threshold_grid(rec), threshold_grid(ball));
  EXPECT_LT(j, 1.0);
  EXPECT_NEAR(j, 0.7845468053, 1e-9);
}

TEST(Carve, OutputIsBinary) {
  Rng rng(72);
  const auto gt = random_shape(rng, 16);
  for (float v : carve(observe(gt, random_views(rng, 3)), 16).values()) {
    EXPECT_TRUE(v == 0.0f || v == 1.0f);
  }
}

TEST(Carve, ConservativeMonotoneIdempotentOrderFree) {
  Rng rng(73);
  for (int t = 0; t < 25; ++t) {
    const std::uint32_t d = t % 2 ? 16 : 13;
    const auto gt = random_shape(rng, d);
    const auto obs = observe(gt, random_views(rng, 5));
    const std::span<const ViewObservation> all(obs);
    const auto full = carve(all, d);
    const auto part = carve(all.first(3), d);
    EXPECT_TRUE(subset(gt, full));
    EXPECT_TRUE(subset(gt, part));
    EXPECT_TRUE(subset(full, part));

    auto doubled = obs;
    doubled.push_back(obs[1]);
    EXPECT_EQ(carve(doubled, d), full);

    auto shuffled = obs;
    std::reverse(shuffled.begin(), shuffled.end());
    std::swap(shuffled[0], shuffled[2]);
    EXPECT_EQ(carve(shuffled, d), full);
  }
}

TEST(Carve, Errors) {
  EXPECT_THROW((void)carve(std::vector<ViewObservation>{}, 8), std::invalid_argument);
  const std::vector<ViewObservation> bad{{Viewpoint(0, 0), SilhouetteImage(8, 9)}};
  EXPECT_THROW((void)carve(bad, 8), DimensionMismatch);
}

TEST(Carve, ReconstructorInterface) {
  const SpaceCarver carver(12);
  EXPECT_EQ(carver.dims(), (GridDims{12, 12, 12}));
  const auto gt = oracle::box_grid(12, {2, 2, 2}, {8, 9, 10});
  const auto obs = observe(gt, {Viewpoint(10, 20), Viewpoint(-100, 5)});
  EXPECT_EQ(carver.reconstruct(obs), carve(obs, 12));
}

TEST(ProjectVoxel, Identity) {
  const std::uint32_t d = 8;
  for (std::size_t i = 0; i < 512; i += 37) {
    const auto p = project_voxel(i, Viewpoint(0, 0), d);
    ASSERT_FALSE(p.off_image);
    ASSERT_EQ(p.footprint.size(), 1u);
    EXPECT_EQ(p.footprint[0], (PixelIndex{std::uint32_t((i / 8) % 8), std::uint32_t(i / 64)}));
  }
  EXPECT_THROW((void)project_voxel(512, Viewpoint(0, 0), d), std::out_of_range);
}

TEST(ProjectVoxel, CenterStaysCentered) {
  Rng rng(74);
  const std::size_t center = (4 * 9 + 4) * 9 + 4;
  for (int t = 0; t < 100; ++t) {
    const auto p = project_voxel(center, Viewpoint(rng.uniform(-180, 180), rng.uniform(-90, 90)), 9);
    ASSERT_FALSE(p.off_image);
    ASSERT_FALSE(p.footprint.empty());
    for (const auto& px : p.footprint) EXPECT_EQ(px, (PixelIndex{4, 4}));
  }
}

TEST(ProjectVoxel, AxisViewsPermuteCoordinates) {
  const std::uint32_t d = 6;
  const int n = int(d) - 1;
  for (auto [yaw, pitch] : oracle::axis_viewpoints()) {
    const auto m = oracle::axis_rotation(yaw, pitch);
    for (std::size_t i = 0; i < std::size_t(d) * d * d; ++i) {
      const int w[3] = {int(i % d) * 2 - n, int((i / d) % d) * 2 - n, int(i / (d * d)) * 2 - n};
      // camera cell c samples M c, so the voxel is seen from c = M^T w
      int c[3];
      for (int k = 0; k < 3; ++k) c[k] = (m[0][k] * w[0] + m[1][k] * w[1] + m[2][k] * w[2] + n) / 2;
      const auto p = project_voxel(i, Viewpoint(yaw, pitch), d);
      ASSERT_FALSE(p.off_image);
      ASSERT_EQ(p.footprint.size(), 1u);
      EXPECT_EQ(p.footprint[0], (PixelIndex{std::uint32_t(c[1]), std::uint32_t(c[2])}));
    }
  }
}

TEST(ProjectVoxel, CornersLeaveTheFrame) {
  // the corner voxel of a cube rotated 45 degrees in yaw lands outside
  const auto p = project_voxel(0, Viewpoint(45, 0), 16);
  EXPECT_TRUE(p.off_image);
  SilhouetteImage full(16, 16);
  for (std::size_t i = 0; i < full.size(); ++i) full.set(i);
  EXPECT_FALSE(p.inside(full));
}
