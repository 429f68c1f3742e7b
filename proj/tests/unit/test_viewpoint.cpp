#include <gtest/gtest.h>

#include <cmath>

#include "viewsel/viewpoint.hpp"

using namespace viewsel;

TEST(Viewpoint, WrapsYawAndClampsPitch) {
  EXPECT_EQ(Viewpoint(180, 0).yaw(), -180.0);
  EXPECT_EQ(Viewpoint(-180, 0).yaw(), -180.0);
  EXPECT_EQ(Viewpoint(185, 0).yaw(), -175.0);
  EXPECT_EQ(Viewpoint(-540, 0).yaw(), -180.0);
  EXPECT_EQ(Viewpoint(720 + 30, 0).yaw(), 30.0);
  EXPECT_EQ(Viewpoint(0, 95).pitch(), 90.0);
  EXPECT_EQ(Viewpoint(0, -91).pitch(), -90.0);
  EXPECT_EQ(Viewpoint(10, 20).roll(), 0.0);
  EXPECT_THROW(Viewpoint(std::nan(""), 0), std::invalid_argument);
  EXPECT_THROW(Viewpoint(0, INFINITY), std::invalid_argument);
}

TEST(Viewpoint, WrapStaysInRange) {
  for (double y = -2000; y < 2000; y += 0.37) {
    const double w = wrap_yaw(y);
    ASSERT_GE(w, -180.0);
    ASSERT_LT(w, 180.0);
    ASSERT_NEAR(std::remainder(w - y, 360.0), 0.0, 1e-9);
  }
}

TEST(Lattice, Interval30) {
  const auto l = discretize_viewpoints(30);
  EXPECT_EQ(l.n_yaw(), 12u);
  EXPECT_EQ(l.n_pitch(), 6u);
  ASSERT_EQ(l.size(), 72u);
  EXPECT_EQ(l.centers()[0], Viewpoint(-165, -75));
  EXPECT_EQ(l.centers()[1], Viewpoint(-135, -75));  // yaw varies fastest
  EXPECT_EQ(l.centers()[12], Viewpoint(-165, -45));
  EXPECT_EQ(l.centers()[71], Viewpoint(165, 75));
}

TEST(Lattice, OtherIntervals) {
  const auto l90 = discretize_viewpoints(90);
  EXPECT_EQ(l90.n_yaw(), 4u);
  EXPECT_EQ(l90.n_pitch(), 2u);
  EXPECT_EQ(l90.size(), 8u);
  EXPECT_EQ(discretize_viewpoints(15).size(), 288u);
  EXPECT_THROW((void)discretize_viewpoints(25), std::invalid_argument);
  EXPECT_THROW((void)discretize_viewpoints(0), std::invalid_argument);
  EXPECT_THROW((void)discretize_viewpoints(-30), std::invalid_argument);
}

TEST(Lattice, CellsPartitionTheRectangle) {
  const auto l = discretize_viewpoints(30);
  Rng rng(31);
  for (int t = 0; t < 5000; ++t) {
    const Viewpoint v(rng.uniform(-180, 180), rng.uniform(-90, 90));
    const auto cell = l.cell_of(v);
    const Viewpoint& c = l.center(cell);
    // the owning cell is the one whose center is within half an interval
    EXPECT_LE(std::fabs(v.yaw() - c.yaw()), 15.0);
    EXPECT_LE(std::fabs(v.pitch() - c.pitch()), 15.0);
    int owners = 0;
    for (const auto& other : l.centers()) {
      const bool in_yaw = v.yaw() >= other.yaw() - 15 && v.yaw() < other.yaw() + 15;
      const bool in_pitch = (v.pitch() >= other.pitch() - 15 && v.pitch() < other.pitch() + 15) ||
                            (other.pitch() == 75 && v.pitch() == 90);
      owners += in_yaw && in_pitch;
    }
    EXPECT_EQ(owners, 1);
  }
  EXPECT_EQ(l.cell_of(Viewpoint(0, 90)).pitch, 5u);
  EXPECT_EQ(l.cell_of(Viewpoint(-180, -90)), (LatticeIndex{0, 0}));
}

TEST(Lattice, IndexOfMatchesCenters) {
  const auto l = discretize_viewpoints(30);
  for (std::size_t i = 0; i < l.size(); ++i) {
    EXPECT_EQ(l.center(l.index_of(i)), l.centers()[i]);
    EXPECT_EQ(l.cell_of(l.centers()[i]), l.index_of(i));
  }
}

TEST(GaussianView, Examples) {
  Rng rng(1);
  const Viewpoint c(30, 40);
  EXPECT_EQ(sample_gaussian_view(c, 0.0, rng), c);
  EXPECT_EQ(sampling_sigma(30), 5.0);
  EXPECT_THROW((void)sample_gaussian_view(c, -1.0, rng), std::invalid_argument);
}

TEST(GaussianView, WrapAndClampAtTheEdges) {
  // Find draws that push across the seam, then check the rule on those draws.
  Rng rng(2);
  int wrapped = 0, clamped = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto v = sample_gaussian_view(Viewpoint(175, 85), 10.0, rng);
    EXPECT_GE(v.yaw(), -180.0);
    EXPECT_LT(v.yaw(), 180.0);
    EXPECT_LE(v.pitch(), 90.0);
    wrapped += v.yaw() < 0;
    clamped += v.pitch() == 90.0;
  }
  EXPECT_GT(wrapped, 0);
  EXPECT_GT(clamped, 0);
}

TEST(GaussianView, ReproducibleForEqualSeeds) {
  Rng a(99), b(99);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(sample_gaussian_view(Viewpoint(10, 10), 5.0, a),
              sample_gaussian_view(Viewpoint(10, 10), 5.0, b));
  }
}

TEST(GaussianView, SpreadMatchesSigma) {
  Rng rng(3);
  double s2y = 0, s2p = 0;
  const int n = 20000;
  for (int t = 0; t < n; ++t) {
    const auto v = sample_gaussian_view(Viewpoint(0, 0), 5.0, rng);
    s2y += v.yaw() * v.yaw();
    s2p += v.pitch() * v.pitch();
  }
  EXPECT_NEAR(std::sqrt(s2y / n), 5.0, 0.1);
  EXPECT_NEAR(std::sqrt(s2p / n), 5.0, 0.1);
}

TEST(CameraDirection, PointsFromTheViewpoint) {
  const auto d0 = camera_direction(Viewpoint(0, 0));
  EXPECT_DOUBLE_EQ(d0.x, -1.0);
  const auto up = camera_direction(Viewpoint(0, 90));
  EXPECT_DOUBLE_EQ(up.z, 1.0);
  EXPECT_NEAR(angle_between_deg(camera_direction(Viewpoint(0, 0)),
                                camera_direction(Viewpoint(90, 0))),
              90.0, 1e-9);
}
