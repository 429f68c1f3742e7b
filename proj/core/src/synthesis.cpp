#include "viewsel/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "viewsel/rotation.hpp"
#include "viewsel/selection.hpp"

namespace viewsel {

SilhouetteImage::SilhouetteImage(std::uint32_t dims_y, std::uint32_t dims_z)
    : dims_y_(dims_y), dims_z_(dims_z), pixels_(static_cast<std::size_t>(dims_y) * dims_z, false) {
  if (dims_y == 0 || dims_z == 0) throw std::invalid_argument("silhouette dims must be positive");
}

std::size_t SilhouetteImage::count() const noexcept {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), true));
}

SilhouetteImage render_silhouette(const VoxelGrid& gt, const Viewpoint& v, double tau) {
  const VoxelGrid occupancy = threshold_grid(gt, tau).to_grid();
  const ErrorProjectionMap hits = project_first_hit(rotate_grid(occupancy, v));
  SilhouetteImage sil(hits.dims_y, hits.dims_z);
  for (std::size_t i = 0; i < hits.pixels.size(); ++i) {
    if (hits.pixels[i] > 0.0f) sil.set(i);
  }
  return sil;
}

std::string_view to_string(ViewDistributionKind kind) noexcept {
  switch (kind) {
    case ViewDistributionKind::aligned: return "aligned";
    case ViewDistributionKind::hemispherical: return "hemispherical";
    case ViewDistributionKind::spherical: return "spherical";
  }
  return "?";
}

ViewDistributionKind parse_view_distribution(std::string_view name) {
  if (name == "aligned") return ViewDistributionKind::aligned;
  if (name == "hemispherical") return ViewDistributionKind::hemispherical;
  if (name == "spherical") return ViewDistributionKind::spherical;
  throw std::invalid_argument("unknown view distribution '" + std::string(name) + "'");
}

std::vector<Viewpoint> sample_dataset_viewpoints(const ViewDistribution& dist, Rng& rng) {
  if (dist.views_per_object == 0) throw std::invalid_argument("views_per_object must be positive");
  std::vector<Viewpoint> views;
  views.reserve(dist.views_per_object);
  switch (dist.kind) {
    case ViewDistributionKind::aligned:
      if (dist.views_per_object != kAlignedViewCount) {
        throw std::invalid_argument("the aligned distribution has exactly 24 views");
      }
      for (std::size_t k = 0; k < kAlignedViewCount; ++k) {
        views.emplace_back(-180.0 + static_cast<double>(k) * kAlignedYawStepDeg, kAlignedPitchDeg);
      }
      break;
    case ViewDistributionKind::hemispherical:
    case ViewDistributionKind::spherical: {
      const double pitch_lo = dist.kind == ViewDistributionKind::hemispherical ? 0.0 : -90.0;
      for (std::size_t k = 0; k < dist.views_per_object; ++k) {
        const double yaw = rng.uniform(-180.0, 180.0);
        const double pitch = rng.uniform(pitch_lo, 90.0);
        views.emplace_back(yaw, pitch);
      }
      break;
    }
  }
  return views;
}

GroundTruthProvider::GroundTruthProvider(std::span<const VoxelGrid> objects, double tau)
    : objects_(objects), tau_(tau) {}

SilhouetteImage GroundTruthProvider::render(std::size_t object_id, const Viewpoint& v) const {
  if (object_id >= objects_.size()) throw std::out_of_range("unknown object id");
  return render_silhouette(objects_[object_id], v, tau_);
}

NoisyProvider::NoisyProvider(const ViewProvider& inner, double flip_probability,
                             std::uint64_t seed)
    : inner_(inner), p_(flip_probability), seed_(seed) {
  if (!(p_ >= 0.0 && p_ <= 1.0)) throw std::invalid_argument("flip probability must be in [0,1]");
}

SilhouetteImage NoisyProvider::render(std::size_t object_id, const Viewpoint& v) const {
  SilhouetteImage sil = inner_.render(object_id, v);
  if (p_ == 0.0) return sil;
  Rng rng = Rng::derive(seed_, {object_id, std::bit_cast<std::uint64_t>(v.yaw()),
                                std::bit_cast<std::uint64_t>(v.pitch())});
  for (std::size_t i = 0; i < sil.size(); ++i) {
    if (rng.uniform() < p_) sil.set(i, !sil.test(i));
  }
  return sil;
}

// ---------------------------------------------------------------------------
// Synthetic shapes

namespace {

constexpr std::array<ShapeKind, 6> kShapeKinds = {ShapeKind::box,   ShapeKind::sphere,
                                                  ShapeKind::ell,   ShapeKind::cross,
                                                  ShapeKind::union_of_boxes,
                                                  ShapeKind::random_blob};

struct Vec3 {
  double x, y, z;
};

using Inside = std::function<bool(const Vec3&)>;

/// Rasterizes a predicate over voxel centers relative to the grid center,
/// restricted to the inscribed ball.
VoxelGrid rasterize(std::uint32_t dim, const Inside& inside) {
  VoxelGrid grid = VoxelGrid::cube(dim);
  const double center = (dim - 1.0) / 2.0;
  const double ball = center * center;
  for (std::uint32_t z = 0; z < dim; ++z)
    for (std::uint32_t y = 0; y < dim; ++y)
      for (std::uint32_t x = 0; x < dim; ++x) {
        const Vec3 c{x - center, y - center, z - center};
        if (c.x * c.x + c.y * c.y + c.z * c.z > ball) continue;
        if (inside(c)) grid.set(x, y, z, 1.0f);
      }
  return grid;
}

struct AxisBox {
  Vec3 lo, hi;
  bool contains(const Vec3& c) const noexcept {
    return c.x >= lo.x && c.x < hi.x && c.y >= lo.y && c.y < hi.y && c.z >= lo.z && c.z < hi.z;
  }
};

AxisBox centered_box(Vec3 center, Vec3 size) {
  return {{center.x - size.x / 2, center.y - size.y / 2, center.z - size.z / 2},
          {center.x + size.x / 2, center.y + size.y / 2, center.z + size.z / 2}};
}

/// Random signed axis permutation applied to a point.
struct Orientation {
  std::array<int, 3> perm{0, 1, 2};
  std::array<double, 3> sign{1, 1, 1};

  static Orientation random(Rng& rng) {
    Orientation o;
    for (std::size_t i = 2; i > 0; --i) std::swap(o.perm[i], o.perm[rng.below(i + 1)]);
    for (auto& s : o.sign) s = rng.below(2) ? 1.0 : -1.0;
    return o;
  }
  Vec3 apply(const Vec3& c) const noexcept {
    const double in[3] = {c.x, c.y, c.z};
    return {sign[0] * in[perm[0]], sign[1] * in[perm[1]], sign[2] * in[perm[2]]};
  }
};

Inside make_random_shape(ShapeKind kind, double d, Rng& rng) {
  auto u = [&](double lo, double hi) { return rng.uniform(lo * d, hi * d); };
  switch (kind) {
    case ShapeKind::box: {
      const Vec3 size{u(0.3, 0.6), u(0.3, 0.6), u(0.3, 0.6)};
      const auto box = centered_box({0, 0, 0}, size);
      return [box](const Vec3& c) { return box.contains(c); };
    }
    case ShapeKind::sphere: {
      const double r = u(0.2, 0.45);
      return [r](const Vec3& c) { return c.x * c.x + c.y * c.y + c.z * c.z <= r * r; };
    }
    case ShapeKind::ell: {
      const double a = u(0.5, 0.75);   // foot length
      const double b = u(0.5, 0.75);   // upright length
      const double t = u(0.18, 0.28);  // arm thickness
      const double w = u(0.2, 0.35);   // extrusion width
      const AxisBox foot{{-a / 2, -w / 2, -b / 2}, {a / 2, w / 2, -b / 2 + t}};
      const AxisBox upright{{-a / 2, -w / 2, -b / 2}, {-a / 2 + t, w / 2, b / 2}};
      const Orientation o = Orientation::random(rng);
      return [=](const Vec3& c) {
        const Vec3 p = o.apply(c);
        return foot.contains(p) || upright.contains(p);
      };
    }
    case ShapeKind::cross: {
      const double t = u(0.14, 0.22);
      std::array<AxisBox, 3> bars;
      for (int axis = 0; axis < 3; ++axis) {
        const double off1 = u(-0.08, 0.08);
        const double off2 = u(-0.08, 0.08);
        const double neg = u(0.12, 0.42);
        const double pos = u(0.12, 0.42);
        Vec3 lo{off1 - t / 2, off2 - t / 2, -neg};
        Vec3 hi{off1 + t / 2, off2 + t / 2, pos};
        // Rotate the (bar-local) z axis onto `axis`.
        if (axis == 0) {
          lo = {lo.z, lo.x, lo.y};
          hi = {hi.z, hi.x, hi.y};
        } else if (axis == 1) {
          lo = {lo.x, lo.z, lo.y};
          hi = {hi.x, hi.z, hi.y};
        }
        bars[axis] = AxisBox{lo, hi};
      }
      return [bars](const Vec3& c) {
        return std::any_of(bars.begin(), bars.end(), [&](const AxisBox& b) { return b.contains(c); });
      };
    }
    case ShapeKind::union_of_boxes: {
      const std::size_t n = 2 + rng.below(3);
      std::vector<AxisBox> boxes;
      for (std::size_t i = 0; i < n; ++i) {
        const Vec3 center{u(-0.2, 0.2), u(-0.2, 0.2), u(-0.2, 0.2)};
        boxes.push_back(centered_box(center, {u(0.15, 0.4), u(0.15, 0.4), u(0.15, 0.4)}));
      }
      return [boxes](const Vec3& c) {
        return std::any_of(boxes.begin(), boxes.end(), [&](const AxisBox& b) { return b.contains(c); });
      };
    }
    case ShapeKind::random_blob: {
      struct Ball {
        Vec3 c;
        double r;
      };
      const std::size_t n = 3 + rng.below(4);
      std::vector<Ball> balls;
      for (std::size_t i = 0; i < n; ++i) {
        balls.push_back({{u(-0.2, 0.2), u(-0.2, 0.2), u(-0.2, 0.2)}, u(0.1, 0.22)});
      }
      return [balls](const Vec3& c) {
        return std::any_of(balls.begin(), balls.end(), [&](const Ball& b) {
          const double dx = c.x - b.c.x, dy = c.y - b.c.y, dz = c.z - b.c.z;
          return dx * dx + dy * dy + dz * dz <= b.r * b.r;
        });
      };
    }
  }
  throw std::invalid_argument("unknown shape kind");
}

bool fill_ok(const VoxelGrid& g) {
  const double fill = static_cast<double>(g.count_nonzero()) / static_cast<double>(g.size());
  return fill >= kMinShapeFill && fill <= kMaxShapeFill;
}

}  // namespace

std::string_view to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::box: return "box";
    case ShapeKind::sphere: return "sphere";
    case ShapeKind::ell: return "ell";
    case ShapeKind::cross: return "cross";
    case ShapeKind::union_of_boxes: return "union-of-boxes";
    case ShapeKind::random_blob: return "random-blob";
  }
  return "?";
}

ShapeKind parse_shape_kind(std::string_view name) {
  for (ShapeKind k : kShapeKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown shape kind '" + std::string(name) + "'");
}

std::span<const ShapeKind> all_shape_kinds() noexcept { return kShapeKinds; }

VoxelGrid generate_shape(const ShapeSpec& spec, std::uint32_t dim, Rng& rng) {
  if (dim < 8) throw std::invalid_argument("shape dim must be at least 8");
  if (spec.radius && spec.kind != ShapeKind::sphere) {
    throw std::invalid_argument("radius only applies to sphere shapes");
  }
  if (spec.size && spec.kind != ShapeKind::box) {
    throw std::invalid_argument("size only applies to box shapes");
  }

  if (spec.radius || spec.size) {
    Inside inside;
    if (spec.radius) {
      const double r = *spec.radius;
      if (!(r > 0.0)) throw std::invalid_argument("sphere radius must be positive");
      inside = [r](const Vec3& c) { return c.x * c.x + c.y * c.y + c.z * c.z <= r * r; };
    } else {
      const auto& s = *spec.size;
      const auto box = centered_box({0, 0, 0}, {double(s[0]), double(s[1]), double(s[2])});
      inside = [box](const Vec3& c) { return box.contains(c); };
    }
    VoxelGrid grid = rasterize(dim, inside);
    if (!fill_ok(grid)) {
      throw std::invalid_argument("shape parameters give an occupancy fraction outside [1%, 60%]");
    }
    return grid;
  }

  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    VoxelGrid grid = rasterize(dim, make_random_shape(spec.kind, dim, rng));
    if (fill_ok(grid)) return grid;
  }
  throw std::runtime_error("could not generate a '" + std::string(to_string(spec.kind)) +
                           "' shape within the fill bounds");
}

}  // namespace viewsel
