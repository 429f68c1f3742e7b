#include "viewsel/voxel_grid.hpp"

#include <algorithm>
#include <cmath>

namespace viewsel {

namespace {

void require_same_dims(const GridDims& a, const GridDims& b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch " + a.str() +
                            " vs " + b.str());
  }
}

void require_valid_dims(const GridDims& dims) {
  if (dims.x == 0 || dims.y == 0 || dims.z == 0) {
    throw std::invalid_argument("grid dims must be positive, got " + dims.str());
  }
}

bool valid_value(float v) noexcept { return std::isfinite(v) && v >= 0.0f && v <= 1.0f; }

}  // namespace

std::string GridDims::str() const {
  return std::to_string(x) + "x" + std::to_string(y) + "x" + std::to_string(z);
}

VoxelGrid::VoxelGrid(GridDims dims, float fill) : dims_(dims) {
  require_valid_dims(dims);
  if (!valid_value(fill)) {
    throw std::invalid_argument("fill value outside [0,1]");
  }
  values_.assign(dims.count(), fill);
}

VoxelGrid::VoxelGrid(GridDims dims, std::vector<float> values)
    : dims_(dims), values_(std::move(values)) {
  require_valid_dims(dims);
  if (values_.size() != dims.count()) {
    throw std::invalid_argument("value count " + std::to_string(values_.size()) +
                                " does not match dims " + dims.str());
  }
  if (!std::all_of(values_.begin(), values_.end(), valid_value)) {
    throw std::invalid_argument("grid values must be finite and in [0,1]");
  }
}

void VoxelGrid::set(std::size_t i, float value) {
  if (!valid_value(value)) {
    throw std::invalid_argument("voxel value outside [0,1]");
  }
  values_.at(i) = value;
}

std::size_t VoxelGrid::count_nonzero() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](float v) { return v > 0.0f; }));
}

OccupancySet::OccupancySet(GridDims dims) : dims_(dims), bits_(dims.count(), false) {
  require_valid_dims(dims);
}

std::size_t OccupancySet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

VoxelGrid OccupancySet::to_grid() const {
  std::vector<float> values(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) values[i] = bits_[i] ? 1.0f : 0.0f;
  return VoxelGrid(dims_, std::move(values));
}

OccupancySet threshold_grid(const VoxelGrid& grid, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0,1]");
  }
  OccupancySet out(grid.dims());
  const auto values = grid.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<double>(values[i]) >= tau) out.set(i);
  }
  return out;
}

VoxelGrid error_grid(const VoxelGrid& pred, const VoxelGrid& gt) {
  require_same_dims(pred.dims(), gt.dims(), "error_grid");
  const auto p = pred.values();
  const auto g = gt.values();
  std::vector<float> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::fabs(p[i] - g[i]);
  return VoxelGrid(pred.dims(), std::move(out));
}

namespace {

struct SetCounts {
  std::size_t pred = 0;
  std::size_t gt = 0;
  std::size_t both = 0;
};

SetCounts count_sets(const OccupancySet& pred, const OccupancySet& gt, const char* what) {
  require_same_dims(pred.dims(), gt.dims(), what);
  SetCounts c;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const bool p = pred.test(i);
    const bool g = gt.test(i);
    c.pred += p;
    c.gt += g;
    c.both += (p && g);
  }
  return c;
}

}  // namespace

double iou(const OccupancySet& pred, const OccupancySet& gt) {
  const auto c = count_sets(pred, gt, "iou");
  const std::size_t uni = c.pred + c.gt - c.both;
  if (uni == 0) return 1.0;
  return static_cast<double>(c.both) / static_cast<double>(uni);
}

double f_score(const OccupancySet& pred, const OccupancySet& gt) {
  const auto c = count_sets(pred, gt, "f_score");
  if (c.pred == 0 && c.gt == 0) return 1.0;
  if (c.pred == 0 || c.gt == 0 || c.both == 0) return 0.0;
  // Harmonic mean of precision and recall collapses to 2|∩| / (|pred| + |gt|).
  return 2.0 * static_cast<double>(c.both) / static_cast<double>(c.pred + c.gt);
}

std::size_t excess_count(const OccupancySet& pred, const OccupancySet& gt) {
  const auto c = count_sets(pred, gt, "excess_count");
  return c.pred - c.both;
}

double bce_loss(const VoxelGrid& pred, const VoxelGrid& gt) {
  require_same_dims(pred.dims(), gt.dims(), "bce_loss");
  const auto p = pred.values();
  const auto g = gt.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pc = std::clamp(static_cast<double>(p[i]), kBceEpsilon, 1.0 - kBceEpsilon);
    const double gv = g[i];
    sum -= gv * std::log(pc) + (1.0 - gv) * std::log(1.0 - pc);
  }
  return sum / static_cast<double>(p.size());
}

double dice_loss(const VoxelGrid& pred, const VoxelGrid& gt) {
  require_same_dims(pred.dims(), gt.dims(), "dice_loss");
  const auto p = pred.values();
  const auto g = gt.values();
  double inter = 0.0;
  double sum_p = 0.0;
  double sum_g = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    inter += static_cast<double>(p[i]) * g[i];
    sum_p += p[i];
    sum_g += g[i];
  }
  const double loss = 1.0 - (2.0 * inter + kDiceSmoothing) / (sum_p + sum_g + kDiceSmoothing);
  return std::clamp(loss, 0.0, 1.0);
}

}  // namespace viewsel
