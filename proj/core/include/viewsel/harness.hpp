#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viewsel/reconstructor.hpp"
#include "viewsel/rng.hpp"
#include "viewsel/synthesis.hpp"
#include "viewsel/view_pool.hpp"
#include "viewsel/viewpoint.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

enum class PoolMode { pool_only, fresh_only, mixed };
enum class SelectionPolicy { error_guided, random, fixed_lattice };

[[nodiscard]] std::string_view to_string(PoolMode mode) noexcept;
[[nodiscard]] std::string_view to_string(SelectionPolicy policy) noexcept;
[[nodiscard]] PoolMode parse_pool_mode(std::string_view name);
[[nodiscard]] SelectionPolicy parse_selection_policy(std::string_view name);

struct LoopConfig {
  std::uint32_t dim = 32;
  int interval_deg = 30;
  std::size_t views_per_round = 3;
  ViewDistribution initial_distribution{};
  std::size_t iterations = 3;
  double update_fraction = 0.05;
  PoolMode pool_mode = PoolMode::mixed;
  SelectionPolicy selection_policy = SelectionPolicy::error_guided;
  std::uint64_t seed = 0;
  double threshold = kDefaultOccupancyThreshold;
  std::size_t pool_capacity = ViewpointPool::kDefaultCapacity;
  bool record_wall_clock = false;
  /// Worker threads for per-object work; 0 = hardware concurrency. Never affects results.
  std::size_t workers = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct CorpusObject {
  std::string category;
  VoxelGrid gt;
};

/// `count` shapes of edge `dim`; object i has kind kinds[i % kinds.size()],
/// category equal to the kind name, and its own random stream.
[[nodiscard]] std::vector<CorpusObject> generate_corpus(std::size_t count, std::uint32_t dim,
                                                        std::uint64_t seed,
                                                        std::span<const ShapeKind> kinds);

struct ObjectState {
  std::vector<ViewObservation> observations;
  VoxelGrid prediction = VoxelGrid::cube(1);
  bool converged = false;
  std::size_t lattice_cursor = 0;
};

struct ObjectMetrics {
  double iou = 0.0;
  double f_score = 0.0;
  std::size_t excess_voxels = 0;
  std::size_t view_count = 0;
  bool converged = false;
};

/// Outcome of one update round for one object.
struct ObjectStep {
  std::vector<Viewpoint> added;
  /// Freshly selected by the error-guided policy; these are what the pool records.
  std::vector<Viewpoint> fresh_selected;
  std::size_t pooled = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Initial observation set: views_per_round distinct views drawn from the
/// initial distribution, then one reconstruction.
[[nodiscard]] ObjectState initial_state(std::size_t object_index, const LoopConfig& config,
                                        const ViewProvider& provider,
                                        const Reconstructor& reconstructor);

/// Error -> viewpoint choice (per policy and pool mode) -> render -> append -> reconstruct.
/// An object whose prediction already equals its ground truth is marked
/// converged and left untouched.
ObjectStep run_object_iteration(const CorpusObject& object, std::size_t object_index,
                                ObjectState& state, const LoopConfig& config,
                                const ViewpointPool& pool, const ViewProvider& provider,
                                const Reconstructor& reconstructor, Rng& rng);

[[nodiscard]] ObjectMetrics evaluate(const CorpusObject& object, const ObjectState& state,
                                     double threshold);

struct IterationRecord {
  std::size_t iteration = 0;  // 0 is the initial reconstruction
  bool updated = false;
  std::vector<Viewpoint> added;
  std::size_t pooled = 0;
  ObjectMetrics metrics;
  std::vector<std::string> warnings;
};

struct ObjectReport {
  std::string category;
  std::vector<Viewpoint> initial_views;
  std::vector<IterationRecord> iterations;
};

struct IterationSummary {
  std::size_t iteration = 0;
  std::size_t updated_objects = 0;
  std::size_t converged_objects = 0;
  double mean_iou = 0.0;
  double mean_f_score = 0.0;
  double mean_excess_voxels = 0.0;
};

struct RunReport {
  LoopConfig config;
  std::vector<ObjectReport> objects;
  std::vector<IterationSummary> summary;
  ViewpointPool pool;
  std::optional<double> wall_clock_seconds;
};

/// Step of the fixed-lattice policy's walk over lattice centers: the smallest
/// integer >= 0.4 * size coprime to size, so one cycle visits every center once
/// without lingering in a single pitch row.
[[nodiscard]] std::size_t lattice_stride(std::size_t lattice_size) noexcept;

/// Objects updated per round: max(1, round(fraction * corpus size)), capped by
/// the number of objects not yet converged.
[[nodiscard]] std::size_t update_subset_size(double fraction, std::size_t corpus_size,
                                             std::size_t open_objects) noexcept;

/// Full loop with ground-truth silhouettes and the space carver.
[[nodiscard]] RunReport run_loop(std::span<const CorpusObject> corpus, const LoopConfig& config);

/// Full loop with caller-supplied view provider and reconstructor.
/// `provider` object ids are corpus indices.
[[nodiscard]] RunReport run_loop(std::span<const CorpusObject> corpus, const LoopConfig& config,
                                 const ViewProvider& provider, const Reconstructor& reconstructor);

struct PolicyTrajectory {
  SelectionPolicy policy = SelectionPolicy::error_guided;
  std::vector<double> mean_iou;      // per iteration, index 0 = initial
  std::vector<double> mean_f_score;
};

struct PolicyDelta {
  SelectionPolicy a = SelectionPolicy::error_guided;
  SelectionPolicy b = SelectionPolicy::random;
  double final_iou_delta = 0.0;  // a - b
  double final_f_score_delta = 0.0;
};

struct ComparisonReport {
  LoopConfig base;
  std::vector<PolicyTrajectory> policies;
  std::vector<PolicyDelta> deltas;
};

/// Runs error-guided, random and fixed-lattice selection with identical
/// corpus, initial views and view budget.
[[nodiscard]] ComparisonReport compare_policies(std::span<const CorpusObject> corpus,
                                                const LoopConfig& base);

}  // namespace viewsel
