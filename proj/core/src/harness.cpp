#include "viewsel/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "viewsel/parallel.hpp"
#include "viewsel/selection.hpp"

namespace viewsel {

namespace {

// Random stream keys. Every draw in a run comes from a stream keyed by
// (seed, purpose, ...), so worker scheduling cannot change results.
enum StreamKey : std::uint64_t {
  kInitialViews = 1,
  kObjectRound = 2,
  kSubset = 3,
  kShape = 4,
};

VoxelGrid binarize(const VoxelGrid& grid, double tau) { return threshold_grid(grid, tau).to_grid(); }

}  // namespace

std::size_t lattice_stride(std::size_t lattice_size) noexcept {
  if (lattice_size <= 2) return 1;
  std::size_t s = (lattice_size * 2 + 4) / 5;  // ceil(0.4 * size)
  while (std::gcd(s, lattice_size) != 1) ++s;
  return s;
}

namespace {

}  // namespace

std::string_view to_string(PoolMode mode) noexcept {
  switch (mode) {
    case PoolMode::pool_only: return "pool-only";
    case PoolMode::fresh_only: return "fresh-only";
    case PoolMode::mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(SelectionPolicy policy) noexcept {
  switch (policy) {
    case SelectionPolicy::error_guided: return "error-guided";
    case SelectionPolicy::random: return "random";
    case SelectionPolicy::fixed_lattice: return "fixed-lattice";
  }
  return "?";
}

PoolMode parse_pool_mode(std::string_view name) {
  for (auto m : {PoolMode::pool_only, PoolMode::fresh_only, PoolMode::mixed}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown pool mode '" + std::string(name) + "'");
}

SelectionPolicy parse_selection_policy(std::string_view name) {
  for (auto p : {SelectionPolicy::error_guided, SelectionPolicy::random,
                 SelectionPolicy::fixed_lattice}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown selection policy '" + std::string(name) + "'");
}

void LoopConfig::validate() const {
  if (dim < 8 || dim > 256) throw std::invalid_argument("dim must be in [8, 256]");
  if (interval_deg <= 0 || 180 % interval_deg != 0) {
    throw std::invalid_argument("interval_deg must be a positive divisor of 180");
  }
  const std::size_t lattice = static_cast<std::size_t>(360 / interval_deg) * (180 / interval_deg);
  if (views_per_round == 0 || views_per_round > lattice) {
    throw std::invalid_argument("views_per_round must be in [1, lattice size]");
  }
  if (views_per_round > initial_distribution.views_per_object) {
    throw std::invalid_argument("views_per_round exceeds the initial distribution's view count");
  }
  if (initial_distribution.kind == ViewDistributionKind::aligned &&
      initial_distribution.views_per_object != kAlignedViewCount) {
    throw std::invalid_argument("the aligned distribution has exactly 24 views");
  }
  if (!(update_fraction > 0.0 && update_fraction <= 1.0)) {
    throw std::invalid_argument("update_fraction must be in (0, 1]");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw std::invalid_argument("threshold must be in [0,1]");
  if (pool_capacity == 0) throw std::invalid_argument("pool_capacity must be positive");
}

std::vector<CorpusObject> generate_corpus(std::size_t count, std::uint32_t dim, std::uint64_t seed,
                                          std::span<const ShapeKind> kinds) {
  if (kinds.empty()) throw std::invalid_argument("generate_corpus needs at least one shape kind");
  std::vector<CorpusObject> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const ShapeKind kind = kinds[i % kinds.size()];
    Rng rng = Rng::derive(seed, {kShape, i});
    ShapeSpec spec;
    spec.kind = kind;
    corpus.push_back({std::string(to_string(kind)), generate_shape(spec, dim, rng)});
  }
  return corpus;
}

ObjectState initial_state(std::size_t object_index, const LoopConfig& config,
                          const ViewProvider& provider, const Reconstructor& reconstructor) {
  Rng rng = Rng::derive(config.seed, {kInitialViews, object_index});
  std::vector<Viewpoint> pool = sample_dataset_viewpoints(config.initial_distribution, rng);
  // Partial Fisher-Yates: the first views_per_round entries become the input views.
  for (std::size_t i = 0; i < config.views_per_round; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  ObjectState state;
  for (std::size_t i = 0; i < config.views_per_round; ++i) {
    state.observations.push_back({pool[i], provider.render(object_index, pool[i])});
  }
  state.prediction = reconstructor.reconstruct(state.observations);
  return state;
}

ObjectMetrics evaluate(const CorpusObject& object, const ObjectState& state, double threshold) {
  const OccupancySet pred = threshold_grid(state.prediction, threshold);
  const OccupancySet gt = threshold_grid(object.gt, threshold);
  ObjectMetrics m;
  m.iou = iou(pred, gt);
  m.f_score = f_score(pred, gt);
  m.excess_voxels = excess_count(pred, gt);
  m.view_count = state.observations.size();
  m.converged = state.converged;
  return m;
}

ObjectStep run_object_iteration(const CorpusObject& object, std::size_t object_index,
                                ObjectState& state, const LoopConfig& config,
                                const ViewpointPool& pool, const ViewProvider& provider,
                                const Reconstructor& reconstructor, Rng& rng) {
  ObjectStep step;
  const VoxelGrid gt = binarize(object.gt, config.threshold);
  const VoxelGrid pred = binarize(state.prediction, config.threshold);
  if (state.converged || pred == gt) {
    state.converged = true;
    step.converged = true;
    return step;
  }

  const std::size_t n = config.views_per_round;
  switch (config.selection_policy) {
    case SelectionPolicy::error_guided: {
      std::size_t from_pool = 0;
      if (config.pool_mode == PoolMode::pool_only) from_pool = n;
      if (config.pool_mode == PoolMode::mixed) from_pool = n / 2;
      if (from_pool > 0) {
        if (pool.has(object.category)) {
          step.added = pool.sample_by_category(object.category, from_pool, rng);
          step.pooled = from_pool;
        } else if (config.pool_mode == PoolMode::pool_only) {
          step.warnings.push_back("pool empty for category '" + object.category +
                                  "'; fell back to fresh selection");
        }
      }
      const std::size_t fresh = n - step.pooled;
      if (fresh > 0) {
        step.fresh_selected = select_and_sample(pred, gt, config.interval_deg, fresh, rng);
        step.added.insert(step.added.end(), step.fresh_selected.begin(), step.fresh_selected.end());
      }
      break;
    }
    case SelectionPolicy::random:
      step.added = sample_dataset_viewpoints({ViewDistributionKind::spherical, n}, rng);
      break;
    case SelectionPolicy::fixed_lattice: {
      const ViewpointLattice lattice = discretize_viewpoints(config.interval_deg);
      const std::size_t stride = lattice_stride(lattice.size());
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t visit = (state.lattice_cursor + i) % lattice.size();
        step.added.push_back(lattice.centers()[visit * stride % lattice.size()]);
      }
      state.lattice_cursor = (state.lattice_cursor + n) % lattice.size();
      break;
    }
  }

  for (const auto& v : step.added) {
    state.observations.push_back({v, provider.render(object_index, v)});
  }
  state.prediction = reconstructor.reconstruct(state.observations);
  return step;
}

std::size_t update_subset_size(double fraction, std::size_t corpus_size,
                               std::size_t open_objects) noexcept {
  const auto target = static_cast<std::size_t>(
      std::max(1.0, std::round(fraction * static_cast<double>(corpus_size))));
  return std::min(target, open_objects);
}

RunReport run_loop(std::span<const CorpusObject> corpus, const LoopConfig& config) {
  std::vector<VoxelGrid> gts;
  gts.reserve(corpus.size());
  for (const auto& obj : corpus) gts.push_back(obj.gt);
  const GroundTruthProvider provider(gts, config.threshold);
  const SpaceCarver carver(config.dim);
  return run_loop(corpus, config, provider, carver);
}

RunReport run_loop(std::span<const CorpusObject> corpus, const LoopConfig& config,
                   const ViewProvider& provider, const Reconstructor& reconstructor) {
  config.validate();
  if (corpus.empty()) throw std::invalid_argument("run_loop needs a non-empty corpus");
  const GridDims want{config.dim, config.dim, config.dim};
  for (const auto& obj : corpus) {
    if (obj.gt.dims() != want) {
      throw DimensionMismatch("corpus object '" + obj.category + "' has dims " +
                              obj.gt.dims().str() + ", config dim is " + want.str());
    }
    if (obj.category.empty()) throw std::invalid_argument("corpus objects need a category");
  }
  if (reconstructor.dims() != want) {
    throw DimensionMismatch("reconstructor dims do not match config dim");
  }

  const auto started = std::chrono::steady_clock::now();
  const std::size_t count = corpus.size();
  RunReport report;
  report.config = config;
  report.pool = ViewpointPool(config.pool_capacity);
  report.objects.resize(count);

  std::vector<ObjectState> states(count);
  parallel_for(
      count,
      [&](std::size_t i) { states[i] = initial_state(i, config, provider, reconstructor); },
      config.workers);

  auto evaluate_all = [&](std::size_t iteration, std::span<const ObjectStep* const> steps) {
    IterationSummary summary{iteration};
    for (std::size_t i = 0; i < count; ++i) {
      IterationRecord rec;
      rec.iteration = iteration;
      if (const ObjectStep* step = steps.empty() ? nullptr : steps[i]) {
        rec.updated = !step->converged;
        rec.added = step->added;
        rec.pooled = step->pooled;
        rec.warnings = step->warnings;
        summary.updated_objects += rec.updated;
      }
      rec.metrics = evaluate(corpus[i], states[i], config.threshold);
      if (threshold_grid(states[i].prediction, config.threshold) ==
          threshold_grid(corpus[i].gt, config.threshold)) {
        states[i].converged = true;
        rec.metrics.converged = true;
      }
      summary.converged_objects += rec.metrics.converged;
      summary.mean_iou += rec.metrics.iou;
      summary.mean_f_score += rec.metrics.f_score;
      summary.mean_excess_voxels += static_cast<double>(rec.metrics.excess_voxels);
      report.objects[i].iterations.push_back(std::move(rec));
    }
    summary.mean_iou /= static_cast<double>(count);
    summary.mean_f_score /= static_cast<double>(count);
    summary.mean_excess_voxels /= static_cast<double>(count);
    report.summary.push_back(summary);
  };

  for (std::size_t i = 0; i < count; ++i) {
    report.objects[i].category = corpus[i].category;
    for (const auto& obs : states[i].observations) report.objects[i].initial_views.push_back(obs.viewpoint);
  }
  evaluate_all(0, {});

  for (std::size_t t = 1; t <= config.iterations; ++t) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < count; ++i) {
      if (!states[i].converged) open.push_back(i);
    }
    const std::size_t k = update_subset_size(config.update_fraction, count, open.size());
    Rng subset_rng = Rng::derive(config.seed, {kSubset, t});
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(open[i], open[i + subset_rng.below(open.size() - i)]);
    }
    open.resize(k);
    std::sort(open.begin(), open.end());

    // Workers read a snapshot of the pool; it is only written below.
    std::vector<ObjectStep> steps(k);
    parallel_for(
        k,
        [&](std::size_t s) {
          const std::size_t obj = open[s];
          Rng rng = Rng::derive(config.seed, {kObjectRound, obj, t});
          steps[s] = run_object_iteration(corpus[obj], obj, states[obj], config, report.pool,
                                          provider, reconstructor, rng);
        },
        config.workers);

    std::vector<const ObjectStep*> by_object(count, nullptr);
    for (std::size_t s = 0; s < k; ++s) {
      by_object[open[s]] = &steps[s];
      if (config.selection_policy == SelectionPolicy::error_guided &&
          !steps[s].fresh_selected.empty()) {
        report.pool.record(corpus[open[s]].category, steps[s].fresh_selected);
      }
    }
    evaluate_all(t, by_object);
  }

  if (config.record_wall_clock) {
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  return report;
}

ComparisonReport compare_policies(std::span<const CorpusObject> corpus, const LoopConfig& base) {
  ComparisonReport out;
  out.base = base;
  for (auto policy : {SelectionPolicy::error_guided, SelectionPolicy::random,
                      SelectionPolicy::fixed_lattice}) {
    LoopConfig cfg = base;
    cfg.selection_policy = policy;
    const RunReport run = run_loop(corpus, cfg);
    PolicyTrajectory traj;
    traj.policy = policy;
    for (const auto& s : run.summary) {
      traj.mean_iou.push_back(s.mean_iou);
      traj.mean_f_score.push_back(s.mean_f_score);
    }
    out.policies.push_back(std::move(traj));
  }
  for (std::size_t a = 0; a < out.policies.size(); ++a) {
    for (std::size_t b = a + 1; b < out.policies.size(); ++b) {
      const auto& pa = out.policies[a];
      const auto& pb = out.policies[b];
      out.deltas.push_back({pa.policy, pb.policy, pa.mean_iou.back() - pb.mean_iou.back(),
                            pa.mean_f_score.back() - pb.mean_f_score.back()});
    }
  }
  return out;
}

}  // namespace viewsel
