#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "viewsel/format_error.hpp"
#include "viewsel/harness.hpp"
#include "viewsel/selection.hpp"

namespace viewsel {

inline constexpr const char* kSchemaVersion = "v1";

/// A loop configuration together with the corpus it names.
struct LoopSetup {
  LoopConfig config;
  std::vector<CorpusObject> corpus;
};

/// Parses a v1 config document. Relative corpus paths resolve against base_dir.
///
///   {"schema_version": "v1", "dim": 32, "interval_deg": 30, "views_per_round": 3,
///    "initial_distribution": "aligned", "iterations": 3, "update_fraction": 0.05,
///    "pool_mode": "mixed", "selection_policy": "error-guided", "seed": 42,
///    "threshold": 0.4, "pool_capacity": 1024, "record_wall_clock": false,
///    "corpus": {"generate": {"count": 20, "seed": 7, "kinds": ["ell", "cross"]}}}
///
/// "corpus" may instead be {"files": [{"path": "a.vxg", "category": "chair"}, ...]}
/// or {"manifest": "shapes/manifest.json"} as written by `viewsel gen-shapes`.
/// Every field except "corpus" is optional and defaults to LoopConfig's value.
[[nodiscard]] LoopSetup parse_loop_setup(const std::string& json,
                                         const std::filesystem::path& base_dir);

[[nodiscard]] LoopConfig parse_loop_config(const std::string& json);
[[nodiscard]] std::string config_to_json(const LoopConfig& config);

/// Canonical (sorted keys, compact) report documents; equal inputs give equal bytes.
[[nodiscard]] std::string report_to_json(const RunReport& report);
[[nodiscard]] std::string comparison_to_json(const ComparisonReport& report);
[[nodiscard]] std::string selection_to_json(const SelectionResult& result);

/// Corpus manifest: {"objects": [{"path": ..., "category": ...}, ...]}.
[[nodiscard]] std::string manifest_to_json(const std::vector<std::string>& paths,
                                           const std::vector<std::string>& categories);

[[nodiscard]] std::string viewpoints_to_json(const std::vector<Viewpoint>& views);
[[nodiscard]] std::vector<Viewpoint> viewpoints_from_json(const std::string& json);

}  // namespace viewsel
