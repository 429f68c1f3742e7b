#include "viewsel/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json_convert.hpp"
#include "viewsel/vxg_format.hpp"

namespace viewsel {

using nlohmann::json;

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field '") + key + "': " + e.what());
  }
}

json config_json(const LoopConfig& c) {
  return json{{"schema_version", kSchemaVersion},
              {"dim", c.dim},
              {"interval_deg", c.interval_deg},
              {"views_per_round", c.views_per_round},
              {"initial_distribution", to_string(c.initial_distribution.kind)},
              {"initial_views_per_object", c.initial_distribution.views_per_object},
              {"iterations", c.iterations},
              {"update_fraction", c.update_fraction},
              {"pool_mode", to_string(c.pool_mode)},
              {"selection_policy", to_string(c.selection_policy)},
              {"seed", c.seed},
              {"threshold", c.threshold},
              {"pool_capacity", c.pool_capacity},
              {"record_wall_clock", c.record_wall_clock}};
}

LoopConfig config_from(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " + j.at("schema_version").dump());
  }
  LoopConfig c;
  read_field(j, "dim", c.dim);
  read_field(j, "interval_deg", c.interval_deg);
  read_field(j, "views_per_round", c.views_per_round);
  read_field(j, "initial_views_per_object", c.initial_distribution.views_per_object);
  read_field(j, "iterations", c.iterations);
  read_field(j, "update_fraction", c.update_fraction);
  read_field(j, "seed", c.seed);
  read_field(j, "threshold", c.threshold);
  read_field(j, "pool_capacity", c.pool_capacity);
  read_field(j, "record_wall_clock", c.record_wall_clock);
  read_field(j, "workers", c.workers);
  std::string name;
  if (j.contains("initial_distribution")) {
    read_field(j, "initial_distribution", name);
    c.initial_distribution.kind = parse_view_distribution(name);
  }
  if (j.contains("pool_mode")) {
    read_field(j, "pool_mode", name);
    c.pool_mode = parse_pool_mode(name);
  }
  if (j.contains("selection_policy")) {
    read_field(j, "selection_policy", name);
    c.selection_policy = parse_selection_policy(name);
  }
  c.validate();
  return c;
}

std::vector<CorpusObject> load_file_list(const json& files, const std::filesystem::path& base_dir) {
  if (!files.is_array()) throw std::invalid_argument("corpus file list must be an array");
  std::vector<CorpusObject> corpus;
  for (const auto& entry : files) {
    const auto path = base_dir / entry.at("path").get<std::string>();
    corpus.push_back({entry.at("category").get<std::string>(), read_vxg(path).grid});
  }
  return corpus;
}

json views_json(const std::vector<Viewpoint>& views) {
  json arr = json::array();
  for (const auto& v : views) arr.push_back(v);
  return arr;
}

json metrics_json(const IterationRecord& r) {
  json j{{"iteration", r.iteration},
         {"updated", r.updated},
         {"added", views_json(r.added)},
         {"pooled", r.pooled},
         {"view_count", r.metrics.view_count},
         {"iou", r.metrics.iou},
         {"f_score", r.metrics.f_score},
         {"excess_voxels", r.metrics.excess_voxels},
         {"converged", r.metrics.converged},
         {"loss", nullptr},
         {"warnings", r.warnings}};
  return j;
}

}  // namespace

LoopConfig parse_loop_config(const std::string& text) {
  return config_from(parse_json(text, "config"));
}

LoopSetup parse_loop_setup(const std::string& text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text, "config");
  LoopSetup setup{config_from(j), {}};
  if (!j.contains("corpus")) throw std::invalid_argument("config has no corpus section");
  const json& corpus = j.at("corpus");
  if (corpus.contains("generate")) {
    const json& g = corpus.at("generate");
    std::vector<ShapeKind> kinds;
    if (g.contains("kinds")) {
      for (const auto& k : g.at("kinds")) kinds.push_back(parse_shape_kind(k.get<std::string>()));
    } else {
      const auto all = all_shape_kinds();
      kinds.assign(all.begin(), all.end());
    }
    setup.corpus = generate_corpus(g.at("count").get<std::size_t>(), setup.config.dim,
                                   g.value("seed", std::uint64_t{0}), kinds);
  } else if (corpus.contains("files")) {
    setup.corpus = load_file_list(corpus.at("files"), base_dir);
  } else if (corpus.contains("manifest")) {
    const auto manifest_path = base_dir / corpus.at("manifest").get<std::string>();
    const json manifest = parse_json(read_text(manifest_path), "manifest");
    setup.corpus = load_file_list(manifest.at("objects"), manifest_path.parent_path());
  } else {
    throw std::invalid_argument("corpus must contain 'generate', 'files' or 'manifest'");
  }
  return setup;
}

std::string config_to_json(const LoopConfig& config) { return config_json(config).dump(); }

std::string report_to_json(const RunReport& report) {
  json objects = json::array();
  for (std::size_t i = 0; i < report.objects.size(); ++i) {
    const auto& o = report.objects[i];
    json iterations = json::array();
    for (const auto& r : o.iterations) iterations.push_back(metrics_json(r));
    objects.push_back(json{{"index", i},
                           {"category", o.category},
                           {"initial_views", views_json(o.initial_views)},
                           {"iterations", std::move(iterations)}});
  }
  json summary = json::array();
  for (const auto& s : report.summary) {
    summary.push_back(json{{"iteration", s.iteration},
                           {"updated_objects", s.updated_objects},
                           {"converged_objects", s.converged_objects},
                           {"mean_iou", s.mean_iou},
                           {"mean_f_score", s.mean_f_score},
                           {"mean_excess_voxels", s.mean_excess_voxels},
                           {"mean_loss", nullptr}});
  }
  json j{{"schema_version", kSchemaVersion},
         {"config", config_json(report.config)},
         {"fscore_definition", "voxel-F1"},
         {"objects", std::move(objects)},
         {"summary", std::move(summary)},
         {"pool", json::parse(save_pool(report.pool))}};
  if (report.wall_clock_seconds) j["wall_clock_seconds"] = *report.wall_clock_seconds;
  return j.dump();
}

std::string comparison_to_json(const ComparisonReport& report) {
  json policies = json::object();
  for (const auto& p : report.policies) {
    policies[std::string(to_string(p.policy))] =
        json{{"mean_iou", p.mean_iou}, {"mean_f_score", p.mean_f_score}};
  }
  json deltas = json::array();
  for (const auto& d : report.deltas) {
    deltas.push_back(json{{"a", to_string(d.a)},
                          {"b", to_string(d.b)},
                          {"final_iou_delta", d.final_iou_delta},
                          {"final_f_score_delta", d.final_f_score_delta}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"config", config_json(report.base)},
              {"fscore_definition", "voxel-F1"},
              {"policies", std::move(policies)},
              {"deltas", std::move(deltas)}}
      .dump();
}

std::string selection_to_json(const SelectionResult& result) {
  json scores = json::array();
  for (const auto& s : result.scores) {
    scores.push_back(json{{"yaw", s.viewpoint.yaw()},
                          {"pitch", s.viewpoint.pitch()},
                          {"score", s.score},
                          {"lattice_index", {s.lattice_index.yaw, s.lattice_index.pitch}}});
  }
  return json{{"scores", std::move(scores)},
              {"selected", views_json(result.selected)},
              {"sampled", views_json(result.sampled)}}
      .dump();
}

std::string manifest_to_json(const std::vector<std::string>& paths,
                             const std::vector<std::string>& categories) {
  if (paths.size() != categories.size()) throw std::invalid_argument("manifest size mismatch");
  json objects = json::array();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    objects.push_back(json{{"path", paths[i]}, {"category", categories[i]}});
  }
  return json{{"objects", std::move(objects)}}.dump(2);
}

std::string viewpoints_to_json(const std::vector<Viewpoint>& views) { return views_json(views).dump(); }

std::vector<Viewpoint> viewpoints_from_json(const std::string& text) {
  const json j = parse_json(text, "viewpoints");
  if (!j.is_array()) throw FormatError("viewpoints: expected an array", 0);
  std::vector<Viewpoint> out;
  for (const auto& item : j) out.push_back(viewpoint_from_json(item));
  return out;
}

}  // namespace viewsel
