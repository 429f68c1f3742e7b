// viewsel: command-line front end for error-guided view selection.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "viewsel/harness.hpp"
#include "viewsel/json_io.hpp"
#include "viewsel/reconstructor.hpp"
#include "viewsel/selection.hpp"
#include "viewsel/sil_format.hpp"
#include "viewsel/synthesis.hpp"
#include "viewsel/vxg_format.hpp"

namespace fs = std::filesystem;
using namespace viewsel;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text << '\n';
}

VoxelGrid load_grid(const fs::path& path) {
  auto result = read_vxg(path);
  if (result.clamped > 0) {
    std::cerr << "warning: " << path.string() << ": clamped " << result.clamped
              << " values into [0,1]\n";
  }
  return std::move(result.grid);
}

struct SelectArgs {
  std::string pred, gt;
  int interval = 30;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  std::string out;
};

struct RenderArgs {
  std::string grid, out;
  double yaw = 0.0, pitch = 0.0, tau = kDefaultOccupancyThreshold;
};

struct GenArgs {
  std::size_t count = 20;
  std::uint32_t dim = 32;
  std::uint64_t seed = 0;
  std::vector<std::string> kinds;
  std::string out;
};

struct CarveArgs {
  std::string views, sil_dir, out;
  std::uint32_t dim = 32;
  bool bitpacked = false;
};

struct LoopArgs {
  std::string config, out;
};

int run_select(const SelectArgs& a) {
  const VoxelGrid pred = load_grid(a.pred);
  const VoxelGrid gt = load_grid(a.gt);
  Rng rng(a.seed);
  write_text(a.out, selection_to_json(select_views(pred, gt, a.interval, a.n, rng)));
  return 0;
}

int run_render(const RenderArgs& a) {
  const VoxelGrid grid = load_grid(a.grid);
  write_sil(a.out, render_silhouette(grid, Viewpoint(a.yaw, a.pitch), a.tau));
  return 0;
}

int run_gen_shapes(const GenArgs& a) {
  std::vector<ShapeKind> kinds;
  for (const auto& k : a.kinds) kinds.push_back(parse_shape_kind(k));
  if (kinds.empty()) {
    const auto all = all_shape_kinds();
    kinds.assign(all.begin(), all.end());
  }
  const auto corpus = generate_corpus(a.count, a.dim, a.seed, kinds);
  fs::create_directories(a.out);
  std::vector<std::string> paths, categories;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "shape_%03zu.vxg", i);
    write_vxg(fs::path(a.out) / name, corpus[i].gt, VxgEncoding::bitpacked);
    paths.emplace_back(name);
    categories.push_back(corpus[i].category);
  }
  write_text(fs::path(a.out) / "manifest.json", manifest_to_json(paths, categories));
  std::cerr << "wrote " << corpus.size() << " shapes to " << a.out << '\n';
  return 0;
}

// views.json: [{"yaw": .., "pitch": .., "file": "v0.sil"}, ...]
int run_carve(const CarveArgs& a) {
  const auto doc = nlohmann::json::parse(read_text(a.views));
  if (!doc.is_array()) throw std::runtime_error("views file must be a JSON array");
  std::vector<ViewObservation> observations;
  for (const auto& entry : doc) {
    const Viewpoint v(entry.at("yaw").get<double>(), entry.at("pitch").get<double>());
    observations.push_back({v, read_sil(fs::path(a.sil_dir) / entry.at("file").get<std::string>())});
  }
  write_vxg(a.out, carve(observations, a.dim),
            a.bitpacked ? VxgEncoding::bitpacked : VxgEncoding::float32);
  return 0;
}

int run_loop_cmd(const LoopArgs& a) {
  const fs::path cfg(a.config);
  const LoopSetup setup = parse_loop_setup(read_text(cfg), cfg.parent_path());
  const auto started = std::chrono::steady_clock::now();
  const RunReport report = run_loop(setup.corpus, setup.config);
  write_text(a.out, report_to_json(report));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const auto& last = report.summary.back();
  std::cerr << "loop: " << setup.corpus.size() << " objects, " << setup.config.iterations
            << " iterations, final mean IoU " << last.mean_iou << " (" << secs << " s)\n";
  return 0;
}

int run_compare(const LoopArgs& a) {
  const fs::path cfg(a.config);
  const LoopSetup setup = parse_loop_setup(read_text(cfg), cfg.parent_path());
  const ComparisonReport cmp = compare_policies(setup.corpus, setup.config);
  write_text(a.out, comparison_to_json(cmp));
  for (const auto& d : cmp.deltas) {
    std::cerr << to_string(d.a) << " - " << to_string(d.b) << ": final mean IoU delta "
              << d.final_iou_delta << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction-error-guided viewpoint selection for voxel reconstruction"};
  app.require_subcommand(1);

  SelectArgs sel;
  auto* select = app.add_subcommand("select", "Score lattice viewpoints by projected error and pick the top n");
  select->add_option("--pred", sel.pred, "Predicted grid (.vxg)")->required();
  select->add_option("--gt", sel.gt, "Ground-truth grid (.vxg)")->required();
  select->add_option("--interval", sel.interval, "Lattice interval K in degrees");
  select->add_option("--n", sel.n, "Number of viewpoints to select");
  select->add_option("--seed", sel.seed, "Seed for Gaussian view sampling");
  select->add_option("--out", sel.out, "Output JSON (default stdout)");

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Render an orthographic silhouette");
  render->add_option("--grid", ren.grid, "Grid (.vxg)")->required();
  render->add_option("--yaw", ren.yaw, "Yaw in degrees");
  render->add_option("--pitch", ren.pitch, "Pitch in degrees");
  render->add_option("--tau", ren.tau, "Occupancy threshold");
  render->add_option("--out", ren.out, "Output silhouette (.sil)")->required();

  GenArgs gen;
  auto* gen_shapes = app.add_subcommand("gen-shapes", "Generate a synthetic shape corpus");
  gen_shapes->add_option("--count", gen.count, "Number of shapes");
  gen_shapes->add_option("--dim", gen.dim, "Grid edge length");
  gen_shapes->add_option("--seed", gen.seed, "Corpus seed");
  gen_shapes->add_option("--kinds", gen.kinds,
                         "Shape kinds (box, sphere, ell, cross, union-of-boxes, random-blob)");
  gen_shapes->add_option("--out", gen.out, "Output directory")->required();

  CarveArgs car;
  auto* carve_cmd = app.add_subcommand("carve", "Space-carve a grid from silhouettes");
  carve_cmd->add_option("--views", car.views, "JSON list of {yaw, pitch, file}")->required();
  carve_cmd->add_option("--sil-dir", car.sil_dir, "Directory holding the .sil files")->required();
  carve_cmd->add_option("--dim", car.dim, "Grid edge length");
  carve_cmd->add_flag("--bitpacked", car.bitpacked, "Write bit-packed .vxg");
  carve_cmd->add_option("--out", car.out, "Output grid (.vxg)")->required();

  LoopArgs lp;
  auto* loop = app.add_subcommand("loop", "Run the iterative selection loop");
  loop->add_option("--config", lp.config, "Loop config (JSON)")->required();
  loop->add_option("--out", lp.out, "Report (JSON, default stdout)");

  LoopArgs cp;
  auto* compare = app.add_subcommand("compare", "Compare selection policies");
  compare->add_option("--config", cp.config, "Loop config (JSON)")->required();
  compare->add_option("--out", cp.out, "Comparison report (JSON, default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (select->parsed()) return run_select(sel);
    if (render->parsed()) return run_render(ren);
    if (gen_shapes->parsed()) return run_gen_shapes(gen);
    if (carve_cmd->parsed()) return run_carve(car);
    if (loop->parsed()) return run_loop_cmd(lp);
    if (compare->parsed()) return run_compare(cp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
