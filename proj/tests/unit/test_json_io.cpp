#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "viewsel/format_error.hpp"
#include "viewsel/json_io.hpp"
#include "viewsel/vxg_format.hpp"

using namespace viewsel;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST(ConfigJson, RoundTripsEveryField) {
  LoopConfig c;
  c.dim = 24;
  c.interval_deg = 45;
  c.views_per_round = 2;
  c.initial_distribution = {ViewDistributionKind::spherical, 10};
  c.iterations = 7;
  c.update_fraction = 0.5;
  c.pool_mode = PoolMode::pool_only;
  c.selection_policy = SelectionPolicy::fixed_lattice;
  c.seed = 123456789012345ULL;
  c.threshold = 0.3;
  c.pool_capacity = 17;
  c.record_wall_clock = true;
  const auto back = parse_loop_config(config_to_json(c));
  EXPECT_EQ(config_to_json(back), config_to_json(c));
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.initial_distribution.views_per_object, 10u);
}

TEST(ConfigJson, DefaultsAndRejections) {
  const auto c = parse_loop_config("{}");
  EXPECT_EQ(config_to_json(c), config_to_json(LoopConfig{}));
  EXPECT_THROW((void)parse_loop_config(R"({"schema_version": "v2"})"), std::invalid_argument);
  EXPECT_THROW((void)parse_loop_config(R"({"dim": "big"})"), std::invalid_argument);
  EXPECT_THROW((void)parse_loop_config(R"({"pool_mode": "never"})"), std::invalid_argument);
  EXPECT_THROW((void)parse_loop_config(R"({"update_fraction": 0})"), std::invalid_argument);
  EXPECT_THROW((void)parse_loop_config(R"({"dim": 32,)"), FormatError);
}

TEST(SetupJson, GeneratedCorpus) {
  const auto s = parse_loop_setup(
      R"({"dim": 16, "corpus": {"generate": {"count": 4, "seed": 9, "kinds": ["ell", "box"]}}})", ".");
  ASSERT_EQ(s.corpus.size(), 4u);
  EXPECT_EQ(s.corpus[1].category, "box");
  EXPECT_EQ(s.corpus[1].gt.dims(), (GridDims{16, 16, 16}));
  EXPECT_THROW((void)parse_loop_setup(R"({"dim": 16})", "."), std::invalid_argument);
  EXPECT_THROW((void)parse_loop_setup(R"({"dim": 16, "corpus": {}})", "."), std::invalid_argument);
}

TEST(SetupJson, FilesAndManifest) {
  const auto dir = scratch_dir("viewsel_setup_test");
  std::filesystem::create_directories(dir / "shapes");
  VoxelGrid g = VoxelGrid::cube(8);
  g.set(3, 3, 3, 1.0f);
  write_vxg(dir / "shapes" / "a.vxg", g, VxgEncoding::bitpacked);
  {
    std::ofstream(dir / "shapes" / "manifest.json")
        << manifest_to_json({"a.vxg"}, {"chair"});
  }
  const auto by_files = parse_loop_setup(
      R"({"dim": 8, "corpus": {"files": [{"path": "shapes/a.vxg", "category": "mug"}]}})", dir);
  ASSERT_EQ(by_files.corpus.size(), 1u);
  EXPECT_EQ(by_files.corpus[0].category, "mug");
  EXPECT_EQ(by_files.corpus[0].gt, g);

  const auto by_manifest =
      parse_loop_setup(R"({"dim": 8, "corpus": {"manifest": "shapes/manifest.json"}})", dir);
  ASSERT_EQ(by_manifest.corpus.size(), 1u);
  EXPECT_EQ(by_manifest.corpus[0].category, "chair");
  std::filesystem::remove_all(dir);
}

TEST(ReportJson, SchemaFields) {
  const std::vector<ShapeKind> kinds{ShapeKind::ell};
  const auto corpus = generate_corpus(2, 16, 1, kinds);
  LoopConfig cfg;
  cfg.dim = 16;
  cfg.iterations = 1;
  cfg.update_fraction = 1.0;
  const auto text = report_to_json(run_loop(corpus, cfg));
  const auto j = json::parse(text);
  EXPECT_EQ(j.at("schema_version"), "v1");
  EXPECT_EQ(j.at("fscore_definition"), "voxel-F1");
  EXPECT_FALSE(j.contains("wall_clock_seconds"));
  ASSERT_EQ(j.at("objects").size(), 2u);
  const auto& rec = j.at("objects")[0].at("iterations")[1];
  EXPECT_TRUE(rec.at("loss").is_null());
  EXPECT_EQ(rec.at("iteration"), 1);
  EXPECT_TRUE(j.at("summary")[0].at("mean_loss").is_null());
  EXPECT_EQ(j.at("config").at("seed"), 0);
  // compact, sorted
  EXPECT_EQ(text, j.dump());
  EXPECT_EQ(text.find('\n'), std::string::npos);

  cfg.record_wall_clock = true;
  EXPECT_TRUE(json::parse(report_to_json(run_loop(corpus, cfg))).contains("wall_clock_seconds"));
}

TEST(ComparisonJson, PoliciesAndDeltas) {
  const std::vector<ShapeKind> kinds{ShapeKind::cross};
  const auto corpus = generate_corpus(2, 16, 2, kinds);
  LoopConfig cfg;
  cfg.dim = 16;
  cfg.iterations = 1;
  const auto j = json::parse(comparison_to_json(compare_policies(corpus, cfg)));
  EXPECT_TRUE(j.at("policies").contains("error-guided"));
  EXPECT_TRUE(j.at("policies").contains("random"));
  EXPECT_TRUE(j.at("policies").contains("fixed-lattice"));
  ASSERT_EQ(j.at("deltas").size(), 3u);
  EXPECT_EQ(j.at("deltas")[0].at("a"), "error-guided");
  EXPECT_EQ(j.at("deltas")[0].at("b"), "random");
}

TEST(SelectionJson, Shape) {
  Rng rng(1);
  VoxelGrid pred = VoxelGrid::cube(8);
  pred.set(2, 2, 2, 1.0f);
  const auto j = json::parse(selection_to_json(select_views(pred, VoxelGrid::cube(8), 30, 3, rng)));
  EXPECT_EQ(j.at("scores").size(), 72u);
  EXPECT_EQ(j.at("selected").size(), 3u);
  EXPECT_EQ(j.at("sampled").size(), 3u);
  EXPECT_EQ(j.at("scores")[13].at("lattice_index"), json::parse("[1,1]"));
}

TEST(ViewpointsJson, RoundTrip) {
  const std::vector<Viewpoint> v{Viewpoint(10.25, -3), Viewpoint(-180, 90)};
  EXPECT_EQ(viewpoints_from_json(viewpoints_to_json(v)), v);
  EXPECT_EQ(viewpoints_to_json({Viewpoint(1, 2)}), R"([{"pitch":2.0,"yaw":1.0}])");
  EXPECT_THROW((void)viewpoints_from_json("{}"), FormatError);
  EXPECT_THROW((void)viewpoints_from_json("[{\"yaw\": 1}]"), std::exception);
}
