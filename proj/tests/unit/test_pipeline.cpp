#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "strb/annotations.hpp"
#include "strb/error.hpp"
#include "strb/image_io.hpp"
#include "strb/pipeline.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace strb {
namespace {

RunConfig corrupt_config(const fs::path& in, const fs::path& out) {
  RunConfig cfg;
  cfg.command = Command::kCorrupt;
  cfg.input_root = in;
  cfg.output_root = out;
  cfg.master_seed = 5;
  cfg.jobs = 2;
  return cfg;
}

EvalResult result_with_f(double f) {
  EvalResult r;
  r.score = {f, f, f};
  r.images = 1;
  return r;
}

// Fills <root>/<name>/<sev>/eval.json for every cell except `skip`.
void write_eval_grid(const fs::path& root, double f, const std::string& skip = {}) {
  for (const auto& e : list_corruptions()) {
    for (int s = 1; s <= 5; ++s) {
      const std::string cell = std::string(name_of(e.id)) + "/" + std::to_string(s);
      if (cell == skip) continue;
      fs::create_directories(root / cell);
      write_text_file(root / cell / kEvalFile, eval_result_json(result_with_f(f)));
    }
  }
}

std::size_t count_files(const fs::path& root, const std::string& ext) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file() && e.path().extension() == ext) ++n;
  }
  return n;
}

TEST(Corrupt, WritesSelectedGrid) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "in", 2, AnnotationFormat::kIc15Quad, 64, 48);
  auto cfg = corrupt_config(dir / "in", dir / "out");
  cfg.corruptions = {CorruptionId::kGaussianNoise, CorruptionId::kRotation};
  cfg.severities = {1, 3};
  std::ostringstream diag;
  const auto summary = cmd_corrupt(cfg, diag);
  EXPECT_EQ(summary.images, 2u);
  EXPECT_EQ(summary.variants, 4u);
  EXPECT_EQ(count_files(dir / "out", ".png"), 8u);
  EXPECT_EQ(count_files(dir / "out", ".txt"), 8u);
  EXPECT_TRUE(fs::exists(dir / "out" / "rotation" / "3" / "images" / "img_1.png"));
  EXPECT_FALSE(fs::exists(dir / "out" / "rotation" / "2"));

  const auto manifest = nlohmann::json::parse(read_text_file(dir / "out" / kManifestFile));
  EXPECT_TRUE(manifest["complete"].get<bool>());
  EXPECT_EQ(manifest["variants"].size(), 4u);
  EXPECT_EQ(manifest["master_seed"].get<std::uint64_t>(), 5u);
}

TEST(Corrupt, OnlyRotationMovesGroundTruth) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "in", 1, AnnotationFormat::kIc15Quad, 64, 48);
  auto cfg = corrupt_config(dir / "in", dir / "out");
  cfg.corruptions = {CorruptionId::kFog, CorruptionId::kRotation};
  cfg.severities = {3};
  std::ostringstream diag;
  cmd_corrupt(cfg, diag);
  const auto original = read_text_file(dir / "in" / "gts" / "gt_img_0.txt");
  EXPECT_EQ(read_text_file(dir / "out" / "fog" / "3" / "gts" / "gt_img_0.txt"), original);
  EXPECT_NE(read_text_file(dir / "out" / "rotation" / "3" / "gts" / "gt_img_0.txt"), original);
  const auto rotated = load_image(dir / "out" / "rotation" / "3" / "images" / "img_0.png");
  EXPECT_GT(rotated.width(), 64);
}

TEST(Corrupt, OutputIndependentOfJobs) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "in", 2, AnnotationFormat::kPolyTxt, 48, 40);
  auto cfg = corrupt_config(dir / "in", dir / "one");
  cfg.format = AnnotationFormat::kPolyTxt;
  cfg.severities = {2, 5};
  cfg.jobs = 1;
  std::ostringstream diag;
  cmd_corrupt(cfg, diag);
  cfg.output_root = dir / "eight";
  cfg.jobs = 8;
  cmd_corrupt(cfg, diag);
  const auto a = testing::snapshot_tree(dir / "one");
  EXPECT_EQ(a.size(), 2u * 18 * 2 * 2 + 1);
  EXPECT_EQ(a, testing::snapshot_tree(dir / "eight"));
}

TEST(Corrupt, MissingInputIsIoError) {
  testing::TempDir dir;
  std::ostringstream diag;
  try {
    cmd_corrupt(corrupt_config(dir / "nothing", dir / "out"), diag);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_EQ(exit_code_for(e), 2);
  }
}

TEST(Config, ValidationFailures) {
  RunConfig cfg;
  cfg.input_root = "a";
  cfg.output_root = "b";
  EXPECT_NO_THROW(cfg.validate());
  cfg.severities = {6};
  EXPECT_THROW(cfg.validate(), Error);
  cfg.severities = {};
  cfg.command = Command::kAugment;
  cfg.bg_pool = "pool";
  cfg.alpha = -0.1;
  try {
    cfg.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    EXPECT_EQ(exit_code_for(e), 1);
  }
}

TEST(Eval, GroundTruthAsPredictionsScoresOne) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "ds", 3, AnnotationFormat::kIc15Quad, 64, 48);
  std::ostringstream diag;
  const auto r = evaluate_folder(dir / "ds", AnnotationFormat::kIc15Quad, dir / "ds", {}, 2, diag);
  EXPECT_EQ(r.images, 3u);
  EXPECT_EQ(r.counts.true_positives, 6u);
  EXPECT_DOUBLE_EQ(r.score.f_measure, 1.0);
}

TEST(Eval, EmptyPredictionFolder) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "ds", 2, AnnotationFormat::kIc15Quad, 64, 48);
  fs::create_directories(dir / "preds");
  std::ostringstream diag;
  const auto r = evaluate_folder(dir / "ds", AnnotationFormat::kIc15Quad, dir / "preds", {}, 1, diag);
  EXPECT_EQ(r.counts.num_predictions, 0u);
  EXPECT_DOUBLE_EQ(r.score.recall, 0.0);
  EXPECT_DOUBLE_EQ(r.score.f_measure, 0.0);
}

TEST(Eval, PartialPredictionsMicroAverage) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "ds", 3, AnnotationFormat::kIc15Quad, 64, 48);
  fs::create_directories(dir / "preds");
  for (int k = 0; k < 2; ++k) {
    const auto gt = load_ground_truth(dir / "ds" / "gts" / ("gt_img_" + std::to_string(k) + ".txt"),
                                      AnnotationFormat::kIc15Quad);
    std::string lines;
    for (const auto& inst : gt) {
      if (inst.ignore) continue;
      for (const auto& p : inst.polygon) lines += std::to_string(p.x) + "," + std::to_string(p.y) + ",";
      lines += "0.9\n";
    }
    write_text_file(dir / "preds" / ("res_img_" + std::to_string(k) + ".txt"), lines);
  }
  std::ostringstream diag;
  const auto r = evaluate_folder(dir / "ds", AnnotationFormat::kIc15Quad, dir / "preds", {}, 1, diag);
  EXPECT_EQ(r.counts, (MatchCounts{4, 4, 6}));
  EXPECT_DOUBLE_EQ(r.score.precision, 1.0);
  EXPECT_NEAR(r.score.recall, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.score.f_measure, 0.8, 1e-12);
}

TEST(Eval, ResultJsonRoundTrip) {
  testing::TempDir dir;
  EvalResult r;
  r.counts = {3, 4, 5};
  r.score = score(r.counts);
  r.images = 2;
  write_text_file(dir / "e.json", eval_result_json(r));
  const auto back = parse_eval_result(dir / "e.json");
  EXPECT_EQ(back.counts, r.counts);
  EXPECT_DOUBLE_EQ(back.score.f_measure, r.score.f_measure);
  EXPECT_EQ(back.images, 2u);
}

TEST(Eval, TreeModeScoresEveryVariant) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "in", 2, AnnotationFormat::kIc15Quad, 64, 48);
  auto cfg = corrupt_config(dir / "in", dir / "bench");
  cfg.corruptions = {CorruptionId::kShotNoise, CorruptionId::kRotation};
  cfg.severities = {1, 5};
  std::ostringstream out, diag;
  cmd_corrupt(cfg, diag);

  RunConfig ecfg;
  ecfg.command = Command::kEval;
  ecfg.input_root = dir / "bench";
  ecfg.predictions_root = dir / "bench";
  ecfg.output_root = dir / "evals";
  cmd_eval(ecfg, out, diag);
  for (const char* cell : {"shot_noise/1", "shot_noise/5", "rotation/1", "rotation/5"}) {
    const auto r = parse_eval_result(dir / "evals" / cell / kEvalFile);
    EXPECT_DOUBLE_EQ(r.score.f_measure, 1.0) << cell;
  }
}

TEST(Report, ConstantGrid) {
  testing::TempDir dir;
  write_eval_grid(dir / "evals", 0.7);
  fs::create_directories(dir / "evals" / "clean");
  write_text_file(dir / "evals" / "clean" / kEvalFile, eval_result_json(result_with_f(0.8)));
  RunConfig cfg;
  cfg.command = Command::kReport;
  cfg.input_root = dir / "evals";
  cfg.output_root = dir / "report";
  std::ostringstream out, diag;
  const auto r = cmd_report(cfg, out, diag);
  EXPECT_NEAR(r.mpc, 0.7, 1e-12);
  EXPECT_NEAR(r.rpc, 0.875, 1e-12);
  EXPECT_NE(out.str().find("| 80.0 | 70.0 | 70.0 | 70.0 | 70.0 | 70.0 | 70.0 | 87.5 |"), std::string::npos);
  for (const char* f : {"report.csv", "report.md", "report.json"}) EXPECT_TRUE(fs::exists(dir / "report" / f));
}

TEST(Report, MissingCellAndMissingClean) {
  testing::TempDir dir;
  write_eval_grid(dir / "evals", 0.7, "glass_blur/2");
  RunConfig cfg;
  cfg.command = Command::kReport;
  cfg.input_root = dir / "evals";
  cfg.output_root = dir / "report";
  std::ostringstream out, diag;
  try {
    cmd_report(cfg, out, diag);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
  fs::create_directories(dir / "evals" / "clean");
  write_text_file(dir / "evals" / "clean" / kEvalFile, eval_result_json(result_with_f(0.8)));
  try {
    cmd_report(cfg, out, diag);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompleteGrid);
    EXPECT_NE(std::string(e.what()).find("glass_blur/2"), std::string::npos);
  }
}

class AugmentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    testing::write_fixture_dataset(dir_ / "in", 4, AnnotationFormat::kIc15Quad, 48, 40);
    fs::create_directories(dir_ / "bgs");
    save_image(testing::synthetic_scene(70, 30, 91).image, dir_.path() / "bgs" / "a.png", ImageFormat::kPng);
    save_image(testing::synthetic_scene(30, 50, 92).image, dir_.path() / "bgs" / "b.png", ImageFormat::kPng);
    cfg_.command = Command::kAugment;
    cfg_.input_root = dir_ / "in";
    cfg_.bg_pool = dir_ / "bgs";
    cfg_.master_seed = 9;
  }

  testing::TempDir dir_;
  RunConfig cfg_;
  std::ostringstream diag_;
};

TEST_F(AugmentTest, ZeroProbabilityCopies) {
  cfg_.apply_prob = 0.0;
  cfg_.output_root = dir_ / "out";
  const auto s = cmd_augment(cfg_, diag_);
  EXPECT_EQ(s.images, 4u);
  EXPECT_EQ(s.mixed, 0u);
  EXPECT_EQ(testing::snapshot_tree(dir_ / "out"), testing::snapshot_tree(dir_ / "in"));
}

TEST_F(AugmentTest, DeterministicAndKeepsLabels) {
  cfg_.output_root = dir_ / "a";
  cfg_.jobs = 1;
  EXPECT_EQ(cmd_augment(cfg_, diag_).mixed, 4u);
  cfg_.output_root = dir_ / "b";
  cfg_.jobs = 4;
  cmd_augment(cfg_, diag_);
  EXPECT_EQ(testing::snapshot_tree(dir_ / "a"), testing::snapshot_tree(dir_ / "b"));
  EXPECT_EQ(read_text_file(dir_ / "a" / "gts" / "gt_img_2.txt"), read_text_file(dir_ / "in" / "gts" / "gt_img_2.txt"));
  const auto mixed = load_image(dir_ / "a" / "images" / "img_2.png");
  EXPECT_EQ(mixed.width(), 48);
  EXPECT_NE(mixed, load_image(dir_ / "in" / "images" / "img_2.png"));
}

// ---- command line -----------------------------------------------------------

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + STRB_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  testing::TempDir dir;
  testing::write_fixture_dataset(dir / "in", 1, AnnotationFormat::kIc15Quad, 40, 32);
  const std::string in = (dir / "in").string();
  const std::string out = (dir / "out").string();
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli("list"), 0);
  EXPECT_EQ(run_cli("corrupt -o " + out), 1);
  EXPECT_EQ(run_cli("corrupt -i " + in + " -o " + out + " --severities 7"), 1);
  EXPECT_EQ(run_cli("corrupt -i " + in + " -o " + out + " --corruptions snow_storm"), 1);
  EXPECT_EQ(run_cli("corrupt -i " + in + " -o " + out + " --corruptions fog,rotation --severities 1"), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "fog" / "1" / "images" / "img_0.png"));
  EXPECT_EQ(run_cli("report -i " + (dir / "missing").string() + " -o " + out), 2);
  EXPECT_EQ(run_cli("eval -i " + in + " -p " + in + " -o " + (dir / "e.json").string()), 0);
  EXPECT_DOUBLE_EQ(parse_eval_result(dir / "e.json").score.f_measure, 1.0);
}

}  // namespace
}  // namespace strb
