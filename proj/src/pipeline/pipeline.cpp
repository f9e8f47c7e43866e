#include "strb/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <set>

#include "strb/corruptions.hpp"
#include "strb/error.hpp"
#include "strb/fbmix.hpp"
#include "strb/image_io.hpp"
#include "strb/manifest.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace strb {

namespace {

void invalid(const std::string& msg) { throw Error(ErrorKind::kInvalidArgument, msg); }

void require_path(const fs::path& p, const char* flag) {
  if (p.empty()) invalid(std::string(flag) + " is required");
}

/// Collects the first failure (lowest task index) thrown inside a parallel
/// loop so the reported error does not depend on scheduling.
class TaskErrors {
 public:
  void record(std::size_t task, std::exception_ptr e) {
#pragma omp critical(strb_task_errors)
    {
      if (!error_ || task < task_) {
        error_ = e;
        task_ = task;
      }
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
  std::size_t task_ = 0;
};

DatasetManifest load_manifest(const fs::path& root, AnnotationFormat format, std::ostream& diag) {
  auto manifest = build_manifest(root, format);
  for (const auto& w : manifest.warnings) diag << "warning: " << w << "\n";
  return manifest;
}

fs::path variant_dir(const fs::path& root, CorruptionId id, int severity) {
  return root / std::string(name_of(id)) / std::to_string(severity);
}

void write_json(const fs::path& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

json corrupt_manifest(const RunConfig& cfg, const DatasetManifest& m,
                      const std::vector<CorruptionId>& ids, const std::vector<int>& sevs,
                      bool complete) {
  json j;
  j["complete"] = complete;
  j["format"] = std::string(to_string(cfg.format));
  j["master_seed"] = cfg.master_seed;
  json images = json::array();
  for (const auto& e : m.entries) images.push_back(e.image_id);
  j["images"] = std::move(images);
  json variants = json::array();
  for (const auto id : ids) {
    for (const int s : sevs) {
      json v;
      v["corruption"] = std::string(name_of(id));
      v["severity"] = s;
      v["path"] = std::string(name_of(id)) + "/" + std::to_string(s);
      variants.push_back(std::move(v));
    }
  }
  j["variants"] = std::move(variants);
  return j;
}

struct Variant {
  CorruptionId id;
  int severity;
};

std::vector<Variant> variants_from_manifest(const json& j) {
  std::vector<Variant> out;
  for (const auto& v : j.at("variants")) {
    const auto name = v.at("corruption").get<std::string>();
    const auto id = corruption_from_name(name);
    if (!id) throw Error(ErrorKind::kParse, "manifest names unknown corruption '" + name + "'");
    out.push_back({*id, v.at("severity").get<int>()});
  }
  return out;
}

json read_json(const fs::path& path) {
  const auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
}

std::optional<fs::path> find_predictions(const fs::path& root, const std::string& stem) {
  const fs::path dir = gt_dir(root);
  for (const auto& name : {stem + ".txt", "res_" + stem + ".txt", "gt_" + stem + ".txt",
                           stem + ".json"}) {
    if (fs::is_regular_file(dir / name)) return dir / name;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CorruptionId> RunConfig::selected_corruptions() const {
  if (!corruptions.empty()) return corruptions;
  std::vector<CorruptionId> all;
  for (const auto& e : list_corruptions()) all.push_back(e.id);
  return all;
}

std::vector<int> RunConfig::selected_severities() const {
  if (!severities.empty()) return severities;
  return {1, 2, 3, 4, 5};
}

int RunConfig::worker_count() const { return jobs > 0 ? jobs : omp_get_num_procs(); }

void RunConfig::validate() const {
  if (jobs < 0) invalid("--jobs must be positive");
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) invalid("--iou-threshold must be in (0, 1]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) invalid("--alpha must be in [0, 1]");
  if (!(apply_prob >= 0.0 && apply_prob <= 1.0)) invalid("--apply-prob must be in [0, 1]");
  for (const int s : severities) {
    if (s < 1 || s > kNumSeverities) invalid("severity " + std::to_string(s) + " outside 1..5");
  }
  if (std::set<int>(severities.begin(), severities.end()).size() != severities.size()) {
    invalid("duplicate severity");
  }
  if (std::set<CorruptionId>(corruptions.begin(), corruptions.end()).size() != corruptions.size()) {
    invalid("duplicate corruption");
  }
  require_path(input_root, "--input");
  switch (command) {
    case Command::kCorrupt:
      require_path(output_root, "--output");
      break;
    case Command::kAugment:
      require_path(output_root, "--output");
      require_path(bg_pool, "--bg-pool");
      break;
    case Command::kEval:
      require_path(predictions_root, "--predictions");
      break;
    case Command::kReport:
      require_path(output_root, "--output");
      break;
  }
}

CorruptSummary cmd_corrupt(const RunConfig& cfg, std::ostream& diag) {
  cfg.validate();
  const auto manifest = load_manifest(cfg.input_root, cfg.format, diag);
  const auto ids = cfg.selected_corruptions();
  const auto sevs = cfg.selected_severities();

  std::vector<std::vector<TextInstance>> labels;
  labels.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) labels.push_back(load_ground_truth(e.gt, cfg.format));

  std::vector<Variant> variants;
  for (const auto id : ids) {
    for (const int s : sevs) {
      variants.push_back({id, s});
      const auto dir = variant_dir(cfg.output_root, id, s);
      fs::create_directories(dir / "images");
      fs::create_directories(dir / "gts");
    }
  }
  write_json(cfg.output_root / kManifestFile, corrupt_manifest(cfg, manifest, ids, sevs, false));

  const int workers = cfg.worker_count();
  const auto n_variants = static_cast<std::ptrdiff_t>(variants.size());
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    const auto& entry = manifest.entries[i];
    const ImageBuffer img = load_image(entry.image);
    TaskErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::ptrdiff_t v = 0; v < n_variants; ++v) {
      try {
        const auto [id, severity] = variants[static_cast<std::size_t>(v)];
        const SeedSpec seed{cfg.master_seed, entry.image_id,
                            static_cast<std::uint32_t>(index_of(id)), severity};
        const auto result = apply_corruption(img, id, severity, seed);
        std::vector<TextInstance> moved = labels[i];
        if (!result.gt_transform.is_identity()) {
          for (auto& inst : moved) inst.polygon = result.gt_transform.apply(inst.polygon);
        }
        const auto dir = variant_dir(cfg.output_root, id, severity);
        save_image(result.image, dir / "images" / (entry.image_id + ".png"), ImageFormat::kPng);
        write_text_file(dir / "gts" / gt_file_name(entry.image_id, cfg.format),
                        write_gt(moved, cfg.format, entry.image_id));
      } catch (...) {
        errors.record(static_cast<std::size_t>(v), std::current_exception());
      }
    }
    try {
      errors.rethrow();
    } catch (const Error& e) {
      throw Error(e.kind(), entry.image.string() + ": " + e.what());
    }
  }

  write_json(cfg.output_root / kManifestFile, corrupt_manifest(cfg, manifest, ids, sevs, true));
  return {manifest.entries.size(), variants.size(), 2 * manifest.entries.size() * variants.size()};
}

AugmentSummary cmd_augment(const RunConfig& cfg, std::ostream& diag) {
  cfg.validate();
  const auto manifest = load_manifest(cfg.input_root, cfg.format, diag);
  const auto pool = load_background_pool(cfg.bg_pool);
  if (pool.entries.empty()) {
    throw Error(ErrorKind::kEmptyPool, "no images in background pool " + cfg.bg_pool.string());
  }
  fs::create_directories(cfg.output_root / "images");
  fs::create_directories(cfg.output_root / "gts");

  const auto n = static_cast<std::ptrdiff_t>(manifest.entries.size());
  std::vector<char> mixed(manifest.entries.size(), 0);
  TaskErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(cfg.worker_count())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& entry = manifest.entries[static_cast<std::size_t>(i)];
    try {
      auto rng = derive_rng({cfg.master_seed, entry.image_id, kAugmentStream, 0});
      const bool apply = rng.next_uniform() < cfg.apply_prob;
      fs::copy_file(entry.gt, cfg.output_root / "gts" / entry.gt.filename(),
                    fs::copy_options::overwrite_existing);
      if (!apply) {
        fs::copy_file(entry.image, cfg.output_root / "images" / entry.image.filename(),
                      fs::copy_options::overwrite_existing);
        continue;
      }
      const auto& bg_path =
          sample_background(pool, {cfg.master_seed, entry.image_id, kAugmentStream + 1, 0});
      const ImageBuffer fg = load_image(entry.image);
      const ImageBuffer bg = load_image(bg_path);
      const auto out = fbmix(fg, {}, bg, cfg.alpha);
      save_image(out.image, cfg.output_root / "images" / (entry.image_id + ".png"),
                 ImageFormat::kPng);
      mixed[static_cast<std::size_t>(i)] = 1;
    } catch (...) {
      errors.record(static_cast<std::size_t>(i), std::current_exception());
    }
  }
  errors.rethrow();
  return {manifest.entries.size(),
          static_cast<std::size_t>(std::count(mixed.begin(), mixed.end(), 1))};
}

EvalResult evaluate_folder(const fs::path& dataset_root, AnnotationFormat format,
                           const fs::path& predictions_root, const EvalConfig& ecfg, int jobs,
                           std::ostream& diag) {
  ecfg.validate();
  const auto manifest = load_manifest(dataset_root, format, diag);
  const auto n = static_cast<std::ptrdiff_t>(manifest.entries.size());
  std::vector<MatchCounts> counts(manifest.entries.size());
  std::vector<std::vector<std::string>> warnings(manifest.entries.size());
  TaskErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto& entry = manifest.entries[k];
    try {
      const auto gts = load_ground_truth(entry.gt, format);
      std::vector<TextInstance> preds;
      if (const auto file = find_predictions(predictions_root, entry.image_id)) {
        if (file->filename() == gt_file_name(entry.image_id, format)) {
          preds = load_ground_truth(*file, format);
        } else {
          auto parsed = load_predictions(*file);
          warnings[k] = std::move(parsed.warnings);
          for (auto& p : parsed.predictions) preds.push_back(std::move(p.instance));
        }
      }
      counts[k] = match_instances(preds, gts, ecfg);
    } catch (...) {
      errors.record(k, std::current_exception());
    }
  }
  errors.rethrow();
  for (const auto& list : warnings) {
    for (const auto& w : list) diag << "warning: " << w << "\n";
  }
  EvalResult r;
  for (const auto& c : counts) r.counts += c;
  r.score = score(r.counts);
  r.images = counts.size();
  return r;
}

std::string eval_result_json(const EvalResult& r) {
  json j;
  j["precision"] = r.score.precision;
  j["recall"] = r.score.recall;
  j["f_measure"] = r.score.f_measure;
  j["true_positives"] = r.counts.true_positives;
  j["num_predictions"] = r.counts.num_predictions;
  j["num_ground_truth"] = r.counts.num_ground_truth;
  j["images"] = r.images;
  return j.dump(2) + "\n";
}

EvalResult parse_eval_result(const fs::path& file) {
  const auto j = read_json(file);
  try {
    EvalResult r;
    r.score = {j.at("precision").get<double>(), j.at("recall").get<double>(),
               j.at("f_measure").get<double>()};
    r.counts = {j.value("true_positives", std::size_t{0}), j.value("num_predictions", std::size_t{0}),
                j.value("num_ground_truth", std::size_t{0})};
    r.images = j.value("images", std::size_t{0});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, file.string() + ": " + e.what());
  }
}

void cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  cfg.validate();
  const EvalConfig ecfg{cfg.iou_threshold, 0.5};
  const int jobs = cfg.worker_count();
  const auto tree_manifest = cfg.input_root / kManifestFile;

  if (!fs::is_regular_file(tree_manifest)) {
    const auto r = evaluate_folder(cfg.input_root, cfg.format, cfg.predictions_root, ecfg, jobs, diag);
    if (cfg.output_root.empty()) {
      out << eval_result_json(r);
    } else {
      if (cfg.output_root.has_parent_path()) fs::create_directories(cfg.output_root.parent_path());
      write_text_file(cfg.output_root, eval_result_json(r));
    }
    return;
  }

  if (cfg.output_root.empty()) invalid("--output is required when evaluating a corrupted tree");
  const auto j = read_json(tree_manifest);
  if (!j.value("complete", false)) {
    throw Error(ErrorKind::kIo, tree_manifest.string() + " is marked incomplete");
  }
  const auto format_name = j.value("format", std::string(to_string(cfg.format)));
  const auto format = annotation_format_from_name(format_name);
  if (!format) throw Error(ErrorKind::kParse, "unknown format '" + format_name + "' in manifest");

  json summary = json::array();
  for (const auto& [id, severity] : variants_from_manifest(j)) {
    if (!cfg.corruptions.empty() &&
        std::find(cfg.corruptions.begin(), cfg.corruptions.end(), id) == cfg.corruptions.end()) {
      continue;
    }
    if (!cfg.severities.empty() && std::find(cfg.severities.begin(), cfg.severities.end(),
                                             severity) == cfg.severities.end()) {
      continue;
    }
    const auto r = evaluate_folder(variant_dir(cfg.input_root, id, severity), *format,
                                   variant_dir(cfg.predictions_root, id, severity), ecfg, jobs, diag);
    const auto dir = variant_dir(cfg.output_root, id, severity);
    fs::create_directories(dir);
    write_text_file(dir / kEvalFile, eval_result_json(r));
    json row;
    row["corruption"] = std::string(name_of(id));
    row["severity"] = severity;
    row["f_measure"] = r.score.f_measure;
    summary.push_back(std::move(row));
  }
  out << summary.dump(2) << "\n";
}

RobustnessReport cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& /*diag*/) {
  cfg.validate();
  const fs::path clean_file = cfg.clean_eval.value_or(cfg.input_root / "clean" / kEvalFile);
  if (!fs::is_regular_file(clean_file)) {
    throw Error(ErrorKind::kIo, "clean result " + clean_file.string() + " not found");
  }
  FGrid grid(parse_eval_result(clean_file).score.f_measure);
  for (const auto& entry : list_corruptions()) {
    for (int s = 1; s <= kNumSeverities; ++s) {
      const auto file = variant_dir(cfg.input_root, entry.id, s) / kEvalFile;
      if (fs::is_regular_file(file)) grid.set(entry.id, s, parse_eval_result(file).score.f_measure);
    }
  }
  const auto report = build_report(grid, cfg.label);
  fs::create_directories(cfg.output_root);
  const auto md = render_report(report, ReportFormat::kMarkdown);
  write_text_file(cfg.output_root / "report.csv", render_report(report, ReportFormat::kCsv));
  write_text_file(cfg.output_root / "report.md", md);
  write_text_file(cfg.output_root / "report.json", render_report_json(grid, report));
  out << md;
  return report;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return err->kind() == ErrorKind::kInvalidArgument ? 1 : 2;
  }
  return 2;
}

}  // namespace strb
