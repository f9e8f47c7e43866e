// strb: corruption benchmark generation, FBMix augmentation, detection
// evaluation and robustness reports.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "strb/catalog.hpp"
#include "strb/error.hpp"
#include "strb/pipeline.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

void resolve_lists(strb::RunConfig& cfg, const std::vector<std::string>& corruption_names,
                   const std::vector<std::string>& severity_names, const std::string& format) {
  const auto fmt = strb::annotation_format_from_name(format);
  if (!fmt) throw strb::Error(strb::ErrorKind::kInvalidArgument, "unknown format '" + format + "'");
  cfg.format = *fmt;
  for (const auto& name : split_list(corruption_names)) {
    const auto id = strb::corruption_from_name(name);
    if (!id) throw strb::Error(strb::ErrorKind::kInvalidArgument, "unknown corruption '" + name + "'");
    cfg.corruptions.push_back(*id);
  }
  for (const auto& s : split_list(severity_names)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      cfg.severities.push_back(v);
    } catch (const std::logic_error&) {
      throw strb::Error(strb::ErrorKind::kInvalidArgument, "bad severity '" + s + "'");
    }
  }
}

void print_catalog() {
  for (const auto& entry : strb::list_corruptions()) {
    std::cout << strb::name_of(entry.id) << " (" << strb::name_of(entry.category) << ")\n";
    for (int s = 1; s <= strb::kNumSeverities; ++s) {
      std::cout << "  " << s << ":";
      for (const auto& [key, value] : strb::severity_params(entry.id, s).entries) {
        std::cout << " " << key << "=" << value;
      }
      std::cout << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scene-text robustness benchmark toolkit"};
  app.require_subcommand(1);

  strb::RunConfig cfg;
  std::vector<std::string> corruption_names;
  std::vector<std::string> severity_names;
  std::string format = "ic15_quad";
  std::string clean_eval;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input_root, "Input root")->required();
    sub->add_option("-f,--format", format, "GT format: ic15_quad, poly_txt or json");
    sub->add_option("-j,--jobs", cfg.jobs, "Worker threads (default: processor count)");
  };

  auto* corrupt = app.add_subcommand("corrupt", "Generate the corrupted benchmark tree");
  add_common(corrupt);
  corrupt->add_option("-o,--output", cfg.output_root, "Output root")->required();
  corrupt->add_option("--corruptions", corruption_names, "Corruption names (default: all 18)");
  corrupt->add_option("--severities", severity_names, "Severities 1..5 (default: all)");
  corrupt->add_option("--seed", cfg.master_seed, "Master seed");

  auto* augment = app.add_subcommand("augment", "Blend text-free backgrounds into a dataset");
  add_common(augment);
  augment->add_option("-o,--output", cfg.output_root, "Output root")->required();
  augment->add_option("--bg-pool", cfg.bg_pool, "Background folder or path list")->required();
  augment->add_option("--alpha", cfg.alpha, "Foreground weight");
  augment->add_option("--apply-prob", cfg.apply_prob, "Chance of mixing each image");
  augment->add_option("--seed", cfg.master_seed, "Master seed");

  auto* eval = app.add_subcommand("eval", "Score predictions against ground truth");
  add_common(eval);
  eval->add_option("-p,--predictions", cfg.predictions_root, "Predictions root")->required();
  eval->add_option("-o,--output", cfg.output_root,
                   "JSON file (single dataset) or results root (corrupted tree)");
  eval->add_option("--iou-threshold", cfg.iou_threshold, "Match threshold");
  eval->add_option("--corruptions", corruption_names, "Restrict tree evaluation");
  eval->add_option("--severities", severity_names, "Restrict tree evaluation");

  auto* report = app.add_subcommand("report", "Aggregate eval results into mPC/rPC tables");
  report->add_option("-i,--input", cfg.input_root, "Eval results root")->required();
  report->add_option("-o,--output", cfg.output_root, "Report folder")->required();
  report->add_option("--clean", clean_eval, "Clean eval.json (default: <input>/clean/eval.json)");
  report->add_option("--label", cfg.label, "Row label");

  auto* list = app.add_subcommand("list", "Print the corruption catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (list->parsed()) {
      print_catalog();
      return 0;
    }
    resolve_lists(cfg, corruption_names, severity_names, format);
    if (!clean_eval.empty()) cfg.clean_eval = clean_eval;

    if (corrupt->parsed()) {
      cfg.command = strb::Command::kCorrupt;
      const auto s = strb::cmd_corrupt(cfg, std::cerr);
      std::cerr << "wrote " << s.images << " image(s) x " << s.variants << " variant(s)\n";
    } else if (augment->parsed()) {
      cfg.command = strb::Command::kAugment;
      const auto s = strb::cmd_augment(cfg, std::cerr);
      std::cerr << "mixed " << s.mixed << " of " << s.images << " image(s)\n";
    } else if (eval->parsed()) {
      cfg.command = strb::Command::kEval;
      strb::cmd_eval(cfg, std::cout, std::cerr);
    } else if (report->parsed()) {
      cfg.command = strb::Command::kReport;
      strb::cmd_report(cfg, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return strb::exit_code_for(e);
  }
  return 0;
}
