#include "strb/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "strb/error.hpp"

namespace fs = std::filesystem;

namespace strb {

namespace {

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> sorted_files(const fs::path& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorKind::kIo, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

}  // namespace

std::string gt_file_name(const std::string& stem, AnnotationFormat format) {
  switch (format) {
    case AnnotationFormat::kIc15Quad: return "gt_" + stem + ".txt";
    case AnnotationFormat::kPolyTxt: return stem + ".txt";
    case AnnotationFormat::kJson: return stem + ".json";
  }
  return stem;
}

fs::path image_dir(const fs::path& root) {
  return fs::is_directory(root / "images") ? root / "images" : root;
}

fs::path gt_dir(const fs::path& root) {
  return fs::is_directory(root / "gts") ? root / "gts" : root;
}

DatasetManifest build_manifest(const fs::path& root, AnnotationFormat format) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorKind::kIo, "dataset root " + root.string() + " is not a directory");
  }
  DatasetManifest manifest{root, format, {}, {}};
  const fs::path images = image_dir(root);
  const fs::path gts = gt_dir(root);

  std::map<std::string, fs::path> gt_files;
  const std::string gt_ext = format == AnnotationFormat::kJson ? ".json" : ".txt";
  for (const auto& p : sorted_files(gts)) {
    if (p.extension() == gt_ext) gt_files.emplace(p.filename().string(), p);
  }

  std::set<std::string> used;
  std::set<std::string> seen_ids;
  for (const auto& p : sorted_files(images)) {
    if (!is_image_file(p)) continue;
    const std::string stem = p.stem().string();
    if (!seen_ids.insert(stem).second) {
      manifest.warnings.push_back("duplicate image id '" + stem + "' (" +
                                  p.filename().string() + ") skipped");
      continue;
    }
    const std::string gt_name = gt_file_name(stem, format);
    const auto it = gt_files.find(gt_name);
    if (it == gt_files.end()) {
      manifest.warnings.push_back("image " + p.filename().string() +
                                  " has no ground truth " + gt_name);
      continue;
    }
    used.insert(gt_name);
    manifest.entries.push_back({stem, p, it->second});
  }
  for (const auto& [name, path] : gt_files) {
    if (!used.contains(name)) {
      manifest.warnings.push_back("ground truth " + name + " has no matching image");
    }
  }
  return manifest;
}

}  // namespace strb
