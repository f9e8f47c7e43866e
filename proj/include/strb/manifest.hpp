#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "strb/annotations.hpp"

namespace strb {

struct ManifestEntry {
  std::string image_id;  // image file stem
  std::filesystem::path image;
  std::filesystem::path gt;
};

struct DatasetManifest {
  std::filesystem::path root;
  AnnotationFormat format = AnnotationFormat::kIc15Quad;
  std::vector<ManifestEntry> entries;  // sorted by image file name
  std::vector<std::string> warnings;   // orphaned images or GT files
};

/// Ground-truth file name for an image stem: "gt_<stem>.txt" for ic15_quad,
/// "<stem>.txt" for poly_txt, "<stem>.json" for json.
std::string gt_file_name(const std::string& stem, AnnotationFormat format);

/// Image directory and GT directory of a dataset root: `images/` and `gts/`
/// when present, otherwise the root itself for both.
std::filesystem::path image_dir(const std::filesystem::path& root);
std::filesystem::path gt_dir(const std::filesystem::path& root);

/// Pairs PNG/JPEG images with GT files by stem. Unpaired files become
/// warnings, not errors.
DatasetManifest build_manifest(const std::filesystem::path& root, AnnotationFormat format);

}  // namespace strb
