#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/dataset.hpp"
#include "netclass/generators.hpp"
#include "netclass/graph.hpp"
#include "netclass/metrics.hpp"

namespace netclass {

enum class ExtractorKind { projection, clbp, hu, structural };

struct ExtractorId {
  ExtractorKind kind = ExtractorKind::projection;
  std::vector<Metric> metrics;  // structural only

  std::string name() const;
};

// "projection", "clbp", "hu", "structural:combined" or
// "structural:<m>[,<m>...]" with m in {pp, d, cl, ecc, bet, k, cc}.
ExtractorId parse_extractor(std::string_view text);

// Image extractors run on the degree-sorted adjacency matrix; structural
// extractors run on the graph itself.
FeatureVector extract_features(const Graph& g, const ExtractorId& extractor);

// One vector per sample, in sample order, computed on `threads` workers.
LabeledDataset extract_dataset(std::span<const LabeledGraphSample> samples, const ExtractorId& extractor,
                               unsigned threads = 1);

// One manifest line per graph. Generator columns are empty for graphs that
// were not produced by a generator.
struct ManifestEntry {
  std::filesystem::path path;  // as written in the manifest
  std::string label;
  std::optional<GenSpec> spec;
  std::optional<std::size_t> replicate;
};

// <model>_<n>_<k>[_<alpha>]_<replicate>.edges; alpha only for BA.
std::string dataset_file_name(const DatasetEntry& entry);

// CSV with header "path,label,model,n,k_bar,alpha,beta,seed,replicate".
void write_manifest(const std::filesystem::path& path, std::span<const ManifestEntry> entries);
// Requires the path and label columns; relative paths stay relative to the
// manifest's directory (see resolve_entry_path).
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
std::filesystem::path resolve_entry_path(const std::filesystem::path& manifest, const ManifestEntry& entry);

// Generates a preset (or any planned grid) into out_dir: one edge-list file
// per graph plus manifest.csv. Returns the manifest entries.
std::vector<ManifestEntry> write_dataset(std::span<const DatasetEntry> plan, const std::filesystem::path& out_dir,
                                         unsigned threads = 1);

// Loads every graph named by the manifest and extracts its features. Errors
// are re-raised with the offending graph path prefixed.
LabeledDataset features_from_manifest(const std::filesystem::path& manifest, const ExtractorId& extractor,
                                      unsigned threads = 1);

}  // namespace netclass
