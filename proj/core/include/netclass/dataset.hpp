#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace netclass {

// One network's descriptor. `extractor` is the provenance tag, e.g.
// "projection", "clbp", "hu", "structural:combined" or "external".
struct FeatureVector {
  std::string extractor;
  std::string label;
  std::vector<double> values;
};

// Feature vectors sharing one dimensionality. Classes are the distinct
// labels in order of first appearance.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::vector<FeatureVector> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::string& extractor() const noexcept { return extractor_; }

  const FeatureVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const FeatureVector> vectors() const noexcept { return vectors_; }

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  // Index into classes() for each vector.
  const std::vector<std::size_t>& class_ids() const noexcept { return class_ids_; }

 private:
  std::vector<FeatureVector> vectors_;
  std::vector<std::string> classes_;
  std::vector<std::size_t> class_ids_;
  std::size_t dimension_ = 0;
  std::string extractor_;
};

// Feature CSV: header "label,f0,f1,...", one row per network, '.' decimal
// separator. Values are written in shortest round-trip form.
void write_feature_csv(std::ostream& out, const LabeledDataset& data);
void write_feature_csv(const std::filesystem::path& path, const LabeledDataset& data);

// Parses a feature CSV, tagging every vector with `extractor`. Errors name
// the offending line: ragged rows, non-numeric cells, missing label column,
// no data rows.
LabeledDataset parse_feature_csv(std::istream& in, const std::string& extractor);
LabeledDataset read_feature_csv(const std::filesystem::path& path, const std::string& extractor);

// Import path for externally computed descriptors (e.g. CNN activations).
LabeledDataset load_external_features(const std::filesystem::path& path);

}  // namespace netclass
