#include "netclass/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "netclass/error.hpp"

namespace netclass {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledDataset::LabeledDataset(std::vector<FeatureVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) return;
  dimension_ = vectors_.front().values.size();
  extractor_ = vectors_.front().extractor;
  std::unordered_map<std::string, std::size_t> index;
  class_ids_.reserve(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.values.size() != dimension_) {
      fail(ErrorKind::invalid_argument, "feature vector " + std::to_string(i) + " has dimension " +
                                            std::to_string(v.values.size()) + ", expected " +
                                            std::to_string(dimension_));
    }
    auto [it, inserted] = index.try_emplace(v.label, classes_.size());
    if (inserted) classes_.push_back(v.label);
    class_ids_.push_back(it->second);
  }
}

void write_feature_csv(std::ostream& out, const LabeledDataset& data) {
  out << "label";
  for (std::size_t j = 0; j < data.dimension(); ++j) out << ",f" << j;
  out << '\n';
  char buffer[64];
  for (const auto& v : data.vectors()) {
    out << v.label;
    for (double x : v.values) {
      auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
      out << ',' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer));
    }
    out << '\n';
  }
}

void write_feature_csv(const std::filesystem::path& path, const LabeledDataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  write_feature_csv(out, data);
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

LabeledDataset parse_feature_csv(std::istream& in, const std::string& extractor) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  bool have_header = false;
  std::vector<FeatureVector> rows;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view text = strip(line);
    if (text.empty()) continue;
    const auto cells = split_commas(text);
    if (!have_header) {
      if (strip(cells.front()) != "label") {
        fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": header must start with a 'label' column");
      }
      width = cells.size();
      have_header = true;
      continue;
    }
    if (cells.size() != width) {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": ragged row with " +
                                 std::to_string(cells.size() - 1) + " features, header declares " +
                                 std::to_string(width - 1));
    }
    FeatureVector row;
    row.extractor = extractor;
    row.label = std::string(strip(cells.front()));
    if (row.label.empty()) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": empty label");
    row.values.reserve(width - 1);
    for (std::size_t j = 1; j < cells.size(); ++j) {
      const std::string_view cell = strip(cells[j]);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        fail(ErrorKind::parse, "line " + std::to_string(lineno) + ", column " + std::to_string(j + 1) +
                                   ": non-numeric cell '" + std::string(cell) + "'");
      }
      row.values.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::parse, "feature file contains no data rows");
  return LabeledDataset(std::move(rows));
}

LabeledDataset read_feature_csv(const std::filesystem::path& path, const std::string& extractor) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open " + path.string());
  try {
    return parse_feature_csv(in, extractor);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

LabeledDataset load_external_features(const std::filesystem::path& path) {
  return read_feature_csv(path, "external");
}

}  // namespace netclass
