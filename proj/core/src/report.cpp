#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "netclass/classify.hpp"

namespace netclass {

std::string report_json(const ExperimentReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["protocol"] = {{"classifier", report.classifier},
                     {"extractor", report.extractor},
                     {"folds", report.folds},
                     {"seed", report.seed}};
  doc["fold_ccr"] = report.fold_ccr;
  doc["mean_ccr"] = report.mean_ccr;
  doc["std_ccr"] = report.std_ccr;
  doc["overall_accuracy"] = report.overall_accuracy;
  doc["confusion"] = {{"classes", report.classes}, {"counts", report.confusion}};

  ordered_json per_class = ordered_json::object();
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    const auto& value = report.auc.per_class[c];
    per_class[report.classes[c]] = value ? ordered_json(*value) : ordered_json(nullptr);
  }
  doc["auc"] = {{"per_class", per_class},
                {"macro", report.auc.macro ? ordered_json(*report.auc.macro) : ordered_json(nullptr)}};
  if (report.warning) doc["warning"] = *report.warning;
  return doc.dump(2) + "\n";
}

std::string ccr_cell(const ExperimentReport& report) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.2f (%.2f)", report.mean_ccr, report.std_ccr);
  return buffer;
}

std::string confusion_text(const ExperimentReport& report) {
  std::size_t width = 9;
  for (const auto& name : report.classes) width = std::max(width, name.size());
  for (const auto& row : report.confusion) {
    for (std::size_t count : row) width = std::max(width, std::to_string(count).size());
  }
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  std::ostringstream out;
  out << pad("true\\pred");
  for (const auto& name : report.classes) out << ' ' << pad(name);
  out << '\n';
  for (std::size_t r = 0; r < report.classes.size(); ++r) {
    out << pad(report.classes[r]);
    for (std::size_t count : report.confusion[r]) out << ' ' << pad(std::to_string(count));
    out << '\n';
  }
  return out.str();
}

}  // namespace netclass
