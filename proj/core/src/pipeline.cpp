#include "netclass/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "netclass/error.hpp"
#include "netclass/image_features.hpp"
#include "netclass/ordering.hpp"
#include "netclass/parallel.hpp"

namespace netclass {

namespace {

std::string shortest(double x) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, ptr);
}

template <typename T>
T parse_field(std::string_view text, std::size_t lineno, std::string_view column) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) + ": bad " + std::string(column) + " '" +
                               std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string ExtractorId::name() const {
  switch (kind) {
    case ExtractorKind::projection: return "projection";
    case ExtractorKind::clbp: return "clbp";
    case ExtractorKind::hu: return "hu";
    case ExtractorKind::structural: break;
  }
  const auto all = all_metrics();
  if (metrics.size() == all.size() && std::equal(metrics.begin(), metrics.end(), all.begin())) {
    return "structural:combined";
  }
  std::string out = "structural:";
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    if (i) out += ',';
    out += metric_tag(metrics[i]);
  }
  return out;
}

ExtractorId parse_extractor(std::string_view text) {
  if (text == "projection") return {ExtractorKind::projection, {}};
  if (text == "clbp") return {ExtractorKind::clbp, {}};
  if (text == "hu") return {ExtractorKind::hu, {}};
  if (text.starts_with("structural:")) {
    std::string_view rest = text.substr(std::string_view("structural:").size());
    ExtractorId id{ExtractorKind::structural, {}};
    if (rest == "combined") {
      const auto all = all_metrics();
      id.metrics.assign(all.begin(), all.end());
      return id;
    }
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tag = rest.substr(0, comma);
      const auto metric = metric_from_tag(tag);
      if (!metric) fail(ErrorKind::invalid_argument, "unknown structural metric '" + std::string(tag) + "'");
      id.metrics.push_back(*metric);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!id.metrics.empty()) return id;
  }
  fail(ErrorKind::invalid_argument, "unknown extractor '" + std::string(text) +
                                        "' (expected projection, clbp, hu or structural:<metrics|combined>)");
}

FeatureVector extract_features(const Graph& g, const ExtractorId& extractor) {
  switch (extractor.kind) {
    case ExtractorKind::projection: return projection(sorted_adjacency(g));
    case ExtractorKind::clbp: return clbp_features(sorted_adjacency(g));
    case ExtractorKind::hu: return hu_moments(sorted_adjacency(g));
    case ExtractorKind::structural: return structural_features(g, extractor.metrics);
  }
  fail(ErrorKind::invalid_argument, "unknown extractor");
}

LabeledDataset extract_dataset(std::span<const LabeledGraphSample> samples, const ExtractorId& extractor,
                               unsigned threads) {
  std::vector<FeatureVector> out(samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    out[i] = extract_features(samples[i].graph, extractor);
    out[i].label = samples[i].label;
  });
  return LabeledDataset(std::move(out));
}

std::string dataset_file_name(const DatasetEntry& entry) {
  std::string name = std::string(model_tag(entry.spec.model)) + "_" + std::to_string(entry.spec.n) + "_" +
                     std::to_string(entry.spec.k_bar);
  if (entry.spec.model == Model::barabasi_albert) name += "_" + shortest(entry.spec.alpha);
  name += "_" + std::to_string(entry.replicate) + ".edges";
  return name;
}

void write_manifest(const std::filesystem::path& path, std::span<const ManifestEntry> entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  out << "path,label,model,n,k_bar,alpha,beta,seed,replicate\n";
  for (const auto& e : entries) {
    out << e.path.generic_string() << ',' << e.label;
    if (e.spec) {
      out << ',' << model_tag(e.spec->model) << ',' << e.spec->n << ',' << e.spec->k_bar << ','
          << shortest(e.spec->alpha) << ',' << shortest(e.spec->beta) << ',' << e.spec->seed << ','
          << e.replicate.value_or(0);
    } else {
      out << ",,,,,,,";
    }
    out << '\n';
  }
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open manifest " + path.string());
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  std::vector<ManifestEntry> entries;
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  std::optional<std::size_t> c_path, c_label, c_model, c_n, c_k, c_alpha, c_beta, c_seed, c_rep;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      c_path = column("path");
      c_label = column("label");
      if (!c_path || !c_label) fail(ErrorKind::parse, "manifest header needs 'path' and 'label' columns");
      c_model = column("model");
      c_n = column("n");
      c_k = column("k_bar");
      c_alpha = column("alpha");
      c_beta = column("beta");
      c_seed = column("seed");
      c_rep = column("replicate");
      continue;
    }
    if (cells.size() != header.size()) {
      fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) + ": expected " +
                                 std::to_string(header.size()) + " columns, got " + std::to_string(cells.size()));
    }
    ManifestEntry entry;
    entry.path = cells[*c_path];
    entry.label = cells[*c_label];
    if (entry.path.empty() || entry.label.empty()) {
      fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) + ": empty path or label");
    }
    if (c_model && c_n && c_k && !cells[*c_model].empty()) {
      const auto model = model_from_tag(cells[*c_model]);
      if (!model) fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) + ": unknown model");
      GenSpec spec;
      spec.model = *model;
      spec.n = parse_field<std::size_t>(cells[*c_n], lineno, "n");
      spec.k_bar = parse_field<unsigned>(cells[*c_k], lineno, "k_bar");
      if (c_alpha) spec.alpha = parse_field<double>(cells[*c_alpha], lineno, "alpha");
      if (c_beta) spec.beta = parse_field<double>(cells[*c_beta], lineno, "beta");
      if (c_seed) spec.seed = parse_field<std::uint64_t>(cells[*c_seed], lineno, "seed");
      entry.spec = spec;
      if (c_rep) entry.replicate = parse_field<std::size_t>(cells[*c_rep], lineno, "replicate");
    }
    entries.push_back(std::move(entry));
  }
  if (header.empty()) fail(ErrorKind::parse, "manifest " + path.string() + " is empty");
  return entries;
}

std::filesystem::path resolve_entry_path(const std::filesystem::path& manifest, const ManifestEntry& entry) {
  if (entry.path.is_absolute()) return entry.path;
  return manifest.parent_path() / entry.path;
}

std::vector<ManifestEntry> write_dataset(std::span<const DatasetEntry> plan, const std::filesystem::path& out_dir,
                                         unsigned threads) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::io, "cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<ManifestEntry> entries(plan.size());
  parallel_for(plan.size(), threads, [&](std::size_t i) {
    const auto& item = plan[i];
    const std::string name = dataset_file_name(item);
    write_edge_list(out_dir / name, generate(item.spec));
    entries[i] = {name, item.label, item.spec, item.replicate};
  });
  write_manifest(out_dir / "manifest.csv", entries);
  return entries;
}

LabeledDataset features_from_manifest(const std::filesystem::path& manifest, const ExtractorId& extractor,
                                      unsigned threads) {
  const auto entries = read_manifest(manifest);
  std::vector<FeatureVector> out(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    const auto path = resolve_entry_path(manifest, entries[i]);
    try {
      out[i] = extract_features(read_edge_list(path), extractor);
    } catch (const Error& e) {
      const std::string what = e.what();
      // read_edge_list already prefixes its own errors with the path.
      throw Error(e.kind(), what.starts_with(path.string()) ? what : path.string() + ": " + what);
    }
    out[i].label = entries[i].label;
  });
  return LabeledDataset(std::move(out));
}

}  // namespace netclass
