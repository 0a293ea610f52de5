#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "netclass/pipeline.hpp"
#include "test_util.hpp"

namespace netclass {
namespace {

namespace fs = std::filesystem;
using testing::expect_error;

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name) : path_(fs::temp_directory_path() / name) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(ExtractorIdTest, Parse) {
  EXPECT_EQ(parse_extractor("projection").kind, ExtractorKind::projection);
  EXPECT_EQ(parse_extractor("hu").name(), "hu");
  EXPECT_EQ(parse_extractor("structural:combined").metrics.size(), 7u);
  EXPECT_EQ(parse_extractor("structural:combined").name(), "structural:combined");
  const auto two = parse_extractor("structural:k,cc");
  EXPECT_EQ(two.metrics, (std::vector<Metric>{Metric::k, Metric::cc}));
  EXPECT_EQ(two.name(), "structural:k,cc");
  expect_error(ErrorKind::invalid_argument, [] { parse_extractor("vgg"); }, "vgg");
  expect_error(ErrorKind::invalid_argument, [] { parse_extractor("structural:k,zz"); }, "zz");
  expect_error(ErrorKind::invalid_argument, [] { parse_extractor("structural:"); });
}

TEST(ExtractFeaturesTest, Dimensions) {
  const Graph g = gen_barabasi_albert({Model::barabasi_albert, 60, 4, 1.0, 0.1, 2});
  EXPECT_EQ(extract_features(g, parse_extractor("projection")).values.size(), 2500u);
  EXPECT_EQ(extract_features(g, parse_extractor("clbp")).values.size(), 200u);
  EXPECT_EQ(extract_features(g, parse_extractor("hu")).values.size(), 7u);
  EXPECT_EQ(extract_features(g, parse_extractor("structural:combined")).values.size(), 3001u);
}

TEST(ExtractFeaturesTest, DatasetOrderAndThreads) {
  const auto grid = synthetic_grid(std::vector<unsigned>{4}, std::vector<std::size_t>{80});
  const auto samples = gen_dataset(grid, 2, 5);
  const auto a = extract_dataset(samples, parse_extractor("clbp"), 1);
  const auto b = extract_dataset(samples, parse_extractor("clbp"), 3);
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].values, b[i].values);
    EXPECT_EQ(a[i].label, samples[i].label);
  }
  EXPECT_EQ(a.classes(), (std::vector<std::string>{"ER", "WS", "BA", "GEO"}));
}

TEST(ManifestTest, FileNames) {
  DatasetEntry ba{{Model::barabasi_albert, 1000, 8, 0.5, 0.1, 1}, "BA_a0.5", 3};
  EXPECT_EQ(dataset_file_name(ba), "BA_1000_8_0.5_3.edges");
  DatasetEntry er{{Model::erdos_renyi, 500, 4, 1.0, 0.1, 1}, "ER", 0};
  EXPECT_EQ(dataset_file_name(er), "ER_500_4_0.edges");
}

TEST(ManifestTest, WriteDatasetRoundTrip) {
  ScratchDir dir("netclass_pipeline_manifest");
  const auto grid = scalefree_grid(40, 4);
  const auto plan = plan_dataset(grid, 2, 9);
  const auto written = write_dataset(plan, dir.path(), 2);
  ASSERT_EQ(written.size(), 10u);
  const auto manifest = dir.path() / "manifest.csv";
  const std::string first = slurp(manifest);
  EXPECT_EQ(first.substr(0, first.find('\n')), "path,label,model,n,k_bar,alpha,beta,seed,replicate");

  const auto entries = read_manifest(manifest);
  ASSERT_EQ(entries.size(), 10u);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ASSERT_TRUE(entries[i].spec.has_value());
    EXPECT_EQ(entries[i].spec->seed, plan[i].spec.seed);
    EXPECT_EQ(entries[i].spec->alpha, plan[i].spec.alpha);
    EXPECT_EQ(entries[i].label, plan[i].label);
    EXPECT_EQ(read_edge_list(resolve_entry_path(manifest, entries[i])), generate(plan[i].spec));
  }

  write_dataset(plan, dir.path(), 1);
  EXPECT_EQ(slurp(manifest), first);

  const auto data = features_from_manifest(manifest, parse_extractor("hu"), 2);
  EXPECT_EQ(data.size(), 10u);
  EXPECT_EQ(data.dimension(), 7u);
  EXPECT_EQ(data.classes().size(), 5u);
}

TEST(ManifestTest, ExternalEntriesAndErrors) {
  ScratchDir dir("netclass_pipeline_external");
  std::ofstream(dir.path() / "tri.edges") << "0 1\n1 2\n0 2\n";
  std::ofstream(dir.path() / "bad.edges") << "0 1\nzzz\n";
  std::ofstream(dir.path() / "m.csv") << "path,label\ntri.edges,x\n";
  const auto entries = read_manifest(dir.path() / "m.csv");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_FALSE(entries[0].spec.has_value());
  EXPECT_EQ(features_from_manifest(dir.path() / "m.csv", parse_extractor("hu"))[0].label, "x");

  std::ofstream(dir.path() / "bad.csv") << "path,label\ntri.edges,x\nbad.edges,y\n";
  expect_error(ErrorKind::parse, [&] { features_from_manifest(dir.path() / "bad.csv", parse_extractor("hu")); },
               "bad.edges");
  std::ofstream(dir.path() / "nolabel.csv") << "path\ntri.edges\n";
  expect_error(ErrorKind::parse, [&] { read_manifest(dir.path() / "nolabel.csv"); }, "label");
  expect_error(ErrorKind::io, [&] { read_manifest(dir.path() / "missing.csv"); });
}

}  // namespace
}  // namespace netclass
