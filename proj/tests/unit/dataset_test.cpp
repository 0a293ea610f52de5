#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "netclass/dataset.hpp"
#include "test_util.hpp"

namespace netclass {
namespace {

using testing::expect_error;

LabeledDataset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_feature_csv(in, "external");
}

TEST(FeatureCsvTest, TwoRows) {
  const auto data = parse("label,f0,f1,f2\na,1,2,3\nb,4.5,-6e-3,0\n");
  ASSERT_EQ(data.size(), 2u);
  EXPECT_EQ(data.dimension(), 3u);
  EXPECT_EQ(data.classes(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(data[1].values, (std::vector<double>{4.5, -6e-3, 0.0}));
  EXPECT_EQ(data.extractor(), "external");
}

TEST(FeatureCsvTest, Errors) {
  expect_error(ErrorKind::parse, [] { parse("label,f0,f1,f2\na,1,2,3\nb,1,2\n"); }, "line 3");
  expect_error(ErrorKind::parse, [] { parse(""); }, "no data rows");
  expect_error(ErrorKind::parse, [] { parse("label,f0\n"); }, "no data rows");
  expect_error(ErrorKind::parse, [] { parse("name,f0\na,1\n"); }, "label");
  expect_error(ErrorKind::parse, [] { parse("label,f0\na,abc\n"); }, "non-numeric");
  expect_error(ErrorKind::parse, [] { parse("label,f0\na,\n"); }, "non-numeric");
  expect_error(ErrorKind::parse, [] { parse("label,f0\n,1\n"); }, "empty label");
  expect_error(ErrorKind::io, [] { load_external_features("/nonexistent/features.csv"); });
}

TEST(FeatureCsvTest, WriteReadRoundTripIsExact) {
  std::vector<FeatureVector> rows{
      {"clbp", "x", {0.1, 1.0 / 3.0, 1e-300, 12345678.9}},
      {"clbp", "y", {-0.0, 2.5, 7.0, 0.30000000000000004}},
  };
  const LabeledDataset data(rows);
  std::ostringstream out;
  write_feature_csv(out, data);
  EXPECT_EQ(out.str().substr(0, 18), "label,f0,f1,f2,f3\n");
  std::istringstream in(out.str());
  const auto back = parse_feature_csv(in, "clbp");
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(back[i].values, rows[i].values);

  const auto path = std::filesystem::temp_directory_path() / "netclass_dataset_test.csv";
  write_feature_csv(path, data);
  EXPECT_EQ(load_external_features(path)[0].values, rows[0].values);
  std::filesystem::remove(path);
}

TEST(LabeledDatasetTest, RejectsMixedDimensions) {
  std::vector<FeatureVector> rows{{"hu", "a", {1, 2}}, {"hu", "b", {1}}};
  expect_error(ErrorKind::invalid_argument, [&] { LabeledDataset d(rows); });
}

TEST(LabeledDatasetTest, ClassIdsFollowFirstAppearance) {
  const auto data = parse("label,f0\nz,1\na,2\nz,3\nm,4\n");
  EXPECT_EQ(data.classes(), (std::vector<std::string>{"z", "a", "m"}));
  EXPECT_EQ(data.class_ids(), (std::vector<std::size_t>{0, 1, 0, 2}));
}

}  // namespace
}  // namespace netclass
