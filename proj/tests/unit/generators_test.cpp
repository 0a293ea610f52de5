#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "netclass/generators.hpp"
#include "netclass/metrics.hpp"
#include "netclass/rng.hpp"
#include "test_util.hpp"

namespace netclass {
namespace {

using testing::expect_error;

GenSpec spec_of(Model model, std::size_t n, unsigned k, std::uint64_t seed, double alpha = 1.0, double beta = 0.1) {
  return {model, n, k, alpha, beta, seed};
}

bool connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == kUnreachable; });
}

double mean_degree(const Graph& g) { return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count()); }

std::size_t max_degree(const Graph& g) {
  const auto deg = degree_vector(g);
  return *std::max_element(deg.begin(), deg.end());
}

TEST(GenSpecTest, Validation) {
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::erdos_renyi, 0, 2, 1)); });
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::erdos_renyi, 10, 3, 1)); }, "even");
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::erdos_renyi, 10, 0, 1)); });
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::erdos_renyi, 10, 10, 1)); }, "smaller");
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::barabasi_albert, 10, 2, 1, 0.0)); });
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::barabasi_albert, 10, 2, 1, NAN)); });
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::watts_strogatz, 10, 2, 1, 1, 1.5)); });
  expect_error(ErrorKind::invalid_argument, [] { validate(spec_of(Model::dorogovtsev_mendes, 100, 6, 1)); },
               "divisible by 4");
  expect_error(ErrorKind::invalid_argument, [] { gen_erdos_renyi(spec_of(Model::watts_strogatz, 10, 2, 1)); });
}

TEST(GenSpecTest, TagsRoundTrip) {
  for (Model m : {Model::erdos_renyi, Model::watts_strogatz, Model::barabasi_albert, Model::geographic,
                  Model::dorogovtsev_mendes}) {
    EXPECT_EQ(model_from_tag(model_tag(m)), m);
  }
  EXPECT_FALSE(model_from_tag("XX").has_value());
}

TEST(ErdosRenyiTest, EdgeCountWithinFiveSigma) {
  const double pairs = 500.0 * 499.0 / 2.0;
  const double p = 8.0 / 500.0;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  EXPECT_DOUBLE_EQ(mean, 1996.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_erdos_renyi(spec_of(Model::erdos_renyi, 500, 8, seed));
    EXPECT_NEAR(static_cast<double>(g.edge_count()), mean, 5 * sd) << "seed " << seed;
  }
}

TEST(ErdosRenyiTest, DeterministicAndSeedSensitive) {
  const auto s = spec_of(Model::erdos_renyi, 200, 6, 99);
  EXPECT_EQ(gen_erdos_renyi(s), gen_erdos_renyi(s));
  auto other = s;
  other.seed = 100;
  EXPECT_NE(gen_erdos_renyi(s), gen_erdos_renyi(other));
}

TEST(ErdosRenyiTest, LargeGraphIsNearlyNeutral) {
  const Graph g = gen_erdos_renyi(spec_of(Model::erdos_renyi, 2000, 8, 4));
  EXPECT_LT(std::abs(assortativity_scalar(g)), 0.05);
}

TEST(WattsStrogatzTest, ZeroBetaIsRingLattice) {
  const Graph g = gen_watts_strogatz(spec_of(Model::watts_strogatz, 20, 6, 3, 1, 0.0));
  for (NodeId i = 0; i < 20; ++i) {
    EXPECT_EQ(g.degree(i), 6u);
    for (NodeId j = 1; j <= 3; ++j) EXPECT_TRUE(g.has_edge(i, (i + j) % 20));
  }
}

TEST(WattsStrogatzTest, EdgeCountExactForEveryBeta) {
  for (double beta : {0.0, 0.05, 0.1, 0.5, 1.0}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = gen_watts_strogatz(spec_of(Model::watts_strogatz, 500, 8, seed, 1, beta));
      EXPECT_EQ(g.edge_count(), 2000u);
      EXPECT_DOUBLE_EQ(mean_degree(g), 8.0);
    }
  }
  // Dense corner: every node is saturated, nothing can be rewired.
  const Graph k5 = gen_watts_strogatz(spec_of(Model::watts_strogatz, 5, 4, 1, 1, 1.0));
  EXPECT_EQ(k5.edge_count(), 10u);
}

TEST(WattsStrogatzTest, FullRewiringSpreadsDegrees) {
  const Graph g = gen_watts_strogatz(spec_of(Model::watts_strogatz, 500, 8, 12, 1, 1.0));
  const auto deg = degree_vector(g);
  double var = 0.0;
  for (auto d : deg) var += (static_cast<double>(d) - 8.0) * (static_cast<double>(d) - 8.0);
  EXPECT_GT(var / 500.0, 0.0);
}

TEST(BarabasiAlbertTest, SmallestPrefix) {
  const Graph g = gen_barabasi_albert(spec_of(Model::barabasi_albert, 6, 4, 8));
  EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
  EXPECT_EQ(g.edge_count(), 3u + 3u * 2u);
  EXPECT_EQ(g.degree(5), 2u);
  for (NodeId t = 3; t < 6; ++t) {
    std::size_t earlier = 0;
    for (NodeId v : g.neighbors(t)) earlier += v < t;
    EXPECT_EQ(earlier, 2u);
  }
}

TEST(BarabasiAlbertTest, ConnectedWithExactEdgeCount) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const Graph g = gen_barabasi_albert(spec_of(Model::barabasi_albert, 1000, 8, 1, alpha));
    EXPECT_TRUE(connected(g));
    EXPECT_EQ(g.edge_count(), 10u + 995u * 4u);
    EXPECT_NEAR(mean_degree(g), 8.0, 0.1);
  }
}

TEST(BarabasiAlbertTest, LinearModelHasHubs) {
  const Graph g = gen_barabasi_albert(spec_of(Model::barabasi_albert, 1000, 8, 2));
  EXPECT_GT(max_degree(g), 5 * 8u);
}

TEST(BarabasiAlbertTest, SuperlinearExponentGrowsLargerHubs) {
  std::vector<std::size_t> weak, strong;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    weak.push_back(max_degree(gen_barabasi_albert(spec_of(Model::barabasi_albert, 1000, 8, seed, 0.5))));
    strong.push_back(max_degree(gen_barabasi_albert(spec_of(Model::barabasi_albert, 1000, 8, seed, 2.0))));
  }
  std::nth_element(weak.begin(), weak.begin() + 10, weak.end());
  std::nth_element(strong.begin(), strong.begin() + 10, strong.end());
  EXPECT_GT(strong[10], weak[10]);
}

TEST(GeographicTest, RadiusFormula) {
  EXPECT_NEAR(geographic_radius(500, 8), 0.0714, 5e-5);
  EXPECT_DOUBLE_EQ(geographic_radius(500, 8), std::sqrt(8.0 / (std::numbers::pi * 499.0)));
}

TEST(GeographicTest, ThresholdIsStrict) {
  const std::vector<Point> pts{{0.25, 0.5}, {0.5, 0.5}, {0.5, 0.75}, {0.5, 0.5 + 0.2}};
  const Graph g = geometric_graph(pts, 0.25);
  EXPECT_FALSE(g.has_edge(0, 1));  // distance exactly 0.25
  EXPECT_FALSE(g.has_edge(1, 2));  // distance exactly 0.25
  EXPECT_TRUE(g.has_edge(1, 3));
}

TEST(GeographicTest, MatchesBruteForcePredicate) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto spec = spec_of(Model::geographic, 400, 8, seed);
    const auto pts = geographic_points(spec.n, spec.seed);
    const double r = geographic_radius(spec.n, spec.k_bar);
    const Graph g = gen_geographic(spec);
    std::size_t edges = 0;
    for (NodeId i = 0; i < pts.size(); ++i) {
      for (NodeId j = i + 1; j < pts.size(); ++j) {
        const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
        const bool expected = dx * dx + dy * dy < r * r;
        edges += expected;
        ASSERT_EQ(g.has_edge(i, j), expected) << i << "," << j;
      }
    }
    EXPECT_EQ(g.edge_count(), edges);
    EXPECT_EQ(gen_geographic(spec), g);
  }
}

TEST(GeographicTest, MeanDegreeBelowTargetFromBoundaryLoss) {
  const Graph g = gen_geographic(spec_of(Model::geographic, 500, 8, 21));
  EXPECT_GE(mean_degree(g), 0.8 * 8);
  EXPECT_LE(mean_degree(g), 8.0);
}

TEST(DorogovtsevMendesTest, SmallestStep) {
  // k_bar < n rules out n = 4; node 3's own step is the same at n = 5.
  const Graph g = gen_dorogovtsev_mendes(spec_of(Model::dorogovtsev_mendes, 5, 4, 5));
  EXPECT_EQ(g.edge_count(), 7u);
  std::vector<NodeId> earlier;
  for (NodeId v : g.neighbors(3))
    if (v < 3) earlier.push_back(v);
  ASSERT_EQ(earlier.size(), 2u);
  EXPECT_TRUE(g.has_edge(earlier[0], earlier[1]));
}

TEST(DorogovtsevMendesTest, ClassicGrowthMeanDegree) {
  const Graph g = gen_dorogovtsev_mendes(spec_of(Model::dorogovtsev_mendes, 1000, 4, 6));
  EXPECT_NEAR(mean_degree(g), 4.0, 0.02 * 4.0);
  EXPECT_TRUE(connected(g));
}

TEST(DorogovtsevMendesTest, GeneralisedMeanDegreeBand) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_dorogovtsev_mendes(spec_of(Model::dorogovtsev_mendes, 1000, 8, seed));
    EXPECT_GE(mean_degree(g), 7.8);
    EXPECT_LE(mean_degree(g), 8.0);
    EXPECT_TRUE(connected(g));
  }
}

TEST(DatasetPlanTest, PresetSizes) {
  auto count = [](const char* name) {
    const auto p = preset(name);
    return plan_dataset(p.grid, p.count_per_cell, 7).size();
  };
  EXPECT_EQ(count("synthetic-desk"), 300u);
  EXPECT_EQ(count("synthetic-full"), 11200u);
  EXPECT_EQ(count("scalefree-desk"), 100u);
  EXPECT_EQ(count("scalefree-full"), 500u);
  expect_error(ErrorKind::invalid_argument, [] { preset("nope"); }, "nope");
  EXPECT_EQ(preset_names().size(), 4u);
}

TEST(DatasetPlanTest, LabelsAndSeeds) {
  const auto p = preset("scalefree-desk");
  const auto plan = plan_dataset(p.grid, p.count_per_cell, 7);
  std::set<std::string> labels;
  std::set<std::uint64_t> seeds;
  for (const auto& e : plan) {
    labels.insert(e.label);
    seeds.insert(e.spec.seed);
  }
  EXPECT_EQ(labels, (std::set<std::string>{"BA_a0.5", "BA_a1.0", "BA_a1.5", "BA_a2.0", "DM"}));
  EXPECT_EQ(seeds.size(), plan.size());
  EXPECT_EQ(plan[3].spec.seed, mix_seed({7, 2, 1000, 8, double_bits(0.5), 3}));
}

TEST(DatasetPlanTest, DeterministicAcrossThreadCounts) {
  const auto grid = synthetic_grid(std::vector<unsigned>{4}, std::vector<std::size_t>{120});
  const auto a = gen_dataset(grid, 3, 11, 1);
  const auto b = gen_dataset(grid, 3, 11, 3);
  ASSERT_EQ(a.size(), 12u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph, b[i].graph);
    EXPECT_EQ(a[i].label, b[i].label);
  }
  expect_error(ErrorKind::invalid_argument, [] { plan_dataset({}, 3, 1); });
}

}  // namespace
}  // namespace netclass
