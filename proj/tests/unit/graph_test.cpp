#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "netclass/graph.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace netclass {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::expect_error;
using testing::make_graph;
using testing::path_graph;
using testing::star_graph;

void expect_simple_and_symmetric(const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      EXPECT_NE(nbrs[i], u);
      EXPECT_LT(nbrs[i], g.node_count());
      if (i > 0) EXPECT_LT(nbrs[i - 1], nbrs[i]);
      EXPECT_TRUE(g.has_edge(nbrs[i], u));
    }
  }
}

TEST(GraphTest, PathOfThree) {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(degree_vector(g), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphTest, SelfLoopAndReversedDuplicateDropped) {
  const Graph g = make_graph(2, {{0, 1}, {1, 0}, {0, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(GraphTest, Star) {
  EXPECT_EQ(degree_vector(star_graph(4)), (std::vector<std::size_t>{4, 1, 1, 1, 1}));
  EXPECT_EQ(degree_vector(cycle_graph(6)), std::vector<std::size_t>(6, 2));
}

TEST(GraphTest, RejectsBadInput) {
  expect_error(ErrorKind::invalid_argument, [] { make_graph(0, {}); });
  expect_error(ErrorKind::invalid_argument, [] { make_graph(3, {{0, 1}, {1, 3}}); }, "edge #1");
}

TEST(GraphTest, RandomGraphsAreSimpleAndRoundTripThroughMatrix) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(30);
    std::vector<Edge> edges;
    const std::size_t m = rng.below(3 * n + 1);
    for (std::size_t i = 0; i < m; ++i) {
      edges.push_back({static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n))});
    }
    const Graph g = Graph::from_edge_list(n, edges);
    expect_simple_and_symmetric(g);
    EXPECT_EQ(graph_from_matrix(adjacency_matrix(g)), g);

    const auto c = cocitation(g);
    std::size_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += c(i, i);
    EXPECT_EQ(trace, 2 * g.edge_count());
    EXPECT_EQ(c, bibliographic_coupling(g));
  }
}

TEST(AdjacencyTest, SmallCases) {
  const auto a = adjacency_matrix(path_graph(3));
  EXPECT_EQ(std::vector<std::uint8_t>(a.cells().begin(), a.cells().end()),
            (std::vector<std::uint8_t>{0, 1, 0, 1, 0, 1, 0, 1, 0}));

  const auto empty = adjacency_matrix(make_graph(2, {}));
  EXPECT_EQ(std::accumulate(empty.cells().begin(), empty.cells().end(), 0), 0);

  const auto k3 = adjacency_matrix(complete_graph(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k3(i, j), i == j ? 0 : 1);
}

TEST(AdjacencyTest, MatrixValidation) {
  expect_error(ErrorKind::invalid_argument, [] { BinaryMatrix(2, {0, 1, 2, 0}); });
  expect_error(ErrorKind::invalid_argument, [] { BinaryMatrix(2, {0, 1, 0}); });
  expect_error(ErrorKind::capacity, [] { BinaryMatrix m(kMaxDenseSize + 1); });
  expect_error(ErrorKind::invalid_argument, [] { graph_from_matrix(BinaryMatrix(2, {0, 1, 0, 0})); });
}

TEST(CocitationTest, PathOfThree) {
  const auto c = cocitation(path_graph(3));
  EXPECT_EQ(c(0, 2), 1u);
  EXPECT_EQ(c(1, 1), 2u);
  EXPECT_EQ(c(0, 1), 0u);
  const auto zero = cocitation(make_graph(4, {}));
  EXPECT_EQ(zero, CountMatrix(4));
}

TEST(LabeledEdgesTest, FirstAppearanceOrder) {
  const std::vector<std::pair<std::string, std::string>> edges{{"x", "y"}, {"z", "x"}, {"y", "y"}};
  const auto lg = from_labeled_edges(edges);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(lg.graph.has_edge(0, 1));
  EXPECT_TRUE(lg.graph.has_edge(0, 2));
  EXPECT_EQ(lg.graph.edge_count(), 2u);
}

TEST(EdgeListTest, ParsesCommentsAndDirective) {
  std::istringstream in("# a comment\n# n=6\n0 1\n\n1   2\n# trailing\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 2u);

  std::istringstream implicit("3 1\n");
  EXPECT_EQ(parse_edge_list(implicit).node_count(), 4u);
}

TEST(EdgeListTest, ErrorsNameTheLine) {
  expect_error(ErrorKind::parse, [] {
    std::istringstream in("0 1\n1 x\n");
    parse_edge_list(in);
  }, "line 2");
  expect_error(ErrorKind::parse, [] {
    std::istringstream in("0 1\n2\n");
    parse_edge_list(in);
  }, "line 2");
  expect_error(ErrorKind::parse, [] {
    std::istringstream in("# n=3\n0 1\n1 5\n");
    parse_edge_list(in);
  }, "line 3");
  expect_error(ErrorKind::parse, [] {
    std::istringstream in("");
    parse_edge_list(in);
  });
  expect_error(ErrorKind::io, [] { read_edge_list("/nonexistent/graph.edges"); }, "/nonexistent/graph.edges");
}

TEST(EdgeListTest, WriteThenParseKeepsIsolatedNodes) {
  const Graph g = make_graph(7, {{0, 3}, {3, 4}, {1, 4}});
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_edge_list(in), g);
}

TEST(GraphTest, RelabelIsIsomorphism) {
  Rng rng(3);
  const Graph g = oracle::random_gnp(15, 0.3, rng);
  const auto perm = oracle::random_permutation(15, rng);
  const Graph h = g.relabeled(perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
  expect_error(ErrorKind::invalid_argument, [&] {
    std::vector<NodeId> bad(15, 0);
    (void)g.relabeled(bad);
  });
}

}  // namespace
}  // namespace netclass
