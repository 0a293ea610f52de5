#include "netclass/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netclass/metrics.hpp"

namespace netclass {

namespace {

bool close_enough(double a, double b) {
  return std::abs(a - b) <= kBetweennessTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// Dense ranks of values, 0 for the smallest; neighbours in sorted order
// that are within tolerance share a rank.
std::vector<std::uint32_t> tolerance_classes(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::uint32_t> cls(values.size(), 0);
  std::uint32_t current = 0;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (!close_enough(values[idx[i - 1]], values[idx[i]])) ++current;
    cls[idx[i]] = current;
  }
  return cls;
}

}  // namespace

NodeRanking node_ranking(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  const auto bet = betweenness(g, threads);
  const auto cls = tolerance_classes(bet);

  NodeRanking ranking;
  ranking.keys.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    auto& key = ranking.keys[v];
    key.degree = g.degree(v);
    key.betweenness = bet[v];
    key.betweenness_class = cls[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    auto& hood = ranking.keys[v].neighborhood;
    hood.reserve(g.degree(v));
    for (NodeId u : g.neighbors(v)) hood.emplace_back(ranking.keys[u].degree, ranking.keys[u].betweenness_class);
    std::sort(hood.begin(), hood.end(), std::greater<>());
  }

  ranking.permutation.resize(n);
  std::iota(ranking.permutation.begin(), ranking.permutation.end(), 0);
  const auto& keys = ranking.keys;
  std::sort(ranking.permutation.begin(), ranking.permutation.end(), [&](NodeId a, NodeId b) {
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    if (ka.degree != kb.degree) return ka.degree > kb.degree;
    if (ka.betweenness_class != kb.betweenness_class) return ka.betweenness_class > kb.betweenness_class;
    if (ka.neighborhood != kb.neighborhood) return ka.neighborhood > kb.neighborhood;
    return a < b;
  });
  return ranking;
}

BinaryMatrix permuted_adjacency(const Graph& g, const std::vector<NodeId>& permutation) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> rank_of(n);
  for (std::size_t r = 0; r < n; ++r) rank_of[permutation[r]] = static_cast<NodeId>(r);
  BinaryMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (NodeId u : g.neighbors(permutation[r])) out.set(r, rank_of[u], true);
  }
  return out;
}

BinaryMatrix sorted_adjacency(const Graph& g, unsigned threads) {
  return permuted_adjacency(g, node_ranking(g, threads).permutation);
}

bool primary_keys_injective(const NodeRanking& ranking) {
  const auto& perm = ranking.permutation;
  for (std::size_t r = 1; r < perm.size(); ++r) {
    const auto& a = ranking.keys[perm[r - 1]];
    const auto& b = ranking.keys[perm[r]];
    if (a.degree == b.degree && a.betweenness_class == b.betweenness_class) return false;
  }
  return true;
}

}  // namespace netclass
