#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

// Per-node sort key. Betweenness is compared through `betweenness_class`, a
// dense rank of the betweenness values after merging values that agree
// within kBetweennessTolerance (relative), so float noise from different
// summation orders cannot reorder nodes.
struct NodeKey {
  std::size_t degree = 0;
  double betweenness = 0.0;
  std::uint32_t betweenness_class = 0;
  // Neighbours' (degree, betweenness_class) pairs, sorted descending.
  std::vector<std::pair<std::size_t, std::uint32_t>> neighborhood;
};

inline constexpr double kBetweennessTolerance = 1e-12;

struct NodeRanking {
  std::vector<NodeId> permutation;  // rank -> original node
  std::vector<NodeKey> keys;        // indexed by original node
};

// Orders nodes by degree (desc), then betweenness (desc), then the
// neighbourhood key (lexicographically desc), then original index (asc).
NodeRanking node_ranking(const Graph& g, unsigned threads = 1);

// A'(r, s) = A(perm[r], perm[s]).
BinaryMatrix sorted_adjacency(const Graph& g, unsigned threads = 1);
BinaryMatrix permuted_adjacency(const Graph& g, const std::vector<NodeId>& permutation);

// True when no two nodes share the same (degree, betweenness) key, i.e. the
// ordering does not depend on the neighbourhood key or node indices.
bool primary_keys_injective(const NodeRanking& ranking);

}  // namespace netclass
