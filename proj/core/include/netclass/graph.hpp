#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netclass {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on nodes 0..n-1, stored as sorted neighbor lists
// (CSR layout). Immutable once built; every constructor enforces symmetry,
// no self-loops and no duplicate neighbors.
class Graph {
 public:
  Graph() = default;

  // Self-loops are dropped and duplicate edges (in either orientation)
  // are merged. Throws Error{invalid_argument} for n == 0 or an endpoint
  // outside [0, n); the message names the offending edge position.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  // Returns the graph with node i renamed to relabel[i]. relabel must be a
  // permutation of 0..n-1.
  Graph relabeled(std::span<const NodeId> relabel) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Graph built from edges whose endpoints are arbitrary string labels. Labels
// are mapped to dense indices in order of first appearance.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // index -> original label
};
LabeledGraph from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges);

// Largest matrix side accepted by the dense matrix types.
inline constexpr std::size_t kMaxDenseSize = 10'000;

// Dense square 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t size);
  BinaryMatrix(std::size_t size, std::vector<std::uint8_t> cells);

  std::size_t size() const noexcept { return size_; }
  std::uint8_t operator()(std::size_t row, std::size_t col) const { return cells_[row * size_ + col]; }
  void set(std::size_t row, std::size_t col, bool value) { cells_[row * size_ + col] = value ? 1 : 0; }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::span<const std::uint8_t> row(std::size_t r) const { return {cells_.data() + r * size_, size_}; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Dense square matrix of non-negative counts, row-major.
class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t operator()(std::size_t row, std::size_t col) const { return cells_[row * size_ + col]; }
  std::uint32_t& operator()(std::size_t row, std::size_t col) { return cells_[row * size_ + col]; }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint32_t> cells_;
};

BinaryMatrix adjacency_matrix(const Graph& g);
std::vector<std::size_t> degree_vector(const Graph& g);

// C = A * A^T and B = A^T * A over the integers.
CountMatrix cocitation(const Graph& g);
CountMatrix bibliographic_coupling(const Graph& g);

// Rebuilds a graph from the nonzero cells of a symmetric 0/1 matrix.
Graph graph_from_matrix(const BinaryMatrix& m);

// Edge-list text format: one "u v" pair per line, '#' starts a comment line,
// and an optional "# n=<N>" directive fixes the node count (otherwise
// n = 1 + largest index). Parse errors name the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace netclass
