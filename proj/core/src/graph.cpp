#include "netclass/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "netclass/error.hpp"

namespace netclass {

namespace {

void check_dense_size(std::size_t size) {
  if (size > kMaxDenseSize) {
    fail(ErrorKind::capacity, "dense matrix of size " + std::to_string(size) +
                                  " exceeds the limit of " + std::to_string(kMaxDenseSize));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_uint(std::string_view token) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) fail(ErrorKind::invalid_argument, "graph must have at least one node");
  if (n > std::size_t{std::numeric_limits<NodeId>::max()}) {
    fail(ErrorKind::capacity, "node count " + std::to_string(n) + " too large");
  }
  std::vector<std::vector<NodeId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      fail(ErrorKind::invalid_argument,
           "edge #" + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) +
               ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const NodeId> relabel) const {
  const std::size_t n = node_count();
  if (relabel.size() != n) fail(ErrorKind::invalid_argument, "relabel size does not match node count");
  std::vector<bool> seen(n, false);
  for (NodeId r : relabel) {
    if (r >= n || seen[r]) fail(ErrorKind::invalid_argument, "relabel is not a permutation");
    seen[r] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (const auto& e : edges()) mapped.push_back({relabel[e.u], relabel[e.v]});
  return from_edge_list(n, mapped);
}

LabeledGraph from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges) {
  LabeledGraph out;
  std::unordered_map<std::string, NodeId> index;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> dense;
  dense.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const NodeId u = id_of(a);
    const NodeId v = id_of(b);
    dense.push_back({u, v});
  }
  out.graph = Graph::from_edge_list(out.labels.size(), dense);
  return out;
}

BinaryMatrix::BinaryMatrix(std::size_t size) : size_(size) {
  check_dense_size(size);
  cells_.assign(size * size, 0);
}

BinaryMatrix::BinaryMatrix(std::size_t size, std::vector<std::uint8_t> cells) : size_(size) {
  check_dense_size(size);
  if (cells.size() != size * size) {
    fail(ErrorKind::invalid_argument, "cell count does not match size*size");
  }
  for (auto c : cells) {
    if (c > 1) fail(ErrorKind::invalid_argument, "binary matrix cells must be 0 or 1");
  }
  cells_ = std::move(cells);
}

CountMatrix::CountMatrix(std::size_t size) : size_(size) {
  check_dense_size(size);
  cells_.assign(size * size, 0);
}

BinaryMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  BinaryMatrix a(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) a.set(u, v, true);
  }
  return a;
}

std::vector<std::size_t> degree_vector(const Graph& g) {
  std::vector<std::size_t> k(g.node_count());
  for (NodeId v = 0; v < k.size(); ++v) k[v] = g.degree(v);
  return k;
}

CountMatrix cocitation(const Graph& g) {
  // C(i, j) = sum_k A(i, k) A(j, k): common neighbors of i and j.
  const std::size_t n = g.node_count();
  CountMatrix c(n);
  for (NodeId k = 0; k < n; ++k) {
    const auto nbrs = g.neighbors(k);
    for (NodeId i : nbrs) {
      for (NodeId j : nbrs) ++c(i, j);
    }
  }
  return c;
}

CountMatrix bibliographic_coupling(const Graph& g) {
  // B(i, j) = sum_k A(k, i) A(k, j). Equal to C for a symmetric A but
  // computed from the column side so the two products stay independent.
  const std::size_t n = g.node_count();
  const BinaryMatrix a = adjacency_matrix(g);
  CountMatrix b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = a.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i]) continue;
      for (std::size_t j = 0; j < n; ++j) b(i, j) += row[j];
    }
  }
  return b;
}

Graph graph_from_matrix(const BinaryMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m(i, j) != m(j, i)) fail(ErrorKind::invalid_argument, "matrix is not symmetric");
      if (m(i, j)) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  return Graph::from_edge_list(m.size(), edges);
}

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t max_index = 0;
  bool any_edge = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      std::string_view body = trim(text.substr(1));
      if (body.starts_with("n=")) {
        auto n = parse_uint<std::size_t>(trim(body.substr(2)));
        if (!n) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": malformed n directive");
        declared_n = *n;
      }
      continue;
    }
    const auto split = text.find_first_of(" \t");
    if (split == std::string_view::npos) {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected two node indices");
    }
    const auto u = parse_uint<NodeId>(text.substr(0, split));
    const auto v = parse_uint<NodeId>(trim(text.substr(split)));
    if (!u || !v) {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) +
                                 ": expected two non-negative integers, got '" + std::string(text) + "'");
    }
    edges.push_back({*u, *v});
    edge_lines.push_back(lineno);
    max_index = std::max<std::size_t>({max_index, *u, *v});
    any_edge = true;
  }

  const std::size_t n = declared_n.value_or(any_edge ? max_index + 1 : 0);
  if (n == 0) fail(ErrorKind::parse, "edge list declares no nodes");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= n || edges[i].v >= n) {
      fail(ErrorKind::parse, "line " + std::to_string(edge_lines[i]) + ": node index out of range for n=" +
                                 std::to_string(n));
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open " + path.string());
  try {
    return parse_edge_list(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.node_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

}  // namespace netclass
