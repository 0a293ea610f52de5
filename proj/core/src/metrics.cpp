#include "netclass/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "netclass/error.hpp"
#include "netclass/parallel.hpp"

namespace netclass {

namespace {

constexpr std::size_t kSourceBlock = 64;

void bfs_into(const Graph& g, NodeId source, std::span<std::uint32_t> dist, std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

// Single-source stage of Brandes: BFS order, path counts and the
// dependency accumulation. `delta` receives the dependencies of `source`.
struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

  void run(const Graph& g, NodeId source) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors are recovered from distances instead of stored lists.
    for (std::size_t idx = order.size(); idx-- > 1;) {
      const NodeId w = order[idx];
      const double share = (1.0 + delta[w]) / sigma[w];
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] * share;
      }
    }
  }

  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;
};

std::size_t bin_index(double value, double lo, double hi) {
  const double scaled = (value - lo) / (hi - lo) * static_cast<double>(kHistogramBins);
  if (!(scaled > 0.0)) return 0;  // also catches NaN
  return std::min(static_cast<std::size_t>(scaled), kHistogramBins - 1);
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::uint32_t> dist(g.node_count());
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  bfs_into(g, source, dist, queue);
  return dist;
}

DistanceTable all_pairs_distances(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  DistanceTable table(n);
  parallel_for(n, threads, [&](std::size_t s) {
    std::vector<NodeId> queue;
    queue.reserve(n);
    bfs_into(g, static_cast<NodeId>(s), table.row(s), queue);
  });
  return table;
}

DistanceSummary summarize_distances(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  DistanceSummary out;
  out.closeness.assign(n, 0.0);
  out.eccentricity.assign(n, 0);
  std::vector<std::uint8_t> spans_all(n, 0);

  const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
    for (std::size_t s = b * kSourceBlock; s < end; ++s) {
      bfs_into(g, static_cast<NodeId>(s), dist, queue);
      std::uint64_t sum = 0;
      for (NodeId v : queue) sum += dist[v];
      const std::size_t reachable = queue.size();
      out.eccentricity[s] = dist[queue.back()];
      out.closeness[s] = sum == 0 ? 0.0 : static_cast<double>(reachable - 1) / static_cast<double>(sum);
      spans_all[s] = reachable == n;
    }
  });

  out.max_distance = n == 0 ? 0 : *std::max_element(out.eccentricity.begin(), out.eccentricity.end());
  out.connected = std::all_of(spans_all.begin(), spans_all.end(), [](std::uint8_t x) { return x != 0; });
  return out;
}

std::uint32_t diameter(const Graph& g, unsigned threads) {
  const auto summary = summarize_distances(g, threads);
  if (!summary.connected) fail(ErrorKind::disconnected, "diameter is undefined for a disconnected graph");
  return summary.max_distance;
}

std::vector<std::uint32_t> eccentricity(const Graph& g, unsigned threads) {
  auto summary = summarize_distances(g, threads);
  if (!summary.connected) fail(ErrorKind::disconnected, "eccentricity is undefined for a disconnected graph");
  return std::move(summary.eccentricity);
}

std::vector<double> closeness(const Graph& g, unsigned threads) {
  return summarize_distances(g, threads).closeness;
}

std::vector<double> betweenness(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  std::vector<std::vector<double>> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    BrandesWorkspace ws(n);
    auto& acc = partial[b];
    acc.assign(n, 0.0);
    const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
    for (std::size_t s = b * kSourceBlock; s < end; ++s) {
      ws.run(g, static_cast<NodeId>(s));
      for (NodeId v : ws.order) {
        if (v != s) acc[v] += ws.delta[v];
      }
    }
  });

  std::vector<double> result(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) result[v] += acc[v];
  }
  // Every unordered pair was counted once from each endpoint.
  for (double& x : result) x *= 0.5;
  return result;
}

std::vector<double> shortest_path_counts(const Graph& g, NodeId source) {
  BrandesWorkspace ws(g.node_count());
  ws.run(g, source);
  return ws.sigma;
}

std::vector<double> clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> cc(n, 0.0);
  std::vector<std::uint8_t> mark(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    for (NodeId u : nbrs) mark[u] = 1;
    std::size_t links = 0;
    for (NodeId u : nbrs) {
      for (NodeId w : g.neighbors(u)) links += mark[w];
    }
    for (NodeId u : nbrs) mark[u] = 0;
    // Each neighbour-neighbour edge was seen from both ends.
    cc[v] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return cc;
}

std::vector<double> avg_neighbor_degree(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> pp(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    std::size_t sum = 0;
    for (NodeId u : nbrs) sum += g.degree(u);
    pp[v] = static_cast<double>(sum) / static_cast<double>(nbrs.size());
  }
  return pp;
}

double assortativity_scalar(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) fail(ErrorKind::undefined_value, "assortativity is undefined for a graph without edges");
  std::uint64_t sum_prod = 0;
  std::uint64_t sum_ends = 0;
  std::uint64_t sum_squares = 0;
  for (const auto& e : g.edges()) {
    const std::uint64_t j = g.degree(e.u);
    const std::uint64_t k = g.degree(e.v);
    sum_prod += j * k;
    sum_ends += j + k;
    sum_squares += j * j + k * k;
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  const double mean = 0.5 * static_cast<double>(sum_ends) * inv_m;
  const double numerator = static_cast<double>(sum_prod) * inv_m - mean * mean;
  const double denominator = 0.5 * static_cast<double>(sum_squares) * inv_m - mean * mean;
  if (!(std::abs(denominator) > 1e-12 * std::max(1.0, mean * mean))) {
    fail(ErrorKind::undefined_value, "assortativity is undefined: endpoint degrees have zero variance");
  }
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

std::string_view metric_tag(Metric m) {
  switch (m) {
    case Metric::pp: return "pp";
    case Metric::d: return "d";
    case Metric::cl: return "cl";
    case Metric::ecc: return "ecc";
    case Metric::bet: return "bet";
    case Metric::k: return "k";
    case Metric::cc: return "cc";
  }
  return "?";
}

std::optional<Metric> metric_from_tag(std::string_view tag) {
  for (Metric m : all_metrics()) {
    if (metric_tag(m) == tag) return m;
  }
  return std::nullopt;
}

std::span<const Metric> all_metrics() {
  static constexpr std::array<Metric, 7> kAll{Metric::pp, Metric::d,   Metric::cl, Metric::ecc,
                                              Metric::bet, Metric::k, Metric::cc};
  return kAll;
}

Histogram metric_histogram(std::span<const double> values, Metric id) {
  if (values.empty()) fail(ErrorKind::invalid_argument, "cannot histogram an empty metric vector");
  Histogram h;
  switch (id) {
    case Metric::cl:
    case Metric::cc:
    case Metric::bet:
      h.lo = 0.0;
      h.hi = 1.0;
      break;
    case Metric::k:
    case Metric::pp:
      h.lo = 0.0;
      h.hi = 500.0;
      break;
    case Metric::ecc:
      h.lo = 0.0;
      h.hi = 100.0;
      break;
    case Metric::d:
      fail(ErrorKind::invalid_argument, "the diameter is a scalar and is not histogrammed");
  }
  h.bins.assign(kHistogramBins, 0.0);

  const std::size_t n = values.size();
  double scale = 1.0;
  if (id == Metric::bet && n >= 3) scale = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double v : values) h.bins[bin_index(v * scale, h.lo, h.hi)] += 1.0;
  for (double& b : h.bins) b /= static_cast<double>(n);
  return h;
}

std::size_t structural_dimension(std::span<const Metric> which) {
  std::size_t dim = 0;
  for (Metric m : which) dim += m == Metric::d ? 1 : kHistogramBins;
  return dim;
}

FeatureVector structural_features(const Graph& g, std::span<const Metric> which, unsigned threads) {
  if (which.empty()) fail(ErrorKind::invalid_argument, "no structural metrics selected");
  const bool need_distances = std::any_of(which.begin(), which.end(), [](Metric m) {
    return m == Metric::d || m == Metric::cl || m == Metric::ecc;
  });
  DistanceSummary distances;
  if (need_distances) distances = summarize_distances(g, threads);

  FeatureVector out;
  out.values.reserve(structural_dimension(which));
  auto append = [&](std::span<const double> values, Metric id) {
    const Histogram h = metric_histogram(values, id);
    out.values.insert(out.values.end(), h.bins.begin(), h.bins.end());
  };

  for (Metric m : which) {
    switch (m) {
      case Metric::pp: append(avg_neighbor_degree(g), m); break;
      case Metric::d: out.values.push_back(static_cast<double>(distances.max_distance) / 100.0); break;
      case Metric::cl: append(distances.closeness, m); break;
      case Metric::ecc: {
        std::vector<double> ecc(distances.eccentricity.begin(), distances.eccentricity.end());
        append(ecc, m);
        break;
      }
      case Metric::bet: append(betweenness(g, threads), m); break;
      case Metric::k: {
        std::vector<double> k(g.node_count());
        for (NodeId v = 0; v < k.size(); ++v) k[v] = static_cast<double>(g.degree(v));
        append(k, m);
        break;
      }
      case Metric::cc: append(clustering(g), m); break;
    }
  }

  out.extractor = "structural:";
  if (which.size() == all_metrics().size() && std::equal(which.begin(), which.end(), all_metrics().begin())) {
    out.extractor += "combined";
  } else {
    for (std::size_t i = 0; i < which.size(); ++i) {
      if (i) out.extractor += ',';
      out.extractor += metric_tag(which[i]);
    }
  }
  return out;
}

}  // namespace netclass
