#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netclass/dataset.hpp"
#include "netclass/graph.hpp"

namespace netclass {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Hop distances from one source; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

class DistanceTable {
 public:
  explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}
  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::span<std::uint32_t> row(std::size_t i) { return {d_.data() + i * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

DistanceTable all_pairs_distances(const Graph& g, unsigned threads = 1);

// Per-source BFS results reduced without materialising the n x n table.
struct DistanceSummary {
  std::vector<double> closeness;           // (r_i - 1) / sum of finite d(i, j), 0 if isolated
  std::vector<std::uint32_t> eccentricity; // max finite distance from i within its component
  std::uint32_t max_distance = 0;          // max finite pairwise distance
  bool connected = true;
};
DistanceSummary summarize_distances(const Graph& g, unsigned threads = 1);

// Throw Error{disconnected} unless g is connected.
std::uint32_t diameter(const Graph& g, unsigned threads = 1);
std::vector<std::uint32_t> eccentricity(const Graph& g, unsigned threads = 1);

// (n-1)-scaled inverse distance sum. On disconnected graphs the sum runs
// over the reachable set R_i (including i) and is scaled by |R_i| - 1.
std::vector<double> closeness(const Graph& g, unsigned threads = 1);

// Brandes' algorithm, summed over unordered pairs, endpoints excluded.
// Sources are reduced in fixed-size blocks combined in block order, so the
// result is bit-identical for every thread count.
std::vector<double> betweenness(const Graph& g, unsigned threads = 1);

// Number of shortest paths from source to every node (the Brandes sigma).
std::vector<double> shortest_path_counts(const Graph& g, NodeId source);

// cc_i = 2 T_i / (k_i (k_i - 1)), zero when k_i < 2.
std::vector<double> clustering(const Graph& g);

// Mean degree of each node's neighbours; zero for isolated nodes.
std::vector<double> avg_neighbor_degree(const Graph& g);

// Newman's degree assortativity (Pearson correlation over edge ends).
// Throws Error{undefined_value} when the endpoint degree variance is zero.
double assortativity_scalar(const Graph& g);

enum class Metric : std::uint8_t { pp, d, cl, ecc, bet, k, cc };

std::string_view metric_tag(Metric m);
std::optional<Metric> metric_from_tag(std::string_view tag);
// pp, d, cl, ecc, bet, k, cc: the order of the combined descriptor.
std::span<const Metric> all_metrics();

struct MetricVector {
  Metric id;
  std::vector<double> values;  // length n, or 1 for the diameter
};

inline constexpr std::size_t kHistogramBins = 500;

struct Histogram {
  std::vector<double> bins;  // kHistogramBins entries
  double lo = 0.0;
  double hi = 1.0;
};

// Fixed per-metric ranges: cl, cc, bet -> [0, 1]; k, pp -> [0, 500);
// ecc -> [0, 100). Betweenness values are first divided by (n-1)(n-2)/2
// with n = values.size(). Values outside the range clamp into the end bins;
// counts are divided by the number of values.
Histogram metric_histogram(std::span<const double> values, Metric id);

// Concatenated histograms of the requested per-node metrics, in the order
// given; the diameter contributes one raw value divided by 100. Distance
// metrics use the component-wise convention of summarize_distances so that
// disconnected graphs still produce a descriptor.
FeatureVector structural_features(const Graph& g, std::span<const Metric> which, unsigned threads = 1);
std::size_t structural_dimension(std::span<const Metric> which);

}  // namespace netclass
