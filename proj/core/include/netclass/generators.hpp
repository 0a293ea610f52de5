#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

enum class Model : std::uint8_t {
  erdos_renyi = 0,
  watts_strogatz = 1,
  barabasi_albert = 2,
  geographic = 3,
  dorogovtsev_mendes = 4,
};

// Short tags used in labels, file names and manifests: ER, WS, BA, GEO, DM.
std::string_view model_tag(Model model);
std::optional<Model> model_from_tag(std::string_view tag);

struct GenSpec {
  Model model = Model::erdos_renyi;
  std::size_t n = 0;
  unsigned k_bar = 0;  // target mean degree, even, >= 2, < n
  double alpha = 1.0;  // attachment exponent, BA only
  double beta = 0.1;   // rewiring probability, WS only
  std::uint64_t seed = 0;
};

// Throws Error{invalid_argument} describing the first violated constraint.
void validate(const GenSpec& spec);

// Each of the n(n-1)/2 pairs becomes an edge independently with p = k_bar/n.
Graph gen_erdos_renyi(const GenSpec& spec);

// Ring lattice (k_bar/2 neighbours per side) whose clockwise endpoints are
// rewired with probability beta. Edges are visited lap by lap: first every
// (i, i+1), then every (i, i+2), ... A rewired edge keeps i and draws a new
// uniform endpoint, redrawing on self-loops or existing neighbours.
// Edge count is exactly n * k_bar / 2.
Graph gen_watts_strogatz(const GenSpec& spec);

// Preferential attachment with P(i) proportional to k_i^alpha, seeded by a
// complete graph on c+1 nodes (c = k_bar/2). Each arriving node links to c
// distinct existing nodes; repeated draws within an arrival are rejected.
Graph gen_barabasi_albert(const GenSpec& spec);

// Random geometric graph in the unit square: edge iff distance < r with
// r = sqrt(k_bar / (pi (n-1))).
Graph gen_geographic(const GenSpec& spec);

// Dorogovtsev-Mendes growth from a triangle: each arriving node picks
// m = k_bar/4 distinct existing edges uniformly and links to both endpoints
// of each. Endpoints shared between picked edges are linked once.
Graph gen_dorogovtsev_mendes(const GenSpec& spec);

// Dispatches on spec.model after validation.
Graph generate(const GenSpec& spec);

struct Point {
  double x;
  double y;
};

double geographic_radius(std::size_t n, unsigned k_bar);
// The point set gen_geographic uses for a given seed.
std::vector<Point> geographic_points(std::size_t n, std::uint64_t seed);
// Edge (i, j) iff (xi-xj)^2 + (yi-yj)^2 < radius^2.
Graph geometric_graph(std::span<const Point> points, double radius);

// One cell of a dataset grid: a generator configuration and its class label.
struct GridCell {
  Model model = Model::erdos_renyi;
  std::size_t n = 0;
  unsigned k_bar = 0;
  double alpha = 1.0;
  double beta = 0.1;
  std::string label;
};

struct DatasetEntry {
  GenSpec spec;
  std::string label;
  std::size_t replicate = 0;
};

// Expands a grid into count_per_cell entries per cell (cell-major order) with
// seed = mix_seed({base_seed, model, n, k_bar, bits(alpha), replicate}).
std::vector<DatasetEntry> plan_dataset(std::span<const GridCell> grid, std::size_t count_per_cell,
                                       std::uint64_t base_seed);

struct LabeledGraphSample {
  Graph graph;
  std::string label;
};

// Generates every planned entry; output order is plan order for any worker count.
std::vector<LabeledGraphSample> gen_dataset(std::span<const GridCell> grid, std::size_t count_per_cell,
                                            std::uint64_t base_seed, unsigned threads = 1);

// Dataset grids. The synthetic grid has four classes (ER, WS, BA with
// alpha = 1, GEO); the scale-free grid has five (BA at four exponents + DM).
std::vector<GridCell> synthetic_grid(std::span<const unsigned> degrees, std::span<const std::size_t> sizes);
std::vector<GridCell> scalefree_grid(std::size_t n, unsigned k_bar);

struct Preset {
  std::string name;
  std::vector<GridCell> grid;
  std::size_t count_per_cell = 0;
};

// synthetic-desk, synthetic-full, scalefree-desk, scalefree-full.
Preset preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace netclass
