#include "netclass/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "netclass/error.hpp"
#include "netclass/parallel.hpp"
#include "netclass/rng.hpp"

namespace netclass {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::invalid_argument, message);
}

void require_model(const GenSpec& spec, Model model) {
  require(spec.model == model, "generator called with a spec for model " + std::string(model_tag(spec.model)));
  validate(spec);
}

// Fenwick tree over non-negative weights supporting weighted sampling.
class WeightTree {
 public:
  explicit WeightTree(std::size_t size) : tree_(size + 1, 0.0) {
    while ((top_bit_ << 1) <= size) top_bit_ <<= 1;
  }

  void add(std::size_t index, double delta) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  double prefix(std::size_t count) const {
    double sum = 0.0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  // Smallest index whose inclusive prefix sum exceeds target.
  std::size_t find(double target) const {
    std::size_t pos = 0;
    for (std::size_t step = top_bit_; step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<double> tree_;
  std::size_t top_bit_ = 1;
};

}  // namespace

std::string_view model_tag(Model model) {
  switch (model) {
    case Model::erdos_renyi: return "ER";
    case Model::watts_strogatz: return "WS";
    case Model::barabasi_albert: return "BA";
    case Model::geographic: return "GEO";
    case Model::dorogovtsev_mendes: return "DM";
  }
  return "?";
}

std::optional<Model> model_from_tag(std::string_view tag) {
  for (Model m : {Model::erdos_renyi, Model::watts_strogatz, Model::barabasi_albert, Model::geographic,
                  Model::dorogovtsev_mendes}) {
    if (model_tag(m) == tag) return m;
  }
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  require(spec.n >= 1, "n must be positive");
  require(spec.k_bar >= 2 && spec.k_bar % 2 == 0,
          "k_bar must be an even integer >= 2, got " + std::to_string(spec.k_bar));
  require(spec.k_bar < spec.n,
          "k_bar must be smaller than n (k_bar=" + std::to_string(spec.k_bar) + ", n=" + std::to_string(spec.n) + ")");
  if (spec.model == Model::barabasi_albert) {
    require(spec.alpha > 0.0 && std::isfinite(spec.alpha), "alpha must be a positive finite number for BA");
  }
  if (spec.model == Model::watts_strogatz) {
    require(spec.beta >= 0.0 && spec.beta <= 1.0, "beta must lie in [0, 1] for WS");
  }
  if (spec.model == Model::dorogovtsev_mendes) {
    require(spec.k_bar % 4 == 0, "DM adds 2 edges per selected edge, so k_bar must be divisible by 4 (got " +
                                     std::to_string(spec.k_bar) + ")");
    require(spec.n >= 3, "DM needs at least the 3-node seed triangle");
  }
}

Graph gen_erdos_renyi(const GenSpec& spec) {
  require_model(spec, Model::erdos_renyi);
  Rng rng(spec.seed);
  const double p = static_cast<double>(spec.k_bar) / static_cast<double>(spec.n);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(spec.n, edges);
}

Graph gen_watts_strogatz(const GenSpec& spec) {
  require_model(spec, Model::watts_strogatz);
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t half = spec.k_bar / 2;

  std::vector<std::vector<NodeId>> adj(n);
  auto linked = [&](NodeId a, NodeId b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
  auto unlink_one = [&](NodeId a, NodeId b) {
    auto it = std::find(adj[a].begin(), adj[a].end(), b);
    *it = adj[a].back();
    adj[a].pop_back();
  };

  for (std::size_t j = 1; j <= half; ++j) {
    for (NodeId i = 0; i < n; ++i) {
      const auto v = static_cast<NodeId>((i + j) % n);
      adj[i].push_back(v);
      adj[v].push_back(i);
    }
  }

  for (std::size_t j = 1; j <= half; ++j) {
    for (NodeId i = 0; i < n; ++i) {
      // The coin is always flipped so the stream does not depend on degrees.
      if (!rng.bernoulli(spec.beta)) continue;
      if (adj[i].size() >= n - 1) continue;
      const auto v = static_cast<NodeId>((i + j) % n);
      NodeId w;
      do {
        w = static_cast<NodeId>(rng.below(n));
      } while (w == i || linked(i, w));
      unlink_one(i, v);
      unlink_one(v, i);
      adj[i].push_back(w);
      adj[w].push_back(i);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n * half);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_barabasi_albert(const GenSpec& spec) {
  require_model(spec, Model::barabasi_albert);
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t c = spec.k_bar / 2;
  const std::size_t core = c + 1;

  std::vector<Edge> edges;
  edges.reserve(core * c / 2 + (n - core) * c);
  std::vector<std::size_t> degree(n, 0);
  WeightTree weights(n);
  auto weight_of = [&](std::size_t k) { return std::pow(static_cast<double>(k), spec.alpha); };

  for (NodeId u = 0; u < core; ++u) {
    for (NodeId v = u + 1; v < core; ++v) edges.push_back({u, v});
    degree[u] = c;
    weights.add(u, weight_of(c));
  }

  std::vector<NodeId> targets;
  targets.reserve(c);
  for (std::size_t t = core; t < n; ++t) {
    targets.clear();
    const double total = weights.prefix(t);
    while (targets.size() < c) {
      auto pick = static_cast<NodeId>(std::min(weights.find(rng.uniform() * total), t - 1));
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId target : targets) {
      edges.push_back({target, static_cast<NodeId>(t)});
      weights.add(target, weight_of(degree[target] + 1) - weight_of(degree[target]));
      ++degree[target];
    }
    degree[t] = c;
    weights.add(t, weight_of(c));
  }
  return Graph::from_edge_list(n, edges);
}

double geographic_radius(std::size_t n, unsigned k_bar) {
  return std::sqrt(static_cast<double>(k_bar) / (std::numbers::pi * static_cast<double>(n - 1)));
}

std::vector<Point> geographic_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> points(n);
  for (auto& p : points) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  return points;
}

Graph geometric_graph(std::span<const Point> points, double radius) {
  const std::size_t n = points.size();
  if (n == 0) fail(ErrorKind::invalid_argument, "geometric graph needs at least one point");
  const double r2 = radius * radius;

  // Bucket points into square cells of side >= radius; only the 3x3 block
  // of cells around a point can hold neighbours.
  const auto cells = static_cast<std::size_t>(std::clamp(std::floor(1.0 / radius), 1.0, 4096.0));
  auto cell_of = [&](double coord) {
    return std::min(static_cast<std::size_t>(std::max(coord, 0.0) * static_cast<double>(cells)), cells - 1);
  };
  std::vector<std::vector<NodeId>> bucket(cells * cells);
  for (NodeId i = 0; i < n; ++i) bucket[cell_of(points[i].y) * cells + cell_of(points[i].x)].push_back(i);

  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t cx = cell_of(points[i].x);
    const std::size_t cy = cell_of(points[i].y);
    for (std::size_t y = cy == 0 ? 0 : cy - 1; y <= std::min(cy + 1, cells - 1); ++y) {
      for (std::size_t x = cx == 0 ? 0 : cx - 1; x <= std::min(cx + 1, cells - 1); ++x) {
        for (NodeId j : bucket[y * cells + x]) {
          if (j <= i) continue;
          const double dx = points[i].x - points[j].x;
          const double dy = points[i].y - points[j].y;
          if (dx * dx + dy * dy < r2) edges.push_back({i, j});
        }
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_geographic(const GenSpec& spec) {
  require_model(spec, Model::geographic);
  return geometric_graph(geographic_points(spec.n, spec.seed), geographic_radius(spec.n, spec.k_bar));
}

Graph gen_dorogovtsev_mendes(const GenSpec& spec) {
  require_model(spec, Model::dorogovtsev_mendes);
  Rng rng(spec.seed);
  const std::size_t m = spec.k_bar / 4;

  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  edges.reserve(3 + 2 * m * spec.n);
  std::vector<std::size_t> picked;
  std::vector<NodeId> ends;
  for (std::size_t t = 3; t < spec.n; ++t) {
    const std::size_t pickable = std::min(m, edges.size());
    picked.clear();
    while (picked.size() < pickable) {
      const auto e = static_cast<std::size_t>(rng.below(edges.size()));
      if (std::find(picked.begin(), picked.end(), e) == picked.end()) picked.push_back(e);
    }
    ends.clear();
    for (std::size_t e : picked) {
      ends.push_back(edges[e].u);
      ends.push_back(edges[e].v);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (NodeId v : ends) edges.push_back({v, static_cast<NodeId>(t)});
  }
  return Graph::from_edge_list(spec.n, edges);
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::erdos_renyi: return gen_erdos_renyi(spec);
    case Model::watts_strogatz: return gen_watts_strogatz(spec);
    case Model::barabasi_albert: return gen_barabasi_albert(spec);
    case Model::geographic: return gen_geographic(spec);
    case Model::dorogovtsev_mendes: return gen_dorogovtsev_mendes(spec);
  }
  fail(ErrorKind::invalid_argument, "unknown model");
}

std::vector<DatasetEntry> plan_dataset(std::span<const GridCell> grid, std::size_t count_per_cell,
                                       std::uint64_t base_seed) {
  require(!grid.empty(), "dataset grid is empty");
  std::vector<DatasetEntry> plan;
  plan.reserve(grid.size() * count_per_cell);
  for (const auto& cell : grid) {
    for (std::size_t r = 0; r < count_per_cell; ++r) {
      DatasetEntry entry;
      entry.spec = {cell.model, cell.n, cell.k_bar, cell.alpha, cell.beta, 0};
      entry.spec.seed = mix_seed({base_seed, static_cast<std::uint64_t>(cell.model), cell.n, cell.k_bar,
                                  double_bits(cell.alpha), r});
      validate(entry.spec);
      entry.label = cell.label;
      entry.replicate = r;
      plan.push_back(std::move(entry));
    }
  }
  return plan;
}

std::vector<LabeledGraphSample> gen_dataset(std::span<const GridCell> grid, std::size_t count_per_cell,
                                            std::uint64_t base_seed, unsigned threads) {
  const auto plan = plan_dataset(grid, count_per_cell, base_seed);
  std::vector<LabeledGraphSample> out(plan.size());
  parallel_for(plan.size(), threads, [&](std::size_t i) {
    out[i].graph = generate(plan[i].spec);
    out[i].label = plan[i].label;
  });
  return out;
}

std::vector<GridCell> synthetic_grid(std::span<const unsigned> degrees, std::span<const std::size_t> sizes) {
  std::vector<GridCell> grid;
  for (Model model : {Model::erdos_renyi, Model::watts_strogatz, Model::barabasi_albert, Model::geographic}) {
    for (std::size_t n : sizes) {
      for (unsigned k : degrees) {
        GridCell cell;
        cell.model = model;
        cell.n = n;
        cell.k_bar = k;
        cell.label = std::string(model_tag(model));
        grid.push_back(std::move(cell));
      }
    }
  }
  return grid;
}

std::vector<GridCell> scalefree_grid(std::size_t n, unsigned k_bar) {
  std::vector<GridCell> grid;
  for (const auto& [alpha, label] :
       std::array<std::pair<double, const char*>, 4>{{{0.5, "BA_a0.5"}, {1.0, "BA_a1.0"}, {1.5, "BA_a1.5"},
                                                      {2.0, "BA_a2.0"}}}) {
    GridCell cell;
    cell.model = Model::barabasi_albert;
    cell.n = n;
    cell.k_bar = k_bar;
    cell.alpha = alpha;
    cell.label = label;
    grid.push_back(std::move(cell));
  }
  GridCell dm;
  dm.model = Model::dorogovtsev_mendes;
  dm.n = n;
  dm.k_bar = k_bar;
  dm.label = "DM";
  grid.push_back(std::move(dm));
  return grid;
}

Preset preset(std::string_view name) {
  if (name == "synthetic-desk") {
    const std::array<unsigned, 3> degrees{4, 6, 8};
    const std::array<std::size_t, 1> sizes{500};
    return {std::string(name), synthetic_grid(degrees, sizes), 25};
  }
  if (name == "synthetic-full") {
    const std::array<unsigned, 7> degrees{4, 6, 8, 10, 12, 14, 16};
    const std::array<std::size_t, 4> sizes{500, 1000, 1500, 2000};
    return {std::string(name), synthetic_grid(degrees, sizes), 100};
  }
  if (name == "scalefree-desk") return {std::string(name), scalefree_grid(1000, 8), 20};
  if (name == "scalefree-full") return {std::string(name), scalefree_grid(1000, 8), 100};
  fail(ErrorKind::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"synthetic-desk", "synthetic-full", "scalefree-desk", "scalefree-full"};
}

}  // namespace netclass
