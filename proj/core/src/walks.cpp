#include "hoopsnet/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hoopsnet/error.hpp"
#include "hoopsnet/seeds.hpp"

namespace hoopsnet {

namespace {

// d(t,x) for the bias term: 0 when x is the previous node, 1 when x and t
// are adjacent (either direction), 2 otherwise.
double alpha(const WeightedDigraph& g, NodeId t, NodeId x, double p, double q) {
  if (x == t) return 1.0 / p;
  if (g.has_edge(t, x) || g.has_edge(x, t)) return 1.0;
  return 1.0 / q;
}

// Samples an index from unnormalized weights via the cumulative sum.
std::size_t sample_cumulative(std::mt19937_64& rng, const std::vector<double>& weights,
                              double total) {
  const double r = rand_unit(rng) * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  return weights.size() - 1;  // guard against rounding at the top end
}

}  // namespace

std::vector<double> transition_distribution(const WeightedDigraph& g, NodeId t, NodeId v,
                                            double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) {
    throw ValidationError("transition_distribution: p and q must be positive");
  }
  auto neighbors = g.out_neighbors(v);
  std::vector<double> probs(neighbors.size(), 0.0);
  if (neighbors.empty()) return probs;  // dead end, walker truncates

  double total = 0.0;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    probs[i] = alpha(g, t, neighbors[i].target, p, q) * neighbors[i].weight;
    total += probs[i];
  }
  for (double& prob : probs) prob /= total;
  return probs;
}

std::vector<std::vector<NodeId>> generate_walks(const WeightedDigraph& g, const WalkConfig& cfg) {
  if (!(cfg.p > 0.0) || !(cfg.q > 0.0)) {
    throw ValidationError("generate_walks: p and q must be positive");
  }
  if (cfg.walk_length < 1 || cfg.walks_per_node < 1) {
    throw ValidationError("generate_walks: walk_length and walks_per_node must be >= 1");
  }

  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeId>> walks;
  walks.reserve(n * static_cast<std::size_t>(cfg.walks_per_node));

  // Sampling iterates neighbors in target-label order. Node ids change under
  // relabeling but labels travel with their nodes, so the same RNG stream
  // picks the same (relabeled) neighbor and the walk multiset stays
  // equivariant.
  std::vector<std::vector<std::uint32_t>> label_order(n);
  for (NodeId u = 0; u < n; ++u) {
    auto neighbors = g.out_neighbors(u);
    auto& order = label_order[u];
    order.resize(neighbors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.label(neighbors[a].target) < g.label(neighbors[b].target);
    });
  }

  std::vector<double> weights;
  for (int k = 0; k < cfg.walks_per_node; ++k) {
    for (NodeId start = 0; start < n; ++start) {
      std::mt19937_64 rng(
          derive_seed(derive_seed(cfg.seed, fnv1a64(g.label(start))), static_cast<std::uint64_t>(k)));

      std::vector<NodeId> walk;
      walk.reserve(static_cast<std::size_t>(cfg.walk_length));
      walk.push_back(start);
      while (walk.size() < static_cast<std::size_t>(cfg.walk_length)) {
        const NodeId v = walk.back();
        auto neighbors = g.out_neighbors(v);
        if (neighbors.empty()) break;  // dead end
        const auto& order = label_order[v];

        weights.assign(neighbors.size(), 0.0);
        double total = 0.0;
        if (walk.size() == 1) {
          // First step: proportional to out-edge weight.
          for (std::size_t i = 0; i < order.size(); ++i) {
            weights[i] = neighbors[order[i]].weight;
            total += weights[i];
          }
        } else {
          const NodeId t = walk[walk.size() - 2];
          for (std::size_t i = 0; i < order.size(); ++i) {
            const Edge& e = neighbors[order[i]];
            weights[i] = alpha(g, t, e.target, cfg.p, cfg.q) * e.weight;
            total += weights[i];
          }
        }
        walk.push_back(neighbors[order[sample_cumulative(rng, weights, total)]].target);
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

}  // namespace hoopsnet
