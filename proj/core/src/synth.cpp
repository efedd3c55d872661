#include "hoopsnet/synth.hpp"

#include <cstdio>

#include "hoopsnet/error.hpp"
#include "hoopsnet/seeds.hpp"

namespace hoopsnet {

namespace {

void validate(const PlantedAffinityModel& m) {
  if (m.num_nodes < 2) throw ValidationError("generate_planted: need at least 2 nodes");
  if (m.num_communities < 1 || m.num_communities > m.num_nodes) {
    throw ValidationError("generate_planted: invalid community count");
  }
  if (!(m.p_out >= 0.0 && m.p_out < m.p_in && m.p_in <= 1.0)) {
    throw ValidationError("generate_planted: require 0 <= p_out < p_in <= 1");
  }
  if (!(m.future_link_bias >= 1.0)) {
    throw ValidationError("generate_planted: future_link_bias must be >= 1");
  }
}

}  // namespace

double future_link_probability(const PlantedAffinityModel& model, bool same_community) {
  // Base rate p_out; intra-community pairs get their odds multiplied.
  if (!same_community || model.future_link_bias == 1.0) return model.p_out;
  const double odds = model.p_out / (1.0 - model.p_out) * model.future_link_bias;
  return odds / (1.0 + odds);
}

PlantedResult generate_planted(const PlantedAffinityModel& model) {
  validate(model);
  const int n = model.num_nodes;

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "n%03d", i);
    labels[static_cast<std::size_t>(i)] = buf;
  }

  PlantedResult result{WeightedDigraph(std::move(labels)), {}, {}};
  // Near-equal community sizes: node i goes to community i * k / n.
  result.community.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.community[static_cast<std::size_t>(i)] =
        static_cast<int>(static_cast<long>(i) * model.num_communities / n);
  }

  std::mt19937_64 edge_rng(derive_seed(model.seed, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool same =
          result.community[static_cast<std::size_t>(u)] == result.community[static_cast<std::size_t>(v)];
      const double p = same ? model.p_in : model.p_out;
      if (rand_unit(edge_rng) < p) {
        result.graph.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0);
      }
    }
  }
  result.graph.freeze();

  std::mt19937_64 label_rng(derive_seed(model.seed, 1));
  result.future_pairs.ordered = false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same =
          result.community[static_cast<std::size_t>(u)] == result.community[static_cast<std::size_t>(v)];
      result.future_pairs.pairs.push_back(
          {result.graph.label(static_cast<NodeId>(u)), result.graph.label(static_cast<NodeId>(v))});
      result.future_pairs.labels.push_back(
          rand_unit(label_rng) < future_link_probability(model, same) ? 1 : 0);
    }
  }
  return result;
}

}  // namespace hoopsnet
