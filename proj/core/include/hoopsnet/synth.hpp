#pragma once

// Seeded planted-affinity generator: a directed two-probability community
// model plus a future-link label set whose intra-community odds are scaled
// by a known bias. Used to verify end-to-end statistical behavior on data
// where the ground truth is known by construction.

#include <cstdint>
#include <vector>

#include "hoopsnet/graph.hpp"
#include "hoopsnet/linkpred.hpp"

namespace hoopsnet {

struct PlantedAffinityModel {
  int num_nodes = 60;
  int num_communities = 2;     // near-equal sizes
  double p_in = 0.5;           // intra-community edge probability
  double p_out = 0.05;         // inter-community edge probability
  double future_link_bias = 6.0;  // odds multiplier for intra-community future links
  std::uint64_t seed = 1;
};

// Future-link probability for a pair: p_out for inter-community pairs,
// odds(p_out) * bias mapped back to a probability for intra-community ones.
// bias == 1 makes future labels independent of community structure.
double future_link_probability(const PlantedAffinityModel& model, bool same_community);

struct PlantedResult {
  WeightedDigraph graph;        // unit-weight directed edges
  LabeledPairSet future_pairs;  // all unordered pairs, labels filled, features empty
  std::vector<int> community;   // per node
};

PlantedResult generate_planted(const PlantedAffinityModel& model);

}  // namespace hoopsnet
