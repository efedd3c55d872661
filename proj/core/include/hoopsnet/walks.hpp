#pragma once

// Second-order biased random walks (return parameter p, in-out parameter q).
//
// Walks follow out-edges only; a node without out-neighbors truncates the
// walk. The step distribution at current node v with previous node t weights
// each out-neighbor x by alpha(t,x) * w(v,x), where alpha is 1/p when x == t,
// 1 when x is adjacent to t (either direction counts for the distance test),
// and 1/q otherwise.
//
// Each (start node, walk index) pair gets its own RNG seeded from
// derive_seed(derive_seed(cfg.seed, fnv1a64(start label)), walk index), so
// the walk multiset is equivariant under node relabeling and walks for
// different start nodes can be generated concurrently.

#include <cstdint>
#include <vector>

#include "hoopsnet/graph.hpp"

namespace hoopsnet {

struct WalkConfig {
  double p = 1.0;           // return parameter
  double q = 1.0;           // in-out parameter
  int walk_length = 80;     // maximum nodes per walk, including the start
  int walks_per_node = 10;
  std::uint64_t seed = 1;
};

// Probability of stepping to each out-neighbor of v (in adjacency order)
// given the walk arrived from t. Returns an empty vector when v is a dead
// end, which tells the walker to truncate.
std::vector<double> transition_distribution(const WeightedDigraph& g, NodeId t, NodeId v,
                                            double p, double q);

// walks_per_node walks from every node. The first step is sampled
// proportionally to out-edge weight; later steps follow
// transition_distribution. Isolated start nodes yield length-1 walks.
std::vector<std::vector<NodeId>> generate_walks(const WeightedDigraph& g, const WalkConfig& cfg);

}  // namespace hoopsnet
