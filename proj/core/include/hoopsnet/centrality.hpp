#pragma once

// CON scores, PageRank on the edge-reversed network, min-max normalization,
// and the low-key leader strength combining the two.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoopsnet/graph.hpp"

namespace hoopsnet {

struct PageRankParams {
  double damping = 0.85;
  double tolerance = 1e-10;     // L1 change between iterations
  int max_iterations = 200;
  bool weighted = true;         // edge weights define transition probabilities
};

// Number of common out-neighbors of u and v (set intersection; weights
// ignored). con_pair(u,u) equals out_degree(u).
std::int64_t con_pair(const WeightedDigraph& g, NodeId u, NodeId v);

// CON(u) = sum over v of con_pair(u,v). With include_self the sum runs over
// all v including u itself; without it the constant out-degree self-term is
// dropped.
std::vector<std::int64_t> con_scores(const WeightedDigraph& g, bool include_self = true);

// Power iteration on the edge-reversed graph. Dangling mass is spread
// uniformly every iteration, so the result sums to 1. Throws
// ConvergenceError if the L1 change does not drop below tolerance within
// max_iterations.
std::vector<double> pagerank_adversarial(const WeightedDigraph& g,
                                         const PageRankParams& params = {});

// (x - min) / (max - min). A degenerate range (max == min) maps everything
// to 0. Empty input is an error.
std::vector<double> unity_normalize(std::span<const double> values);

struct CentralityTable {
  std::vector<std::string> labels;
  std::vector<std::int64_t> con;
  std::vector<double> pagerank;
  std::vector<double> con_norm;
  std::vector<double> pr_norm;
  std::vector<double> lkl;  // con_norm - pr_norm, in [-1,1]
};

CentralityTable low_key_leader_strengths(const WeightedDigraph& g,
                                         const PageRankParams& params = {},
                                         bool include_self = true);

// `label,con,pagerank,con_norm,pr_norm,lkl` with 10 significant digits.
void write_centrality_csv(const CentralityTable& table, std::ostream& os,
                          std::string_view meta = {});

}  // namespace hoopsnet
