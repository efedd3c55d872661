#include "hoopsnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

std::int64_t con_pair(const WeightedDigraph& g, NodeId u, NodeId v) {
  auto a = g.out_neighbors(u);
  auto b = g.out_neighbors(v);
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].target < b[j].target) {
      ++i;
    } else if (b[j].target < a[i].target) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<std::int64_t> con_scores(const WeightedDigraph& g, bool include_self) {
  // Summing con_pair(u,v) over all v counts each out-neighbor w of u once per
  // node pointing at w, so CON(u) reduces to the in-degree sum over N+(u).
  const std::size_t n = g.num_nodes();
  std::vector<std::int64_t> indeg(n, 0);
  for (NodeId w = 0; w < n; ++w) indeg[w] = static_cast<std::int64_t>(g.in_degree(w));

  std::vector<std::int64_t> scores(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    std::int64_t s = 0;
    for (const Edge& e : g.out_neighbors(u)) s += indeg[e.target];
    if (!include_self) s -= static_cast<std::int64_t>(g.out_degree(u));
    scores[u] = s;
  }
  return scores;
}

std::vector<double> pagerank_adversarial(const WeightedDigraph& g, const PageRankParams& params) {
  const std::size_t n = g.num_nodes();
  if (n == 0) {
    throw ValidationError("pagerank: graph has no nodes");
  }
  const WeightedDigraph rev = g.reversed();
  const double d = params.damping;

  // Out-strength in the reversed graph; zero marks a dangling node.
  std::vector<double> out_strength(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    if (params.weighted) {
      out_strength[u] = rev.out_weight(u);
    } else {
      out_strength[u] = static_cast<double>(rev.out_degree(u));
    }
  }

  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  double residual = 0.0;
  for (int it = 0; it < params.max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      if (out_strength[u] == 0.0) dangling += rank[u];
    }
    const double base = (1.0 - d) / static_cast<double>(n) + d * dangling / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (NodeId u = 0; u < n; ++u) {
      if (out_strength[u] == 0.0) continue;
      const double share = d * rank[u] / out_strength[u];
      for (const Edge& e : rev.out_neighbors(u)) {
        next[e.target] += share * (params.weighted ? e.weight : 1.0);
      }
    }
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (residual < params.tolerance) {
      return rank;
    }
  }
  throw ConvergenceError("pagerank did not converge within " +
                             std::to_string(params.max_iterations) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         rank, residual, params.max_iterations);
}

std::vector<double> unity_normalize(std::span<const double> values) {
  if (values.empty()) {
    throw ValidationError("unity_normalize: empty input");
  }
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(values.size(), 0.0);
  if (hi > lo) {
    const double range = hi - lo;
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / range;
  }
  return out;
}

CentralityTable low_key_leader_strengths(const WeightedDigraph& g, const PageRankParams& params,
                                         bool include_self) {
  CentralityTable t;
  t.labels = g.labels();
  t.con = con_scores(g, include_self);
  t.pagerank = pagerank_adversarial(g, params);

  std::vector<double> con_d(t.con.begin(), t.con.end());
  t.con_norm = unity_normalize(con_d);
  t.pr_norm = unity_normalize(t.pagerank);
  t.lkl.resize(g.num_nodes());
  for (std::size_t i = 0; i < t.lkl.size(); ++i) t.lkl[i] = t.con_norm[i] - t.pr_norm[i];
  return t;
}

void write_centrality_csv(const CentralityTable& table, std::ostream& os, std::string_view meta) {
  if (!meta.empty()) os << "# " << meta << "\n";
  os << "label,con,pagerank,con_norm,pr_norm,lkl\n";
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    os << csv::escape(table.labels[i]) << ',' << table.con[i] << ','
       << csv::format_double(table.pagerank[i], 10) << ','
       << csv::format_double(table.con_norm[i], 10) << ','
       << csv::format_double(table.pr_norm[i], 10) << ','
       << csv::format_double(table.lkl[i], 10) << '\n';
  }
}

}  // namespace hoopsnet
