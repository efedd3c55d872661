#include "hoopsnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

WeightedDigraph::WeightedDigraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), out_(labels_.size()), in_(labels_.size()) {}

std::optional<NodeId> WeightedDigraph::find_node(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<NodeId>(i);
  }
  return std::nullopt;
}

void WeightedDigraph::check_node(NodeId u) const {
  if (u >= labels_.size()) {
    throw ValidationError("node id " + std::to_string(u) + " out of range [0, " +
                          std::to_string(labels_.size()) + ")");
  }
}

namespace {

// Sorted insert-or-accumulate. Returns true when a new edge was created.
bool upsert(std::vector<Edge>& adj, NodeId key, double w) {
  auto it = std::lower_bound(adj.begin(), adj.end(), key,
                             [](const Edge& e, NodeId k) { return e.target < k; });
  if (it != adj.end() && it->target == key) {
    it->weight += w;
    return false;
  }
  adj.insert(it, Edge{key, w});
  return true;
}

}  // namespace

void WeightedDigraph::add_edge(NodeId u, NodeId v, double w) {
  if (frozen_) {
    throw std::logic_error("add_edge on a frozen graph");
  }
  check_node(u);
  check_node(v);
  if (!(w > 0.0)) {
    throw ValidationError("edge weight must be positive, got " + std::to_string(w));
  }
  if (upsert(out_[u], v, w)) ++num_edges_;
  upsert(in_[v], u, w);
  total_weight_ += w;
}

std::span<const Edge> WeightedDigraph::out_neighbors(NodeId u) const {
  check_node(u);
  return out_[u];
}

std::span<const Edge> WeightedDigraph::in_neighbors(NodeId u) const {
  check_node(u);
  return in_[u];
}

double WeightedDigraph::out_weight(NodeId u) const {
  double sum = 0.0;
  for (const Edge& e : out_neighbors(u)) sum += e.weight;
  return sum;
}

bool WeightedDigraph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& adj = out_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Edge& e, NodeId k) { return e.target < k; });
  return it != adj.end() && it->target == v;
}

double WeightedDigraph::weight(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& adj = out_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Edge& e, NodeId k) { return e.target < k; });
  return (it != adj.end() && it->target == v) ? it->weight : 0.0;
}

WeightedDigraph WeightedDigraph::reversed() const {
  WeightedDigraph r(labels_);
  r.out_ = in_;
  r.in_ = out_;
  r.num_edges_ = num_edges_;
  r.total_weight_ = total_weight_;
  r.frozen_ = true;
  return r;
}

void write_edge_list_csv(const WeightedDigraph& g, std::ostream& os, std::string_view meta) {
  if (!meta.empty()) os << "# " << meta << "\n";
  os << "source_label,target_label,weight\n";
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (const Edge& e : g.out_neighbors(u)) {
      os << csv::escape(g.label(u)) << ',' << csv::escape(g.label(e.target)) << ','
         << csv::format_double(e.weight, 6) << '\n';
    }
  }
}

void write_edge_list_csv(const WeightedDigraph& g, const std::filesystem::path& path,
                         std::string_view meta) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  write_edge_list_csv(g, os, meta);
}

}  // namespace hoopsnet
