#pragma once

// Directed weighted graph over dense integer node ids with a string label
// table. Parallel edge observations accumulate into a single weight at
// insertion time. Adjacency is kept sorted by target id, so neighborhood
// enumeration order is deterministic. After freeze() the graph is immutable
// and safe to read from any number of threads.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoopsnet {

using NodeId = std::uint32_t;

struct Edge {
  NodeId target = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  // One node per label; node ids follow label order.
  explicit WeightedDigraph(std::vector<std::string> labels);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  double total_weight() const { return total_weight_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId u) const { return labels_.at(u); }
  std::optional<NodeId> find_node(std::string_view label) const;

  // Accumulates w onto edge (u,v), creating it if absent. Rejects w <= 0 and
  // out-of-range ids. Self-loops are allowed here; builders that forbid them
  // enforce that themselves.
  void add_edge(NodeId u, NodeId v, double w);

  // Ends the construction phase. Further add_edge calls throw.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // Ascending-target adjacency views. in_neighbors is the exact transpose of
  // out_neighbors at all times.
  std::span<const Edge> out_neighbors(NodeId u) const;
  std::span<const Edge> in_neighbors(NodeId u) const;

  std::size_t out_degree(NodeId u) const { return out_neighbors(u).size(); }
  std::size_t in_degree(NodeId u) const { return in_neighbors(u).size(); }
  double out_weight(NodeId u) const;

  bool has_edge(NodeId u, NodeId v) const;
  // Stored weight of (u,v), or 0 when the edge is absent.
  double weight(NodeId u, NodeId v) const;

  // Edge-reversed copy (labels preserved). The copy is frozen.
  WeightedDigraph reversed() const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  void check_node(NodeId u) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::size_t num_edges_ = 0;
  double total_weight_ = 0.0;
  bool frozen_ = false;
};

// Edge-list dump: `source_label,target_label,weight`, weights with up to six
// significant digits, edges in (source id, target id) order. `meta`, when
// nonempty, is emitted first as `# ...` comment lines.
void write_edge_list_csv(const WeightedDigraph& g, std::ostream& os, std::string_view meta = {});
void write_edge_list_csv(const WeightedDigraph& g, const std::filesystem::path& path,
                         std::string_view meta = {});

}  // namespace hoopsnet
