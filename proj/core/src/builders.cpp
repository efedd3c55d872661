#include "hoopsnet/builders.hpp"

#include <map>
#include <string>
#include <utility>

#include "hoopsnet/error.hpp"

namespace hoopsnet {

namespace {

// Sorted label set -> graph skeleton plus label->id index.
std::pair<WeightedDigraph, std::map<std::string, NodeId>> index_labels(
    const std::set<std::string>& label_set) {
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  std::map<std::string, NodeId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<NodeId>(i));
  return {WeightedDigraph(std::move(labels)), std::move(index)};
}

}  // namespace

WeightedDigraph build_adversarial_network(std::span<const GameRecord> games, int season) {
  std::set<std::string> teams;
  // Points each side of an unordered pair scored against the other.
  std::map<std::pair<std::string, std::string>, std::pair<long, long>> totals;
  for (const GameRecord& g : games) {
    if (g.season != season) continue;
    teams.insert(g.team_a);
    teams.insert(g.team_b);
    bool a_first = g.team_a < g.team_b;
    auto key = a_first ? std::make_pair(g.team_a, g.team_b) : std::make_pair(g.team_b, g.team_a);
    auto& [first_pts, second_pts] = totals[key];
    first_pts += a_first ? g.score_a : g.score_b;
    second_pts += a_first ? g.score_b : g.score_a;
  }

  auto [graph, index] = index_labels(teams);
  for (const auto& [key, pts] : totals) {
    if (pts.first == pts.second) continue;  // aggregate tie: no edge
    const auto& winner = pts.first > pts.second ? key.first : key.second;
    const auto& loser = pts.first > pts.second ? key.second : key.first;
    long margin = pts.first > pts.second ? pts.first - pts.second : pts.second - pts.first;
    graph.add_edge(index.at(winner), index.at(loser), static_cast<double>(margin));
  }
  graph.freeze();
  return graph;
}

WeightedDigraph build_blocking_network(std::span<const BlockRecord> blocks, int season,
                                       BlockWeight weight_rule) {
  std::set<std::string> players;
  // Directed block counts per unordered pair: (first->second, second->first).
  std::map<std::pair<std::string, std::string>, std::pair<long, long>> counts;
  for (const BlockRecord& b : blocks) {
    if (b.season != season) continue;
    players.insert(b.blocker);
    players.insert(b.blocked);
    bool fwd = b.blocker < b.blocked;
    auto key = fwd ? std::make_pair(b.blocker, b.blocked) : std::make_pair(b.blocked, b.blocker);
    auto& [first_blocks, second_blocks] = counts[key];
    (fwd ? first_blocks : second_blocks) += b.count;
  }

  auto [graph, index] = index_labels(players);
  for (const auto& [key, c] : counts) {
    if (c.first == c.second) continue;  // equal counts: no edge
    bool first_dominates = c.first > c.second;
    long dominant = first_dominates ? c.first : c.second;
    long other = first_dominates ? c.second : c.first;
    long w = weight_rule == BlockWeight::Raw ? dominant : dominant - other;
    graph.add_edge(index.at(first_dominates ? key.first : key.second),
                   index.at(first_dominates ? key.second : key.first), static_cast<double>(w));
  }
  graph.freeze();
  return graph;
}

WeightedDigraph build_passing_network(std::span<const PassRecord> passes, std::string_view game,
                                      const std::set<int>& quarters) {
  if (quarters.empty()) {
    throw ValidationError("passing network: empty quarter selection");
  }
  std::vector<std::string> labels;
  labels.reserve(kNumRegions);
  for (int r = 1; r <= kNumRegions; ++r) labels.push_back(std::to_string(r));

  WeightedDigraph graph(std::move(labels));
  for (const PassRecord& p : passes) {
    if (p.game != game || !quarters.count(p.quarter)) continue;
    graph.add_edge(static_cast<NodeId>(p.source_region - 1),
                   static_cast<NodeId>(p.target_region - 1), 1.0);
  }
  graph.freeze();
  return graph;
}

}  // namespace hoopsnet
