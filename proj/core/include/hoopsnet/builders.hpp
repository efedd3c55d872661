#pragma once

// Network builders for the three interaction families. All builders assign
// node ids in sorted label order (passing networks use numeric region order),
// return frozen graphs, and are pure functions of their inputs.

#include <set>
#include <span>
#include <string_view>

#include "hoopsnet/graph.hpp"
#include "hoopsnet/records.hpp"

namespace hoopsnet {

// Season game outcomes -> team network. Points between each unordered team
// pair are totaled across all of their meetings; the net winner gets one
// edge toward the net loser weighted by the positive margin. Equal totals
// produce no edge. Never emits self-loops; output is antisymmetric.
WeightedDigraph build_adversarial_network(std::span<const GameRecord> games, int season);

enum class BlockWeight {
  Raw,  // weight = block count in the dominant direction
  Net,  // weight = difference between the two directions
};

// Season shot blocks -> player network. For each unordered player pair the
// directed block counts are compared; the strictly dominant blocker gets the
// edge. Ties produce no edge.
WeightedDigraph build_blocking_network(std::span<const BlockRecord> blocks, int season,
                                       BlockWeight weight_rule = BlockWeight::Raw);

// Passes in the selected quarters of one game -> region network. All 28
// region nodes are instantiated even when isolated; intra-region passes
// become self-loops. Empty quarter selection is an error.
WeightedDigraph build_passing_network(std::span<const PassRecord> passes, std::string_view game,
                                      const std::set<int>& quarters);

}  // namespace hoopsnet
