#pragma once

// Tabular record kinds and their CSV loaders. Every loader validates the
// header and each row; violations raise ValidationError naming file, row,
// and column.
//
// Schemas (UTF-8, comma-separated, RFC-4180 quoting when needed):
//   games.csv:    season,day,team_a,team_b,score_a,score_b
//   rankings.csv: season,team,rank
//   blocks.csv:   season,blocker,blocked,count
//   passes.csv:   game,quarter,source_region,target_region

#include <filesystem>
#include <string>
#include <vector>

#include "hoopsnet/graph.hpp"

namespace hoopsnet {

struct GameRecord {
  int season = 0;
  int day = 0;  // ordering within the season
  std::string team_a;
  std::string team_b;
  int score_a = 0;
  int score_b = 0;
};

struct RankingRecord {
  int season = 0;
  std::string team;
  int rank = 0;  // 1 = best
};

struct BlockRecord {
  int season = 0;
  std::string blocker;
  std::string blocked;
  int count = 0;
};

constexpr int kNumRegions = 28;

struct PassRecord {
  std::string game;
  int quarter = 0;  // 1..4, 5+ for overtime
  int source_region = 0;  // 1..28
  int target_region = 0;  // 1..28
};

std::vector<GameRecord> load_games(const std::filesystem::path& path);
std::vector<RankingRecord> load_rankings(const std::filesystem::path& path);
std::vector<BlockRecord> load_blocks(const std::filesystem::path& path);
std::vector<PassRecord> load_passes(const std::filesystem::path& path);

// Reads an edge list produced by write_edge_list_csv (or any file with the
// same `source_label,target_label,weight` schema). Node ids are assigned in
// lexicographic label order, so loading is independent of row order.
WeightedDigraph load_edge_list(const std::filesystem::path& path);

}  // namespace hoopsnet
