#pragma once

// Season-over-season ranking changes and their comparison against low-key
// leader strength via quantile grouping.
//
// Sign convention used everywhere: delta = rank_prev - rank_curr, so a
// positive delta is an improvement (rank 1 is best). Every report header
// restates this.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hoopsnet/records.hpp"

namespace hoopsnet {

struct RankChangeSet {
  // (team, delta) for teams present in both ranking tables, sorted by team.
  std::vector<std::pair<std::string, double>> changes;
  int missing_from_prev = 0;  // teams only in curr
  int missing_from_curr = 0;  // teams only in prev
};

RankChangeSet rank_changes(std::span<const RankingRecord> prev,
                           std::span<const RankingRecord> curr);

enum class Direction {
  PrevToCurrent,  // delta from last season into the lkl season
  CurrentToNext,  // delta from the lkl season into the following one
};

std::string_view direction_name(Direction d);

struct QuantileBand {
  int index = 0;        // 0-based, ascending lkl
  double lkl_low = 0;   // min/max lkl inside the band
  double lkl_high = 0;
  double mean_lkl = 0;
  int team_count = 0;
  double mean_rank_change = 0;
};

struct QuantileReport {
  int num_quantiles = 0;
  Direction direction = Direction::PrevToCurrent;
  std::vector<QuantileBand> bands;
  int teams_scored = 0;   // teams with both an lkl and a rank change
  int teams_dropped = 0;  // teams missing from either input
};

// Joins the two tables on team label, sorts by (lkl, label), and splits into
// k contiguous groups as equal as possible; when n = q*k + r, the first r
// groups take the extra member. Fewer than k joinable teams is an error.
QuantileReport quantile_report(std::span<const std::pair<std::string, double>> lkl,
                               std::span<const std::pair<std::string, double>> changes,
                               int k, Direction direction);

struct HypothesisCheck {
  std::vector<bool> band_pass;
  int passed = 0;
  int total = 0;
  double threshold = 0;
  Direction direction = Direction::PrevToCurrent;
};

// PrevToCurrent: a band with mean lkl >= threshold passes iff its mean rank
// change is strictly positive, a band below the threshold passes iff it is
// strictly negative. CurrentToNext flips both predicted signs. A mean change
// of exactly zero always fails.
HypothesisCheck hypothesis_check(const QuantileReport& report, double threshold,
                                 Direction direction);

// `quantile,lkl_low,lkl_high,mean_lkl,team_count,mean_rank_change,passes_hypothesis`
void write_quantile_csv(const QuantileReport& report, const HypothesisCheck& check,
                        std::ostream& os, std::string_view meta = {});

// Totals plus the per-band table as a JSON document.
std::string quantile_report_json(const QuantileReport& report, const HypothesisCheck& check,
                                 std::string_view meta_json = {});

}  // namespace hoopsnet
