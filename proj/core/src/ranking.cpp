#include "hoopsnet/ranking.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

RankChangeSet rank_changes(std::span<const RankingRecord> prev,
                           std::span<const RankingRecord> curr) {
  if (prev.empty() || curr.empty()) {
    throw ValidationError("rank_changes: both ranking sets must be nonempty");
  }
  std::map<std::string, int> prev_rank, curr_rank;
  for (const auto& r : prev) prev_rank.emplace(r.team, r.rank);
  for (const auto& r : curr) curr_rank.emplace(r.team, r.rank);

  RankChangeSet out;
  for (const auto& [team, pr] : prev_rank) {
    auto it = curr_rank.find(team);
    if (it == curr_rank.end()) {
      ++out.missing_from_curr;
      continue;
    }
    // rank 1 is best: moving from 10 to 4 is +6, an improvement.
    out.changes.emplace_back(team, static_cast<double>(pr - it->second));
  }
  for (const auto& [team, _] : curr_rank) {
    if (!prev_rank.count(team)) ++out.missing_from_prev;
  }
  return out;
}

std::string_view direction_name(Direction d) {
  return d == Direction::PrevToCurrent ? "prev_to_current" : "current_to_next";
}

QuantileReport quantile_report(std::span<const std::pair<std::string, double>> lkl,
                               std::span<const std::pair<std::string, double>> changes,
                               int k, Direction direction) {
  if (k < 2) {
    throw ValidationError("quantile_report: need at least 2 quantiles, got " + std::to_string(k));
  }
  std::map<std::string, double> change_by_team(changes.begin(), changes.end());

  struct Scored {
    std::string team;
    double lkl;
    double change;
  };
  std::vector<Scored> scored;
  int dropped = 0;
  for (const auto& [team, value] : lkl) {
    auto it = change_by_team.find(team);
    if (it == change_by_team.end()) {
      ++dropped;
      continue;
    }
    scored.push_back({team, value, it->second});
  }
  // Teams with a change but no lkl score count as dropped too.
  std::map<std::string, double> lkl_by_team(lkl.begin(), lkl.end());
  for (const auto& [team, _] : change_by_team) {
    if (!lkl_by_team.count(team)) ++dropped;
  }

  const int n = static_cast<int>(scored.size());
  if (n < k) {
    throw ValidationError("quantile_report: only " + std::to_string(n) +
                          " teams have both scores, need at least " + std::to_string(k));
  }
  // Ascending lkl; ties broken by label so the grouping is deterministic.
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.lkl != b.lkl) return a.lkl < b.lkl;
    return a.team < b.team;
  });

  QuantileReport report;
  report.num_quantiles = k;
  report.direction = direction;
  report.teams_scored = n;
  report.teams_dropped = dropped;

  const int base = n / k;
  const int remainder = n % k;
  int pos = 0;
  for (int qi = 0; qi < k; ++qi) {
    const int size = base + (qi < remainder ? 1 : 0);
    QuantileBand band;
    band.index = qi;
    band.team_count = size;
    band.lkl_low = scored[pos].lkl;
    band.lkl_high = scored[pos + size - 1].lkl;
    double lkl_sum = 0.0, change_sum = 0.0;
    for (int j = pos; j < pos + size; ++j) {
      lkl_sum += scored[j].lkl;
      change_sum += scored[j].change;
    }
    band.mean_lkl = lkl_sum / size;
    band.mean_rank_change = change_sum / size;
    report.bands.push_back(band);
    pos += size;
  }
  return report;
}

HypothesisCheck hypothesis_check(const QuantileReport& report, double threshold,
                                 Direction direction) {
  HypothesisCheck check;
  check.threshold = threshold;
  check.direction = direction;
  check.total = static_cast<int>(report.bands.size());
  for (const QuantileBand& band : report.bands) {
    bool high_strength = band.mean_lkl >= threshold;
    // PrevToCurrent predicts improvement for high-strength bands and decline
    // otherwise; CurrentToNext predicts the opposite. Zero change fails.
    bool expect_improvement =
        direction == Direction::PrevToCurrent ? high_strength : !high_strength;
    bool pass = expect_improvement ? band.mean_rank_change > 0.0 : band.mean_rank_change < 0.0;
    check.band_pass.push_back(pass);
    if (pass) ++check.passed;
  }
  return check;
}

void write_quantile_csv(const QuantileReport& report, const HypothesisCheck& check,
                        std::ostream& os, std::string_view meta) {
  if (!meta.empty()) os << "# " << meta << "\n";
  os << "# direction=" << direction_name(report.direction)
     << " threshold=" << csv::format_double(check.threshold, 10)
     << " sign_convention=rank_prev-rank_curr(positive=improvement)\n";
  os << "quantile,lkl_low,lkl_high,mean_lkl,team_count,mean_rank_change,passes_hypothesis\n";
  for (std::size_t i = 0; i < report.bands.size(); ++i) {
    const QuantileBand& b = report.bands[i];
    os << b.index << ',' << csv::format_double(b.lkl_low, 10) << ','
       << csv::format_double(b.lkl_high, 10) << ',' << csv::format_double(b.mean_lkl, 10) << ','
       << b.team_count << ',' << csv::format_double(b.mean_rank_change, 10) << ','
       << (check.band_pass[i] ? 1 : 0) << '\n';
  }
}

std::string quantile_report_json(const QuantileReport& report, const HypothesisCheck& check,
                                 std::string_view meta_json) {
  nlohmann::json j;
  if (!meta_json.empty()) j["meta"] = nlohmann::json::parse(meta_json);
  j["direction"] = std::string(direction_name(report.direction));
  j["sign_convention"] = "rank_prev - rank_curr (positive = improvement)";
  j["num_quantiles"] = report.num_quantiles;
  j["teams_scored"] = report.teams_scored;
  j["teams_dropped"] = report.teams_dropped;
  j["threshold"] = check.threshold;
  j["quantiles_passing"] = check.passed;
  j["quantiles_total"] = check.total;
  auto& bands = j["bands"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.bands.size(); ++i) {
    const QuantileBand& b = report.bands[i];
    bands.push_back({{"quantile", b.index},
                     {"lkl_low", b.lkl_low},
                     {"lkl_high", b.lkl_high},
                     {"mean_lkl", b.mean_lkl},
                     {"team_count", b.team_count},
                     {"mean_rank_change", b.mean_rank_change},
                     {"passes_hypothesis", static_cast<bool>(check.band_pass[i])}});
  }
  return j.dump(2) + "\n";
}

}  // namespace hoopsnet
