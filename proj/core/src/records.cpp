#include "hoopsnet/records.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

namespace {

[[noreturn]] void fail(const csv::Table& t, const csv::Row& row, std::string_view column,
                       const std::string& what) {
  throw ValidationError(t.source + ":" + std::to_string(row.line) + ": column '" +
                        std::string(column) + "': " + what);
}

void check_header(const csv::Table& t, std::initializer_list<std::string_view> expected) {
  auto mismatch = [&] {
    std::string want;
    for (auto c : expected) {
      if (!want.empty()) want += ',';
      want += c;
    }
    std::string got;
    for (const auto& c : t.header) {
      if (!got.empty()) got += ',';
      got += c;
    }
    throw ValidationError(t.source + ":1: expected header '" + want + "', got '" + got + "'");
  };
  if (t.header.size() != expected.size()) mismatch();
  std::size_t i = 0;
  for (auto c : expected) {
    if (t.header[i++] != c) mismatch();
  }
}

void check_width(const csv::Table& t, const csv::Row& row) {
  if (row.fields.size() != t.header.size()) {
    throw ValidationError(t.source + ":" + std::to_string(row.line) + ": expected " +
                          std::to_string(t.header.size()) + " columns, got " +
                          std::to_string(row.fields.size()));
  }
}

int parse_int(const csv::Table& t, const csv::Row& row, std::size_t col) {
  const std::string& s = row.fields[col];
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(t, row, t.header[col], "'" + s + "' is not an integer");
  }
  return value;
}

double parse_double(const csv::Table& t, const csv::Row& row, std::size_t col) {
  const std::string& s = row.fields[col];
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    fail(t, row, t.header[col], "'" + s + "' is not a number");
  }
  return value;
}

const std::string& parse_label(const csv::Table& t, const csv::Row& row, std::size_t col) {
  const std::string& s = row.fields[col];
  if (s.empty()) fail(t, row, t.header[col], "empty label");
  return s;
}

}  // namespace

std::vector<GameRecord> load_games(const std::filesystem::path& path) {
  csv::Table t = csv::read(path);
  check_header(t, {"season", "day", "team_a", "team_b", "score_a", "score_b"});
  std::vector<GameRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    check_width(t, row);
    GameRecord r;
    r.season = parse_int(t, row, 0);
    r.day = parse_int(t, row, 1);
    r.team_a = parse_label(t, row, 2);
    r.team_b = parse_label(t, row, 3);
    r.score_a = parse_int(t, row, 4);
    r.score_b = parse_int(t, row, 5);
    if (r.team_a == r.team_b) fail(t, row, "team_b", "team_a and team_b are both '" + r.team_a + "'");
    if (r.score_a < 0) fail(t, row, "score_a", "score must be >= 0");
    if (r.score_b < 0) fail(t, row, "score_b", "score must be >= 0");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RankingRecord> load_rankings(const std::filesystem::path& path) {
  csv::Table t = csv::read(path);
  check_header(t, {"season", "team", "rank"});
  std::vector<RankingRecord> out;
  out.reserve(t.rows.size());
  std::set<std::pair<int, std::string>> seen_team;
  std::set<std::pair<int, int>> seen_rank;
  for (const auto& row : t.rows) {
    check_width(t, row);
    RankingRecord r;
    r.season = parse_int(t, row, 0);
    r.team = parse_label(t, row, 1);
    r.rank = parse_int(t, row, 2);
    if (r.rank < 1) fail(t, row, "rank", "rank must be >= 1");
    if (!seen_team.emplace(r.season, r.team).second) {
      fail(t, row, "team", "duplicate ranking for team '" + r.team + "' in season " +
                               std::to_string(r.season));
    }
    if (!seen_rank.emplace(r.season, r.rank).second) {
      fail(t, row, "rank", "rank " + std::to_string(r.rank) + " assigned twice in season " +
                               std::to_string(r.season));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BlockRecord> load_blocks(const std::filesystem::path& path) {
  csv::Table t = csv::read(path);
  check_header(t, {"season", "blocker", "blocked", "count"});
  std::vector<BlockRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    check_width(t, row);
    BlockRecord r;
    r.season = parse_int(t, row, 0);
    r.blocker = parse_label(t, row, 1);
    r.blocked = parse_label(t, row, 2);
    r.count = parse_int(t, row, 3);
    if (r.blocker == r.blocked) {
      fail(t, row, "blocked", "blocker and blocked are both '" + r.blocker + "'");
    }
    if (r.count < 1) fail(t, row, "count", "count must be >= 1");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PassRecord> load_passes(const std::filesystem::path& path) {
  csv::Table t = csv::read(path);
  check_header(t, {"game", "quarter", "source_region", "target_region"});
  std::vector<PassRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    check_width(t, row);
    PassRecord r;
    r.game = parse_label(t, row, 0);
    r.quarter = parse_int(t, row, 1);
    r.source_region = parse_int(t, row, 2);
    r.target_region = parse_int(t, row, 3);
    if (r.quarter < 1) fail(t, row, "quarter", "quarter must be >= 1");
    if (r.source_region < 1 || r.source_region > kNumRegions) {
      fail(t, row, "source_region",
           "region " + std::to_string(r.source_region) + " outside [1," +
               std::to_string(kNumRegions) + "]");
    }
    if (r.target_region < 1 || r.target_region > kNumRegions) {
      fail(t, row, "target_region",
           "region " + std::to_string(r.target_region) + " outside [1," +
               std::to_string(kNumRegions) + "]");
    }
    out.push_back(std::move(r));
  }
  return out;
}

WeightedDigraph load_edge_list(const std::filesystem::path& path) {
  csv::Table t = csv::read(path);
  check_header(t, {"source_label", "target_label", "weight"});

  std::set<std::string> label_set;
  for (const auto& row : t.rows) {
    check_width(t, row);
    label_set.insert(parse_label(t, row, 0));
    label_set.insert(parse_label(t, row, 1));
  }
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  std::map<std::string, NodeId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<NodeId>(i));

  WeightedDigraph g(std::move(labels));
  for (const auto& row : t.rows) {
    double w = parse_double(t, row, 2);
    if (!(w > 0.0)) fail(t, row, "weight", "weight must be > 0");
    g.add_edge(index.at(row.fields[0]), index.at(row.fields[1]), w);
  }
  g.freeze();
  return g;
}

}  // namespace hoopsnet
