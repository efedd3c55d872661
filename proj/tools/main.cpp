// hoopsnet command-line tool: builds interaction networks from tabular
// records, computes centrality and low-key leader tables, trains node2vec
// embeddings, and runs the link-prediction experiment harnesses.
//
// Exit codes: 0 success, 1 usage error, 2 data validation error,
// 3 numerical failure (non-convergence, separation, unwritable output).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hoopsnet/builders.hpp"
#include "hoopsnet/centrality.hpp"
#include "hoopsnet/csv.hpp"
#include "hoopsnet/embedding.hpp"
#include "hoopsnet/error.hpp"
#include "hoopsnet/linkpred.hpp"
#include "hoopsnet/ranking.hpp"
#include "hoopsnet/records.hpp"
#include "hoopsnet/seeds.hpp"
#include "hoopsnet/skipgram.hpp"
#include "hoopsnet/svg.hpp"
#include "hoopsnet/synth.hpp"
#include "hoopsnet/walks.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// A problem with how the tool was invoked (bad flag combination, missing
// input); distinct from data validation so it maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
  // Input paths per record kind.
  std::string games, rankings, blocks, passes, edges;

  // Selectors.
  int season = 0;
  std::string game;
  std::string phase = "regular";  // regular|all
  int regular_end = 132;          // last regular-season day number
  std::string quarters = "all";   // e.g. "1", "2+", "1,3"

  // PageRank / centrality.
  double damping = 0.85;
  double pr_tolerance = 1e-10;
  int pr_max_iterations = 200;
  bool pr_weighted = true;
  bool include_self = true;

  // Walks + training.
  double p = 1.0;
  double q = 1.0;
  int walks = 10;
  int walk_length = 80;
  int dims = 0;  // 0 = per-network default (games 128, blocks 10, passes 16)
  int window = 10;
  int negatives = 5;
  int epochs = 5;
  double lr_initial = 0.025;
  double lr_final = 0.0001;

  // Experiments.
  int iterations = 100;
  bool require_next_appearance = false;

  // Quantiles.
  int quantiles = 20;
  double threshold = 0.4;
  std::string direction = "prev";  // prev|next

  // Synth.
  int nodes = 60;
  int communities = 2;
  double p_in = 0.5;
  double p_out = 0.05;
  double bias = 6.0;

  std::string block_weight = "raw";  // raw|net
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = HOOPSNET_THREADS or hardware concurrency
  std::string out;
  std::string format = "csv";  // csv|json|svg
  std::string focus;           // similarity-report focus label
};

int resolved_threads(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("HOOPSNET_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------------------
// Config file / reproducibility metadata

void apply_json_config(const fs::path& path, RunConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open config file " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  auto str = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = j.at(key).get<std::string>();
  };
  auto num = [&](const char* key, auto& out) {
    if (j.contains(key)) out = j.at(key).get<std::decay_t<decltype(out)>>();
  };
  str("games", cfg.games);
  str("rankings", cfg.rankings);
  str("blocks", cfg.blocks);
  str("passes", cfg.passes);
  str("edges", cfg.edges);
  num("season", cfg.season);
  str("game", cfg.game);
  str("phase", cfg.phase);
  num("regular-end", cfg.regular_end);
  str("quarters", cfg.quarters);
  num("damping", cfg.damping);
  num("include-self", cfg.include_self);
  num("p", cfg.p);
  num("q", cfg.q);
  num("walks", cfg.walks);
  num("walk-length", cfg.walk_length);
  num("dims", cfg.dims);
  num("window", cfg.window);
  num("negatives", cfg.negatives);
  num("epochs", cfg.epochs);
  num("iterations", cfg.iterations);
  num("quantiles", cfg.quantiles);
  num("threshold", cfg.threshold);
  str("direction", cfg.direction);
  num("nodes", cfg.nodes);
  num("communities", cfg.communities);
  num("p-in", cfg.p_in);
  num("p-out", cfg.p_out);
  num("bias", cfg.bias);
  str("block-weight", cfg.block_weight);
  num("seed", cfg.seed);
  num("threads", cfg.threads);
  str("out", cfg.out);
  str("format", cfg.format);
  str("focus", cfg.focus);
}

// Semantic configuration only: inputs, selectors, and algorithm parameters.
// Output directory, thread count, and format do not change computed values,
// so they stay out of the hash.
json semantic_config(const RunConfig& cfg, std::string_view command) {
  json j;
  j["command"] = std::string(command);
  j["games"] = cfg.games;
  j["rankings"] = cfg.rankings;
  j["blocks"] = cfg.blocks;
  j["passes"] = cfg.passes;
  j["edges"] = cfg.edges;
  j["season"] = cfg.season;
  j["game"] = cfg.game;
  j["phase"] = cfg.phase;
  j["regular_end"] = cfg.regular_end;
  j["quarters"] = cfg.quarters;
  j["damping"] = cfg.damping;
  j["pr_tolerance"] = cfg.pr_tolerance;
  j["pr_max_iterations"] = cfg.pr_max_iterations;
  j["pr_weighted"] = cfg.pr_weighted;
  j["include_self"] = cfg.include_self;
  j["p"] = cfg.p;
  j["q"] = cfg.q;
  j["walks"] = cfg.walks;
  j["walk_length"] = cfg.walk_length;
  j["dims"] = cfg.dims;
  j["window"] = cfg.window;
  j["negatives"] = cfg.negatives;
  j["epochs"] = cfg.epochs;
  j["lr_initial"] = cfg.lr_initial;
  j["lr_final"] = cfg.lr_final;
  j["iterations"] = cfg.iterations;
  j["require_next_appearance"] = cfg.require_next_appearance;
  j["quantiles"] = cfg.quantiles;
  j["threshold"] = cfg.threshold;
  j["direction"] = cfg.direction;
  j["nodes"] = cfg.nodes;
  j["communities"] = cfg.communities;
  j["p_in"] = cfg.p_in;
  j["p_out"] = cfg.p_out;
  j["bias"] = cfg.bias;
  j["block_weight"] = cfg.block_weight;
  j["seed"] = cfg.seed;
  return j;
}

std::string config_hash_hex(const json& semantic) {
  const std::uint64_t h = hoopsnet::fnv1a64(semantic.dump());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Meta {
  std::string hash;
  std::uint64_t seed;
  json config;

  std::string comment() const { return "config_hash=" + hash + " seed=" + std::to_string(seed); }
  std::string json_text() const {
    json j;
    j["config_hash"] = hash;
    j["seed"] = seed;
    return j.dump();
  }
};

Meta make_meta(const RunConfig& cfg, std::string_view command) {
  json sem = semantic_config(cfg, command);
  return Meta{config_hash_hex(sem), cfg.seed, std::move(sem)};
}

// ---------------------------------------------------------------------------
// Input assembly

std::set<int> parse_quarters(const std::string& quarters_spec,
                             std::span<const hoopsnet::PassRecord> records,
                             const std::string& game) {
  int max_quarter = 0;
  for (const auto& r : records) {
    if (r.game == game) max_quarter = std::max(max_quarter, r.quarter);
  }
  std::set<int> out;
  if (quarters_spec == "all") {
    for (int q = 1; q <= std::max(max_quarter, 4); ++q) out.insert(q);
    return out;
  }
  std::stringstream ss(quarters_spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    bool open_ended = token.back() == '+';
    if (open_ended) token.pop_back();
    size_t pos = 0;
    int q = 0;
    try {
      q = std::stoi(token, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != token.size() || q < 1) {
      throw UsageError("invalid --quarters token '" + token + (open_ended ? "+" : "") + "'");
    }
    if (open_ended) {
      for (int i = q; i <= std::max(max_quarter, q); ++i) out.insert(i);
    } else {
      out.insert(q);
    }
  }
  if (out.empty()) throw UsageError("--quarters selected nothing");
  return out;
}

std::vector<hoopsnet::GameRecord> filter_phase(std::vector<hoopsnet::GameRecord> games,
                                               const RunConfig& cfg) {
  if (cfg.phase == "all") return games;
  std::erase_if(games, [&](const hoopsnet::GameRecord& g) { return g.day > cfg.regular_end; });
  return games;
}

enum class NetworkKind { Games, Blocks, Passes, Edges };

struct BuiltNetwork {
  hoopsnet::WeightedDigraph graph;
  NetworkKind kind = NetworkKind::Edges;
};

// Builds whichever network the input flags select. Exactly one input kind
// must be present.
BuiltNetwork build_network(const RunConfig& cfg) {
  const int sources = static_cast<int>(!cfg.games.empty()) + static_cast<int>(!cfg.blocks.empty()) +
                      static_cast<int>(!cfg.passes.empty()) + static_cast<int>(!cfg.edges.empty());
  if (sources != 1) {
    throw UsageError("exactly one of --games, --blocks, --passes, --edges must be given");
  }
  if (!cfg.games.empty()) {
    if (cfg.season == 0) throw UsageError("--season is required with --games");
    auto games = filter_phase(hoopsnet::load_games(cfg.games), cfg);
    return {hoopsnet::build_adversarial_network(games, cfg.season), NetworkKind::Games};
  }
  if (!cfg.blocks.empty()) {
    if (cfg.season == 0) throw UsageError("--season is required with --blocks");
    auto rule = cfg.block_weight == "net" ? hoopsnet::BlockWeight::Net
                                          : hoopsnet::BlockWeight::Raw;
    return {hoopsnet::build_blocking_network(hoopsnet::load_blocks(cfg.blocks), cfg.season, rule),
            NetworkKind::Blocks};
  }
  if (!cfg.passes.empty()) {
    if (cfg.game.empty()) throw UsageError("--game is required with --passes");
    auto records = hoopsnet::load_passes(cfg.passes);
    auto quarters = parse_quarters(cfg.quarters, records, cfg.game);
    return {hoopsnet::build_passing_network(records, cfg.game, quarters), NetworkKind::Passes};
  }
  return {hoopsnet::load_edge_list(cfg.edges), NetworkKind::Edges};
}

int default_dims(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::Games: return 128;
    case NetworkKind::Blocks: return 10;
    case NetworkKind::Passes: return 16;
    case NetworkKind::Edges: return 16;
  }
  return 16;
}

hoopsnet::WalkConfig walk_config(const RunConfig& cfg) {
  hoopsnet::WalkConfig w;
  w.p = cfg.p;
  w.q = cfg.q;
  w.walk_length = cfg.walk_length;
  w.walks_per_node = cfg.walks;
  w.seed = hoopsnet::derive_seed(cfg.seed, 0);
  return w;
}

hoopsnet::TrainConfig train_config(const RunConfig& cfg, NetworkKind kind) {
  hoopsnet::TrainConfig t;
  t.dimensions = cfg.dims > 0 ? cfg.dims : default_dims(kind);
  t.window = cfg.window;
  t.negative_samples = cfg.negatives;
  t.epochs = cfg.epochs;
  t.lr_initial = cfg.lr_initial;
  t.lr_final = cfg.lr_final;
  t.seed = hoopsnet::derive_seed(cfg.seed, 1);
  return t;
}

hoopsnet::PageRankParams pagerank_params(const RunConfig& cfg) {
  hoopsnet::PageRankParams p;
  p.damping = cfg.damping;
  p.tolerance = cfg.pr_tolerance;
  p.max_iterations = cfg.pr_max_iterations;
  p.weighted = cfg.pr_weighted;
  return p;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("--out DIR is required");
  fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw hoopsnet::NumericalError("cannot create output directory " + dir.string());
  return dir;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& fn) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw hoopsnet::NumericalError("cannot open " + path.string() + " for writing");
  fn(os);
  os.flush();
  if (!os) throw hoopsnet::NumericalError("failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// Subcommand bodies

int cmd_network_build(const RunConfig& cfg) {
  const Meta meta = make_meta(cfg, "network build");
  const fs::path dir = ensure_out_dir(cfg);
  BuiltNetwork net = build_network(cfg);
  const fs::path out = dir / "network.csv";
  write_file(out, [&](std::ostream& os) {
    hoopsnet::write_edge_list_csv(net.graph, os, meta.comment());
  });
  std::cout << "network: " << net.graph.num_nodes() << " nodes, " << net.graph.num_edges()
            << " edges, total weight " << net.graph.total_weight() << " -> " << out.string()
            << "\n";
  return 0;
}

int cmd_centrality(const RunConfig& cfg, const std::string& name) {
  const Meta meta = make_meta(cfg, name);
  const fs::path dir = ensure_out_dir(cfg);
  BuiltNetwork net = build_network(cfg);
  auto table = hoopsnet::low_key_leader_strengths(net.graph, pagerank_params(cfg),
                                                  cfg.include_self);
  const fs::path out = dir / "centrality.csv";
  write_file(out, [&](std::ostream& os) {
    hoopsnet::write_centrality_csv(table, os, meta.comment());
  });
  auto [lo, hi] = std::minmax_element(table.lkl.begin(), table.lkl.end());
  std::cout << name << ": " << net.graph.num_nodes() << " nodes; lkl range [" << *lo << ", "
            << *hi << "] -> " << out.string() << "\n";
  return 0;
}

int cmd_quantiles(const RunConfig& cfg) {
  const Meta meta = make_meta(cfg, "quantiles");
  const fs::path dir = ensure_out_dir(cfg);
  if (cfg.rankings.empty()) throw UsageError("--rankings is required");
  if (cfg.season == 0) throw UsageError("--season is required");

  BuiltNetwork net = build_network(cfg);
  auto table = hoopsnet::low_key_leader_strengths(net.graph, pagerank_params(cfg),
                                                  cfg.include_self);
  std::vector<std::pair<std::string, double>> lkl;
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    lkl.emplace_back(table.labels[i], table.lkl[i]);
  }

  const bool prev = cfg.direction == "prev";
  const auto direction =
      prev ? hoopsnet::Direction::PrevToCurrent : hoopsnet::Direction::CurrentToNext;
  const int from_season = prev ? cfg.season - 1 : cfg.season;
  const int to_season = prev ? cfg.season : cfg.season + 1;

  auto all_rankings = hoopsnet::load_rankings(cfg.rankings);
  std::vector<hoopsnet::RankingRecord> from, to;
  for (const auto& r : all_rankings) {
    if (r.season == from_season) from.push_back(r);
    if (r.season == to_season) to.push_back(r);
  }
  if (from.empty() || to.empty()) {
    throw hoopsnet::ValidationError("rankings file lacks season " +
                                    std::to_string(from.empty() ? from_season : to_season));
  }
  auto changes = hoopsnet::rank_changes(from, to);
  auto report = hoopsnet::quantile_report(lkl, changes.changes, cfg.quantiles, direction);
  auto check = hoopsnet::hypothesis_check(report, cfg.threshold, direction);

  const fs::path csv_out = dir / "quantiles.csv";
  write_file(csv_out, [&](std::ostream& os) {
    hoopsnet::write_quantile_csv(report, check, os, meta.comment());
  });
  const fs::path json_out = dir / "quantiles.json";
  write_file(json_out, [&](std::ostream& os) {
    os << hoopsnet::quantile_report_json(report, check, meta.json_text());
  });
  std::string files = csv_out.string() + " " + json_out.string();
  if (cfg.format == "svg") {
    std::vector<std::string> cats;
    std::vector<double> vals;
    for (const auto& b : report.bands) {
      cats.push_back(std::to_string(b.index));
      vals.push_back(b.mean_rank_change);
    }
    const fs::path svg_out = dir / "quantiles.svg";
    write_file(svg_out, [&](std::ostream& os) {
      hoopsnet::write_bar_chart_svg(
          os,
          "Mean NET rank change by low-key leader quantile (season " +
              std::to_string(cfg.season) + ", " +
              std::string(hoopsnet::direction_name(direction)) + ")",
          cats, vals, "mean rank change", meta.comment());
    });
    files += " " + svg_out.string();
  }
  std::cout << "quantiles: " << report.num_quantiles << " bands over " << report.teams_scored
            << " teams; passed " << check.passed << "/" << check.total << " (threshold "
            << cfg.threshold << ", " << hoopsnet::direction_name(direction) << ") -> " << files
            << "\n";
  return 0;
}

int cmd_embed(const RunConfig& cfg) {
  const Meta meta = make_meta(cfg, "embed");
  const fs::path dir = ensure_out_dir(cfg);
  BuiltNetwork net = build_network(cfg);
  auto walk = walk_config(cfg);
  auto train = train_config(cfg, net.kind);
  auto walks = hoopsnet::generate_walks(net.graph, walk);
  auto emb = hoopsnet::train_skipgram(walks, net.graph.num_nodes(), train);

  const fs::path out = dir / "embedding.csv";
  std::string header = meta.comment() + "\n# dims=" + std::to_string(train.dimensions) +
                       " p=" + hoopsnet::csv::format_double(walk.p, 10) +
                       " q=" + hoopsnet::csv::format_double(walk.q, 10) +
                       " seed=" + std::to_string(cfg.seed) +
                       " epochs=" + std::to_string(train.epochs);
  write_file(out, [&](std::ostream& os) {
    hoopsnet::write_embedding_csv(emb, net.graph.labels(), os, header);
  });
  std::cout << "embed: " << emb.rows << " nodes x " << emb.dims << " dims from " << walks.size()
            << " walks -> " << out.string() << "\n";
  return 0;
}

int cmd_experiment(const RunConfig& cfg, const std::string& which) {
  const Meta meta = make_meta(cfg, "experiment " + which);
  const fs::path dir = ensure_out_dir(cfg);

  hoopsnet::WeightedDigraph graph;
  std::string pair_field;
  NetworkKind kind = NetworkKind::Edges;
  std::function<hoopsnet::LabeledPairSet(const hoopsnet::EmbeddingMatrix&)> builder;

  if (which == "matchups") {
    if (cfg.games.empty()) throw UsageError("experiment matchups requires --games");
    if (cfg.season == 0) throw UsageError("--season is required");
    auto games = hoopsnet::load_games(cfg.games);
    std::vector<hoopsnet::GameRecord> regular;
    auto matchups = std::make_shared<std::vector<std::pair<std::string, std::string>>>();
    for (const auto& g : games) {
      if (g.season != cfg.season) continue;
      if (g.day <= cfg.regular_end) {
        regular.push_back(g);
      } else {
        matchups->emplace_back(g.team_a, g.team_b);
      }
    }
    if (matchups->empty()) {
      throw hoopsnet::ValidationError("no tournament games found after day " +
                                      std::to_string(cfg.regular_end) + " in season " +
                                      std::to_string(cfg.season));
    }
    graph = hoopsnet::build_adversarial_network(regular, cfg.season);
    pair_field = "team_pairs";
    kind = NetworkKind::Games;
    const auto* graph_ptr = &graph;
    builder = [graph_ptr, matchups](const hoopsnet::EmbeddingMatrix& emb) {
      return hoopsnet::build_matchup_dataset(*graph_ptr, emb, *matchups);
    };
  } else if (which == "blocks") {
    if (cfg.blocks.empty()) throw UsageError("experiment blocks requires --blocks");
    if (cfg.season == 0) throw UsageError("--season is required");
    auto records = std::make_shared<std::vector<hoopsnet::BlockRecord>>(
        hoopsnet::load_blocks(cfg.blocks));
    auto rule =
        cfg.block_weight == "net" ? hoopsnet::BlockWeight::Net : hoopsnet::BlockWeight::Raw;
    graph = hoopsnet::build_blocking_network(*records, cfg.season, rule);
    pair_field = "player_pairs";
    kind = NetworkKind::Blocks;
    const auto* graph_ptr = &graph;
    const int next_season = cfg.season + 1;
    const bool require_next = cfg.require_next_appearance;
    builder = [graph_ptr, records, next_season, require_next](
                  const hoopsnet::EmbeddingMatrix& emb) {
      return hoopsnet::build_blocking_dataset(*graph_ptr, emb, *records, next_season,
                                              require_next);
    };
  } else {
    if (cfg.passes.empty()) throw UsageError("experiment passes requires --passes");
    if (cfg.game.empty()) throw UsageError("--game is required");
    auto records = hoopsnet::load_passes(cfg.passes);
    graph = hoopsnet::build_passing_network(records, cfg.game, {1});
    auto later = std::make_shared<hoopsnet::WeightedDigraph>(hoopsnet::build_passing_network(
        records, cfg.game, parse_quarters("2+", records, cfg.game)));
    pair_field = "region_pairs";
    kind = NetworkKind::Passes;
    const auto* graph_ptr = &graph;
    builder = [graph_ptr, later](const hoopsnet::EmbeddingMatrix& emb) {
      return hoopsnet::build_passing_dataset(*graph_ptr, emb, *later);
    };
  }

  hoopsnet::ExperimentSpec spec;
  spec.graph = &graph;
  spec.walk = walk_config(cfg);
  spec.train = train_config(cfg, kind);
  spec.build_dataset = builder;
  spec.iterations = cfg.iterations;
  spec.base_seed = cfg.seed;
  spec.threads = resolved_threads(cfg);

  auto agg = hoopsnet::run_experiment(spec);

  json config_echo = meta.config;
  config_echo["resolved_dims"] = spec.train.dimensions;
  const fs::path out = dir / "experiment.json";
  write_file(out, [&](std::ostream& os) {
    os << hoopsnet::experiment_report_json(agg, which, pair_field, config_echo.dump(),
                                           meta.json_text());
  });
  std::cout << "experiment " << which << ": " << agg.completed << "/" << agg.iterations
            << " iterations (" << agg.excluded << " excluded); " << pair_field << "="
            << agg.pair_count << ", mean pseudo_r2=" << agg.mean_pseudo_r2
            << ", mean llr_p=" << agg.mean_llr_p << ", significant dims "
            << agg.significant_dimensions << "/" << agg.feature_dim << " -> " << out.string()
            << "\n";
  return 0;
}

int cmd_similarity_report(const RunConfig& cfg) {
  const Meta meta = make_meta(cfg, "similarity-report");
  const fs::path dir = ensure_out_dir(cfg);
  if (cfg.focus.empty()) throw UsageError("--focus LABEL is required");

  // Passing data defaults to the first quarter here, mirroring the
  // embedding-from-Q1 setup of the passing experiment.
  RunConfig net_cfg = cfg;
  if (!cfg.passes.empty() && cfg.quarters == "all") net_cfg.quarters = "1";
  BuiltNetwork net = build_network(net_cfg);

  auto focus = net.graph.find_node(cfg.focus);
  if (!focus) {
    throw hoopsnet::ValidationError("focus label '" + cfg.focus + "' is not a network node");
  }
  auto walks = hoopsnet::generate_walks(net.graph, walk_config(cfg));
  auto emb = hoopsnet::train_skipgram(walks, net.graph.num_nodes(), train_config(cfg, net.kind));
  auto rows = hoopsnet::node_similarity_report(emb, net.graph.labels(), *focus);

  const fs::path out = dir / "similarity.csv";
  write_file(out, [&](std::ostream& os) {
    hoopsnet::write_similarity_csv(rows, os, meta.comment() + " focus=" + cfg.focus);
  });
  std::string files = out.string();
  if (cfg.format == "svg") {
    std::vector<std::string> cats;
    std::vector<double> vals;
    for (const auto& r : rows) {
      cats.push_back(r.label);
      vals.push_back(r.similarity);
    }
    const fs::path svg_out = dir / "similarity.svg";
    write_file(svg_out, [&](std::ostream& os) {
      hoopsnet::write_bar_chart_svg(os, "Cosine similarity from node " + cfg.focus, cats, vals,
                                    "cosine similarity", meta.comment());
    });
    files += " " + svg_out.string();
  }
  std::cout << "similarity-report: focus " << cfg.focus << ", " << rows.size() << " rows -> "
            << files << "\n";
  return 0;
}

int cmd_synth(const RunConfig& cfg) {
  const Meta meta = make_meta(cfg, "synth");
  const fs::path dir = ensure_out_dir(cfg);

  hoopsnet::PlantedAffinityModel model;
  model.num_nodes = cfg.nodes;
  model.num_communities = cfg.communities;
  model.p_in = cfg.p_in;
  model.p_out = cfg.p_out;
  model.future_link_bias = cfg.bias;
  model.seed = cfg.seed;
  auto result = hoopsnet::generate_planted(model);

  const fs::path edges_out = dir / "synth_edges.csv";
  write_file(edges_out, [&](std::ostream& os) {
    hoopsnet::write_edge_list_csv(result.graph, os, meta.comment());
  });
  const fs::path future_out = dir / "synth_future.csv";
  write_file(future_out, [&](std::ostream& os) {
    os << "# " << meta.comment() << "\n";
    os << "source_label,target_label,label\n";
    for (std::size_t i = 0; i < result.future_pairs.pairs.size(); ++i) {
      os << result.future_pairs.pairs[i].src << ',' << result.future_pairs.pairs[i].tgt << ','
         << result.future_pairs.labels[i] << '\n';
    }
  });
  int positives = 0;
  for (int label : result.future_pairs.labels) positives += label;
  std::cout << "synth: " << result.graph.num_nodes() << " nodes, " << result.graph.num_edges()
            << " edges, " << result.future_pairs.pairs.size() << " future pairs (" << positives
            << " positive) -> " << edges_out.string() << " " << future_out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // --config JSON is applied before parsing so explicit flags override it.
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string_view(argv[i]) == "--config") {
      try {
        apply_json_config(argv[i + 1], cfg);
      } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }
  }

  CLI::App app{"hoopsnet: interaction-network analytics and link prediction"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values");

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--games", cfg.games, "games.csv (season,day,team_a,team_b,score_a,score_b)");
    cmd->add_option("--blocks", cfg.blocks, "blocks.csv (season,blocker,blocked,count)");
    cmd->add_option("--passes", cfg.passes,
                    "passes.csv (game,quarter,source_region,target_region)");
    cmd->add_option("--edges", cfg.edges, "edge-list CSV (source_label,target_label,weight)");
    cmd->add_option("--season", cfg.season, "season year selector");
    cmd->add_option("--game", cfg.game, "game label selector (passing data)");
    cmd->add_option("--phase", cfg.phase, "regular|all (game data)")
        ->check(CLI::IsMember({"regular", "all"}));
    cmd->add_option("--regular-end", cfg.regular_end,
                    "last regular-season day number (default 132)");
    cmd->add_option("--quarters", cfg.quarters, "quarter selection, e.g. 1 or 2+ or 1,3");
    cmd->add_option("--block-weight", cfg.block_weight, "raw|net blocking edge weights")
        ->check(CLI::IsMember({"raw", "net"}));
    cmd->add_option("--out", cfg.out, "output directory");
    cmd->add_option("--seed", cfg.seed, "base seed; all randomness derives from it");
    cmd->add_option("--threads", cfg.threads, "worker cap (default HOOPSNET_THREADS or cores)");
    cmd->add_option("--format", cfg.format, "csv|json|svg extra output")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };
  auto add_embedding = [&](CLI::App* cmd) {
    cmd->add_option("--p", cfg.p, "return parameter");
    cmd->add_option("--q", cfg.q, "in-out parameter");
    cmd->add_option("--walks", cfg.walks, "walks per node");
    cmd->add_option("--walk-length", cfg.walk_length, "max walk length");
    cmd->add_option("--dims", cfg.dims, "embedding dimensions (0 = per-network default)");
    cmd->add_option("--window", cfg.window, "skip-gram context window");
    cmd->add_option("--negatives", cfg.negatives, "negative samples per pair");
    cmd->add_option("--epochs", cfg.epochs, "training epochs");
  };
  auto add_centrality = [&](CLI::App* cmd) {
    cmd->add_option("--damping", cfg.damping, "PageRank damping factor");
    cmd->add_option("--include-self", cfg.include_self, "include v=u in the CON sum");
  };

  CLI::App* network = app.add_subcommand("network", "network construction");
  network->require_subcommand(1);
  CLI::App* network_build =
      network->add_subcommand("build", "build a network and dump its edge list");
  add_io(network_build);

  CLI::App* centrality = app.add_subcommand("centrality", "CON/PageRank/lkl table");
  add_io(centrality);
  add_centrality(centrality);

  CLI::App* lkl = app.add_subcommand("lkl", "low-key leader strength table");
  add_io(lkl);
  add_centrality(lkl);

  CLI::App* quantiles = app.add_subcommand("quantiles", "rank-change quantile report");
  add_io(quantiles);
  add_centrality(quantiles);
  quantiles->add_option("--rankings", cfg.rankings, "rankings.csv (season,team,rank)");
  quantiles->add_option("--quantiles", cfg.quantiles, "quantile count");
  quantiles->add_option("--threshold", cfg.threshold, "low-key leader threshold");
  quantiles->add_option("--direction", cfg.direction, "prev|next season transition")
      ->check(CLI::IsMember({"prev", "next"}));

  CLI::App* embed = app.add_subcommand("embed", "train node2vec embeddings");
  add_io(embed);
  add_embedding(embed);

  CLI::App* experiment = app.add_subcommand("experiment", "link-prediction experiments");
  experiment->require_subcommand(1);
  for (const std::string name : {"matchups", "blocks", "passes"}) {
    CLI::App* sub =
        experiment->add_subcommand(name, "experiment over " + name + " interactions");
    add_io(sub);
    add_embedding(sub);
    sub->add_option("--iterations", cfg.iterations, "independent embedding iterations");
    if (name == "blocks") {
      sub->add_flag("--require-next-appearance", cfg.require_next_appearance,
                    "restrict candidate pairs to players appearing next season");
    }
  }

  CLI::App* similarity =
      app.add_subcommand("similarity-report", "cosine similarity from a focus node");
  add_io(similarity);
  add_embedding(similarity);
  similarity->add_option("--focus", cfg.focus, "focus node label");

  CLI::App* synth = app.add_subcommand("synth", "planted-affinity synthetic fixture");
  synth->add_option("--nodes", cfg.nodes, "node count");
  synth->add_option("--communities", cfg.communities, "community count");
  synth->add_option("--p-in", cfg.p_in, "intra-community edge probability");
  synth->add_option("--p-out", cfg.p_out, "inter-community edge probability");
  synth->add_option("--bias", cfg.bias, "intra-community future-link odds multiplier");
  synth->add_option("--out", cfg.out, "output directory");
  synth->add_option("--seed", cfg.seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 1;
  }

  try {
    if (network_build->parsed()) return cmd_network_build(cfg);
    if (centrality->parsed()) return cmd_centrality(cfg, "centrality");
    if (lkl->parsed()) return cmd_centrality(cfg, "lkl");
    if (quantiles->parsed()) return cmd_quantiles(cfg);
    if (embed->parsed()) return cmd_embed(cfg);
    if (experiment->parsed()) {
      for (const std::string name : {"matchups", "blocks", "passes"}) {
        if (experiment->get_subcommand(name)->parsed()) return cmd_experiment(cfg, name);
      }
    }
    if (similarity->parsed()) return cmd_similarity_report(cfg);
    if (synth->parsed()) return cmd_synth(cfg);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hoopsnet::ValidationError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const hoopsnet::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
