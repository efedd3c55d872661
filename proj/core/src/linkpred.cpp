#include "hoopsnet/linkpred.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"
#include "hoopsnet/seeds.hpp"

namespace hoopsnet {

DesignMatrix LabeledPairSet::design() const {
  DesignMatrix d;
  d.n = pairs.size();
  d.k = feature_dim;
  d.values = features;
  d.labels = labels;
  return d;
}

namespace {

std::map<std::string, NodeId> label_index(const WeightedDigraph& g) {
  std::map<std::string, NodeId> index;
  for (NodeId u = 0; u < g.num_nodes(); ++u) index.emplace(g.label(u), u);
  return index;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

void fill_cosine_features(LabeledPairSet& set, const WeightedDigraph& g,
                          const EmbeddingMatrix& embeddings) {
  auto index = label_index(g);
  set.feature_dim = 1;
  set.features.resize(set.pairs.size());
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    const NodeId u = index.at(set.pairs[i].src);
    const NodeId v = index.at(set.pairs[i].tgt);
    set.features[i] = cosine_similarity(embeddings.row(u), embeddings.row(v));
  }
}

LabeledPairSet build_matchup_dataset(
    const WeightedDigraph& regular_season_graph, const EmbeddingMatrix& embeddings,
    std::span<const std::pair<std::string, std::string>> tournament_matchups,
    std::vector<std::string>* dropped) {
  if (tournament_matchups.empty()) {
    throw ValidationError("build_matchup_dataset: empty tournament matchup list");
  }
  auto index = label_index(regular_season_graph);

  std::set<std::string> participants;
  std::set<std::pair<std::string, std::string>> met;  // canonical (min,max) order
  std::set<std::string> missing;
  for (const auto& [a, b] : tournament_matchups) {
    if (!index.count(a)) missing.insert(a);
    if (!index.count(b)) missing.insert(b);
    if (!index.count(a) || !index.count(b)) continue;
    participants.insert(a);
    participants.insert(b);
    met.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  if (dropped) dropped->assign(missing.begin(), missing.end());

  LabeledPairSet set;
  set.ordered = false;
  std::vector<std::string> teams(participants.begin(), participants.end());
  for (std::size_t i = 0; i < teams.size(); ++i) {
    for (std::size_t j = i + 1; j < teams.size(); ++j) {
      set.pairs.push_back({teams[i], teams[j]});
      set.labels.push_back(met.count({teams[i], teams[j]}) ? 1 : 0);
    }
  }
  fill_cosine_features(set, regular_season_graph, embeddings);
  return set;
}

LabeledPairSet build_blocking_dataset(const WeightedDigraph& prior_graph,
                                      const EmbeddingMatrix& embeddings,
                                      std::span<const BlockRecord> next_blocks, int next_season,
                                      bool require_next_appearance) {
  auto index = label_index(prior_graph);

  std::set<std::pair<std::string, std::string>> blocked_next;
  std::set<std::string> next_players;
  for (const BlockRecord& b : next_blocks) {
    if (b.season != next_season) continue;
    blocked_next.emplace(b.blocker, b.blocked);
    next_players.insert(b.blocker);
    next_players.insert(b.blocked);
  }

  std::vector<std::string> players;
  for (const auto& [label, _] : index) {
    if (require_next_appearance && !next_players.count(label)) continue;
    players.push_back(label);
  }

  LabeledPairSet set;
  set.ordered = true;
  set.feature_dim = embeddings.dims * 2;
  for (const auto& src : players) {
    for (const auto& tgt : players) {
      if (src == tgt) continue;
      set.pairs.push_back({src, tgt});
      set.labels.push_back(blocked_next.count({src, tgt}) ? 1 : 0);
      auto features = concat_features(embeddings.row(index.at(src)), embeddings.row(index.at(tgt)));
      set.features.insert(set.features.end(), features.begin(), features.end());
    }
  }
  return set;
}

LabeledPairSet build_passing_dataset(const WeightedDigraph& q1_graph,
                                     const EmbeddingMatrix& embeddings,
                                     const WeightedDigraph& later_graph) {
  if (q1_graph.num_nodes() != later_graph.num_nodes()) {
    throw ValidationError("build_passing_dataset: graphs cover different region sets");
  }
  LabeledPairSet set;
  set.ordered = true;
  const std::size_t n = q1_graph.num_nodes();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      set.pairs.push_back({q1_graph.label(u), q1_graph.label(v)});
      set.labels.push_back(later_graph.has_edge(u, v) ? 1 : 0);
    }
  }
  fill_cosine_features(set, q1_graph, embeddings);

  // Candidate pairs were generated in id order; reports expect lexicographic
  // label order.
  std::vector<std::size_t> order(set.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (set.pairs[a].src != set.pairs[b].src) return set.pairs[a].src < set.pairs[b].src;
    return set.pairs[a].tgt < set.pairs[b].tgt;
  });
  LabeledPairSet sorted;
  sorted.ordered = true;
  sorted.feature_dim = set.feature_dim;
  for (std::size_t i : order) {
    sorted.pairs.push_back(set.pairs[i]);
    sorted.labels.push_back(set.labels[i]);
    sorted.features.push_back(set.features[i]);
  }
  return sorted;
}

ExperimentAggregate run_experiment(const ExperimentSpec& spec) {
  if (!spec.graph) throw ValidationError("run_experiment: no graph");
  if (!spec.build_dataset) throw ValidationError("run_experiment: no dataset builder");
  if (spec.iterations < 1) throw ValidationError("run_experiment: iterations must be >= 1");

  ExperimentAggregate agg;
  agg.iterations = spec.iterations;
  agg.results.resize(static_cast<std::size_t>(spec.iterations));
  agg.errors.resize(static_cast<std::size_t>(spec.iterations));

  std::vector<std::size_t> pair_counts(static_cast<std::size_t>(spec.iterations), 0);
  std::vector<std::size_t> feature_dims(static_cast<std::size_t>(spec.iterations), 0);

  auto run_one = [&](int i) {
    const std::uint64_t iter_seed = derive_seed(spec.base_seed, static_cast<std::uint64_t>(i));
    WalkConfig walk = spec.walk;
    walk.seed = derive_seed(iter_seed, 0);
    TrainConfig train = spec.train;
    train.seed = derive_seed(iter_seed, 1);
    try {
      auto walks = generate_walks(*spec.graph, walk);
      EmbeddingMatrix emb = train_skipgram(walks, spec.graph->num_nodes(), train);
      LabeledPairSet data = spec.build_dataset(emb);
      pair_counts[static_cast<std::size_t>(i)] = data.pairs.size();
      feature_dims[static_cast<std::size_t>(i)] = data.feature_dim;
      agg.results[static_cast<std::size_t>(i)] = fit_logistic(data.design(), spec.fit);
    } catch (const Error& e) {
      agg.errors[static_cast<std::size_t>(i)] = e.what();
    }
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    for (int i = 0; i < spec.iterations; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < spec.iterations; i = next.fetch_add(1)) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic reduction in iteration order.
  std::vector<double> pseudo_r2s, llr_ps;
  std::vector<std::vector<double>> p_columns, coef_columns;
  for (int i = 0; i < spec.iterations; ++i) {
    const auto& slot = agg.results[static_cast<std::size_t>(i)];
    if (!slot.has_value()) {
      ++agg.excluded;
      continue;
    }
    ++agg.completed;
    agg.pair_count = pair_counts[static_cast<std::size_t>(i)];
    agg.feature_dim = feature_dims[static_cast<std::size_t>(i)];
    const FitResult& fit = *slot;
    pseudo_r2s.push_back(fit.pseudo_r2);
    llr_ps.push_back(fit.llr_p);
    if (coef_columns.empty()) {
      coef_columns.resize(fit.coefficients.size());
      p_columns.resize(fit.p_values.size() - 1);  // features only
    }
    for (std::size_t j = 0; j < fit.coefficients.size(); ++j) {
      coef_columns[j].push_back(fit.coefficients[j]);
    }
    for (std::size_t j = 1; j < fit.p_values.size(); ++j) {
      p_columns[j - 1].push_back(fit.p_values[j]);
    }
  }

  if (agg.excluded * 2 > spec.iterations) {
    throw NumericalError("run_experiment: " + std::to_string(agg.excluded) + " of " +
                         std::to_string(spec.iterations) +
                         " iterations failed; first error: " +
                         [&] {
                           for (const auto& e : agg.errors) {
                             if (!e.empty()) return e;
                           }
                           return std::string("(none)");
                         }());
  }

  double sum_r2 = 0.0, sum_llr = 0.0;
  for (double v : pseudo_r2s) sum_r2 += v;
  for (double v : llr_ps) sum_llr += v;
  agg.mean_pseudo_r2 = sum_r2 / static_cast<double>(agg.completed);
  agg.mean_llr_p = sum_llr / static_cast<double>(agg.completed);
  agg.median_pseudo_r2 = median(pseudo_r2s);
  agg.median_llr_p = median(llr_ps);
  for (const auto& col : coef_columns) {
    double s = 0.0;
    for (double v : col) s += v;
    agg.mean_coefficients.push_back(s / static_cast<double>(col.size()));
  }
  for (const auto& col : p_columns) {
    const double med = median(col);
    agg.median_p_values.push_back(med);
    if (med < 0.05) ++agg.significant_dimensions;
  }
  return agg;
}

std::vector<SimilarityRow> node_similarity_report(const EmbeddingMatrix& embeddings,
                                                  const std::vector<std::string>& labels,
                                                  NodeId focus) {
  if (focus >= embeddings.rows) {
    throw ValidationError("node_similarity_report: focus node out of range");
  }
  if (labels.size() != embeddings.rows) {
    throw ValidationError("node_similarity_report: label count mismatch");
  }
  std::vector<SimilarityRow> rows;
  rows.reserve(embeddings.rows - 1);
  for (std::size_t u = 0; u < embeddings.rows; ++u) {
    if (u == focus) continue;
    rows.push_back({labels[u], cosine_similarity(embeddings.row(focus), embeddings.row(u))});
  }
  std::sort(rows.begin(), rows.end(), [](const SimilarityRow& a, const SimilarityRow& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.label < b.label;
  });
  return rows;
}

void write_similarity_csv(std::span<const SimilarityRow> rows, std::ostream& os,
                          std::string_view meta) {
  if (!meta.empty()) os << "# " << meta << "\n";
  os << "label,cosine_similarity\n";
  for (const SimilarityRow& row : rows) {
    os << csv::escape(row.label) << ',' << csv::format_double(row.similarity, 10) << '\n';
  }
}

std::string experiment_report_json(const ExperimentAggregate& agg, std::string_view kind,
                                   std::string_view pair_field,
                                   std::string_view config_echo_json,
                                   std::string_view meta_json) {
  nlohmann::json j;
  if (!meta_json.empty()) j["meta"] = nlohmann::json::parse(meta_json);
  j["experiment"] = std::string(kind);
  if (!config_echo_json.empty()) j["config"] = nlohmann::json::parse(config_echo_json);
  j["iterations"] = agg.iterations;
  j["completed"] = agg.completed;
  j["excluded"] = agg.excluded;

  nlohmann::json block;
  block[std::string(pair_field)] = agg.pair_count;
  block["embedding_features"] = agg.feature_dim;
  block["pseudo_r2"] = agg.mean_pseudo_r2;
  block["llr_p"] = agg.mean_llr_p;
  block["median_pseudo_r2"] = agg.median_pseudo_r2;
  block["median_llr_p"] = agg.median_llr_p;
  block["significant_dimensions"] = agg.significant_dimensions;
  block["mean_coefficients"] = agg.mean_coefficients;
  block["median_p_values"] = agg.median_p_values;
  j["aggregate"] = block;

  auto& iters = j["per_iteration"] = nlohmann::json::array();
  for (std::size_t i = 0; i < agg.results.size(); ++i) {
    if (agg.results[i].has_value()) {
      iters.push_back(nlohmann::json::parse(fit_result_json(*agg.results[i])));
    } else {
      iters.push_back({{"error", agg.errors[i]}});
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace hoopsnet
