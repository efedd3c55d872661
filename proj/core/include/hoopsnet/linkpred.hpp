#pragma once

// Link-prediction experiment harnesses: dataset construction for the three
// interaction settings, repeated-iteration aggregation, and similarity
// reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hoopsnet/embedding.hpp"
#include "hoopsnet/graph.hpp"
#include "hoopsnet/logistic.hpp"
#include "hoopsnet/records.hpp"
#include "hoopsnet/skipgram.hpp"
#include "hoopsnet/walks.hpp"

namespace hoopsnet {

struct LabeledPair {
  std::string src;
  std::string tgt;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct LabeledPairSet {
  std::vector<LabeledPair> pairs;  // lexicographic by (src, tgt)
  bool ordered = false;            // whether (u,v) and (v,u) are distinct
  std::size_t feature_dim = 0;
  std::vector<double> features;    // row-major pairs.size() x feature_dim
  std::vector<int> labels;         // 0/1 per pair

  DesignMatrix design() const;
};

// Candidate set: all unordered pairs of tournament participants present in
// the regular-season graph. One feature, the cosine similarity of the two
// team embeddings; label 1 iff the pair met in the tournament. Teams in the
// matchup list without a regular-season node are dropped (reported through
// `dropped`). An empty matchup list is an error.
LabeledPairSet build_matchup_dataset(
    const WeightedDigraph& regular_season_graph, const EmbeddingMatrix& embeddings,
    std::span<const std::pair<std::string, std::string>> tournament_matchups,
    std::vector<std::string>* dropped = nullptr);

// Candidate set: all ordered pairs (u,v), u != v, over the prior-season
// players. Features are the concatenated source and target embeddings (2d);
// label 1 iff u blocked v at least once in next_season. With
// require_next_appearance only players occurring in next_season records stay
// in the candidate set.
LabeledPairSet build_blocking_dataset(const WeightedDigraph& prior_graph,
                                      const EmbeddingMatrix& embeddings,
                                      std::span<const BlockRecord> next_blocks, int next_season,
                                      bool require_next_appearance = false);

// Candidate set: all 756 ordered region pairs. One cosine-similarity
// feature from the first-quarter embeddings; label 1 iff the edge exists in
// the later-quarters graph.
LabeledPairSet build_passing_dataset(const WeightedDigraph& q1_graph,
                                     const EmbeddingMatrix& embeddings,
                                     const WeightedDigraph& later_graph);

// Computes one cosine-similarity feature per pair by resolving pair labels
// in `g` and reading the matching embedding rows. Used by the builders above
// and by synthetic fixtures.
void fill_cosine_features(LabeledPairSet& set, const WeightedDigraph& g,
                          const EmbeddingMatrix& embeddings);

struct ExperimentSpec {
  const WeightedDigraph* graph = nullptr;  // embedded anew every iteration
  WalkConfig walk;
  TrainConfig train;
  FitOptions fit;
  // Rebuilds the dataset from one iteration's embeddings.
  std::function<LabeledPairSet(const EmbeddingMatrix&)> build_dataset;
  int iterations = 100;
  std::uint64_t base_seed = 1;
  int threads = 1;
};

struct ExperimentAggregate {
  int iterations = 0;
  int completed = 0;
  int excluded = 0;  // iterations that errored (e.g. separation)
  std::size_t pair_count = 0;
  std::size_t feature_dim = 0;
  double mean_pseudo_r2 = 0.0;
  double median_pseudo_r2 = 0.0;
  double mean_llr_p = 0.0;
  double median_llr_p = 0.0;
  std::vector<double> mean_coefficients;   // k+1, intercept first
  std::vector<double> median_p_values;     // k, features only
  int significant_dimensions = 0;          // features with median p < 0.05
  std::vector<std::optional<FitResult>> results;  // one slot per iteration
  std::vector<std::string> errors;         // messages for excluded slots
};

// Per iteration i the walk and training seeds derive from
// derive_seed(base_seed, i); the dataset pairs and labels stay fixed while
// features are rebuilt from the fresh embeddings. Iterations run across
// `threads` workers but aggregation always reduces in iteration order.
// More than half the iterations failing is an experiment-level error.
ExperimentAggregate run_experiment(const ExperimentSpec& spec);

struct SimilarityRow {
  std::string label;
  double similarity = 0.0;
};

// Cosine similarity from `focus` to every other node, sorted descending
// (ties by label). The focus node itself is excluded.
std::vector<SimilarityRow> node_similarity_report(const EmbeddingMatrix& embeddings,
                                                  const std::vector<std::string>& labels,
                                                  NodeId focus);

void write_similarity_csv(std::span<const SimilarityRow> rows, std::ostream& os,
                          std::string_view meta = {});

// Full experiment report: config echo, aggregate block using the
// experiment's pair-count field name (`team_pairs`, `player_pairs`,
// `region_pairs`), and per-iteration results.
std::string experiment_report_json(const ExperimentAggregate& agg, std::string_view kind,
                                   std::string_view pair_field,
                                   std::string_view config_echo_json = {},
                                   std::string_view meta_json = {});

}  // namespace hoopsnet
