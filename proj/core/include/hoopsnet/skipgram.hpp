#pragma once

// Skip-gram training with negative sampling over walk corpora.
//
// For each center c and context o within the (full, non-shrinking) window the
// trainer ascends log sigmoid(u_o . v_c) plus negative_samples draws n from
// the noise distribution contributing log sigmoid(-u_n . v_c). The noise
// distribution is the corpus unigram distribution raised to the 0.75 power.
// Input vectors start uniform in [-0.5/d, 0.5/d], output vectors at zero;
// the learning rate decays linearly from lr_initial to lr_final over all
// center positions of all epochs. Training is single-threaded and fully
// determined by the seed.

#include <cstdint>
#include <vector>

#include "hoopsnet/embedding.hpp"
#include "hoopsnet/graph.hpp"

namespace hoopsnet {

struct TrainConfig {
  int dimensions = 128;
  int window = 10;
  int negative_samples = 5;
  int epochs = 5;
  double lr_initial = 0.025;
  double lr_final = 0.0001;
  std::uint64_t seed = 1;
};

struct SkipgramModel {
  EmbeddingMatrix input;   // the node embeddings handed to downstream code
  EmbeddingMatrix output;  // context vectors, kept for objective evaluation
};

// Corpus unigram frequencies raised to 0.75, normalized. Nodes absent from
// the corpus get probability 0.
std::vector<double> negative_sampling_distribution(const std::vector<std::vector<NodeId>>& walks,
                                                   std::size_t num_nodes);

// epochs == 0 returns the seeded initialization untouched. A corpus without
// any walk of length >= 2 is an error.
SkipgramModel train_skipgram_model(const std::vector<std::vector<NodeId>>& walks,
                                   std::size_t num_nodes, const TrainConfig& cfg);

EmbeddingMatrix train_skipgram(const std::vector<std::vector<NodeId>>& walks,
                               std::size_t num_nodes, const TrainConfig& cfg);

// Mean per-pair objective log sigmoid(u_o . v_c) + k * E_n[log sigmoid(-u_n . v_c)]
// with the negative term taken in exact expectation over the noise
// distribution, so the value is deterministic.
double skipgram_objective(const std::vector<std::vector<NodeId>>& walks,
                          const SkipgramModel& model, int window, int negative_samples,
                          const std::vector<double>& noise);

}  // namespace hoopsnet
