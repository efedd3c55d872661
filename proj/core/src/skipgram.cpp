#include "hoopsnet/skipgram.hpp"

#include <algorithm>
#include <cmath>

#include "hoopsnet/error.hpp"
#include "hoopsnet/seeds.hpp"

namespace hoopsnet {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void validate(const TrainConfig& cfg) {
  if (cfg.dimensions < 1) throw ValidationError("train_skipgram: dimensions must be >= 1");
  if (cfg.window < 1) throw ValidationError("train_skipgram: window must be >= 1");
  if (cfg.negative_samples < 1) {
    throw ValidationError("train_skipgram: negative_samples must be >= 1");
  }
  if (cfg.epochs < 0) throw ValidationError("train_skipgram: epochs must be >= 0");
  if (cfg.lr_final > cfg.lr_initial) {
    throw ValidationError("train_skipgram: lr_final must be <= lr_initial");
  }
}

std::size_t count_positions(const std::vector<std::vector<NodeId>>& walks) {
  std::size_t total = 0;
  for (const auto& w : walks) {
    if (w.size() >= 2) total += w.size();
  }
  return total;
}

}  // namespace

std::vector<double> negative_sampling_distribution(const std::vector<std::vector<NodeId>>& walks,
                                                   std::size_t num_nodes) {
  std::vector<double> freq(num_nodes, 0.0);
  for (const auto& walk : walks) {
    for (NodeId u : walk) freq.at(u) += 1.0;
  }
  double total = 0.0;
  for (double& f : freq) {
    f = f > 0.0 ? std::pow(f, 0.75) : 0.0;
    total += f;
  }
  if (total > 0.0) {
    for (double& f : freq) f /= total;
  }
  return freq;
}

SkipgramModel train_skipgram_model(const std::vector<std::vector<NodeId>>& walks,
                                   std::size_t num_nodes, const TrainConfig& cfg) {
  validate(cfg);
  const std::size_t d = static_cast<std::size_t>(cfg.dimensions);

  bool has_pair = std::any_of(walks.begin(), walks.end(),
                              [](const auto& w) { return w.size() >= 2; });
  if (!has_pair) {
    throw ValidationError("train_skipgram: corpus has no walk of length >= 2");
  }

  SkipgramModel model{EmbeddingMatrix(num_nodes, d), EmbeddingMatrix(num_nodes, d)};

  // Input vectors uniform in [-0.5/d, 0.5/d]; output vectors stay zero.
  std::mt19937_64 init_rng(derive_seed(cfg.seed, 0));
  const double half = 0.5 / static_cast<double>(d);
  for (double& v : model.input.data) v = (rand_unit(init_rng) * 2.0 - 1.0) * half;

  if (cfg.epochs == 0) return model;

  const std::vector<double> noise = negative_sampling_distribution(walks, num_nodes);
  std::vector<double> noise_cdf(num_nodes, 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < num_nodes; ++i) {
    acc += noise[i];
    noise_cdf[i] = acc;
  }

  auto sample_noise = [&](std::mt19937_64& rng) -> NodeId {
    const double r = rand_unit(rng) * acc;
    auto it = std::upper_bound(noise_cdf.begin(), noise_cdf.end(), r);
    if (it == noise_cdf.end()) --it;
    return static_cast<NodeId>(it - noise_cdf.begin());
  };

  std::mt19937_64 neg_rng(derive_seed(cfg.seed, 1));
  const std::size_t total_positions = count_positions(walks) * static_cast<std::size_t>(cfg.epochs);
  std::size_t processed = 0;

  std::vector<double> center_grad(d, 0.0);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& walk : walks) {
      if (walk.size() < 2) continue;
      for (std::size_t pos = 0; pos < walk.size(); ++pos) {
        const double progress =
            static_cast<double>(processed) / static_cast<double>(total_positions);
        const double lr = cfg.lr_initial + (cfg.lr_final - cfg.lr_initial) * progress;
        ++processed;

        const NodeId center = walk[pos];
        auto v_c = model.input.row(center);
        const std::size_t lo = pos >= static_cast<std::size_t>(cfg.window)
                                   ? pos - static_cast<std::size_t>(cfg.window)
                                   : 0;
        const std::size_t hi = std::min(walk.size() - 1, pos + static_cast<std::size_t>(cfg.window));
        for (std::size_t ctx = lo; ctx <= hi; ++ctx) {
          if (ctx == pos) continue;
          const NodeId context = walk[ctx];
          std::fill(center_grad.begin(), center_grad.end(), 0.0);

          // Positive pair plus k noise draws; a draw that hits the true
          // context is skipped, as in the reference trainer.
          for (int s = 0; s <= cfg.negative_samples; ++s) {
            NodeId target;
            double label;
            if (s == 0) {
              target = context;
              label = 1.0;
            } else {
              target = sample_noise(neg_rng);
              if (target == context) continue;
              label = 0.0;
            }
            auto u_t = model.output.row(target);
            double dot = 0.0;
            for (std::size_t j = 0; j < d; ++j) dot += u_t[j] * v_c[j];
            const double g = lr * (label - sigmoid(dot));
            for (std::size_t j = 0; j < d; ++j) {
              center_grad[j] += g * u_t[j];
              u_t[j] += g * v_c[j];
            }
          }
          for (std::size_t j = 0; j < d; ++j) v_c[j] += center_grad[j];
        }
      }
    }
  }
  return model;
}

EmbeddingMatrix train_skipgram(const std::vector<std::vector<NodeId>>& walks,
                               std::size_t num_nodes, const TrainConfig& cfg) {
  return train_skipgram_model(walks, num_nodes, cfg).input;
}

double skipgram_objective(const std::vector<std::vector<NodeId>>& walks,
                          const SkipgramModel& model, int window, int negative_samples,
                          const std::vector<double>& noise) {
  const std::size_t d = model.input.dims;
  double total = 0.0;
  std::size_t pairs = 0;

  for (const auto& walk : walks) {
    if (walk.size() < 2) continue;
    for (std::size_t pos = 0; pos < walk.size(); ++pos) {
      const NodeId center = walk[pos];
      auto v_c = model.input.row(center);

      // Expected negative term depends only on the center; shared across the
      // window's contexts.
      double neg_term = 0.0;
      for (std::size_t nidx = 0; nidx < noise.size(); ++nidx) {
        if (noise[nidx] == 0.0) continue;
        auto u_n = model.output.row(nidx);
        double dot = 0.0;
        for (std::size_t j = 0; j < d; ++j) dot += u_n[j] * v_c[j];
        neg_term += noise[nidx] * std::log(sigmoid(-dot));
      }

      const std::size_t lo = pos >= static_cast<std::size_t>(window)
                                 ? pos - static_cast<std::size_t>(window)
                                 : 0;
      const std::size_t hi = std::min(walk.size() - 1, pos + static_cast<std::size_t>(window));
      for (std::size_t ctx = lo; ctx <= hi; ++ctx) {
        if (ctx == pos) continue;
        auto u_o = model.output.row(walk[ctx]);
        double dot = 0.0;
        for (std::size_t j = 0; j < d; ++j) dot += u_o[j] * v_c[j];
        total += std::log(sigmoid(dot)) + negative_samples * neg_term;
        ++pairs;
      }
    }
  }
  if (pairs == 0) {
    throw ValidationError("skipgram_objective: corpus has no context pairs");
  }
  return total / static_cast<double>(pairs);
}

}  // namespace hoopsnet
