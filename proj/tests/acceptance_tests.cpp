// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Invoked as `acceptance_tests <path-to-hoopsnet>`.
//
// Criteria 4 and 9 include data-gated reproductions that need the original
// season datasets; point HOOPSNET_DATA_DIR at a directory containing
// games.csv (and rankings.csv) in the documented schemas to enable them.
// Without the variable those sub-checks print [SKIP] and do not fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hoopsnet/builders.hpp"
#include "hoopsnet/centrality.hpp"
#include "hoopsnet/error.hpp"
#include "hoopsnet/linkpred.hpp"
#include "hoopsnet/logistic.hpp"
#include "hoopsnet/ranking.hpp"
#include "hoopsnet/records.hpp"
#include "hoopsnet/seeds.hpp"
#include "hoopsnet/skipgram.hpp"
#include "hoopsnet/stats.hpp"
#include "hoopsnet/synth.hpp"
#include "hoopsnet/walks.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_scratch;

void report(int id, bool pass, const std::string& name, const std::string& detail = {}) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

void report_skip(int id, const std::string& name, const std::string& why) {
  std::cout << "[SKIP] criterion " << id << ": " << name << " (" << why << ")\n";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<hoopsnet::WeightedDigraph> seeded_fixture_graphs() {
  std::vector<hoopsnet::WeightedDigraph> graphs;
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + hoopsnet::rand_index(rng, 49);  // n <= 50
    const double prob = 0.1 + hoopsnet::rand_unit(rng) * 0.4;
    graphs.push_back(testutil::random_digraph(n, prob, rng()));
  }
  return graphs;
}

// --------------------------------------------------------------------------

void criterion_1_and_2(const std::vector<hoopsnet::WeightedDigraph>& graphs) {
  const auto start = Clock::now();
  bool equal = true;
  for (const auto& g : graphs) {
    for (bool include_self : {true, false}) {
      if (hoopsnet::con_scores(g, include_self) !=
          oracles::brute_force_con_scores(g, include_self)) {
        equal = false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(1, equal && elapsed < 10.0, "CON fast path equals brute force on 200 random digraphs",
         "elapsed " + std::to_string(elapsed) + "s");

  bool identity = true;
  for (const auto& g : graphs) {
    if (hoopsnet::con_scores(g, true) != oracles::con_identity_scores(g)) identity = false;
  }
  auto cycle = testutil::make_graph(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1}});
  if (hoopsnet::con_scores(cycle, true) != oracles::con_identity_scores(cycle)) identity = false;
  report(2, identity, "CON in-degree identity holds exactly on every fixture");
}

void criterion_3(const std::vector<hoopsnet::WeightedDigraph>& graphs) {
  bool pass = true;
  std::string detail;
  for (const auto& g : graphs) {
    auto pr = hoopsnet::pagerank_adversarial(g);
    const double sum = std::accumulate(pr.begin(), pr.end(), 0.0);
    if (std::abs(sum - 1.0) >= 1e-8) {
      pass = false;
      detail = "sum deviated by " + std::to_string(sum - 1.0);
    }
    if (g.num_nodes() <= 30) {
      auto oracle = oracles::dense_pagerank(g, 0.85, true);
      for (std::size_t i = 0; i < pr.size(); ++i) {
        if (std::abs(pr[i] - oracle[i]) >= 1e-8) {
          pass = false;
          detail = "oracle mismatch " + std::to_string(pr[i] - oracle[i]);
        }
      }
    }
  }
  auto two_cycle = testutil::make_graph(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  auto pr = hoopsnet::pagerank_adversarial(two_cycle);
  if (std::abs(pr[0] - 0.5) >= 1e-10 || std::abs(pr[1] - 0.5) >= 1e-10) {
    pass = false;
    detail = "2-cycle gave (" + std::to_string(pr[0]) + ", " + std::to_string(pr[1]) + ")";
  }
  report(3, pass, "PageRank sums to 1, matches the dense oracle, 2-cycle is (0.5, 0.5)", detail);
}

void criterion_4(const std::vector<hoopsnet::WeightedDigraph>& graphs) {
  bool pass = true;
  for (const auto& g : graphs) {
    auto table = hoopsnet::low_key_leader_strengths(g);
    for (double v : table.lkl) {
      if (v < -1.0 || v > 1.0) pass = false;
    }
  }
  auto cycle = testutil::make_graph(7, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 0, 1}});
  auto table = hoopsnet::low_key_leader_strengths(cycle);
  for (double v : table.lkl) {
    if (std::abs(v) > 1e-12) pass = false;
  }
  report(4, pass, "low-key leader strength bounded in [-1,1], all-zero on a directed cycle");

  const char* data_dir = std::getenv("HOOPSNET_DATA_DIR");
  if (!data_dir || !fs::exists(fs::path(data_dir) / "games.csv")) {
    report_skip(4, "2021-2024 women's lkl range reproduces [-0.361, 0.949] +/- 0.001",
                "set HOOPSNET_DATA_DIR with games.csv to enable");
    return;
  }
  try {
    auto games = hoopsnet::load_games(fs::path(data_dir) / "games.csv");
    double lo = 1e9, hi = -1e9;
    for (int season : {2021, 2022, 2023, 2024}) {
      auto g = hoopsnet::build_adversarial_network(games, season);
      if (g.num_nodes() == 0) continue;
      auto t = hoopsnet::low_key_leader_strengths(g);
      lo = std::min(lo, *std::min_element(t.lkl.begin(), t.lkl.end()));
      hi = std::max(hi, *std::max_element(t.lkl.begin(), t.lkl.end()));
    }
    const bool in_range = std::abs(lo - (-0.361)) <= 0.001 && std::abs(hi - 0.949) <= 0.001;
    report(4, in_range, "women's 2021-2024 lkl range reproduction",
           "observed [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  } catch (const std::exception& e) {
    report(4, false, "women's 2021-2024 lkl range reproduction", e.what());
  }
}

void criterion_5() {
  const auto start = Clock::now();
  // Self-loop at node 1 puts all three alpha cases into a single context.
  auto g = testutil::make_graph(3, {{0, 1, 1.0}, {1, 0, 2.0}, {1, 1, 2.0}, {1, 2, 3.0}, {2, 1, 1.0}});
  bool pass = true;
  std::string detail;
  long total_steps = 0;

  for (auto [p, q] : std::vector<std::pair<double, double>>{{1, 1}, {2, 0.5}, {0.25, 4}}) {
    hoopsnet::WalkConfig cfg;
    cfg.p = p;
    cfg.q = q;
    cfg.walk_length = 40;
    cfg.walks_per_node = 1200;
    cfg.seed = 424242;
    auto walks = hoopsnet::generate_walks(g, cfg);

    std::map<std::pair<hoopsnet::NodeId, hoopsnet::NodeId>, std::vector<long>> counts;
    for (const auto& walk : walks) {
      for (std::size_t i = 2; i < walk.size(); ++i) {
        auto key = std::make_pair(walk[i - 2], walk[i - 1]);
        auto nbrs = g.out_neighbors(key.second);
        auto& slot = counts[key];
        if (slot.empty()) slot.assign(nbrs.size(), 0);
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          if (nbrs[j].target == walk[i]) {
            ++slot[j];
            break;
          }
        }
        ++total_steps;
      }
    }
    for (const auto& [context, observed] : counts) {
      auto expected = hoopsnet::transition_distribution(g, context.first, context.second, p, q);
      const double n = static_cast<double>(std::accumulate(observed.begin(), observed.end(), 0L));
      double chi2 = 0.0;
      int cells = 0;
      for (std::size_t j = 0; j < expected.size(); ++j) {
        const double e = expected[j] * n;
        if (e < 1e-9) continue;
        chi2 += (static_cast<double>(observed[j]) - e) * (static_cast<double>(observed[j]) - e) / e;
        ++cells;
      }
      if (cells <= 1) continue;
      const double pval = hoopsnet::chi_square_sf(chi2, cells - 1);
      if (pval <= 0.01) {
        pass = false;
        detail = "context (" + std::to_string(context.first) + "," +
                 std::to_string(context.second) + ") at p=" + std::to_string(p) +
                 " q=" + std::to_string(q) + " gave GOF p=" + std::to_string(pval);
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (total_steps < 3 * 100000) {
    pass = false;
    detail = "only " + std::to_string(total_steps) + " second-order steps sampled";
  }
  if (elapsed >= 30.0) {
    pass = false;
    detail = "elapsed " + std::to_string(elapsed) + "s";
  }
  report(5, pass, "walk bias chi-square GOF at alpha=0.01 for three (p,q) settings",
         detail.empty() ? std::to_string(total_steps) + " steps, " + std::to_string(elapsed) + "s"
                        : detail);
}

void criterion_6() {
  auto g = testutil::two_cliques(4);
  int homophily_wins = 0;
  int objective_rises = 0;
  for (int s = 0; s < 100; ++s) {
    hoopsnet::WalkConfig wcfg;
    wcfg.walk_length = 20;
    wcfg.walks_per_node = 8;
    wcfg.seed = hoopsnet::derive_seed(5150, static_cast<std::uint64_t>(s) * 2);
    auto walks = hoopsnet::generate_walks(g, wcfg);

    hoopsnet::TrainConfig tcfg;
    tcfg.dimensions = 8;
    tcfg.window = 5;
    tcfg.epochs = 4;
    tcfg.seed = hoopsnet::derive_seed(5150, static_cast<std::uint64_t>(s) * 2 + 1);
    auto model = hoopsnet::train_skipgram_model(walks, g.num_nodes(), tcfg);

    double intra = 0, inter = 0;
    int n_intra = 0, n_inter = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) {
        const double sim = hoopsnet::cosine_similarity(model.input.row(i), model.input.row(j));
        if ((i < 4) == (j < 4)) {
          intra += sim;
          ++n_intra;
        } else {
          inter += sim;
          ++n_inter;
        }
      }
    }
    if (intra / n_intra > inter / n_inter) ++homophily_wins;

    auto init_cfg = tcfg;
    init_cfg.epochs = 0;
    auto init = hoopsnet::train_skipgram_model(walks, g.num_nodes(), init_cfg);
    auto noise = hoopsnet::negative_sampling_distribution(walks, g.num_nodes());
    const double before =
        hoopsnet::skipgram_objective(walks, init, tcfg.window, tcfg.negative_samples, noise);
    const double after =
        hoopsnet::skipgram_objective(walks, model, tcfg.window, tcfg.negative_samples, noise);
    if (after > before) ++objective_rises;
  }
  report(6, homophily_wins >= 95 && objective_rises == 100,
         "two-community homophily in >= 95/100 runs, objective rises in all",
         "homophily " + std::to_string(homophily_wins) + "/100, objective " +
             std::to_string(objective_rises) + "/100");
}

void criterion_7() {
  bool pass = true;
  std::string detail;

  // Three fixed fixtures against the extended-precision damped-Newton oracle.
  std::mt19937_64 rng(1123581321);
  for (int fixture = 0; fixture < 3; ++fixture) {
    const std::size_t n = 30 + fixture * 10;
    const std::size_t k = 1 + fixture;
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    std::vector<int> y(n);
    std::vector<double> truth(k + 1);
    for (double& b : truth) b = hoopsnet::rand_unit(rng) * 1.6 - 0.8;
    for (std::size_t i = 0; i < n; ++i) {
      double eta = truth[0];
      for (std::size_t j = 0; j < k; ++j) {
        rows[i][j] = hoopsnet::rand_unit(rng) * 4.0 - 2.0;
        eta += truth[j + 1] * rows[i][j];
      }
      y[i] = hoopsnet::rand_unit(rng) < 1.0 / (1.0 + std::exp(-eta)) ? 1 : 0;
    }
    hoopsnet::DesignMatrix d;
    d.n = n;
    d.k = k;
    for (const auto& row : rows) d.values.insert(d.values.end(), row.begin(), row.end());
    d.labels = y;

    auto fit = hoopsnet::fit_logistic(d);
    auto oracle = oracles::logistic_fit_longdouble(rows, y);
    for (std::size_t j = 0; j < fit.coefficients.size(); ++j) {
      if (std::abs(fit.coefficients[j] - static_cast<double>(oracle.coefficients[j])) >= 1e-6) {
        pass = false;
        detail = "fixture " + std::to_string(fixture) + " coefficient " + std::to_string(j);
      }
    }
    // Score equations at the reported optimum.
    std::vector<double> score(k + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double eta = fit.coefficients[0];
      for (std::size_t j = 0; j < k; ++j) eta += fit.coefficients[j + 1] * rows[i][j];
      const double resid = y[i] - 1.0 / (1.0 + std::exp(-eta));
      score[0] += resid;
      for (std::size_t j = 0; j < k; ++j) score[j + 1] += resid * rows[i][j];
    }
    for (double s : score) {
      if (std::abs(s) >= 1e-6) {
        pass = false;
        detail = "score equation violated by " + std::to_string(s);
      }
    }
    // Analytic gradient vs central differences at a random point.
    std::vector<double> beta(k + 1);
    for (double& b : beta) b = hoopsnet::rand_unit(rng) - 0.5;
    auto ll = [&](const std::vector<double>& bb) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double eta = bb[0];
        for (std::size_t j = 0; j < k; ++j) eta += bb[j + 1] * rows[i][j];
        acc += y[i] * eta - (eta > 0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta)));
      }
      return acc;
    };
    for (std::size_t j = 0; j < beta.size(); ++j) {
      double analytic = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double eta = beta[0];
        for (std::size_t jj = 0; jj < k; ++jj) eta += beta[jj + 1] * rows[i][jj];
        const double resid = y[i] - 1.0 / (1.0 + std::exp(-eta));
        analytic += j == 0 ? resid : resid * rows[i][j - 1];
      }
      auto plus = beta, minus = beta;
      plus[j] += 1e-6;
      minus[j] -= 1e-6;
      const double fd = (ll(plus) - ll(minus)) / 2e-6;
      if (std::abs(fd - analytic) >= 1e-5) {
        pass = false;
        detail = "gradient check off by " + std::to_string(fd - analytic);
      }
    }
  }

  if (std::abs(hoopsnet::chi_square_sf(3.841, 1) - 0.05) >= 1e-4) {
    pass = false;
    detail = "chi_square_sf(3.841,1) = " + std::to_string(hoopsnet::chi_square_sf(3.841, 1));
  }
  if (std::abs(hoopsnet::normal_sf(1.959964) - 0.025) >= 1e-6) {
    pass = false;
    detail = "normal_sf(1.959964) = " + std::to_string(hoopsnet::normal_sf(1.959964));
  }
  bool separation_raised = false;
  try {
    hoopsnet::DesignMatrix d;
    d.n = 4;
    d.k = 1;
    d.values = {-2.0, -1.0, 1.0, 2.0};
    d.labels = {0, 0, 1, 1};
    hoopsnet::fit_logistic(d);
  } catch (const hoopsnet::SeparationError&) {
    separation_raised = true;
  }
  if (!separation_raised) {
    pass = false;
    detail = "separable fixture did not raise SeparationError";
  }
  report(7, pass, "logistic regression matches the oracle; tail probabilities exact; separation detected",
         detail);
}

void criterion_8() {
  const auto start = Clock::now();

  auto run_planted = [&](double bias) {
    hoopsnet::PlantedAffinityModel model;
    model.num_nodes = 60;
    model.num_communities = 2;
    model.p_in = 0.5;
    model.p_out = 0.05;
    model.future_link_bias = bias;
    model.seed = 90210;
    auto planted = hoopsnet::generate_planted(model);

    hoopsnet::ExperimentSpec spec;
    spec.graph = &planted.graph;
    spec.walk.walk_length = 40;
    spec.walk.walks_per_node = 10;
    spec.train.dimensions = 16;
    spec.train.window = 5;
    spec.train.epochs = 3;
    spec.iterations = 100;
    spec.base_seed = 31337;
    spec.threads = 1;  // the runtime bound is a single-threaded bound
    auto skeleton = planted.future_pairs;
    const auto* graph = &planted.graph;
    spec.build_dataset = [graph, skeleton](const hoopsnet::EmbeddingMatrix& emb) {
      auto copy = skeleton;
      hoopsnet::fill_cosine_features(copy, *graph, emb);
      return copy;
    };
    return hoopsnet::run_experiment(spec);
  };

  auto planted = run_planted(6.0);
  auto null_model = run_planted(1.0);
  const double elapsed = seconds_since(start);

  const bool pass = planted.median_llr_p < 0.05 && planted.mean_coefficients[1] > 0.0 &&
                    null_model.median_llr_p > 0.05 && elapsed < 300.0;
  report(8, pass, "planted-affinity experiment significant, null fixture not",
         "bias=6 median llr_p=" + std::to_string(planted.median_llr_p) +
             ", coef=" + std::to_string(planted.mean_coefficients[1]) +
             "; bias=1 median llr_p=" + std::to_string(null_model.median_llr_p) + "; " +
             std::to_string(elapsed) + "s");
}

void criterion_9() {
  bool pass = true;
  std::string detail;

  std::vector<std::pair<std::string, double>> lkl{
      {"t1", 0.1}, {"t2", 0.2}, {"t3", 0.8}, {"t4", 0.9}};
  std::vector<std::pair<std::string, double>> changes{
      {"t1", -3}, {"t2", -1}, {"t3", 2}, {"t4", 4}};
  auto report_q = hoopsnet::quantile_report(lkl, changes, 2, hoopsnet::Direction::PrevToCurrent);
  if (report_q.bands[0].mean_rank_change != -2.0 || report_q.bands[1].mean_rank_change != 3.0) {
    pass = false;
    detail = "hand fixture means were " + std::to_string(report_q.bands[0].mean_rank_change) +
             ", " + std::to_string(report_q.bands[1].mean_rank_change);
  }

  std::mt19937_64 rng(8080);
  for (int n : {23, 61, 118}) {
    std::vector<std::pair<std::string, double>> l, c;
    for (int i = 0; i < n; ++i) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "team%03d", i);
      l.emplace_back(buf, hoopsnet::rand_unit(rng));
      c.emplace_back(buf, hoopsnet::rand_unit(rng) * 40 - 20);
    }
    for (int k : {2, 5, 20}) {
      auto r = hoopsnet::quantile_report(l, c, k, hoopsnet::Direction::PrevToCurrent);
      int total = 0;
      for (const auto& band : r.bands) {
        total += band.team_count;
        if (band.team_count != n / k && band.team_count != n / k + 1) {
          pass = false;
          detail = "unbalanced band of " + std::to_string(band.team_count);
        }
      }
      if (total != n) {
        pass = false;
        detail = "band sizes sum to " + std::to_string(total) + " of " + std::to_string(n);
      }
    }
  }
  report(9, pass,
         "quantile pipeline: hand fixture exact, sizes balanced; predicate: high-lkl bands "
         "(mean >= threshold) must improve, low bands decline; signs flip for next-season",
         detail);

  const char* data_dir = std::getenv("HOOPSNET_DATA_DIR");
  if (!data_dir || !fs::exists(fs::path(data_dir) / "games.csv") ||
      !fs::exists(fs::path(data_dir) / "rankings.csv")) {
    report_skip(9, "per-season hypothesis pass/fail counts on source data",
                "set HOOPSNET_DATA_DIR with games.csv and rankings.csv to enable");
    return;
  }
  try {
    auto games = hoopsnet::load_games(fs::path(data_dir) / "games.csv");
    auto rankings = hoopsnet::load_rankings(fs::path(data_dir) / "rankings.csv");
    for (int season : {2022, 2023, 2024}) {
      auto g = hoopsnet::build_adversarial_network(games, season);
      auto table = hoopsnet::low_key_leader_strengths(g);
      std::vector<std::pair<std::string, double>> season_lkl;
      for (std::size_t i = 0; i < table.labels.size(); ++i) {
        season_lkl.emplace_back(table.labels[i], table.lkl[i]);
      }
      std::vector<hoopsnet::RankingRecord> prev, curr;
      for (const auto& r : rankings) {
        if (r.season == season - 1) prev.push_back(r);
        if (r.season == season) curr.push_back(r);
      }
      auto rc = hoopsnet::rank_changes(prev, curr);
      auto qr = hoopsnet::quantile_report(season_lkl, rc.changes, 20,
                                          hoopsnet::Direction::PrevToCurrent);
      auto hc = hoopsnet::hypothesis_check(qr, 0.4, hoopsnet::Direction::PrevToCurrent);
      std::cout << "       season " << season << ": " << hc.passed << "/" << hc.total
                << " quantiles satisfy the hypothesis\n";
    }
    report(9, true, "per-season hypothesis pass/fail counts emitted (reproduction not claimed)");
  } catch (const std::exception& e) {
    report(9, false, "per-season hypothesis counts on source data", e.what());
  }
}

int run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void criterion_10() {
  if (g_cli.empty()) {
    report(10, false, "CLI determinism", "no CLI binary path given");
    return;
  }
  fs::remove_all(g_scratch);
  fs::create_directories(g_scratch);

  {
    std::ofstream os(g_scratch / "games.csv");
    os << "season,day,team_a,team_b,score_a,score_b\n";
    std::mt19937_64 rng(31);
    const char* teams[] = {"Ames", "Bix", "Cor", "Dav", "Elk", "Fre", "Gri", "Hml"};
    for (int i = 0; i < 60; ++i) {
      int a = static_cast<int>(rng() % 8), b = static_cast<int>(rng() % 8);
      if (a == b) continue;
      os << "2024," << (i % 130) + 1 << ',' << teams[a] << ',' << teams[b] << ','
         << 40 + rng() % 60 << ',' << 40 + rng() % 60 << "\n";
    }
    for (int i = 0; i < 6; ++i) {
      int a = static_cast<int>(rng() % 8), b = static_cast<int>(rng() % 8);
      if (a == b) continue;
      os << "2024," << 140 + i << ',' << teams[a] << ',' << teams[b] << ',' << 40 + rng() % 60
         << ',' << 40 + rng() % 60 << "\n";
    }
    std::ofstream rs(g_scratch / "rankings.csv");
    rs << "season,team,rank\n";
    for (int s : {2023, 2024}) {
      std::vector<int> order{1, 2, 3, 4, 5, 6, 7, 8};
      std::shuffle(order.begin(), order.end(), rng);
      for (int t = 0; t < 8; ++t) rs << s << ',' << teams[t] << ',' << order[t] << "\n";
    }
    std::ofstream ps(g_scratch / "passes.csv");
    ps << "game,quarter,source_region,target_region\n";
    for (int i = 0; i < 140; ++i) {
      ps << "g,1," << 1 + rng() % 28 << ',' << 1 + rng() % 28 << "\n";
    }
    for (int i = 0; i < 90; ++i) {
      ps << "g," << 2 + rng() % 3 << ',' << 1 + rng() % 28 << ',' << 1 + rng() % 28 << "\n";
    }
  }

  struct Case {
    std::string name;
    std::string args;
    std::vector<std::string> outputs;
  };
  const std::string games = (g_scratch / "games.csv").string();
  const std::string rankings = (g_scratch / "rankings.csv").string();
  const std::string passes = (g_scratch / "passes.csv").string();
  std::vector<Case> cases{
      {"synth", "synth --nodes 30 --p-in 0.5 --p-out 0.08 --bias 3 --seed 17",
       {"synth_edges.csv", "synth_future.csv"}},
      {"network build", "network build --games " + games + " --season 2024", {"network.csv"}},
      {"lkl", "lkl --games " + games + " --season 2024 --seed 9", {"centrality.csv"}},
      {"quantiles",
       "quantiles --games " + games + " --rankings " + rankings +
           " --season 2024 --quantiles 3 --format svg --seed 9",
       {"quantiles.csv", "quantiles.json", "quantiles.svg"}},
      {"embed",
       "embed --passes " + passes + " --game g --quarters 1 --dims 5 --walks 3 "
       "--walk-length 8 --epochs 2 --seed 13",
       {"embedding.csv"}},
      {"experiment passes",
       "experiment passes --passes " + passes + " --game g --dims 5 --walks 3 --walk-length 8 "
       "--epochs 2 --window 3 --iterations 3 --seed 13 --threads 2",
       {"experiment.json"}},
      {"similarity-report",
       "similarity-report --passes " + passes + " --game g --focus 3 --dims 5 --walks 3 "
       "--walk-length 8 --epochs 2 --seed 13 --format svg",
       {"similarity.csv", "similarity.svg"}},
  };

  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const fs::path out1 = g_scratch / "run1";
    const fs::path out2 = g_scratch / "run2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    if (run_cli(c.args + " --out " + out1.string()) != 0 ||
        run_cli(c.args + " --out " + out2.string()) != 0) {
      pass = false;
      detail = c.name + " did not exit 0";
      continue;
    }
    for (const auto& file : c.outputs) {
      if (slurp(out1 / file) != slurp(out2 / file) || slurp(out1 / file).empty()) {
        pass = false;
        detail = c.name + "/" + file + " differed between identical runs";
      }
    }
  }
  report(10, pass, "CLI outputs are byte-identical across repeated seeded runs", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  g_scratch = fs::temp_directory_path() / "hoopsnet_acceptance";

  auto graphs = seeded_fixture_graphs();
  criterion_1_and_2(graphs);
  criterion_3(graphs);
  criterion_4(graphs);
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
