// Integration tests for the hoopsnet binary: exit codes, output files, and
// flag handling. Invoked as `cli_tests <path-to-hoopsnet>`.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++g_failures;
}

int run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " > " + (g_dir / "stdout.txt").string() +
                          " 2> " + (g_dir / "stderr.txt").string();
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

void write(const fs::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  os << content;
}

// Deterministic fixture generator. The experiment subcommands fit a logistic
// model, so the fixtures need enough candidate pairs and mixed labels to keep
// the data non-separable.
void write_fixtures() {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state](int bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
  };

  const int kTeams = 12;
  auto team = [](int i) { return "T" + std::to_string(10 + i); };
  std::ostringstream games;
  games << "season,day,team_a,team_b,score_a,score_b\n";
  int day = 1;
  for (int round = 0; round < 2; ++round) {
    for (int a = 0; a < kTeams; ++a) {
      for (int b = a + 1; b < kTeams; ++b) {
        if ((a + b + round) % 3 == 0) continue;  // leave some pairs unplayed
        games << "2024," << (day++ % 120) + 1 << ',' << team(a) << ',' << team(b) << ','
              << 50 + next(45) << ',' << 50 + next(45) << "\n";
      }
    }
  }
  // Tournament games after the regular-season day threshold.
  for (int i = 0; i < 8; ++i) {
    int a = next(8), b = next(8);
    if (a == b) b = (b + 1) % 8;
    games << "2024," << 140 + i << ',' << team(a) << ',' << team(b) << ',' << 50 + next(45)
          << ',' << 50 + next(45) << "\n";
  }
  // A second season so quantiles has a previous ranking to diff against.
  write(g_dir / "games.csv", games.str());

  std::ostringstream rankings;
  rankings << "season,team,rank\n";
  for (int season : {2023, 2024}) {
    std::vector<int> order(kTeams);
    for (int i = 0; i < kTeams; ++i) order[i] = i + 1;
    for (int i = kTeams - 1; i > 0; --i) std::swap(order[i], order[next(i + 1)]);
    for (int t = 0; t < kTeams; ++t) {
      rankings << season << ',' << team(t) << ',' << order[t] << "\n";
    }
  }
  write(g_dir / "rankings.csv", rankings.str());

  const int kPlayers = 10;
  auto player = [](int i) { return "P" + std::to_string(i); };
  std::ostringstream blocks;
  blocks << "season,blocker,blocked,count\n";
  for (int i = 0; i < kPlayers; ++i) {
    blocks << "2023," << player(i) << ',' << player((i + 1) % kPlayers) << ',' << 1 + next(4)
           << "\n";
    blocks << "2023," << player(i) << ',' << player((i + 3) % kPlayers) << ',' << 1 + next(3)
           << "\n";
  }
  for (int i = 0; i < 18; ++i) {
    int a = next(kPlayers), b = next(kPlayers);
    if (a == b) b = (b + 1) % kPlayers;
    blocks << "2024," << player(a) << ',' << player(b) << ',' << 1 + next(3) << "\n";
  }
  write(g_dir / "blocks.csv", blocks.str());

  std::ostringstream passes;
  passes << "game,quarter,source_region,target_region\n";
  for (int i = 0; i < 140; ++i) {
    passes << "fever,1," << 1 + next(28) << ',' << 1 + next(28) << "\n";
  }
  for (int i = 0; i < 90; ++i) {
    passes << "fever," << 2 + next(3) << ',' << 1 + next(28) << ',' << 1 + next(28) << "\n";
  }
  write(g_dir / "passes.csv", passes.str());
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <hoopsnet binary>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "hoopsnet_cli_tests";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);
  write_fixtures();

  // Happy path: lkl writes the centrality table.
  int rc = run("lkl --games " + q(g_dir / "games.csv") + " --season 2024 --out " +
               q(g_dir / "out_lkl"));
  check(rc == 0, "lkl exits 0 on valid input");
  auto table = slurp(g_dir / "out_lkl" / "centrality.csv");
  check(table.find("label,con,pagerank,con_norm,pr_norm,lkl") != std::string::npos,
        "centrality.csv has the documented header");
  check(table.find("config_hash=") != std::string::npos, "outputs embed the config hash");
  check(table.find("T10") != std::string::npos, "centrality.csv lists the teams");

  // Usage errors exit 1.
  rc = run("lkl --games " + q(g_dir / "games.csv") + " --season 2024");
  check(rc == 1, "missing --out exits 1");
  rc = run("lkl --season 2024 --out " + q(g_dir / "out_nothing"));
  check(rc == 1, "missing input kind exits 1");
  rc = run("frobnicate");
  check(rc == 1, "unknown subcommand exits 1");
  rc = run("lkl --games " + q(g_dir / "games.csv") + " --season 2024 --out x --phase bogus");
  check(rc == 1, "invalid --phase value exits 1");

  // Validation errors exit 2 and cite the offending row.
  write(g_dir / "dup_rank.csv", "season,team,rank\n2024,Iowa,1\n2024,Iowa,2\n");
  rc = run("quantiles --games " + q(g_dir / "games.csv") + " --rankings " +
           q(g_dir / "dup_rank.csv") + " --season 2024 --quantiles 2 --out " +
           q(g_dir / "out_dup"));
  check(rc == 2, "duplicate team ranking exits 2");
  check(slurp(g_dir / "stderr.txt").find("dup_rank.csv:3") != std::string::npos,
        "duplicate ranking error names the row");

  // network build dumps a re-ingestable edge list.
  rc = run("network build --games " + q(g_dir / "games.csv") + " --season 2024 --out " +
           q(g_dir / "out_net"));
  check(rc == 0, "network build exits 0");
  rc = run("lkl --edges " + q(g_dir / "out_net" / "network.csv") + " --out " +
           q(g_dir / "out_lkl2"));
  check(rc == 0, "dumped edge list re-ingests through --edges");
  auto net_csv = slurp(g_dir / "out_net" / "network.csv");
  check(net_csv.find("source_label,target_label,weight") != std::string::npos,
        "network.csv carries the edge-list header");

  // quantiles happy path with SVG.
  rc = run("quantiles --games " + q(g_dir / "games.csv") + " --rankings " +
           q(g_dir / "rankings.csv") + " --season 2024 --quantiles 2 --format svg --out " +
           q(g_dir / "out_q"));
  check(rc == 0, "quantiles exits 0");
  check(slurp(g_dir / "out_q" / "quantiles.csv").find("passes_hypothesis") != std::string::npos,
        "quantiles.csv written");
  check(slurp(g_dir / "out_q" / "quantiles.json").find("quantiles_passing") != std::string::npos,
        "quantiles.json written");
  check(slurp(g_dir / "out_q" / "quantiles.svg").find("<svg") != std::string::npos,
        "quantiles.svg written when --format svg");

  // embed writes an embedding table with config comments.
  rc = run("embed --passes " + q(g_dir / "passes.csv") + " --game fever --quarters 1 --dims 6 "
           "--walks 4 --walk-length 10 --epochs 2 --seed 3 --out " + q(g_dir / "out_emb"));
  check(rc == 0, "embed exits 0");
  auto emb_csv = slurp(g_dir / "out_emb" / "embedding.csv");
  check(emb_csv.find("# dims=6") != std::string::npos, "embedding.csv records dims");
  check(emb_csv.find("label,e0,e1,e2,e3,e4,e5") != std::string::npos,
        "embedding.csv header matches dims");

  // experiment passes end to end on the small fixture.
  rc = run("experiment passes --passes " + q(g_dir / "passes.csv") + " --game fever "
           "--dims 6 --walks 4 --walk-length 10 --epochs 2 --window 3 --iterations 3 "
           "--seed 5 --threads 2 --out " + q(g_dir / "out_exp"));
  check(rc == 0, "experiment passes exits 0");
  auto exp_json = slurp(g_dir / "out_exp" / "experiment.json");
  check(exp_json.find("\"region_pairs\": 756") != std::string::npos,
        "experiment.json reports 756 region pairs");
  check(exp_json.find("\"completed\": 3") != std::string::npos,
        "experiment.json reports the iteration count");

  // experiment blocks with the two-season fixture.
  rc = run("experiment blocks --blocks " + q(g_dir / "blocks.csv") + " --season 2023 "
           "--dims 3 --walks 4 --walk-length 8 --epochs 2 --window 2 --iterations 2 "
           "--seed 5 --out " + q(g_dir / "out_expb"));
  check(rc == 0, "experiment blocks exits 0");
  check(slurp(g_dir / "out_expb" / "experiment.json").find("player_pairs") != std::string::npos,
        "experiment.json uses the player_pairs field");

  // experiment matchups with the day-threshold tournament split.
  rc = run("experiment matchups --games " + q(g_dir / "games.csv") + " --season 2024 "
           "--dims 4 --walks 4 --walk-length 8 --epochs 2 --window 2 --iterations 2 "
           "--seed 5 --out " + q(g_dir / "out_expm"));
  check(rc == 0, "experiment matchups exits 0");
  check(slurp(g_dir / "out_expm" / "experiment.json").find("team_pairs") != std::string::npos,
        "experiment.json uses the team_pairs field");

  // similarity-report on the passing network.
  rc = run("similarity-report --passes " + q(g_dir / "passes.csv") + " --game fever "
           "--focus 3 --dims 6 --walks 4 --walk-length 10 --epochs 2 --seed 7 --format svg "
           "--out " + q(g_dir / "out_sim"));
  check(rc == 0, "similarity-report exits 0");
  auto sim_csv = slurp(g_dir / "out_sim" / "similarity.csv");
  check(sim_csv.find("label,cosine_similarity") != std::string::npos, "similarity.csv header");
  check(std::count(sim_csv.begin(), sim_csv.end(), '\n') == 2 + 27,
        "similarity.csv has 27 rows plus header and meta");
  check(slurp(g_dir / "out_sim" / "similarity.svg").find("<svg") != std::string::npos,
        "similarity.svg written when --format svg");

  // Focus label missing from the network is a data error.
  rc = run("similarity-report --passes " + q(g_dir / "passes.csv") + " --game fever "
           "--focus nosuch --dims 4 --out " + q(g_dir / "out_sim2"));
  check(rc == 2, "unknown focus label exits 2");

  // synth emits edges + future labels that feed back through --edges.
  rc = run("synth --nodes 24 --communities 2 --p-in 0.6 --p-out 0.1 --bias 4 --seed 11 --out " +
           q(g_dir / "out_synth"));
  check(rc == 0, "synth exits 0");
  rc = run("centrality --edges " + q(g_dir / "out_synth" / "synth_edges.csv") + " --out " +
           q(g_dir / "out_synth_c"));
  check(rc == 0, "synthetic edge list flows through the ingest path");

  // JSON config supplies defaults, flags override.
  write(g_dir / "config.json",
        std::string("{\"games\": \"") + (g_dir / "games.csv").string() +
            "\", \"season\": 2024, \"seed\": 21}");
  rc = run("--config " + q(g_dir / "config.json") + " lkl --out " + q(g_dir / "out_cfg"));
  check(rc == 0, "config file supplies required inputs");
  check(slurp(g_dir / "out_cfg" / "centrality.csv").find("seed=21") != std::string::npos,
        "config file seed lands in the meta comment");
  rc = run("--config " + q(g_dir / "config.json") + " lkl --seed 22 --out " +
           q(g_dir / "out_cfg2"));
  check(rc == 0, "flags override config values");
  check(slurp(g_dir / "out_cfg2" / "centrality.csv").find("seed=22") != std::string::npos,
        "flag seed wins over config seed");

  // --help exits 0 on every subcommand.
  for (const std::string sub :
       {"", "network", "network build", "centrality", "lkl", "quantiles", "embed", "experiment",
        "experiment matchups", "experiment blocks", "experiment passes", "similarity-report",
        "synth"}) {
    rc = run(sub.empty() ? std::string("--help") : sub + " --help");
    check(rc == 0, "--help exits 0 (" + (sub.empty() ? std::string("top level") : sub) + ")");
  }

  std::cout << (g_failures == 0 ? "ALL CLI TESTS PASSED\n" : "CLI TEST FAILURES\n");
  return g_failures == 0 ? 0 : 1;
}
