// domclq: command-line driver for dataset generation, solving, benchmarking
// and loss evaluation.

#include "domclq/cnf.hpp"
#include "domclq/error.hpp"
#include "domclq/greedy.hpp"
#include "domclq/harness.hpp"
#include "domclq/io.hpp"
#include "domclq/kernels.hpp"
#include "domclq/oracle.hpp"
#include "domclq/prob_model.hpp"
#include "domclq/rng.hpp"
#include "domclq/solver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>

namespace fs = std::filesystem;
using namespace domclq;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
  }
}

std::string fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

ProbMap probs_for(const Graph& g, const std::string& probs, std::optional<double> uniform) {
  if (!probs.empty()) {
    auto pm = load_probmap(probs);
    if (pm.size() != g.order()) throw Error("probability map size does not match the graph");
    return pm;
  }
  if (uniform) return ProbMap::uniform(g.order(), *uniform);
  throw Error("give --probs FILE or --uniform P");
}

std::vector<harness::SolverConfig> solver_configs(const std::string& list, bool minimize, bool backjump,
                                                  double temperature) {
  std::vector<harness::SolverConfig> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto h = parse_heuristic(name);
    if (!h) throw Error("unknown heuristic '" + name + "'");
    out.push_back({name, *h, minimize, backjump, temperature});
  }
  if (out.empty()) throw Error("no solvers given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dominating-clique search with learned branching heuristics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Base seed (datasets, random permutations)");
  app.add_option("--out", globals.out, "Output file, or directory for gen --preset (default: stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a dataset preset or a single G(n,p) graph");
  std::string preset;
  int gen_n = 0;
  double gen_p = -1.0;
  bool no_files = false;
  gen->add_option("--preset", preset, "dc-hard | dc-easy | dc | mindc | gridB");
  gen->add_option("--n", gen_n, "Vertex count (single graph)");
  gen->add_option("--p", gen_p, "Edge probability (single graph)");
  gen->add_flag("--no-files", no_files, "Write only the manifest");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one DIMACS instance");
  std::string graph_path, probs_path, heuristic = "mrv", backjump = "on";
  bool minimize = false;
  double temperature = 1.0;
  solve->add_option("graph", graph_path, "DIMACS graph")->required();
  solve->add_option("--heuristic", heuristic, "mrv | ent-fast | ent-acc");
  solve->add_option("--probs", probs_path, "probmap v1 file");
  solve->add_flag("--min", minimize, "Search for a minimum dominating clique");
  solve->add_option("--backjump", backjump, "on | off (with --min)");
  solve->add_option("--temperature", temperature, "Softmax temperature");

  // bench
  auto* bench = app.add_subcommand("bench", "Run solvers over a dataset manifest");
  std::string manifest_path, solvers = "mrv", probs_dir;
  bool timing = false, regenerate = false;
  unsigned threads = 1;
  bench->add_option("--manifest", manifest_path, "manifest.csv")->required();
  bench->add_option("--solvers", solvers, "Comma-separated heuristics");
  bench->add_option("--probs-dir", probs_dir, "Directory of <instance_id>.probmap files");
  bench->add_flag("--min", minimize, "Minimum dominating clique search");
  bench->add_option("--backjump", backjump, "on | off (with --min)");
  bench->add_option("--temperature", temperature, "Softmax temperature");
  bench->add_option("--threads", threads, "Worker threads");
  bench->add_flag("--timing", timing, "Record elapsed_ms (output no longer byte-stable)");
  bench->add_flag("--regenerate", regenerate, "Regenerate graphs instead of reading files");

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "Summarise benchmark records");
  std::string records_path, baseline = "mrv", split = "all";
  agg->add_option("--in", records_path, "Benchmark CSV")->required();
  agg->add_option("--baseline", baseline, "Baseline solver id");
  agg->add_option("--split", split, "sat | unsat | all");

  // grid
  auto* grid = app.add_subcommand("grid", "Mean dominating-clique loss per (n,p) cell");
  std::optional<double> uniform;
  std::vector<int> only_n;
  grid->add_option("--manifest", manifest_path, "manifest.csv (default: generate gridB)");
  grid->add_option("--uniform", uniform, "Uniform probability for every vertex");
  grid->add_option("--probs-dir", probs_dir, "Directory of <instance_id>.probmap files");
  grid->add_option("--n", only_n, "Restrict to these n values");

  // loss
  auto* loss = app.add_subcommand("loss", "Evaluate the loss functions on one graph");
  std::string loss_mode = "all";
  loss->add_option("graph", graph_path, "DIMACS graph")->required();
  loss->add_option("--probs", probs_path, "probmap v1 file");
  loss->add_option("--uniform", uniform, "Uniform probability for every vertex");
  loss->add_option("--mode", loss_mode, "all | maxclq | dc | mindc | mindc-perm");

  // decode-clique
  auto* decode = app.add_subcommand("decode-clique", "Greedy clique decoding from a probability map");
  std::string decode_mode = "both";
  decode->add_option("graph", graph_path, "DIMACS graph")->required();
  decode->add_option("--probs", probs_path, "probmap v1 file");
  decode->add_option("--uniform", uniform, "Uniform probability for every vertex");
  decode->add_option("--mode", decode_mode, "fast | slow | both");

  CLI11_PARSE(app, argc, argv);

  try {
    if (backjump != "on" && backjump != "off") throw Error("--backjump takes on or off");

    if (gen->parsed()) {
      if (!preset.empty()) {
        const auto manifest = harness::gen_dataset(preset, globals.seed);
        if (globals.out.empty()) throw Error("gen --preset needs --out DIR");
        if (no_files) {
          fs::create_directories(globals.out);
          write_text_file(fs::path(globals.out) / "manifest.csv", harness::write_manifest(manifest));
        } else {
          harness::write_dataset(manifest, globals.out);
        }
        std::cerr << manifest.entries.size() << " instances -> " << globals.out << "\n";
      } else {
        if (gen_n < 1 || gen_p < 0.0) throw Error("gen needs --preset, or --n and --p");
        emit(globals, write_dimacs(gnp_generate(gen_n, gen_p, globals.seed)));
      }
    } else if (solve->parsed()) {
      const Graph g = load_dimacs(graph_path);
      const auto h = parse_heuristic(heuristic);
      if (!h) throw Error("unknown heuristic '" + heuristic + "'");
      BranchSelector sel{*h, std::nullopt, temperature};
      if (!probs_path.empty()) sel.probmap = load_probmap(probs_path);
      const auto cnf = encode_cnf(g);
      const auto report = minimize ? solve_min_dc(cnf, g, sel, backjump == "on") : solve_dc(cnf, g, sel);
      std::ostringstream os;
      os << "outcome " << (report.outcome == Outcome::found ? "found" : "not-found") << "\n";
      os << "solution " << join(report.solution) << "\n";
      if (report.min_size) os << "min_size " << *report.min_size << "\n";
      os << "branches " << report.branches << "\n";
      os << "nodes " << report.nodes << "\n";
      os << "backjumps " << report.backjumps << "\n";
      os << "elapsed_ms " << fixed(std::chrono::duration<double, std::milli>(report.elapsed).count(), 3) << "\n";
      emit(globals, os.str());
    } else if (bench->parsed()) {
      const auto manifest = harness::load_manifest(manifest_path);
      harness::BenchOptions options;
      if (!probs_dir.empty()) options.probmap_dir = probs_dir;
      const fs::path dir = fs::path(manifest_path).parent_path();
      if (!regenerate && !manifest.entries.empty() && fs::exists(dir / manifest.entries.front().path)) {
        options.instance_dir = dir;
      }
      options.threads = threads;
      options.timing = timing;
      const auto configs = solver_configs(solvers, minimize, backjump == "on", temperature);
      emit(globals, harness::format_records_csv(harness::run_benchmark(manifest, configs, options)));
    } else if (agg->parsed()) {
      const auto which = harness::parse_split(split);
      if (!which) throw Error("unknown split '" + split + "'");
      const auto records = harness::parse_records_csv(read_text_file(records_path));
      emit(globals, harness::format_summary_csv(harness::aggregate(records, baseline, *which)));
    } else if (grid->parsed()) {
      auto manifest = manifest_path.empty() ? harness::gen_dataset("gridB", globals.seed)
                                            : harness::load_manifest(manifest_path);
      if (!only_n.empty()) {
        std::erase_if(manifest.entries, [&](const harness::ManifestEntry& e) {
          return std::find(only_n.begin(), only_n.end(), e.n) == only_n.end();
        });
      }
      harness::ProbmapSource source = harness::UniformProbs{uniform.value_or(0.5)};
      if (!probs_dir.empty()) source = harness::ProbmapDirectory{probs_dir};
      std::optional<fs::path> instance_dir;
      if (!manifest_path.empty() && !manifest.entries.empty()) {
        const fs::path dir = fs::path(manifest_path).parent_path();
        if (fs::exists(dir / manifest.entries.front().path)) instance_dir = dir;
      }
      emit(globals, harness::format_grid_csv(harness::grid_loss_report(manifest, source, instance_dir)));
    } else if (loss->parsed()) {
      const Graph g = load_dimacs(graph_path);
      const ProbMap pm = probs_for(g, probs_path, uniform);
      std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
      std::iota(order.begin(), order.end(), 1);
      SplitMix64 rng(globals.seed);
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

      std::ostringstream os;
      const auto bounds = clique_dominate_log_bounds(g, pm);
      const bool all = loss_mode == "all";
      if (all) os << "clique_log " << fixed(bounds.clique_log) << "\ndominate_log " << fixed(bounds.dominate_log) << "\n";
      if (all || loss_mode == "maxclq") os << "loss_max_clique " << fixed(loss_max_clique(g, pm)) << "\n";
      if (all || loss_mode == "dc") os << "loss_dc " << fixed(loss_dc(g, pm)) << "\n";
      if (all || loss_mode == "mindc") os << "loss_min_dc " << fixed(loss_min_dc(g, pm, PlainExpectation{})) << "\n";
      if (all || loss_mode == "mindc-perm") {
        os << "loss_min_dc_perm " << fixed(loss_min_dc(g, pm, PermutationExpectation{order})) << "\n";
      }
      if (os.str().empty()) throw Error("unknown loss mode '" + loss_mode + "'");
      emit(globals, os.str());
    } else if (decode->parsed()) {
      const Graph g = load_dimacs(graph_path);
      const ProbMap pm = probs_for(g, probs_path, uniform);
      std::ostringstream os;
      auto report = [&](const char* name, const DecodeResult& r) {
        os << name << " size " << r.clique.size() << " clique " << join(r.clique);
        if (g.order() <= oracle::kMaxCliqueLimit) os << " ratio " << fixed(approximation_ratio(r.clique, g));
        os << "\n";
      };
      if (decode_mode != "fast" && decode_mode != "slow" && decode_mode != "both") {
        throw Error("unknown decode mode '" + decode_mode + "'");
      }
      if (decode_mode != "slow") report("fast", decode_fast(g, pm));
      if (decode_mode != "fast") report("slow", decode_slow(g, pm));
      emit(globals, os.str());
    }
  } catch (const std::exception& ex) {
    std::cerr << "domclq: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
