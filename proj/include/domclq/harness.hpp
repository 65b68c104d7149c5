#pragma once

// Benchmark harness: dataset presets, solver runs, summary statistics and
// the loss grid. All outputs are canonical CSV text so that identical inputs
// give identical bytes.

#include "domclq/graph.hpp"
#include "domclq/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace domclq::harness {

// ---------------------------------------------------------------- datasets

struct ManifestEntry {
  std::string id;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string path;  // relative to the manifest's directory
};

struct DatasetManifest {
  std::string preset;
  std::uint64_t base_seed = 0;
  std::vector<ManifestEntry> entries;
};

// Presets:
//   dc-hard  1250 graphs near the phase transition, 50 per n, per-n p values
//            taken from the published raw-result tables (p ~ 0.366..0.3725)
//   dc-easy  1400 graphs, n uniform in [75, 800], p uniform on (0, 0.35) ∪ (0.4, 1)
//   dc       dc-hard followed by dc-easy (2650)
//   mindc    1250 graphs, 50 per n, p in (0.4, 0.41)
//   gridB    n = 25..400 step 25, p = 0.1..0.9 step 0.2, 32 graphs per cell (2560)
// The k-th entry (0-based ordinal k) gets seed splitmix64_hash(base_seed ^ k).
// Throws domclq::Error for an unknown preset.
DatasetManifest gen_dataset(std::string_view preset, std::uint64_t base_seed);

std::vector<std::string> preset_names();

// Phase-transition density of dominating cliques in G(n, p): (3 - sqrt 5) / 2.
double dc_threshold() noexcept;

Graph instance_graph(const ManifestEntry& entry);

// Writes <dir>/manifest.csv and one DIMACS file per entry.
void write_dataset(const DatasetManifest& manifest, const std::filesystem::path& dir);

std::string write_manifest(const DatasetManifest& manifest);
DatasetManifest read_manifest(std::string_view text);
DatasetManifest load_manifest(const std::filesystem::path& path);

// ---------------------------------------------------------------- benchmark

struct SolverConfig {
  std::string id;
  Heuristic heuristic = Heuristic::mrv;
  bool minimize = false;
  bool backjump = true;
  double temperature = 1.0;
};

struct BenchRecord {
  std::string instance_id;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string solver;
  std::string outcome;  // "sat", "unsat" or "error:<reason>"
  std::uint64_t branches = 0;
  std::uint64_t backjumps = 0;
  std::optional<double> elapsed_ms;  // only when timing was requested
};

struct BenchOptions {
  // Probability maps are read from <probmap_dir>/<instance id>.probmap.
  std::optional<std::filesystem::path> probmap_dir;
  // When set, graphs are read from <instance_dir>/<entry path>; otherwise regenerated.
  std::optional<std::filesystem::path> instance_dir;
  unsigned threads = 1;
  bool timing = false;
};

// One record per (instance, solver), ordered by manifest position then by
// solver position. Per-instance failures (e.g. a missing probmap) become
// error records; the run continues.
std::vector<BenchRecord> run_benchmark(const DatasetManifest& manifest, std::span<const SolverConfig> solvers,
                                       const BenchOptions& options = {});

// Columns: instance_id,n,p,seed,solver,outcome,branches,backjumps,elapsed_ms.
// p has 6 decimals; elapsed_ms is "-" when not timed.
std::string format_records_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_records_csv(std::string_view text);

// ---------------------------------------------------------------- summary

enum class Split { sat, unsat, all };
std::optional<Split> parse_split(std::string_view name) noexcept;
std::string_view split_name(Split split) noexcept;

struct SolverSummary {
  std::string solver;
  std::size_t instances = 0;
  double mean_branches = 0.0;
  double sd_branches = 0.0;
  std::optional<double> geo_ratio;  // vs baseline; absent for the baseline itself
};

struct PairSummary {
  std::string a;
  std::string b;
  std::size_t wins_a = 0;  // strictly fewer branches than b
  std::size_t wins_b = 0;
  std::size_t ties = 0;
};

struct Summary {
  std::string baseline;
  Split split = Split::all;
  std::vector<SolverSummary> solvers;
  std::vector<PairSummary> pairs;
};

// Instances are selected by the baseline's outcome (sat/unsat/all); an
// instance enters a solver's statistics when both that solver and the
// baseline have a non-error record for it. Throws on empty input or when the
// baseline has no records.
Summary aggregate(std::span<const BenchRecord> records, std::string_view baseline, Split split);
std::string format_summary_csv(const Summary& summary);

// ---------------------------------------------------------------- loss grid

struct UniformProbs {
  double p = 0.5;
};
struct ProbmapDirectory {
  std::filesystem::path dir;
};
using ProbmapSource = std::variant<UniformProbs, ProbmapDirectory>;

struct GridRow {
  int n = 0;
  double p = 0.0;
  std::size_t count = 0;
  double mean_loss = 0.0;
  double sd_loss = 0.0;
};

// Mean and sample standard deviation of loss_dc per (n, p) cell, rows sorted
// by (n, p).
std::vector<GridRow> grid_loss_report(const DatasetManifest& manifest, const ProbmapSource& source,
                                      const std::optional<std::filesystem::path>& instance_dir = std::nullopt);
std::string format_grid_csv(std::span<const GridRow> rows);

}  // namespace domclq::harness
