#include "domclq/error.hpp"
#include "domclq/harness.hpp"
#include "domclq/io.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace domclq::harness {

namespace {

// Reasons end up inside a CSV field.
std::string error_outcome(std::string reason) {
  std::replace(reason.begin(), reason.end(), ',', ';');
  std::replace(reason.begin(), reason.end(), '\n', ' ');
  return "error:" + reason;
}

BenchRecord base_record(const ManifestEntry& e, const SolverConfig& cfg) {
  BenchRecord r;
  r.instance_id = e.id;
  r.n = e.n;
  r.p = e.p;
  r.seed = e.seed;
  r.solver = cfg.id;
  return r;
}

std::vector<BenchRecord> run_instance(const ManifestEntry& entry, std::span<const SolverConfig> solvers,
                                      const BenchOptions& options) {
  std::vector<BenchRecord> out;
  std::optional<Graph> graph;
  std::string load_error;
  try {
    graph = options.instance_dir ? load_dimacs(*options.instance_dir / entry.path) : instance_graph(entry);
  } catch (const std::exception& ex) {
    load_error = ex.what();
  }
  const CnfInstance cnf = graph ? encode_cnf(*graph) : CnfInstance{};

  for (const auto& cfg : solvers) {
    BenchRecord r = base_record(entry, cfg);
    if (!graph) {
      r.outcome = error_outcome(load_error);
      out.push_back(std::move(r));
      continue;
    }
    try {
      BranchSelector sel{cfg.heuristic, std::nullopt, cfg.temperature};
      if (cfg.heuristic != Heuristic::mrv) {
        if (!options.probmap_dir) throw Error("missing probmap");
        const auto path = *options.probmap_dir / (entry.id + ".probmap");
        if (!std::filesystem::exists(path)) throw Error("missing probmap");
        sel.probmap = load_probmap(path);
      }
      const SolveReport report =
          cfg.minimize ? solve_min_dc(cnf, *graph, sel, cfg.backjump) : solve_dc(cnf, *graph, sel);
      r.outcome = report.outcome == Outcome::found ? "sat" : "unsat";
      r.branches = report.branches;
      r.backjumps = report.backjumps;
      if (options.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(report.elapsed).count();
    } catch (const std::exception& ex) {
      r.outcome = error_outcome(ex.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const DatasetManifest& manifest, std::span<const SolverConfig> solvers,
                                       const BenchOptions& options) {
  std::vector<std::vector<BenchRecord>> per_instance(manifest.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.entries.size(); i = next++) {
      per_instance[i] = run_instance(manifest.entries[i], solvers, options);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(manifest.entries.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<BenchRecord> records;
  for (auto& block : per_instance) {
    for (auto& r : block) records.push_back(std::move(r));
  }
  return records;
}

std::string format_records_csv(std::span<const BenchRecord> records) {
  std::string out = "instance_id,n,p,seed,solver,outcome,branches,backjumps,elapsed_ms\n";
  for (const auto& r : records) {
    out += r.instance_id + "," + std::to_string(r.n) + "," + detail::format_fixed(r.p, 6) + "," +
           std::to_string(r.seed) + "," + r.solver + "," + r.outcome + "," + std::to_string(r.branches) + "," +
           std::to_string(r.backjumps) + "," + (r.elapsed_ms ? detail::format_fixed(*r.elapsed_ms, 3) : "-") + "\n";
  }
  return out;
}

std::vector<BenchRecord> parse_records_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header_seen = false;
  detail::for_each_line(text, [&](std::string_view line, std::size_t number) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) return;
    if (!header_seen) {
      if (line != "instance_id,n,p,seed,solver,outcome,branches,backjumps,elapsed_ms") {
        throw ParseError("unexpected results header", number);
      }
      header_seen = true;
      return;
    }
    const auto f = detail::split_char(line, ',');
    if (f.size() != 9) throw ParseError("expected 9 result fields", number);
    BenchRecord r;
    r.instance_id = std::string(f[0]);
    const auto n = detail::parse_number<int>(f[1]);
    const auto p = detail::parse_number<double>(f[2]);
    const auto seed = detail::parse_number<std::uint64_t>(f[3]);
    const auto branches = detail::parse_number<std::uint64_t>(f[6]);
    const auto backjumps = detail::parse_number<std::uint64_t>(f[7]);
    if (!n || !p || !seed || !branches || !backjumps) throw ParseError("malformed result record", number);
    r.n = *n;
    r.p = *p;
    r.seed = *seed;
    r.solver = std::string(f[4]);
    r.outcome = std::string(f[5]);
    r.branches = *branches;
    r.backjumps = *backjumps;
    if (f[8] != "-") {
      const auto ms = detail::parse_number<double>(f[8]);
      if (!ms) throw ParseError("malformed elapsed_ms", number);
      r.elapsed_ms = *ms;
    }
    records.push_back(std::move(r));
  });
  if (!header_seen) throw ParseError("missing results header", 0);
  return records;
}

}  // namespace domclq::harness
