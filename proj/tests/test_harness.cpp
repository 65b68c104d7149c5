#include "domclq/error.hpp"
#include "domclq/harness.hpp"
#include "domclq/io.hpp"
#include "domclq/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <set>

using namespace domclq;
using namespace domclq::harness;
namespace fs = std::filesystem;

namespace {

BenchRecord record(std::string id, std::string solver, std::uint64_t branches, std::string outcome = "unsat") {
  BenchRecord r;
  r.instance_id = std::move(id);
  r.n = 10;
  r.p = 0.5;
  r.solver = std::move(solver);
  r.outcome = std::move(outcome);
  r.branches = branches;
  return r;
}

DatasetManifest small_manifest(std::size_t count, std::uint64_t seed = 5) {
  auto m = gen_dataset("dc-hard", seed);
  m.entries.resize(count);
  for (auto& e : m.entries) e.n = 20 + static_cast<int>(e.seed % 15);
  return m;
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("preset sizes") {
  CHECK(gen_dataset("gridB", 1).entries.size() == 2560);
  CHECK(gen_dataset("dc-hard", 1).entries.size() == 1250);
  CHECK(gen_dataset("dc-easy", 1).entries.size() == 1400);
  CHECK(gen_dataset("dc", 1).entries.size() == 2650);
  CHECK(gen_dataset("mindc", 1).entries.size() == 1250);
  CHECK_THROWS_AS(gen_dataset("nope", 1), Error);
  CHECK(preset_names().size() == 5);
  CHECK(std::abs(dc_threshold() - 0.3819660112501051) < 1e-15);
}

TEST_CASE("preset contents") {
  for (const auto& e : gen_dataset("mindc", 3).entries) {
    CHECK(e.p > 0.4);
    CHECK(e.p < 0.41);
  }
  for (const auto& e : gen_dataset("dc-easy", 3).entries) {
    CHECK(e.n >= 75);
    CHECK(e.n <= 800);
    CHECK(((e.p > 0.0 && e.p < 0.35) || (e.p > 0.4 && e.p < 1.0)));
  }
  std::map<int, std::set<double>> hard;
  for (const auto& e : gen_dataset("dc-hard", 3).entries) hard[e.n].insert(e.p);
  CHECK(hard.size() == 25);
  CHECK(hard.begin()->first == 75);
  CHECK(hard.rbegin()->first == 800);
  CHECK(hard[75] == std::set<double>{0.3698});
  std::map<std::pair<int, double>, int> cells;
  for (const auto& e : gen_dataset("gridB", 3).entries) ++cells[{e.n, e.p}];
  CHECK(cells.size() == 80);
  for (const auto& [key, count] : cells) CHECK(count == 32);
}

TEST_CASE("dc preset is the hard set followed by the easy set") {
  const auto dc = gen_dataset("dc", 9);
  const auto hard = gen_dataset("dc-hard", 9);
  const auto easy = gen_dataset("dc-easy", 9);
  for (std::size_t i = 0; i < hard.entries.size(); ++i) CHECK(dc.entries[i].seed == hard.entries[i].seed);
  for (std::size_t i = 0; i < easy.entries.size(); ++i) {
    const auto& a = dc.entries[hard.entries.size() + i];
    CHECK(a.seed == easy.entries[i].seed);
    CHECK(a.n == easy.entries[i].n);
    CHECK(a.p == easy.entries[i].p);
  }
}

TEST_CASE("instance seeds derive from the base seed and ordinal") {
  const auto m = gen_dataset("gridB", 0xABCDEF);
  for (std::size_t k = 0; k < m.entries.size(); k += 97) CHECK(m.entries[k].seed == splitmix64_hash(0xABCDEFULL ^ k));
  std::set<std::string> ids;
  for (const auto& e : m.entries) ids.insert(e.id);
  CHECK(ids.size() == m.entries.size());
}

TEST_CASE("manifest round trip and regeneration") {
  const auto m = gen_dataset("mindc", 17);
  const std::string text = write_manifest(m);
  const auto back = read_manifest(text);
  CHECK(back.preset == "mindc");
  CHECK(back.base_seed == 17);
  REQUIRE(back.entries.size() == m.entries.size());
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    CHECK(back.entries[i].id == m.entries[i].id);
    CHECK(back.entries[i].p == m.entries[i].p);
    CHECK(back.entries[i].seed == m.entries[i].seed);
  }
  CHECK(write_manifest(back) == text);

  auto small = small_manifest(6);
  const auto a = scratch("domclq_regen_a");
  const auto b = scratch("domclq_regen_b");
  write_dataset(small, a);
  write_dataset(read_manifest(read_text_file(a / "manifest.csv")), b);
  for (const auto& e : small.entries) {
    CHECK(read_text_file(a / e.path) == read_text_file(b / e.path));
    CHECK(load_dimacs(a / e.path) == instance_graph(e));
  }
  CHECK(read_text_file(a / "manifest.csv") == read_text_file(b / "manifest.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("benchmark emits one record per instance and solver") {
  const auto m = small_manifest(50);
  const auto dir = scratch("domclq_bench_maps");
  for (const auto& e : m.entries) save_probmap(dir / (e.id + ".probmap"), ProbMap::uniform(e.n, 0.5));
  const std::vector<SolverConfig> solvers{{"mrv", Heuristic::mrv},
                                          {"ent-fast", Heuristic::entropy_fast},
                                          {"ent-acc", Heuristic::entropy_accurate}};
  BenchOptions options;
  options.probmap_dir = dir;
  const auto records = run_benchmark(m, solvers, options);
  REQUIRE(records.size() == 150);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].instance_id == m.entries[i / 3].id);
    CHECK(records[i].solver == solvers[i % 3].id);
    CHECK((records[i].outcome == "sat" || records[i].outcome == "unsat"));
    CHECK_FALSE(records[i].elapsed_ms.has_value());
  }
  options.threads = 3;
  CHECK(format_records_csv(run_benchmark(m, solvers, options)) == format_records_csv(records));
  fs::remove_all(dir);
}

TEST_CASE("mrv runs need no maps and a missing map gives an error record") {
  const auto m = small_manifest(4);
  const std::vector<SolverConfig> mrv_only{{"mrv", Heuristic::mrv}};
  for (const auto& r : run_benchmark(m, mrv_only)) CHECK(!r.outcome.starts_with("error"));

  const std::vector<SolverConfig> both{{"mrv", Heuristic::mrv}, {"ent-acc", Heuristic::entropy_accurate}};
  const auto dir = scratch("domclq_bench_partial");
  save_probmap(dir / (m.entries[0].id + ".probmap"), ProbMap::uniform(m.entries[0].n, 0.5));
  BenchOptions options;
  options.probmap_dir = dir;
  const auto records = run_benchmark(m, both, options);
  REQUIRE(records.size() == 8);
  CHECK(!records[1].outcome.starts_with("error"));
  for (std::size_t i = 3; i < records.size(); i += 2) CHECK(records[i].outcome == "error:missing probmap");
  const auto none = run_benchmark(m, both);
  CHECK(none[1].outcome == "error:missing probmap");
  fs::remove_all(dir);
}

TEST_CASE("benchmark csv format") {
  auto r = record("x-1", "mrv", 12, "sat");
  r.seed = 77;
  r.backjumps = 3;
  const std::vector<BenchRecord> records{r};
  const std::string csv = format_records_csv(records);
  CHECK(csv == "instance_id,n,p,seed,solver,outcome,branches,backjumps,elapsed_ms\n"
               "x-1,10,0.500000,77,mrv,sat,12,3,-\n");
  const auto back = parse_records_csv(csv);
  REQUIRE(back.size() == 1);
  CHECK(back[0].instance_id == "x-1");
  CHECK(back[0].branches == 12);
  CHECK(back[0].backjumps == 3);
  CHECK(format_records_csv(back) == csv);
}

TEST_CASE("aggregate: geometric ratio and win counts") {
  const std::vector<BenchRecord> records{record("i1", "B", 4), record("i1", "A", 2), record("i2", "B", 4),
                                         record("i2", "A", 8)};
  const auto s = aggregate(records, "B", Split::all);
  REQUIRE(s.solvers.size() == 2);
  const auto& a = s.solvers[1];
  CHECK(a.solver == "A");
  CHECK(std::abs(*a.geo_ratio - 1.0) <= 1e-12);
  CHECK(a.mean_branches == 5.0);
  CHECK_FALSE(s.solvers[0].geo_ratio.has_value());
  REQUIRE(s.pairs.size() == 1);
  const auto& pair = s.pairs[0];
  const std::size_t wins_a = pair.a == "A" ? pair.wins_a : pair.wins_b;
  const std::size_t wins_b = pair.a == "A" ? pair.wins_b : pair.wins_a;
  CHECK(wins_a == 1);
  CHECK(wins_b == 1);
  CHECK(pair.ties == 0);
}

TEST_CASE("aggregate: identical vectors tie everywhere") {
  std::vector<BenchRecord> records;
  for (int i = 0; i < 7; ++i) {
    records.push_back(record("i" + std::to_string(i), "mrv", static_cast<std::uint64_t>(3 + i)));
    records.push_back(record("i" + std::to_string(i), "ent", static_cast<std::uint64_t>(3 + i)));
  }
  const auto s = aggregate(records, "mrv", Split::all);
  CHECK(s.pairs[0].ties == 7);
  CHECK(s.pairs[0].wins_a + s.pairs[0].wins_b == 0);
  CHECK(std::abs(*s.solvers[1].geo_ratio - 1.0) <= 1e-12);
}

TEST_CASE("aggregate: geometric mean, splits and win totals") {
  SplitMix64 rng(10);
  std::vector<BenchRecord> records;
  const int count = 40;
  std::vector<double> logs;
  std::size_t sat = 0;
  for (int i = 0; i < count; ++i) {
    const std::string id = "i" + std::to_string(i);
    const std::string outcome = rng.below(2) == 0 ? "sat" : "unsat";
    sat += outcome == "sat";
    const auto base = 1 + rng.below(500);
    const auto other = 1 + rng.below(500);
    records.push_back(record(id, "mrv", base, outcome));
    records.push_back(record(id, "ent", other, outcome));
    records.push_back(record(id, "acc", 1 + rng.below(500), outcome));
    logs.push_back(std::log(static_cast<double>(other) / static_cast<double>(base)));
  }
  const auto all = aggregate(records, "mrv", Split::all);
  double mean_log = 0.0;
  for (double l : logs) mean_log += l / count;
  CHECK(std::abs(*all.solvers[1].geo_ratio - std::exp(mean_log)) <= 1e-12);
  CHECK(all.pairs.size() == 3);
  for (const auto& p : all.pairs) CHECK(p.wins_a + p.wins_b + p.ties == static_cast<std::size_t>(count));
  CHECK(aggregate(records, "mrv", Split::sat).solvers[0].instances == sat);
  CHECK(aggregate(records, "mrv", Split::unsat).solvers[0].instances == count - sat);
  CHECK_THROWS_AS(aggregate({}, "mrv", Split::all), Error);
  CHECK_THROWS_AS(aggregate(records, "zzz", Split::all), Error);
  const std::string csv = format_summary_csv(all);
  CHECK(csv.starts_with("# baseline=mrv split=all\nsolver,instances,mean_branches,sd_branches,geo_ratio_vs_baseline\n"));
  CHECK(csv.find("\nsolver_a,solver_b,wins_a,wins_b,ties\n") != std::string::npos);
}

TEST_CASE("aggregate skips error records") {
  const std::vector<BenchRecord> records{record("i1", "mrv", 4), record("i1", "ent", 2, "error:missing probmap"),
                                         record("i2", "mrv", 4), record("i2", "ent", 2)};
  const auto s = aggregate(records, "mrv", Split::all);
  CHECK(s.solvers[1].instances == 1);
}

TEST_CASE("loss grid rows") {
  auto m = gen_dataset("gridB", 1);
  std::erase_if(m.entries, [](const ManifestEntry& e) { return e.n != 100; });
  const auto rows = grid_loss_report(m, UniformProbs{0.5});
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i - 1].p < rows[i].p);
    CHECK(rows[i - 1].mean_loss > rows[i].mean_loss);
  }
  CHECK(rows.front().count == 32);

  auto one = m;
  std::erase_if(one.entries, [](const ManifestEntry& e) { return std::abs(e.p - 0.3) > 1e-9; });
  const auto single = grid_loss_report(one, UniformProbs{0.5});
  CHECK(single.size() == 1);
  const std::string csv = format_grid_csv(single);
  CHECK(csv.starts_with("n,p,count,mean_loss,sd_loss\n100,0.300000,32,"));

  auto mixed = gen_dataset("gridB", 1);
  std::erase_if(mixed.entries, [](const ManifestEntry& e) { return e.n > 75 || e.p > 0.35; });
  std::reverse(mixed.entries.begin(), mixed.entries.end());
  const auto k = grid_loss_report(mixed, UniformProbs{0.5});
  REQUIRE(k.size() == 6);
  for (std::size_t i = 1; i < k.size(); ++i) CHECK(std::pair(k[i - 1].n, k[i - 1].p) < std::pair(k[i].n, k[i].p));
}
