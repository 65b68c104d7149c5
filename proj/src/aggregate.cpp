#include "domclq/error.hpp"
#include "domclq/harness.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace domclq::harness {

std::optional<Split> parse_split(std::string_view name) noexcept {
  if (name == "sat") return Split::sat;
  if (name == "unsat") return Split::unsat;
  if (name == "all") return Split::all;
  return std::nullopt;
}

std::string_view split_name(Split split) noexcept {
  switch (split) {
    case Split::sat: return "sat";
    case Split::unsat: return "unsat";
    case Split::all: return "all";
  }
  return "?";
}

namespace {

bool is_error(const BenchRecord& r) { return r.outcome.starts_with("error"); }

bool in_split(const BenchRecord& baseline, Split split) {
  switch (split) {
    case Split::sat: return baseline.outcome == "sat";
    case Split::unsat: return baseline.outcome == "unsat";
    case Split::all: return true;
  }
  return false;
}

}  // namespace

Summary aggregate(std::span<const BenchRecord> records, std::string_view baseline, Split split) {
  if (records.empty()) throw Error("no benchmark records to aggregate");

  std::vector<std::string> solvers;
  std::vector<std::string> instances;
  std::map<std::string, std::map<std::string, const BenchRecord*>> table;  // instance -> solver -> record
  for (const auto& r : records) {
    if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end()) solvers.push_back(r.solver);
    if (!table.contains(r.instance_id)) instances.push_back(r.instance_id);
    auto& row = table[r.instance_id];
    if (!is_error(r)) row[r.solver] = &r;
  }
  if (std::find(solvers.begin(), solvers.end(), baseline) == solvers.end()) {
    throw Error("baseline solver '" + std::string(baseline) + "' has no records");
  }

  // Instances kept: the baseline solved them and its outcome matches the split.
  std::vector<const std::map<std::string, const BenchRecord*>*> rows;
  for (const auto& id : instances) {
    const auto& row = table.at(id);
    const auto base = row.find(std::string(baseline));
    if (base != row.end() && in_split(*base->second, split)) rows.push_back(&row);
  }

  auto lookup = [](const std::map<std::string, const BenchRecord*>& row, const std::string& solver) -> const BenchRecord* {
    const auto it = row.find(solver);
    return it == row.end() ? nullptr : it->second;
  };

  Summary summary;
  summary.baseline = std::string(baseline);
  summary.split = split;
  for (const auto& solver : solvers) {
    SolverSummary s;
    s.solver = solver;
    std::vector<double> branches;
    double log_sum = 0.0;
    std::size_t log_count = 0;
    for (const auto* row : rows) {
      const auto* r = lookup(*row, solver);
      if (r == nullptr) continue;
      branches.push_back(static_cast<double>(r->branches));
      const auto* base = lookup(*row, summary.baseline);
      // A zero count has no finite log ratio; such instances are left out.
      if (r->branches > 0 && base->branches > 0) {
        log_sum += std::log(static_cast<double>(r->branches) / static_cast<double>(base->branches));
        ++log_count;
      }
    }
    s.instances = branches.size();
    if (!branches.empty()) {
      double sum = 0.0;
      for (double b : branches) sum += b;
      s.mean_branches = sum / static_cast<double>(branches.size());
      if (branches.size() > 1) {
        double sq = 0.0;
        for (double b : branches) sq += (b - s.mean_branches) * (b - s.mean_branches);
        s.sd_branches = std::sqrt(sq / static_cast<double>(branches.size() - 1));
      }
    }
    if (solver != summary.baseline && log_count > 0) s.geo_ratio = std::exp(log_sum / static_cast<double>(log_count));
    summary.solvers.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < solvers.size(); ++i) {
    for (std::size_t j = i + 1; j < solvers.size(); ++j) {
      PairSummary pair{solvers[i], solvers[j]};
      for (const auto* row : rows) {
        const auto* a = lookup(*row, solvers[i]);
        const auto* b = lookup(*row, solvers[j]);
        if (a == nullptr || b == nullptr) continue;
        if (a->branches < b->branches) ++pair.wins_a;
        else if (b->branches < a->branches) ++pair.wins_b;
        else ++pair.ties;
      }
      summary.pairs.push_back(std::move(pair));
    }
  }
  return summary;
}

std::string format_summary_csv(const Summary& summary) {
  std::string out = "# baseline=" + summary.baseline + " split=" + std::string(split_name(summary.split)) + "\n";
  out += "solver,instances,mean_branches,sd_branches,geo_ratio_vs_baseline\n";
  for (const auto& s : summary.solvers) {
    out += s.solver + "," + std::to_string(s.instances) + "," + detail::format_fixed(s.mean_branches, 6) + "," +
           detail::format_fixed(s.sd_branches, 6) + "," + (s.geo_ratio ? detail::format_fixed(*s.geo_ratio, 6) : "-") +
           "\n";
  }
  out += "\nsolver_a,solver_b,wins_a,wins_b,ties\n";
  for (const auto& p : summary.pairs) {
    out += p.a + "," + p.b + "," + std::to_string(p.wins_a) + "," + std::to_string(p.wins_b) + "," +
           std::to_string(p.ties) + "\n";
  }
  return out;
}

}  // namespace domclq::harness
