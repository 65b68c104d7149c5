#include "domclq/error.hpp"
#include "domclq/harness.hpp"
#include "domclq/io.hpp"
#include "domclq/prob_model.hpp"
#include "text_util.hpp"

#include <cmath>
#include <map>

namespace domclq::harness {

std::vector<GridRow> grid_loss_report(const DatasetManifest& manifest, const ProbmapSource& source,
                                      const std::optional<std::filesystem::path>& instance_dir) {
  std::map<std::pair<int, double>, std::vector<double>> cells;
  for (const auto& entry : manifest.entries) {
    const Graph g = instance_dir ? load_dimacs(*instance_dir / entry.path) : instance_graph(entry);
    const ProbMap pm = std::visit(
        [&](const auto& src) -> ProbMap {
          using T = std::decay_t<decltype(src)>;
          if constexpr (std::is_same_v<T, UniformProbs>) {
            return ProbMap::uniform(g.order(), src.p);
          } else {
            return load_probmap(src.dir / (entry.id + ".probmap"));
          }
        },
        source);
    cells[{entry.n, entry.p}].push_back(loss_dc(g, pm));
  }

  std::vector<GridRow> rows;
  for (const auto& [key, losses] : cells) {
    GridRow row;
    row.n = key.first;
    row.p = key.second;
    row.count = losses.size();
    double sum = 0.0;
    for (double l : losses) sum += l;
    row.mean_loss = sum / static_cast<double>(losses.size());
    if (losses.size() > 1) {
      double sq = 0.0;
      for (double l : losses) sq += (l - row.mean_loss) * (l - row.mean_loss);
      row.sd_loss = std::sqrt(sq / static_cast<double>(losses.size() - 1));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_grid_csv(std::span<const GridRow> rows) {
  std::string out = "n,p,count,mean_loss,sd_loss\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + detail::format_fixed(r.p, 6) + "," + std::to_string(r.count) + "," +
           detail::format_fixed(r.mean_loss, 6) + "," + detail::format_fixed(r.sd_loss, 6) + "\n";
  }
  return out;
}

}  // namespace domclq::harness
