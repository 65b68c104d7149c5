#include "domclq/error.hpp"
#include "domclq/harness.hpp"
#include "domclq/io.hpp"
#include "domclq/rng.hpp"
#include "text_util.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace domclq::harness {

namespace {

struct Cell {
  int n;
  double p;
  const char* role;
};

// Per-n densities of the published raw-result tables (training, validation,
// test), 50 graphs each.
constexpr std::array<Cell, 25> kHardCells{{
    {75, 0.3698, "train"},  {150, 0.3663, "train"}, {225, 0.368, "train"},  {250, 0.3669, "train"},
    {300, 0.3674, "train"}, {350, 0.3671, "train"}, {375, 0.3725, "train"}, {425, 0.3685, "train"},
    {475, 0.3663, "train"}, {525, 0.366, "train"},  {575, 0.368, "train"},  {625, 0.3669, "train"},
    {675, 0.3685, "train"}, {700, 0.3671, "train"}, {750, 0.368, "train"},  {100, 0.3685, "val"},
    {275, 0.3669, "val"},   {400, 0.3698, "val"},   {550, 0.3689, "val"},   {725, 0.3675, "val"},
    {200, 0.3689, "test"},  {325, 0.3685, "test"},  {450, 0.37, "test"},    {600, 0.3669, "test"},
    {800, 0.366, "test"},
}};

constexpr std::array<Cell, 25> kMinCells{{
    {75, 0.4045, "train"},  {150, 0.4047, "train"}, {225, 0.4095, "train"}, {250, 0.405, "train"},
    {300, 0.4033, "train"}, {350, 0.4016, "train"}, {375, 0.4095, "train"}, {425, 0.4085, "train"},
    {475, 0.4085, "train"}, {525, 0.4031, "train"}, {575, 0.4041, "train"}, {625, 0.4044, "train"},
    {650, 0.407, "train"},  {675, 0.4057, "train"}, {700, 0.4012, "train"}, {100, 0.4006, "val"},
    {275, 0.4023, "val"},   {400, 0.4018, "val"},   {550, 0.407, "val"},    {725, 0.4045, "val"},
    {200, 0.406, "test"},   {325, 0.4087, "test"},  {450, 0.4075, "test"},  {600, 0.4017, "test"},
    {800, 0.4062, "test"},
}};

constexpr int kPerCell = 50;
constexpr std::size_t kEasyCount = 1400;
constexpr std::size_t kEasyOrdinalOffset = kHardCells.size() * kPerCell;
constexpr int kGridPerCell = 32;
constexpr std::uint64_t kParameterStreamSalt = 0x5EED5EED5EED5EEDULL;

std::string make_id(std::string_view prefix, std::size_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", ordinal);
  return std::string(prefix) + "-" + buf;
}

void add_entry(DatasetManifest& m, std::string id, int n, double p, std::size_t ordinal) {
  ManifestEntry e;
  e.path = id + ".dimacs";
  e.id = std::move(id);
  e.n = n;
  e.p = p;
  e.seed = splitmix64_hash(m.base_seed ^ static_cast<std::uint64_t>(ordinal));
  m.entries.push_back(std::move(e));
}

void add_table_preset(DatasetManifest& m, std::string_view prefix, std::span<const Cell> cells) {
  std::size_t ordinal = 0;
  for (const auto& cell : cells) {
    for (int k = 0; k < kPerCell; ++k, ++ordinal) {
      add_entry(m, make_id(std::string(prefix) + "-" + cell.role, ordinal), cell.n, cell.p, ordinal);
    }
  }
}

void add_easy(DatasetManifest& m) {
  for (std::size_t k = 0; k < kEasyCount; ++k) {
    const std::size_t ordinal = kEasyOrdinalOffset + k;
    SplitMix64 params(splitmix64_hash(m.base_seed ^ static_cast<std::uint64_t>(ordinal)) ^ kParameterStreamSalt);
    const int n = 75 + static_cast<int>(params.below(726));
    double p = 0.0;
    do {
      const double u = params.uniform() * 0.95;
      p = u < 0.35 ? u : u + 0.05;
    } while (p <= 0.0 || p == 0.4);
    add_entry(m, make_id("dc-easy-train", ordinal), n, p, ordinal);
  }
}

void add_grid(DatasetManifest& m) {
  std::size_t ordinal = 0;
  for (int n = 25; n <= 400; n += 25) {
    for (int step = 0; step < 5; ++step) {
      const double p = 0.1 + 0.2 * step;
      const double rounded = std::round(p * 10.0) / 10.0;
      for (int k = 0; k < kGridPerCell; ++k, ++ordinal) add_entry(m, make_id("gridB", ordinal), n, rounded, ordinal);
    }
  }
}

}  // namespace

double dc_threshold() noexcept { return (3.0 - std::sqrt(5.0)) / 2.0; }

std::vector<std::string> preset_names() { return {"dc-hard", "dc-easy", "dc", "mindc", "gridB"}; }

DatasetManifest gen_dataset(std::string_view preset, std::uint64_t base_seed) {
  DatasetManifest m;
  m.preset = std::string(preset);
  m.base_seed = base_seed;
  if (preset == "dc-hard") {
    add_table_preset(m, "dc-hard", kHardCells);
  } else if (preset == "dc-easy") {
    add_easy(m);
  } else if (preset == "dc") {
    add_table_preset(m, "dc-hard", kHardCells);
    add_easy(m);
  } else if (preset == "mindc") {
    add_table_preset(m, "mindc", kMinCells);
  } else if (preset == "gridB") {
    add_grid(m);
  } else {
    throw Error("unknown preset '" + std::string(preset) + "'");
  }
  return m;
}

Graph instance_graph(const ManifestEntry& entry) { return gnp_generate(entry.n, entry.p, entry.seed); }

std::string write_manifest(const DatasetManifest& m) {
  std::string out = "# domclq manifest v1\n# preset=" + m.preset + " base_seed=" + std::to_string(m.base_seed) + "\n";
  out += "instance_id,n,p,seed,path\n";
  for (const auto& e : m.entries) {
    out += e.id + "," + std::to_string(e.n) + "," + detail::format_exact(e.p) + "," + std::to_string(e.seed) + "," +
           e.path + "\n";
  }
  return out;
}

DatasetManifest read_manifest(std::string_view text) {
  DatasetManifest m;
  bool header_seen = false;
  detail::for_each_line(text, [&](std::string_view line, std::size_t number) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) return;
    if (line.front() == '#') {
      for (auto token : detail::split_ws(line.substr(1))) {
        if (token.starts_with("preset=")) m.preset = std::string(token.substr(7));
        if (token.starts_with("base_seed=")) {
          const auto seed = detail::parse_number<std::uint64_t>(token.substr(10));
          if (!seed) throw ParseError("malformed base_seed", number);
          m.base_seed = *seed;
        }
      }
      return;
    }
    if (!header_seen) {
      if (line != "instance_id,n,p,seed,path") throw ParseError("unexpected manifest header", number);
      header_seen = true;
      return;
    }
    const auto fields = detail::split_char(line, ',');
    if (fields.size() != 5) throw ParseError("expected 5 manifest fields", number);
    ManifestEntry e;
    e.id = std::string(fields[0]);
    const auto n = detail::parse_number<int>(fields[1]);
    const auto p = detail::parse_number<double>(fields[2]);
    const auto seed = detail::parse_number<std::uint64_t>(fields[3]);
    if (!n || !p || !seed) throw ParseError("malformed manifest entry", number);
    e.n = *n;
    e.p = *p;
    e.seed = *seed;
    e.path = std::string(fields[4]);
    m.entries.push_back(std::move(e));
  });
  if (!header_seen) throw ParseError("missing manifest header", 0);
  return m;
}

DatasetManifest load_manifest(const std::filesystem::path& path) { return read_manifest(read_text_file(path)); }

void write_dataset(const DatasetManifest& manifest, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / "manifest.csv", write_manifest(manifest));
  for (const auto& e : manifest.entries) save_dimacs(dir / e.path, instance_graph(e));
}

}  // namespace domclq::harness
