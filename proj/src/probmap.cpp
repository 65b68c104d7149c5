#include "domclq/error.hpp"
#include "domclq/io.hpp"
#include "domclq/probmap.hpp"
#include "text_util.hpp"

#include <cmath>

namespace domclq {

ProbMap::ProbMap(std::vector<double> p) : p_(std::move(p)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0 && p_[i] <= 1.0)) {
      throw Error("probability for vertex " + std::to_string(i + 1) + " outside [0,1]");
    }
  }
}

ProbMap ProbMap::uniform(int n, double p) { return ProbMap(std::vector<double>(static_cast<std::size_t>(n), p)); }

ProbMap read_probmap(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<double> values;
  std::vector<bool> present;
  std::size_t entries = 0;

  detail::for_each_line(text, [&](std::string_view line, std::size_t number) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) return;
    if (!n) {
      if (tokens.size() != 3 || tokens[0] != "probmap" || tokens[1] != "v1") {
        throw ParseError("malformed probmap header", number);
      }
      const auto count = detail::parse_number<std::size_t>(tokens[2]);
      if (!count) throw ParseError("malformed probmap header", number);
      n = *count;
      values.assign(*n, 0.0);
      present.assign(*n, false);
      return;
    }
    if (tokens.size() != 2) throw ParseError("malformed probmap entry", number);
    const auto index = detail::parse_number<std::size_t>(tokens[0]);
    const auto p = detail::parse_number<double>(tokens[1]);
    if (!index || !p) throw ParseError("malformed probmap entry", number);
    if (*index < 1 || *index > *n) throw ParseError("index out of range", number);
    if (!(*p >= 0.0 && *p <= 1.0)) throw ParseError("probability outside [0,1]", number);
    if (present[*index - 1]) throw ParseError("duplicate index", number);
    present[*index - 1] = true;
    values[*index - 1] = *p;
    ++entries;
  });

  if (!n) throw ParseError("missing probmap header", 0);
  if (entries != *n) {
    throw ParseError("entry count mismatch: header declares " + std::to_string(*n) + ", found " +
                         std::to_string(entries),
                     0);
  }
  return ProbMap(std::move(values));
}

std::string write_probmap(const ProbMap& pm) {
  std::string out = "probmap v1 " + std::to_string(pm.size()) + "\n";
  for (Vertex v = 1; v <= pm.size(); ++v) {
    out += std::to_string(v);
    out += ' ';
    out += detail::format_fixed(pm[v], 15);
    out += '\n';
  }
  return out;
}

ProbMap load_probmap(const std::filesystem::path& path) {
  try {
    return read_probmap(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void save_probmap(const std::filesystem::path& path, const ProbMap& pm) { write_text_file(path, write_probmap(pm)); }

}  // namespace domclq
