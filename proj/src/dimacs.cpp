#include "domclq/error.hpp"
#include "domclq/io.hpp"
#include "text_util.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace domclq {

Graph parse_dimacs(std::string_view text) {
  std::optional<int> n;
  std::size_t declared_edges = 0;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  detail::for_each_line(text, [&](std::string_view line, std::size_t number) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError("duplicate header", number);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError("malformed header", number);
      }
      const auto parsed_n = detail::parse_number<int>(tokens[2]);
      const auto parsed_m = detail::parse_number<std::size_t>(tokens[3]);
      if (!parsed_n || !parsed_m || *parsed_n < 0) throw ParseError("malformed header", number);
      n = *parsed_n;
      declared_edges = *parsed_m;
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError("edge before header", number);
      if (tokens.size() != 3) throw ParseError("malformed edge line", number);
      const auto u = detail::parse_number<int>(tokens[1]);
      const auto v = detail::parse_number<int>(tokens[2]);
      if (!u || !v) throw ParseError("malformed edge line", number);
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) throw ParseError("vertex out of range", number);
      if (*u == *v) throw ParseError("self-loop", number);
      const Edge e{std::min(*u, *v), std::max(*u, *v)};
      if (!seen.insert(e).second) throw ParseError("duplicate edge", number);
      edges.push_back(e);
      return;
    }
    throw ParseError("unrecognized line", number);
  });

  if (!n) throw ParseError("missing header", 0);
  if (edges.size() != declared_edges) {
    throw ParseError("edge count mismatch: header declares " + std::to_string(declared_edges) + ", found " +
                         std::to_string(edges.size()),
                     0);
  }
  return Graph::from_edges(*n, std::move(edges));
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for " + path.string());
}

Graph load_dimacs(const std::filesystem::path& path) {
  try {
    return parse_dimacs(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void save_dimacs(const std::filesystem::path& path, const Graph& g) { write_text_file(path, write_dimacs(g)); }

}  // namespace domclq
