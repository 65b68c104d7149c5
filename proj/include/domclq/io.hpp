#pragma once

// Text formats.
//
// DIMACS edge format:
//   c <comment>            (optional, anywhere)
//   p edge <n> <m>
//   e <u> <v>              (m lines, 1-based, u != v)
// write_dimacs emits the header and then edges sorted with u < v, one per line.
//
// probmap v1:
//   probmap v1 <n>
//   <index> <p>            (n lines, each index 1..n exactly once)
// write_probmap emits indices in order with p printed as %.15f.

#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace domclq {

Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

ProbMap read_probmap(std::string_view text);
std::string write_probmap(const ProbMap& pm);

Graph load_dimacs(const std::filesystem::path& path);
void save_dimacs(const std::filesystem::path& path, const Graph& g);
ProbMap load_probmap(const std::filesystem::path& path);
void save_probmap(const std::filesystem::path& path, const ProbMap& pm);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace domclq
