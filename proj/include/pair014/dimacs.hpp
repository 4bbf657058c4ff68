#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pair014/graph.hpp"

namespace pair014 {

/// Parses DIMACS `.col` text (`c`, `p edge|col n m`, `e u v` lines, 1-based).
/// Duplicate edges collapse. A declared edge count that disagrees with the
/// distinct edges read is reported through `warnings`, not as an error.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

Graph read_dimacs_file(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

/// `p edge n m` followed by one `e u v` line per edge (u < v, 1-based).
std::string write_dimacs(const Graph& g);

}  // namespace pair014
