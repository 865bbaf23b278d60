#pragma once

#include <string>
#include <vector>

#include "matroidlab/f2_matrix.hpp"
#include "matroidlab/int_matrix.hpp"

namespace matroidlab {

// Matrix text format: one row per line, whitespace-separated entries;
// {0,1} over F2, signed integers over Z. Columns are ground-set elements
// in declaration order. Blank lines and lines starting with '#' are skipped.
F2Matrix parse_f2_matrix(const std::string& text);
IntMatrix parse_int_matrix(const std::string& text);

std::string to_text(const F2Matrix& m);
std::string to_text(const IntMatrix& m);

// Graph text format: first line "V E", then E lines "u v" (0-indexed).
struct GraphEdges {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
GraphEdges parse_graph_text(const std::string& text);

// Facet file: one facet per line as whitespace-separated vertex indices.
std::vector<std::vector<int>> parse_facets(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace matroidlab
