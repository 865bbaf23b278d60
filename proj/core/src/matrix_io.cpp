#include "matroidlab/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  return rows;
}

long long to_ll(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("bad integer token: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("bad integer token: " + s);
  }
}

}  // namespace

F2Matrix parse_f2_matrix(const std::string& text) {
  const auto rows = tokenize_lines(text);
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows[0].size();
  F2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] == "1")
        m.set(i, j, true);
      else if (rows[i][j] != "0")
        throw ParseError("F2 matrix entries must be 0 or 1, got: " + rows[i][j]);
    }
  }
  return m;
}

IntMatrix parse_int_matrix(const std::string& text) {
  const auto rows = tokenize_lines(text);
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = to_ll(rows[i][j]);
  }
  return m;
}

std::string to_text(const F2Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << (m.get(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

GraphEdges parse_graph_text(const std::string& text) {
  const auto rows = tokenize_lines(text);
  if (rows.empty() || rows[0].size() != 2)
    throw ParseError("graph file must start with a \"V E\" line");
  GraphEdges g;
  g.vertices = static_cast<std::size_t>(to_ll(rows[0][0]));
  const std::size_t e = static_cast<std::size_t>(to_ll(rows[0][1]));
  if (rows.size() != e + 1) throw ParseError("edge count does not match header");
  for (std::size_t i = 1; i <= e; ++i) {
    if (rows[i].size() != 2) throw ParseError("edge lines must be \"u v\"");
    const long long u = to_ll(rows[i][0]), v = to_ll(rows[i][1]);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.vertices ||
        static_cast<std::size_t>(v) >= g.vertices)
      throw ParseError("edge endpoint out of range");
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::vector<std::vector<int>> parse_facets(const std::string& text) {
  const auto rows = tokenize_lines(text);
  if (rows.empty()) throw ParseError("empty facet file");
  std::vector<std::vector<int>> facets;
  for (const auto& r : rows) {
    std::vector<int> f;
    for (const auto& t : r) {
      const long long v = to_ll(t);
      if (v < 0) throw ParseError("negative vertex index");
      f.push_back(static_cast<int>(v));
    }
    facets.push_back(std::move(f));
  }
  return facets;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace matroidlab
