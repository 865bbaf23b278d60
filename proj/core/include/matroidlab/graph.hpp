#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matroidlab/oriented_matroid.hpp"

namespace matroidlab {

/// Finite multigraph in half-edge form: half-edges 2e and 2e+1 make up edge
/// e, the involution tau flips the low bit, and `incidence` maps each
/// half-edge to its vertex. Loops and parallel edges are allowed.
class Graph {
 public:
  Graph(std::size_t vertices, std::vector<std::pair<int, int>> edges);
  static Graph complete(std::size_t n);  // K(n), n >= 1

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return incidence_.size() / 2; }
  std::size_t half_edge_count() const { return incidence_.size(); }

  int half_edge_vertex(std::size_t h) const { return incidence_[h]; }
  std::pair<int, int> endpoints(std::size_t e) const {
    return {incidence_[2 * e], incidence_[2 * e + 1]};
  }
  bool is_loop(std::size_t e) const {
    return incidence_[2 * e] == incidence_[2 * e + 1];
  }

  bool connected() const;
  bool is_separating(std::size_t e) const;

  Graph delete_edge(std::size_t e) const;    // throws SeparatingEdge
  Graph contract_edge(std::size_t e) const;  // throws LoopEdge

 private:
  std::size_t vertices_ = 0;
  std::vector<int> incidence_;
};

// Signed vertex-edge incidence columns in Z^V (image lies in the sum-zero
// sublattice); rank |V|-1. Requires a connected graph.
FreelyOrientedMatroid graphic_matroid(const Graph& g);

// Dual of the graphic matroid; rank |E|-|V|+1.
FreelyOrientedMatroid cographic_matroid(const Graph& g);

struct AutomorphismCounts {
  unsigned long long graph_autos = 0;
  unsigned long long matroid_autos = 0;
};

// Graph automorphisms (half-edge maps commuting with tau and the incidence
// map) versus signed-set automorphisms of the graphic matroid. Brute force
// with circuit pruning; meant for |V| <= 6.
AutomorphismCounts automorphism_counts(const Graph& g);

}  // namespace matroidlab
