#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matroidlab/int_matrix.hpp"

namespace matroidlab {

/// Finite simplicial complex given by its facets (maximal faces). Faces are
/// all subsets of the facets; the full face list is derived on demand and
/// cached. Vertices are integers 0..vertex_count-1; faces are sorted vertex
/// lists, and each dimension's face list is in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Non-maximal and duplicate input faces are pruned.
  static SimplicialComplex from_facets(std::size_t vertices,
                                       std::vector<std::vector<int>> faces);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int dimension() const;  // -1 for the empty complex
  bool pure() const;

  // faces_by_dim()[d] lists the d-dimensional faces.
  const std::vector<std::vector<std::vector<int>>>& faces_by_dim() const;
  std::vector<std::size_t> f_vector() const;
  bool has_face(const std::vector<int>& sorted_verts) const;

 private:
  struct Cache;
  std::size_t vertices_ = 0;
  std::vector<std::vector<int>> facets_;
  std::shared_ptr<Cache> cache_;
};

/// Integer boundary matrices: boundary(k) maps k-chains to (k-1)-chains,
/// with simplices oriented by increasing vertex order and boundary signs
/// (-1)^i. The composite of consecutive boundaries is verified to be zero
/// at construction.
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& k);
  std::size_t top_dimension() const { return d_.size(); }
  const IntMatrix& boundary(std::size_t k) const { return d_.at(k - 1); }

 private:
  std::vector<IntMatrix> d_;
};

ChainComplex boundary_matrices(const SimplicialComplex& k);

struct HomologyReport {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1, per dim
  std::vector<std::size_t> f_vector;
  long long euler = 0;
};

// Integral homology via Smith normal form of the boundary matrices.
HomologyReport betti_numbers(const SimplicialComplex& k);

// Alternating sum of face counts.
long long euler_characteristic(const SimplicialComplex& k);

// Backtracking search for a shelling order of a pure complex, bounded by a
// node budget; nullopt when none is found within the budget. The step
// condition is the standard simplicial shortcut: the intersection of each
// new facet with the union of its predecessors must be a nonempty pure
// (d-1)-dimensional subcomplex of its boundary.
std::optional<std::vector<std::size_t>> find_shelling(const SimplicialComplex& k,
                                                      std::size_t state_budget = 1000000);

// Independent recursive verification of the shelling definition; `order`
// must be a permutation of the facet indices.
bool verify_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& order);

enum class Pi1Status { Trivial, Inconclusive, NontrivialH1 };

// Edge-path group of a connected complex: spanning tree, one generator per
// non-tree edge, one relator per triangle; bounded Tietze simplification.
// Sound: Trivial is only reported when the presentation empties.
Pi1Status pi1_trivial(const SimplicialComplex& k, std::size_t budget = 10000);

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

// Order complex of an arbitrary finite strict partial order on 0..n-1:
// vertices are the elements, facets are the maximal chains.
SimplicialComplex order_complex(std::size_t n,
                                const std::function<bool(int, int)>& strictly_less);

}  // namespace matroidlab
