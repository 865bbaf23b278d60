#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matroidlab/f2_matrix.hpp"

namespace matroidlab {

/// Bitmask over column indices of a BinaryMatroid (element i = bit i).
using GroundSubset = std::uint32_t;

enum class FanoType { F7, F7Dual, Neither };

/// Certificate for a Fano minor: contract the independent set, keep exactly
/// the seven listed elements (delete everything else).
struct FanoWitness {
  GroundSubset contracted = 0;
  GroundSubset kept = 0;
  FanoType type = FanoType::Neither;
};

/// A represented binary matroid: an ordered list of columns in F2^r.
/// Multisets are allowed; a zero column is a loop, equal columns are
/// parallel elements. Values are immutable after construction; the circuit
/// and cocircuit caches are computed once under a lock, so instances may be
/// shared across threads.
class BinaryMatroid {
 public:
  // Columns are bitmasks with bit k = coordinate k; ambient_rank <= 31 and
  // at most 31 columns.
  BinaryMatroid(std::size_t ambient_rank, std::vector<std::uint32_t> columns);

  // Ground set = columns of m, ambient space reduced to the column span.
  static BinaryMatroid from_matrix(const F2Matrix& m);

  std::size_t size() const { return cols_.size(); }
  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return rank_; }
  std::uint32_t column(std::size_t i) const { return cols_[i]; }
  const std::vector<std::uint32_t>& columns() const { return cols_; }
  GroundSubset full_set() const;

  std::size_t subset_rank(GroundSubset s) const;
  bool is_independent(GroundSubset s) const;

  // All ground elements whose column lies in the span of s's columns.
  GroundSubset closure(GroundSubset s) const;

  // Inclusion-minimal dependent sets, sorted by (size, mask).
  const std::vector<GroundSubset>& circuits() const;

  // Minimal-support nonzero elements of the row space of the representation,
  // sorted by (size, mask). Computed directly from the row space; equal to
  // circuits(dual()) as a family.
  const std::vector<GroundSubset>& cocircuits() const;

  // Standard-form dual: rank n - r, same element order.
  BinaryMatroid dual() const;

  // Representation-level minor: contract, then delete; the listed sets must
  // be disjoint (OverlappingSets otherwise). Element order is preserved.
  BinaryMatroid minor(GroundSubset deleted, GroundSubset contracted) const;

 private:
  struct Cache;

  std::size_t ambient_rank_ = 0;
  std::vector<std::uint32_t> cols_;
  std::size_t rank_ = 0;
  std::shared_ptr<Cache> cache_;
};

// F7 iff the matroid is seven distinct nonzero points of rank 3 (the full
// projective plane, by binary rigidity); F7Dual iff the dual tests F7.
FanoType fano_type(const BinaryMatroid& m);

// Exhaustive minor search with pruning: contracts independent sets only,
// keeps exactly 7 elements, short-circuits on the first hit.
std::optional<FanoWitness> find_fano_minor(const BinaryMatroid& m);

// Tutte's criterion: no minor isomorphic to F7 or F7*.
bool is_regular(const BinaryMatroid& m);

// Independent oracle: the standard form [I|D] admits a +-1 signing of D
// making every square submatrix determinant 0 or +-1. The signing is built
// by the spanning-tree method on the bipartite support graph and then
// verified by enumerating all square submatrices.
bool is_regular_tu(const BinaryMatroid& m);

struct H1F2 {
  std::size_t dimension = 0;
  // Universal cocycle iota: one coordinate mask per element, in a basis of
  // H1(M;F2) = F2^rank.
  std::vector<std::uint32_t> cocycle;
};
H1F2 h1_f2(const BinaryMatroid& m);

}  // namespace matroidlab
