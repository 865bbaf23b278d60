#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/binary_matroid.hpp"

namespace matroidlab {

/// Path in IR(r,F2): consecutive steps differ by one element (one added or
/// one removed); every step spans and is regular.
struct PosetPath {
  std::vector<std::uint32_t> steps;
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

// d(E1,E2) = |E1\E2| + |E2\E1|.
std::size_t binary_distance(std::uint32_t e1, std::uint32_t e2);

// The existence-lemma construction: extend X = E1 n E2 to bases of both
// sides, walk E1 down to its basis, exchange one element at a time, walk up
// to E2. Tie-breaking is greedy lexicographic. Throws NotInPoset when an
// endpoint is not a node, IntersectionDependent when X is dependent.
PosetPath construct_regular_geodesic(std::size_t r, std::uint32_t e1, std::uint32_t e2);

struct GeodesicSearch {
  bool exists = false;
  std::optional<PosetPath> path;
  // intermediates rejected during the shortest-path search, with reasons
  // "not_spanning" or "not_regular"
  std::vector<std::pair<std::uint32_t, std::string>> blocked;
};

// Exhaustive search over all monotone shortest paths (each symmetric-
// difference element toggled exactly once), testing every intermediate for
// poset membership.
GeodesicSearch geodesic_search(std::size_t r, std::uint32_t e1, std::uint32_t e2);

inline bool geodesic_exists(std::size_t r, std::uint32_t e1, std::uint32_t e2) {
  return geodesic_search(r, e1, e2).exists;
}

/// The rank-5 counterexample: deleting the first or second column of the
/// 9-column matrix gives regular rank-5 matroids E1, E2 at distance 2 with
/// no regular geodesic (the union has a Fano minor, the intersection has
/// rank 4). All guarantees are checked at construction.
struct Rank5Counterexample {
  BinaryMatroid e1;
  BinaryMatroid e2;
  std::uint32_t e1_node = 0;  // as subsets of F2^5\0
  std::uint32_t e2_node = 0;
  FanoWitness union_witness;
  std::size_t intersection_rank = 0;
};

Rank5Counterexample counterexample_rank5();

// The 5x9 matrix behind the counterexample.
F2Matrix rank5_counterexample_matrix();

}  // namespace matroidlab
