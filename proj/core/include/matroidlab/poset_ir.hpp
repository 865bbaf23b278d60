#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/binary_matroid.hpp"
#include "matroidlab/simplicial_complex.hpp"

namespace matroidlab {

/// The poset IR(r,F2): subsets of F2^r\0 that span and are regular, ordered
/// by inclusion. Nonzero vectors are numbered 1..2^r-1 in lexicographic
/// order of their coordinate tuples (first coordinate most significant);
/// a node stores vector v at bit v-1.
struct IRPoset {
  std::size_t r = 0;
  std::vector<std::uint32_t> nodes;  // ascending mask order
  bool full_set_is_node = false;
};

// Exhaustive enumeration over all subsets; regularity by Tutte minor search
// for r <= 3. Rank 4 (2^15 subsets) is gated behind `allow_rank4` and uses
// the faster TU-signing test with minor-search spot checks on every 100th
// subset mask. Throws RankTooLarge for r < 1, r > 4, or r == 4 without the
// flag. Enumeration fans out over worker threads (MATROID_LAB_THREADS caps
// the count); the result order is canonical regardless of scheduling.
IRPoset enumerate_ir_f2(std::size_t r, bool allow_rank4 = false);

// Membership test usable at any rank (spans + Tutte minor search).
bool ir_f2_member(std::size_t r, std::uint32_t node);

BinaryMatroid matroid_from_node(std::size_t r, std::uint32_t node);

// Order complex of the poset; covers are single-element additions.
SimplicialComplex order_complex(const IRPoset& p);

// The complement complex P for r = 3: vertices are the seven points of
// F2^3\0, faces are the subsets of size <= 4 other than the seven
// 4-circuits (complements of the lines). f-vector (7,21,35,28).
SimplicialComplex complement_complex_r3();

// Hasse diagram in DOT format.
std::string hasse_dot(const IRPoset& p);

/// A node of IR(2,Z): either four elements {+-a,+-b} with det(a,b) = +-1 or
/// six elements {+-a,+-b,+-c} with (up to signs) a+b+c = 0 and pairwise
/// determinants +-1. Stored as negation-orbit representatives (first
/// nonzero coordinate positive) in ascending lexicographic order.
struct IR2ZVec {
  long long x = 0, y = 0;
  bool operator==(const IR2ZVec&) const = default;
  auto operator<=>(const IR2ZVec&) const = default;
};

struct IR2ZNode {
  enum class Kind { BasisPair, Triangle };
  Kind kind = Kind::BasisPair;
  std::array<IR2ZVec, 3> vecs{};  // vecs[2] unused for basis pairs

  static IR2ZNode basis_pair(IR2ZVec a, IR2ZVec b);
  static IR2ZNode triangle(IR2ZVec a, IR2ZVec b, IR2ZVec c);

  bool operator==(const IR2ZNode&) const = default;
  auto operator<=>(const IR2ZNode&) const = default;
};

IR2ZNode ir2z_standard_basis();  // {+-(1,0), +-(0,1)}

// Basis pair -> the two triangles adding +-(a+b) or +-(a-b); triangle ->
// its three basis pairs.
std::vector<IR2ZNode> ir2z_neighbors(const IR2ZNode& node);

struct IR2ZBall {
  std::vector<IR2ZNode> nodes;
  std::vector<int> depth;
  std::vector<std::pair<int, int>> edges;  // indices into nodes, a < b

  bool acyclic() const { return edges.size() + 1 == nodes.size(); }
};

// Breadth-first ball with canonical deduplication; edges include every
// neighbor relation between ball members. depth <= 12.
IR2ZBall ir2z_ball(const IR2ZNode& center, int depth);

// Length of the longest side of a triangle node (the Morse function of the
// contractibility proof). Throws NotATriangle on basis pairs.
double ir2z_morse_value(const IR2ZNode& node);

// True iff no swap of the longest side strictly decreases the Morse value;
// exactly the two unit right triangles have this property.
bool ir2z_is_morse_minimum(const IR2ZNode& node);

// Reduce each vector mod 2; the result is a node of IR(2,F2) in the bitmask
// encoding used by IRPoset.
std::uint32_t ir2z_reduce_mod2(const IR2ZNode& node);

std::string ball_dot(const IR2ZBall& ball);

}  // namespace matroidlab
