#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "matroidlab/simplicial_complex.hpp"

namespace matroidlab {

/// Invertible r x r matrix over F2 together with its permutation table on
/// vector encodings 0..2^r-1 (bit k of an encoding = coordinate k).
struct GLElement {
  std::size_t r = 0;
  std::array<std::uint8_t, 4> rows{};    // row i = mask of matrix row i
  std::array<std::uint8_t, 16> table{};  // action on encodings

  std::uint8_t apply(std::uint8_t v) const { return table[v]; }
  bool operator==(const GLElement& o) const { return r == o.r && table == o.table; }
  auto operator<=>(const GLElement& o) const { return table <=> o.table; }
};

GLElement gl_identity(std::size_t r);
GLElement gl_from_rows(std::size_t r, const std::array<std::uint8_t, 4>& rows);
GLElement gl_compose(const GLElement& a, const GLElement& b);  // a after b

// All invertible matrices, deterministically ordered; size prod(2^r - 2^i).
// Throws RankTooLarge for r < 1 or r > 4.
std::vector<GLElement> enumerate_group(std::size_t r);

struct ConjClass {
  GLElement rep;  // lexicographically smallest table in the class
  std::size_t size = 0;
  std::size_t element_order = 0;
  std::vector<int> charpoly;  // coefficients, degree r down to 0
};

// Conjugation orbits; canonical order: ascending element order, then class
// size, then characteristic polynomial coefficients. For r = 3 this puts
// the x^3+x+1 order-7 class before the x^3+x^2+1 one.
std::vector<ConjClass> conjugacy_classes(const std::vector<GLElement>& group);

// Number of fixed nonzero vectors per class.
std::vector<long long> action_character_on_points(const std::vector<ConjClass>& classes);

// If g fixes the face setwise, the parity sign of the induced vertex
// permutation; nullopt otherwise. Vertices are encodings minus one.
std::optional<int> face_fix_sign(const GLElement& g, const std::vector<int>& sorted_face);

// Equivariant Euler characteristic: for each class representative,
// sum over dimensions of (-1)^dim sum over fixed faces of the permutation
// sign. The action must map faces to faces for every group element
// (ActionNotSimplicial otherwise).
std::vector<long long> hopf_trace_character(const SimplicialComplex& k,
                                            const std::vector<GLElement>& group,
                                            const std::vector<ConjClass>& classes);

// Character of the top homology of a wedge-of-8-3-spheres complex:
// trivial character minus the Hopf trace. Requires betti (1,0,0,8)
// (BettiMismatch otherwise).
std::vector<long long> h3_character(const SimplicialComplex& k,
                                    const std::vector<GLElement>& group,
                                    const std::vector<ConjClass>& classes);

// |G| times the standard character inner product (exact integer).
long long character_inner_times_group(const std::vector<long long>& a,
                                      const std::vector<long long>& b,
                                      const std::vector<ConjClass>& classes);

/// Embedded reference data: the character table of SL(3,F2) = GL(3,F2).
/// Classes in canonical order 1,2,3,4,7a,7b; rows chi0..chi3 are integral;
/// chi4/chi5 involve z = gamma+gamma^2+gamma^4 and are kept symbolic.
struct SL3F2Table {
  static constexpr std::array<long long, 6> class_sizes{1, 21, 56, 42, 24, 24};
  static constexpr std::array<long long, 6> element_orders{1, 2, 3, 4, 7, 7};
  static constexpr std::array<long long, 6> chi0{1, 1, 1, 1, 1, 1};
  static constexpr std::array<long long, 6> chi1{6, 2, 0, 0, -1, -1};
  static constexpr std::array<long long, 6> chi2{7, -1, 1, -1, 0, 0};
  static constexpr std::array<long long, 6> chi3{8, 0, -1, 0, 1, 1};
};

}  // namespace matroidlab
