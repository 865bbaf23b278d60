#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matroidlab/int_matrix.hpp"

namespace matroidlab {

/// Subset of the doubled ground set E~ = {e_0,..,e_{n-1}} u {e_0-bar,..}:
/// `pos` holds the plain elements, `neg` the barred ones, as bitmasks over
/// the n element pairs.
struct SignedSubset {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;

  std::uint32_t support() const { return pos | neg; }
  SignedSubset negated() const { return {neg, pos}; }
  bool operator==(const SignedSubset&) const = default;
  auto operator<=>(const SignedSubset&) const = default;
};

struct IntegralH1 {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

/// A freely oriented matroid on n element pairs, stored either as a signed
/// integer representation (one column per plain element, rho(e-bar) =
/// -rho(e)) or as an abstract signed-circuit family. Immutable.
class FreelyOrientedMatroid {
 public:
  // Signed circuits derived as the minimal-support sign vectors of the
  // kernel of m.
  static FreelyOrientedMatroid from_signed_matrix(const IntMatrix& m);

  // Abstract family; the list must already contain both orientations of
  // every circuit. No representation is attached.
  static FreelyOrientedMatroid from_circuits(std::size_t pairs,
                                             std::vector<SignedSubset> circuits);

  std::size_t pair_count() const { return n_; }
  std::size_t rank() const { return rank_; }

  bool has_representation() const { return rep_.has_value(); }
  const IntMatrix& representation() const;

  // Both orientations of every circuit, sorted by (support size, support,
  // pos); empty for matroids with no dependencies.
  const std::vector<SignedSubset>& signed_circuits() const { return circuits_; }

  bool is_independent(std::uint32_t support_mask) const;

 private:
  FreelyOrientedMatroid() = default;

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::optional<IntMatrix> rep_;
  std::vector<SignedSubset> circuits_;
};

// Checks the four signed-circuit axioms on the stored family.
bool verify_signed_circuit_axioms(const FreelyOrientedMatroid& fom);

// H1 = Z^n / (circuit relations); computed by Smith normal form of the
// relation matrix (one representative row per circuit pair).
IntegralH1 h1_z(const FreelyOrientedMatroid& fom);

// Regular iff H1 is free of rank equal to the matroid rank.
bool is_regular_om(const FreelyOrientedMatroid& fom);

// True iff m represents fom (same signed circuits) and every basis spans
// the saturation lattice span_Q(m) cap Z^rows with determinant +-1.
bool is_unipotent_representation(const FreelyOrientedMatroid& fom, const IntMatrix& m);

// <A,B> = |A n B| - |A n B-bar|.
int scalar_product(SignedSubset a, SignedSubset b);

// Minimal-support sign vectors of the row space; requires a representation.
std::vector<SignedSubset> signed_cocircuits(const FreelyOrientedMatroid& fom);

// Standard-form dual ([-D^t|I] over Q, columns rescaled to primitive
// integer vectors); circuits of the result are the signed cocircuits.
FreelyOrientedMatroid dual(const FreelyOrientedMatroid& fom);

// Positive roots e_i - e_j (i<j) of A_n inside Z^{n+1}; columns in
// lexicographic (i,j) order. Defined for n <= 6.
IntMatrix root_system_a(std::size_t n);

// Positive roots of B2: (1,0),(0,1),(1,1),(1,2).
IntMatrix root_system_b2();

}  // namespace matroidlab
