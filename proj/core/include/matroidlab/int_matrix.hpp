#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace matroidlab {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries. Used for boundary
/// maps, circuit relation matrices and lattice computations; no floating
/// point anywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix submatrix_columns(const std::vector<std::size_t>& cols) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithResult {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, d1 | d2 | ..., all > 0
  std::size_t rank = 0;          // == diagonal.size()
};

// Smith normal form by unimodular row/column operations; pivoting prefers a
// minimal-absolute-value nonzero entry.
SmithResult smith_normal_form(IntMatrix m);

// Same, also returning a unimodular U with U*A*V diagonal. U acts on rows;
// for x in the column space of A, (U x) is supported on the first rank
// entries, which are the coordinates of x in a basis of the saturation
// lattice span_Q(A) cap Z^rows.
struct SmithWithTransform {
  SmithResult snf;
  IntMatrix row_transform;  // U, rows x rows
};
SmithWithTransform smith_normal_form_with_row_transform(IntMatrix m);

BigInt determinant(IntMatrix m);      // Bareiss fraction-free elimination
std::size_t rank_int(IntMatrix m);    // rank over Q

// Basis of the rational kernel, scaled to primitive integer vectors; one
// vector per row of the result.
IntMatrix nullspace_int(const IntMatrix& m);

// True iff the vectors form a basis of Z^r, i.e. det = +-1. Requires exactly
// r vectors of length r.
bool is_unimodular_basis(const std::vector<std::vector<BigInt>>& vectors);

}  // namespace matroidlab
