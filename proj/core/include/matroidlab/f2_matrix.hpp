#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace matroidlab {

/// Dense bit-matrix over GF(2). Rows are packed into 64-bit words.
/// Row operations preserve the row space; all elimination routines pick
/// pivots left-to-right, top-to-bottom, so results are deterministic.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  static F2Matrix identity(std::size_t n);
  // Columns given as bitmasks (bit i = row i). Requires rows <= 32.
  static F2Matrix from_column_masks(std::size_t rows,
                                    const std::vector<std::uint32_t>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool v);

  std::uint32_t column_mask(std::size_t j) const;  // requires rows <= 32

  F2Matrix transposed() const;
  void xor_rows(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t i, std::size_t k);
  bool row_zero(std::size_t i) const;

  bool operator==(const F2Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;  // words per row
  std::vector<std::uint64_t> bits_;
};

// Dimension of the column space (equivalently the row space).
std::size_t rank_f2(const F2Matrix& m);

// Reduced row echelon form; pivot column indices are appended to *pivots
// when given.
F2Matrix rref_f2(const F2Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of the right kernel {x : m x = 0}, one vector per row of the result.
// Row count is cols(m) - rank_f2(m).
F2Matrix nullspace_f2(const F2Matrix& m);

}  // namespace matroidlab
