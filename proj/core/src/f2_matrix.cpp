#include "matroidlab/f2_matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace matroidlab {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_column_masks(std::size_t rows,
                                     const std::vector<std::uint32_t>& cols) {
  assert(rows <= 32);
  F2Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (cols[j] >> i & 1u) m.set(i, j, true);
  return m;
}

bool F2Matrix::get(std::size_t i, std::size_t j) const {
  assert(i < rows_ && j < cols_);
  return bits_[i * words_ + j / 64] >> (j % 64) & 1u;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
  assert(i < rows_ && j < cols_);
  std::uint64_t& w = bits_[i * words_ + j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

std::uint32_t F2Matrix::column_mask(std::size_t j) const {
  assert(rows_ <= 32);
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    if (get(i, j)) mask |= 1u << i;
  return mask;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

void F2Matrix::xor_rows(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < words_; ++w)
    bits_[dst * words_ + w] ^= bits_[src * words_ + w];
}

void F2Matrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t w = 0; w < words_; ++w)
    std::swap(bits_[i * words_ + w], bits_[k * words_ + w]);
}

bool F2Matrix::row_zero(std::size_t i) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (bits_[i * words_ + w]) return false;
  return true;
}

F2Matrix rref_f2(const F2Matrix& m, std::vector<std::size_t>* pivots) {
  F2Matrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && !a.get(r, col)) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(pivot_row, r);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != pivot_row && a.get(i, col)) a.xor_rows(i, pivot_row);
    if (pivots) pivots->push_back(col);
    ++pivot_row;
  }
  return a;
}

std::size_t rank_f2(const F2Matrix& m) {
  std::vector<std::size_t> pivots;
  rref_f2(m, &pivots);
  return pivots.size();
}

F2Matrix nullspace_f2(const F2Matrix& m) {
  std::vector<std::size_t> pivots;
  const F2Matrix r = rref_f2(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  F2Matrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(row, free, true);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      if (r.get(p, free)) basis.set(row, pivots[p], true);
    ++row;
  }
  return basis;
}

}  // namespace matroidlab
