#include "matroidlab/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <numeric>

#include "matroidlab/errors.hpp"

namespace matroidlab {

using BigRational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix s(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) s.at(i, j) = at(i, cols[j]);
  return s;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

class SnfWorker {
 public:
  SnfWorker(IntMatrix& a, IntMatrix* u) : a_(a), u_(u) {}

  SmithResult run() {
    diagonalize();
    // Enforce the divisibility chain d1 | d2 | ...: diag(a,b) is equivalent
    // to diag(gcd,lcm) via a unimodular 2x2 transformation. Each fix
    // strictly decreases the prefix products, so the loop terminates.
    for (;;) {
      std::size_t bad_i = 0, bad_j = 0;
      if (!find_divisibility_violation(&bad_i, &bad_j)) break;
      fix_pair(bad_i, bad_j);
    }
    SmithResult res;
    const std::size_t k = std::min(a_.rows(), a_.cols());
    for (std::size_t i = 0; i < k && a_.at(i, i) != 0; ++i)
      res.diagonal.push_back(a_.at(i, i));
    res.rank = res.diagonal.size();
    return res;
  }

 private:
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(i, j), a_.at(k, j));
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) std::swap(u_->at(i, j), u_->at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_.at(i, j), a_.at(i, k));
  }
  void row_sub(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_.at(src, j) != 0) a_.at(dst, j) -= q * a_.at(src, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j)
        if (u_->at(src, j) != 0) u_->at(dst, j) -= q * u_->at(src, j);
  }
  void col_sub(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_.at(i, src) != 0) a_.at(i, dst) -= q * a_.at(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(i, j) = -a_.at(i, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) u_->at(i, j) = -u_->at(i, j);
  }

  bool find_pivot(std::size_t t, std::size_t* pi, std::size_t* pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& v = a_.at(i, j);
        if (v == 0) continue;
        BigInt av = abs_big(v);
        if (!found || av < best) {
          found = true;
          best = av;
          *pi = i;
          *pj = j;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  void diagonalize() {
    const std::size_t m = a_.rows(), n = a_.cols();
    for (std::size_t t = 0; t < m && t < n; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, &pi, &pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool changed = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_.at(i, t) == 0) continue;
          row_sub(i, t, a_.at(i, t) / a_.at(t, t));
          if (a_.at(i, t) != 0) {
            swap_rows(t, i);
            changed = true;
          }
        }
        if (changed) continue;
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_.at(t, j) == 0) continue;
          col_sub(j, t, a_.at(t, j) / a_.at(t, t));
          if (a_.at(t, j) != 0) {
            swap_cols(t, j);
            changed = true;
          }
        }
        if (!changed) break;
      }
      if (a_.at(t, t) < 0) negate_row(t);
    }
  }

  bool find_divisibility_violation(std::size_t* bi, std::size_t* bj) const {
    const std::size_t k = std::min(a_.rows(), a_.cols());
    for (std::size_t i = 0; i + 1 < k && a_.at(i, i) != 0; ++i) {
      const std::size_t j = i + 1;
      if (j < k && a_.at(j, j) != 0 && a_.at(j, j) % a_.at(i, i) != 0) {
        *bi = i;
        *bj = j;
        return true;
      }
    }
    return false;
  }

  // Replace positions (i,i)=a, (j,j)=b of the now-diagonal matrix by
  // (gcd, lcm): rows <- [[s, t], [-b/g, a/g]], cols <- [[1, -tb/g], [1, sa/g]]
  // where g = s*a + t*b. Both factor matrices have determinant 1.
  void fix_pair(std::size_t i, std::size_t j) {
    const BigInt a = a_.at(i, i), b = a_.at(j, j);
    BigInt s, t;
    const BigInt g = xgcd(a, b, s, t);
    row_combine(i, j, s, t, -b / g, a / g);
    col_combine(i, j, BigInt(1), BigInt(1), -t * b / g, s * a / g);
  }

  // rows i,j <- (ci*row_i + cj*row_j, di*row_i + dj*row_j), applied to U too.
  void row_combine(std::size_t i, std::size_t j, const BigInt& ci, const BigInt& cj,
                   const BigInt& di, const BigInt& dj) {
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      const BigInt x = a_.at(i, c), y = a_.at(j, c);
      a_.at(i, c) = ci * x + cj * y;
      a_.at(j, c) = di * x + dj * y;
    }
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) {
        const BigInt x = u_->at(i, c), y = u_->at(j, c);
        u_->at(i, c) = ci * x + cj * y;
        u_->at(j, c) = di * x + dj * y;
      }
  }

  // cols i,j <- (ci*col_i + cj*col_j, di*col_i + dj*col_j).
  void col_combine(std::size_t i, std::size_t j, const BigInt& ci, const BigInt& cj,
                   const BigInt& di, const BigInt& dj) {
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      const BigInt x = a_.at(r, i), y = a_.at(r, j);
      a_.at(r, i) = ci * x + cj * y;
      a_.at(r, j) = di * x + dj * y;
    }
  }

  static BigInt xgcd(BigInt a, BigInt b, BigInt& s, BigInt& t) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      const BigInt q = a / b;
      BigInt r = a - q * b;
      a = b;
      b = r;
      BigInt ns = s0 - q * s1, nt = t0 - q * t1;
      s0 = s1;
      t0 = t1;
      s1 = ns;
      t1 = nt;
    }
    if (a < 0) {
      a = -a;
      s0 = -s0;
      t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
  }

  IntMatrix& a_;
  IntMatrix* u_;
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SnfWorker w(m, nullptr);
  return w.run();
}

SmithWithTransform smith_normal_form_with_row_transform(IntMatrix m) {
  IntMatrix u = IntMatrix::identity(m.rows());
  SnfWorker w(m, &u);
  SmithWithTransform out;
  out.snf = w.run();
  out.row_transform = std::move(u);
  return out;
}

BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a.at(i, k) == 0) ++i;
      if (i == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(i, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

std::size_t rank_int(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && a.at(piv, col) == 0) ++piv;
    if (piv == m) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a.at(i, col) == 0) continue;
      const BigInt f1 = a.at(r, col), f2 = a.at(i, col);
      BigInt g = 0;
      for (std::size_t j = col; j < n; ++j) {
        a.at(i, j) = a.at(i, j) * f1 - a.at(r, j) * f2;
        g = boost::multiprecision::gcd(g, a.at(i, j));
      }
      if (g > 1)
        for (std::size_t j = col; j < n; ++j) a.at(i, j) /= g;
    }
    ++r;
  }
  return r;
}

IntMatrix nullspace_int(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // RREF over Q.
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = BigRational(m.at(i, j));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const BigRational inv = a[r][col];
    for (std::size_t j = col; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const BigRational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  IntMatrix basis(cols - pivots.size(), cols);
  std::size_t row = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols);
    v[free] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -a[p][free];
    // Scale to a primitive integer vector with first nonzero entry positive.
    BigInt lcm = 1;
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
    std::vector<BigInt> w(cols);
    BigInt g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      w[j] = BigInt(boost::multiprecision::numerator(v[j])) *
             (lcm / BigInt(boost::multiprecision::denominator(v[j])));
      g = boost::multiprecision::gcd(g, w[j]);
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    for (std::size_t j = 0; j < cols; ++j) {
      if (w[j] == 0) continue;
      if (w[j] < 0)
        for (auto& x : w) x = -x;
      break;
    }
    for (std::size_t j = 0; j < cols; ++j) basis.at(row, j) = w[j];
    ++row;
  }
  return basis;
}

bool is_unimodular_basis(const std::vector<std::vector<BigInt>>& vectors) {
  const std::size_t r = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != r)
      throw DimensionMismatch("is_unimodular_basis: need exactly r vectors in Z^r");
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m.at(i, j) = vectors[j][i];
  const BigInt d = determinant(std::move(m));
  return d == 1 || d == -1;
}

}  // namespace matroidlab
