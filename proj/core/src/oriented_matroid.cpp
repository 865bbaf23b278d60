#include "matroidlab/oriented_matroid.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "matroidlab/errors.hpp"

namespace matroidlab {

using BigRational = boost::multiprecision::cpp_rational;

namespace {

void sort_circuits(std::vector<SignedSubset>& cs) {
  std::sort(cs.begin(), cs.end(), [](const SignedSubset& a, const SignedSubset& b) {
    const int pa = std::popcount(a.support()), pb = std::popcount(b.support());
    if (pa != pb) return pa < pb;
    if (a.support() != b.support()) return a.support() < b.support();
    return a.pos < b.pos;
  });
}

// Iterates k-subsets of {0..n-1} in lexicographic order.
struct Combinations {
  std::size_t n, k;
  std::vector<std::size_t> idx;
  bool live = false;

  Combinations(std::size_t n_, std::size_t k_) : n(n_), k(k_) {
    if (k <= n) {
      idx.resize(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      live = true;
    }
  }
  bool next() {
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return live = false;
    ++idx[i];
    for (std::size_t x = i + 1; x < k; ++x) idx[x] = idx[x - 1] + 1;
    return true;
  }
};

}  // namespace

FreelyOrientedMatroid FreelyOrientedMatroid::from_signed_matrix(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n > 24)
    throw DimensionMismatch("signed-circuit derivation capped at 24 element pairs");
  FreelyOrientedMatroid fom;
  fom.n_ = n;
  fom.rep_ = m;
  fom.rank_ = rank_int(m);

  std::vector<std::uint32_t> supports;
  std::vector<SignedSubset> circuits;
  for (std::size_t size = 1; size <= fom.rank_ + 1 && size <= n; ++size) {
    for (Combinations c(n, size); c.live; c.next()) {
      std::uint32_t mask = 0;
      for (std::size_t i : c.idx) mask |= 1u << i;
      bool pruned = false;
      for (std::uint32_t s : supports)
        if ((mask & s) == s) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      const IntMatrix sub = m.submatrix_columns(c.idx);
      if (rank_int(sub) == size) continue;
      // minimal dependent: the kernel is one-dimensional with full support
      const IntMatrix ker = nullspace_int(sub);
      SignedSubset circ;
      for (std::size_t i = 0; i < size; ++i) {
        if (ker.at(0, i) > 0)
          circ.pos |= 1u << c.idx[i];
        else
          circ.neg |= 1u << c.idx[i];
      }
      supports.push_back(mask);
      circuits.push_back(circ);
      circuits.push_back(circ.negated());
    }
  }
  sort_circuits(circuits);
  fom.circuits_ = std::move(circuits);
  return fom;
}

FreelyOrientedMatroid FreelyOrientedMatroid::from_circuits(
    std::size_t pairs, std::vector<SignedSubset> circuits) {
  FreelyOrientedMatroid fom;
  fom.n_ = pairs;
  sort_circuits(circuits);
  fom.circuits_ = std::move(circuits);
  // Greedy basis; valid because the family defines a matroid when the
  // axioms hold.
  std::uint32_t basis = 0;
  for (std::size_t i = 0; i < pairs; ++i)
    if (fom.is_independent(basis | (1u << i))) basis |= 1u << i;
  fom.rank_ = std::popcount(basis);
  return fom;
}

const IntMatrix& FreelyOrientedMatroid::representation() const {
  if (!rep_) throw NoRepresentation("matroid has no attached representation");
  return *rep_;
}

bool FreelyOrientedMatroid::is_independent(std::uint32_t support_mask) const {
  for (const SignedSubset& c : circuits_)
    if ((support_mask & c.support()) == c.support()) return false;
  return true;
}

bool verify_signed_circuit_axioms(const FreelyOrientedMatroid& fom) {
  const auto& cs = fom.signed_circuits();
  for (const SignedSubset& c : cs) {
    if (c.support() == 0) return false;               // circuits are nonempty
    if (c.pos & c.neg) return false;                  // axiom 1
    if (std::find(cs.begin(), cs.end(), c.negated()) == cs.end())
      return false;                                   // axiom 2
  }
  for (const SignedSubset& c1 : cs)
    for (const SignedSubset& c2 : cs) {
      if ((c1.support() & ~c2.support()) == 0) {      // axiom 3
        if (!(c1 == c2) && !(c1 == c2.negated())) return false;
      }
      if (c1 == c2) continue;
      // axiom 4: eliminate any shared same-sign element
      const std::uint32_t shared_pos = c1.pos & c2.pos;
      const std::uint32_t shared_neg = c1.neg & c2.neg;
      for (std::uint32_t rem = shared_pos | shared_neg; rem; rem &= rem - 1) {
        const std::uint32_t bit = rem & -rem;
        const bool barred = (shared_neg & bit) != 0;
        SignedSubset allowed;
        if (!barred) {
          allowed.pos = (c1.pos & ~bit) | c2.neg;
          allowed.neg = c1.neg | (c2.pos & ~bit);
        } else {
          allowed.pos = c1.pos | (c2.neg & ~bit);
          allowed.neg = (c1.neg & ~bit) | c2.pos;
        }
        bool found = false;
        for (const SignedSubset& c3 : cs)
          if ((c3.pos & ~allowed.pos) == 0 && (c3.neg & ~allowed.neg) == 0) {
            found = true;
            break;
          }
        if (!found) return false;
      }
    }
  return true;
}

namespace {

// One relation row per circuit pair: +1 on plain elements, -1 on barred.
IntMatrix relation_matrix(const FreelyOrientedMatroid& fom) {
  std::vector<SignedSubset> reps;
  for (const SignedSubset& c : fom.signed_circuits()) {
    const SignedSubset r = std::min(c, c.negated());
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  IntMatrix rel(reps.size(), fom.pair_count());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::uint32_t rem = reps[i].pos; rem; rem &= rem - 1)
      rel.at(i, std::countr_zero(rem)) = 1;
    for (std::uint32_t rem = reps[i].neg; rem; rem &= rem - 1)
      rel.at(i, std::countr_zero(rem)) = -1;
  }
  return rel;
}

}  // namespace

IntegralH1 h1_z(const FreelyOrientedMatroid& fom) {
  const SmithResult s = smith_normal_form(relation_matrix(fom));
  IntegralH1 h;
  h.free_rank = fom.pair_count() - s.rank;
  for (const BigInt& d : s.diagonal)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

bool is_regular_om(const FreelyOrientedMatroid& fom) {
  const IntegralH1 h = h1_z(fom);
  return h.free_rank == fom.rank() && h.torsion.empty();
}

bool is_unipotent_representation(const FreelyOrientedMatroid& fom, const IntMatrix& m) {
  if (m.cols() != fom.pair_count())
    throw DimensionMismatch("representation has the wrong number of columns");
  const FreelyOrientedMatroid derived = FreelyOrientedMatroid::from_signed_matrix(m);
  if (derived.signed_circuits() != fom.signed_circuits()) return false;

  // Every basis must have determinant +-1 in coordinates of the saturation
  // lattice span_Q(m) cap Z^rows.
  const SmithWithTransform st = smith_normal_form_with_row_transform(m);
  const std::size_t r = st.snf.rank;
  if (r != fom.rank()) return false;
  IntMatrix coords(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < m.rows(); ++k)
        acc += st.row_transform.at(i, k) * m.at(k, j);
      coords.at(i, j) = acc;
    }
  for (Combinations c(fom.pair_count(), r); c.live; c.next()) {
    std::uint32_t mask = 0;
    for (std::size_t i : c.idx) mask |= 1u << i;
    if (!fom.is_independent(mask)) continue;
    const BigInt d = determinant(coords.submatrix_columns(c.idx));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

int scalar_product(SignedSubset a, SignedSubset b) {
  const int meet = std::popcount(a.pos & b.pos) + std::popcount(a.neg & b.neg);
  const int anti = std::popcount(a.pos & b.neg) + std::popcount(a.neg & b.pos);
  return meet - anti;
}

namespace {

// Coordinates of the representation in a basis of its saturation lattice;
// full row rank, same kernel and row-space sign patterns.
IntMatrix reduced_representation(const IntMatrix& m, std::size_t* rank_out) {
  const SmithWithTransform st = smith_normal_form_with_row_transform(m);
  const std::size_t r = st.snf.rank;
  IntMatrix red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < m.rows(); ++k)
        acc += st.row_transform.at(i, k) * m.at(k, j);
      red.at(i, j) = acc;
    }
  if (rank_out) *rank_out = r;
  return red;
}

SignedSubset normalize_orientation(SignedSubset c) {
  return std::min(c, c.negated());
}

}  // namespace

std::vector<SignedSubset> signed_cocircuits(const FreelyOrientedMatroid& fom) {
  if (!fom.has_representation())
    throw NoRepresentation("signed cocircuits require a representation");
  const std::size_t n = fom.pair_count();
  std::size_t r = 0;
  const IntMatrix red = reduced_representation(fom.representation(), &r);
  if (r == 0) return {};

  std::map<std::uint32_t, SignedSubset> by_support;
  for (Combinations c(n, r - 1); c.live; c.next()) {
    std::uint32_t mask = 0;
    for (std::size_t i : c.idx) mask |= 1u << i;
    if (!fom.is_independent(mask)) continue;
    // functional vanishing on the hyperplane spanned by these columns
    IntMatrix tr(r - 1, r);
    for (std::size_t i = 0; i < c.idx.size(); ++i)
      for (std::size_t k = 0; k < r; ++k) tr.at(i, k) = red.at(k, c.idx[i]);
    const IntMatrix f = nullspace_int(tr);  // one primitive row
    SignedSubset cc;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = 0;
      for (std::size_t k = 0; k < r; ++k) v += f.at(0, k) * red.at(k, j);
      if (v > 0)
        cc.pos |= 1u << j;
      else if (v < 0)
        cc.neg |= 1u << j;
    }
    by_support.emplace(cc.support(), normalize_orientation(cc));
  }
  std::vector<SignedSubset> out;
  for (const auto& [support, cc] : by_support) {
    out.push_back(cc);
    out.push_back(cc.negated());
  }
  sort_circuits(out);
  return out;
}

FreelyOrientedMatroid dual(const FreelyOrientedMatroid& fom) {
  if (!fom.has_representation())
    throw NoRepresentation("dual construction requires a representation");
  const std::size_t n = fom.pair_count();
  std::size_t r = 0;
  const IntMatrix red = reduced_representation(fom.representation(), &r);
  const std::size_t t = n - r;

  // lex-first basis
  std::vector<std::size_t> basis, nonbasis;
  std::uint32_t bmask = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (basis.size() < r && fom.is_independent(bmask | (1u << j))) {
      bmask |= 1u << j;
      basis.push_back(j);
    } else {
      nonbasis.push_back(j);
    }
  }

  // rational coordinates of every column in the basis
  std::vector<std::vector<BigRational>> d(r, std::vector<BigRational>(t));
  {
    // invert the basis block by Gaussian elimination on [B | nonbasis cols]
    std::vector<std::vector<BigRational>> a(r, std::vector<BigRational>(r + t));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t p = 0; p < r; ++p) a[i][p] = BigRational(red.at(i, basis[p]));
      for (std::size_t q = 0; q < t; ++q)
        a[i][r + q] = BigRational(red.at(i, nonbasis[q]));
    }
    for (std::size_t col = 0; col < r; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[col], a[piv]);
      const BigRational inv = a[col][col];
      for (auto& x : a[col]) x /= inv;
      for (std::size_t i = 0; i < r; ++i) {
        if (i == col || a[i][col] == 0) continue;
        const BigRational f = a[i][col];
        for (std::size_t j2 = col; j2 < r + t; ++j2) a[i][j2] -= f * a[col][j2];
      }
    }
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < t; ++q) d[p][q] = a[p][r + q];
  }

  // dual columns: basis element p -> -(row p of D), nonbasis q -> e_q;
  // each column rescaled by a positive rational to a primitive vector
  IntMatrix dual_rep(t, n);
  for (std::size_t p = 0; p < r; ++p) {
    BigInt lcm = 1;
    for (std::size_t q = 0; q < t; ++q)
      lcm = boost::multiprecision::lcm(
          lcm, BigInt(boost::multiprecision::denominator(d[p][q])));
    BigInt g = 0;
    std::vector<BigInt> col(t);
    for (std::size_t q = 0; q < t; ++q) {
      col[q] = -BigInt(boost::multiprecision::numerator(d[p][q])) *
               (lcm / BigInt(boost::multiprecision::denominator(d[p][q])));
      g = boost::multiprecision::gcd(g, col[q]);
    }
    for (std::size_t q = 0; q < t; ++q)
      dual_rep.at(q, basis[p]) = g > 1 ? BigInt(col[q] / g) : col[q];
  }
  for (std::size_t q = 0; q < t; ++q) dual_rep.at(q, nonbasis[q]) = 1;

  return FreelyOrientedMatroid::from_signed_matrix(dual_rep);
}

IntMatrix root_system_a(std::size_t n) {
  if (n < 1 || n > 6) throw DimensionMismatch("A_n roots provided for 1 <= n <= 6");
  IntMatrix m(n + 1, n * (n + 1) / 2);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n + 1; ++i)
    for (std::size_t j = i + 1; j < n + 1; ++j) {
      m.at(i, col) = 1;
      m.at(j, col) = -1;
      ++col;
    }
  return m;
}

IntMatrix root_system_b2() {
  IntMatrix m(2, 4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(0, 2) = 1;
  m.at(1, 2) = 1;
  m.at(0, 3) = 1;
  m.at(1, 3) = 2;
  return m;
}

}  // namespace matroidlab
