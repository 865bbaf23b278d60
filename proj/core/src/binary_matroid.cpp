#include "matroidlab/binary_matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>

#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

struct XorBasis {
  std::array<std::uint32_t, 32> b{};
  std::size_t rank = 0;

  // Returns true if v was independent of the current span.
  bool insert(std::uint32_t v) {
    while (v) {
      const int k = std::countr_zero(v);
      if (!b[k]) {
        b[k] = v;
        ++rank;
        return true;
      }
      v ^= b[k];
    }
    return false;
  }
  bool contains(std::uint32_t v) const {
    while (v) {
      const int k = std::countr_zero(v);
      if (!b[k]) return false;
      v ^= b[k];
    }
    return true;
  }
};

std::size_t mask_rank(const std::vector<std::uint32_t>& cols, GroundSubset s) {
  XorBasis basis;
  for (std::uint32_t rem = s; rem; rem &= rem - 1)
    basis.insert(cols[std::countr_zero(rem)]);
  return basis.rank;
}

struct ReducedForm {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;    // lex-first basis element indices
  std::vector<std::uint32_t> coords;  // per element, coordinates in the span basis
};

ReducedForm reduce_columns(std::size_t ambient, const std::vector<std::uint32_t>& cols) {
  const F2Matrix f = F2Matrix::from_column_masks(ambient, cols);
  ReducedForm out;
  const F2Matrix r = rref_f2(f, &out.pivots);
  out.rank = out.pivots.size();
  out.coords.resize(cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t p = 0; p < out.rank; ++p)
      if (r.get(p, j)) out.coords[j] |= 1u << p;
  return out;
}

void sort_canonical(std::vector<GroundSubset>& sets) {
  std::sort(sets.begin(), sets.end(), [](GroundSubset a, GroundSubset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

}  // namespace

struct BinaryMatroid::Cache {
  std::once_flag circuits_flag, cocircuits_flag;
  std::vector<GroundSubset> circuits, cocircuits;
};

BinaryMatroid::BinaryMatroid(std::size_t ambient_rank, std::vector<std::uint32_t> columns)
    : ambient_rank_(ambient_rank),
      cols_(std::move(columns)),
      cache_(std::make_shared<Cache>()) {
  if (ambient_rank_ > 31 || cols_.size() > 31)
    throw DimensionMismatch("BinaryMatroid is limited to 31 rows and 31 columns");
  for (std::uint32_t c : cols_)
    if (ambient_rank_ < 32 && (c >> ambient_rank_) != 0)
      throw DimensionMismatch("column has bits outside the ambient space");
  rank_ = mask_rank(cols_, full_set());
}

BinaryMatroid BinaryMatroid::from_matrix(const F2Matrix& m) {
  if (m.cols() > 31) throw DimensionMismatch("at most 31 ground elements");
  std::vector<std::uint32_t> cols(m.cols());
  std::vector<std::size_t> pivots;
  const F2Matrix r = rref_f2(m, &pivots);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t p = 0; p < pivots.size(); ++p)
      if (r.get(p, j)) cols[j] |= 1u << p;
  return BinaryMatroid(pivots.size(), std::move(cols));
}

GroundSubset BinaryMatroid::full_set() const {
  return cols_.empty() ? 0u : (std::uint32_t{1} << cols_.size()) - 1u;
}

std::size_t BinaryMatroid::subset_rank(GroundSubset s) const {
  return mask_rank(cols_, s);
}

bool BinaryMatroid::is_independent(GroundSubset s) const {
  return subset_rank(s) == static_cast<std::size_t>(std::popcount(s));
}

GroundSubset BinaryMatroid::closure(GroundSubset s) const {
  XorBasis basis;
  for (std::uint32_t rem = s; rem; rem &= rem - 1)
    basis.insert(cols_[std::countr_zero(rem)]);
  GroundSubset out = 0;
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (basis.contains(cols_[j])) out |= 1u << j;
  return out;
}

const std::vector<GroundSubset>& BinaryMatroid::circuits() const {
  std::call_once(cache_->circuits_flag, [this] {
    const std::size_t n = cols_.size();
    if (n > 20) throw MatroidError("circuit enumeration capped at 20 elements");
    std::vector<GroundSubset> found;
    // Circuits have at most rank+1 elements; scan subsets by size, skipping
    // supersets of circuits already found.
    std::vector<GroundSubset> by_size[22];
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      const int p = std::popcount(s);
      if (p <= static_cast<int>(rank_) + 1) by_size[p].push_back(s);
    }
    for (std::size_t sz = 1; sz <= rank_ + 1 && sz <= n; ++sz) {
      for (GroundSubset s : by_size[sz]) {
        bool minimal = true;
        for (GroundSubset c : found)
          if ((s & c) == c) {
            minimal = false;
            break;
          }
        if (minimal && !is_independent(s)) found.push_back(s);
      }
    }
    sort_canonical(found);
    cache_->circuits = std::move(found);
  });
  return cache_->circuits;
}

const std::vector<GroundSubset>& BinaryMatroid::cocircuits() const {
  std::call_once(cache_->cocircuits_flag, [this] {
    if (rank_ > 25) throw MatroidError("cocircuit enumeration capped at rank 25");
    const std::size_t n = cols_.size();
    // Row space of the representation, as masks over the ground set.
    std::vector<std::uint32_t> row_basis;
    {
      XorBasis seen;  // over row vectors (n <= 31 bits)
      for (std::size_t k = 0; k < ambient_rank_; ++k) {
        std::uint32_t row = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (cols_[j] >> k & 1u) row |= 1u << j;
        if (row && seen.insert(row)) row_basis.push_back(row);
      }
    }
    std::vector<GroundSubset> supports;
    for (std::uint32_t y = 1; y < (1u << row_basis.size()); ++y) {
      std::uint32_t v = 0;
      for (std::size_t k = 0; k < row_basis.size(); ++k)
        if (y >> k & 1u) v ^= row_basis[k];
      if (v) supports.push_back(v);
    }
    sort_canonical(supports);
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<GroundSubset> minimal;
    for (GroundSubset s : supports) {
      bool ok = true;
      for (GroundSubset m : minimal)
        if ((s & m) == m) {
          ok = false;
          break;
        }
      if (ok) minimal.push_back(s);
    }
    cache_->cocircuits = std::move(minimal);
  });
  return cache_->cocircuits;
}

BinaryMatroid BinaryMatroid::dual() const {
  const std::size_t n = cols_.size();
  if (n == 0) return BinaryMatroid(0, {});
  const ReducedForm rf = reduce_columns(ambient_rank_, cols_);
  const std::size_t r = rf.rank, t = n - r;
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_pos(n, 0), nonbasis;
  for (std::size_t p = 0; p < r; ++p) {
    is_pivot[rf.pivots[p]] = true;
    pivot_pos[rf.pivots[p]] = p;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) nonbasis.push_back(j);

  std::vector<std::uint32_t> dual_cols(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) {
      const std::size_t p = pivot_pos[j];
      for (std::size_t q = 0; q < t; ++q)
        if (rf.coords[nonbasis[q]] >> p & 1u) dual_cols[j] |= 1u << q;
    } else {
      const std::size_t q =
          std::lower_bound(nonbasis.begin(), nonbasis.end(), j) - nonbasis.begin();
      dual_cols[j] = 1u << q;
    }
  }
  return BinaryMatroid(t, std::move(dual_cols));
}

BinaryMatroid BinaryMatroid::minor(GroundSubset deleted, GroundSubset contracted) const {
  if (deleted & contracted) throw OverlappingSets("delete and contract sets overlap");
  const std::size_t n = cols_.size();
  std::vector<std::uint32_t> work = cols_;
  std::uint32_t pivot_rows = 0;
  for (std::uint32_t rem = contracted; rem; rem &= rem - 1) {
    const std::size_t idx = std::countr_zero(rem);
    const std::uint32_t v = work[idx];
    if (v == 0) continue;  // contracting a loop = deleting it
    const int b = std::countr_zero(v);
    for (std::size_t j = 0; j < n; ++j)
      if (j != idx && (work[j] >> b & 1u)) work[j] ^= v;
    work[idx] = 0;
    pivot_rows |= 1u << b;
  }
  // Drop the pivot coordinates; all remaining columns are zero there.
  std::vector<std::uint32_t> kept;
  for (std::size_t j = 0; j < n; ++j) {
    if ((deleted | contracted) >> j & 1u) continue;
    std::uint32_t c = 0;
    int out_bit = 0;
    for (std::size_t k = 0; k < ambient_rank_; ++k) {
      if (pivot_rows >> k & 1u) continue;
      if (work[j] >> k & 1u) c |= 1u << out_bit;
      ++out_bit;
    }
    kept.push_back(c);
  }
  return BinaryMatroid(ambient_rank_ - std::popcount(pivot_rows), std::move(kept));
}

namespace {

// Seven distinct nonzero columns of rank 3 are all of F2^3\0, hence F7
// (binary rigidity makes the column multiset a complete invariant).
bool is_f7_columns(const std::array<std::uint32_t, 7>& c) {
  XorBasis basis;
  for (int i = 0; i < 7; ++i) {
    if (c[i] == 0) return false;
    for (int j = 0; j < i; ++j)
      if (c[i] == c[j]) return false;
    basis.insert(c[i]);
  }
  return basis.rank == 3;
}

bool is_f7dual_columns(const std::array<std::uint32_t, 7>& c) {
  std::vector<std::uint32_t> cols(c.begin(), c.end());
  if (mask_rank(cols, 0x7f) != 4) return false;
  const BinaryMatroid d = BinaryMatroid(31, std::move(cols)).dual();
  std::array<std::uint32_t, 7> dc{};
  std::copy(d.columns().begin(), d.columns().end(), dc.begin());
  return d.rank() == 3 && is_f7_columns(dc);
}

}  // namespace

FanoType fano_type(const BinaryMatroid& m) {
  if (m.size() != 7) return FanoType::Neither;
  std::array<std::uint32_t, 7> c{};
  std::copy(m.columns().begin(), m.columns().end(), c.begin());
  if (m.rank() == 3 && is_f7_columns(c)) return FanoType::F7;
  if (m.rank() == 4 && is_f7dual_columns(c)) return FanoType::F7Dual;
  return FanoType::Neither;
}

namespace {

struct MinorSearch {
  const BinaryMatroid& m;
  std::size_t n, r;
  // Projected column multiset -> bitmask of checks already performed
  // (1 = F7, 2 = F7*). The same multiset can show up at several contraction
  // depths with different applicable checks.
  std::map<std::vector<std::uint32_t>, unsigned> seen;
  std::optional<FanoWitness> hit;

  explicit MinorSearch(const BinaryMatroid& mat)
      : m(mat), n(mat.size()), r(mat.rank()) {}

  // Scan all 7-element keeps of the projected configuration.
  void scan_keeps(const std::vector<std::uint32_t>& proj, GroundSubset contracted,
                  std::size_t contracted_count) {
    std::vector<std::size_t> remaining;
    for (std::size_t j = 0; j < n; ++j)
      if (!(contracted >> j & 1u)) remaining.push_back(j);
    if (remaining.size() < 7) return;

    std::vector<std::uint32_t> key;
    for (std::size_t j : remaining) key.push_back(proj[j]);
    std::sort(key.begin(), key.end());

    unsigned flags = 0;
    if (r - contracted_count >= 3) flags |= 1;
    if (r - contracted_count >= 4) flags |= 2;
    auto it = seen.emplace(std::move(key), 0u).first;
    const unsigned todo = flags & ~it->second;
    if (!todo) return;
    it->second |= flags;
    const bool try_f7 = todo & 1;
    const bool try_f7dual = todo & 2;

    const std::size_t mrem = remaining.size();
    std::array<std::size_t, 7> idx{};
    for (std::size_t i = 0; i < 7; ++i) idx[i] = i;
    for (;;) {
      std::array<std::uint32_t, 7> cand{};
      for (std::size_t i = 0; i < 7; ++i) cand[i] = proj[remaining[idx[i]]];
      FanoType t = FanoType::Neither;
      if (try_f7 && is_f7_columns(cand)) t = FanoType::F7;
      if (t == FanoType::Neither && try_f7dual && is_f7dual_columns(cand))
        t = FanoType::F7Dual;
      if (t != FanoType::Neither) {
        GroundSubset kept = 0;
        for (std::size_t i = 0; i < 7; ++i) kept |= 1u << remaining[idx[i]];
        hit = FanoWitness{contracted, kept, t};
        return;
      }
      // next 7-combination
      int i = 6;
      while (i >= 0 && idx[i] == mrem - 7 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t k = i + 1; k < 7; ++k) idx[k] = idx[k - 1] + 1;
    }
  }

  // Recursively extend the independent contraction set.
  void extend(std::vector<std::uint32_t> proj, GroundSubset contracted,
              std::size_t count, std::size_t max_k, std::size_t first) {
    if (hit) return;
    scan_keeps(proj, contracted, count);
    if (hit || count == max_k) return;
    for (std::size_t j = first; j < n; ++j) {
      if (contracted >> j & 1u) continue;
      if (proj[j] == 0) continue;  // loop in the contraction: dependent
      if (n - count - 1 < 7) break;
      std::vector<std::uint32_t> next = proj;
      const std::uint32_t v = next[j];
      const int b = std::countr_zero(v);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j && (next[k] >> b & 1u)) next[k] ^= v;
      next[j] = 0;
      extend(std::move(next), contracted | (1u << j), count + 1, max_k, j + 1);
      if (hit) return;
    }
  }
};

}  // namespace

std::optional<FanoWitness> find_fano_minor(const BinaryMatroid& m) {
  if (m.size() < 7 || m.rank() < 3) return std::nullopt;
  MinorSearch search(m);
  const std::size_t max_k = m.rank() - 3;
  search.extend(m.columns(), 0, 0, max_k, 0);
  return search.hit;
}

bool is_regular(const BinaryMatroid& m) { return !find_fano_minor(m).has_value(); }

namespace {

// Determinant of a small +-1/0 matrix; Bareiss stays within int64 here.
long long det_small(std::vector<long long> a, std::size_t k) {
  long long prev = 1;
  int sign = 1;
  for (std::size_t t = 0; t + 1 < k; ++t) {
    if (a[t * k + t] == 0) {
      std::size_t i = t + 1;
      while (i < k && a[i * k + t] == 0) ++i;
      if (i == k) return 0;
      for (std::size_t j = 0; j < k; ++j) std::swap(a[t * k + j], a[i * k + j]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < k; ++i)
      for (std::size_t j = t + 1; j < k; ++j)
        a[i * k + j] = (a[i * k + j] * a[t * k + t] - a[i * k + t] * a[t * k + j]) / prev;
    prev = a[t * k + t];
  }
  return k == 0 ? 1 : sign * a[k * k - 1];
}

}  // namespace

namespace {

// Every square submatrix determinant must be 0 or +-1. The 2x2 cases are
// enforced during the search, so start at 3.
bool verify_tu(const std::vector<long long>& sign, std::size_t r, std::size_t t,
               std::size_t kmin) {
  const std::size_t kmax = std::min(r, t);
  std::vector<std::size_t> rows_sel, cols_sel;
  for (std::size_t k = kmin; k <= kmax; ++k) {
    rows_sel.resize(k);
    cols_sel.resize(k);
    for (std::size_t i = 0; i < k; ++i) rows_sel[i] = i;
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) cols_sel[i] = i;
      for (;;) {
        std::vector<long long> sub(k * k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub[i * k + j] = sign[rows_sel[i] * t + cols_sel[j]];
        const long long d = det_small(std::move(sub), k);
        if (d < -1 || d > 1) return false;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cols_sel[i] == t - k + i) --i;
        if (i < 0) break;
        ++cols_sel[i];
        for (std::size_t x = i + 1; x < k; ++x) cols_sel[x] = cols_sel[x - 1] + 1;
      }
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && rows_sel[i] == r - k + i) --i;
      if (i < 0) break;
      ++rows_sel[i];
      for (std::size_t x = i + 1; x < k; ++x) rows_sel[x] = rows_sel[x - 1] + 1;
    }
  }
  return true;
}

// Backtracking over the sign classes of D. Any signing is row/column-scaling
// equivalent to one whose spanning-forest entries are all +1, so the search
// space is exactly the free (non-tree) entries; fully signed all-nonzero 2x2
// blocks must be singular, which propagates most signs immediately.
struct SigningSearch {
  std::size_t r, t;
  std::vector<long long> sign;          // 0 = structural zero or unassigned
  std::vector<std::uint8_t> support;    // 1 where D has a nonzero entry
  std::vector<std::pair<std::size_t, std::size_t>> free_entries;

  bool two_by_two_ok(std::size_t p, std::size_t q) const {
    for (std::size_t p2 = 0; p2 < r; ++p2) {
      if (p2 == p || !sign[p2 * t + q]) continue;
      for (std::size_t q2 = 0; q2 < t; ++q2) {
        if (q2 == q) continue;
        const long long a = sign[p * t + q2], b = sign[p2 * t + q2];
        if (!a || !b) continue;
        // det of [[sign(p,q), a],[sign(p2,q), b]] must be 0
        if (sign[p * t + q] * b != a * sign[p2 * t + q]) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t idx) {
    if (idx == free_entries.size()) return verify_tu(sign, r, t, 3);
    const auto [p, q] = free_entries[idx];
    for (long long v : {1LL, -1LL}) {
      sign[p * t + q] = v;
      if (two_by_two_ok(p, q) && assign(idx + 1)) return true;
    }
    sign[p * t + q] = 0;
    return false;
  }
};

}  // namespace

bool is_regular_tu(const BinaryMatroid& m) {
  const std::size_t n = m.size();
  const ReducedForm rf = reduce_columns(m.ambient_rank(), m.columns());
  const std::size_t r = rf.rank, t = n - r;
  if (r == 0 || t == 0) return true;

  std::vector<std::size_t> nonbasis;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rf.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) nonbasis.push_back(j);
  }

  SigningSearch s;
  s.r = r;
  s.t = t;
  s.sign.assign(r * t, 0);
  s.support.assign(r * t, 0);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < t; ++q)
      if (rf.coords[nonbasis[q]] >> p & 1u) s.support[p * t + q] = 1;

  // Spanning forest of the bipartite support graph (rows 0..r-1, then
  // columns r..r+t-1); tree entries are normalized to +1.
  const std::size_t nodes = r + t;
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < t; ++q)
      if (s.support[p * t + q]) {
        adj[p].push_back(r + q);
        adj[r + q].push_back(p);
      }
  std::vector<bool> visited(nodes, false);
  std::vector<std::vector<std::uint8_t>> in_tree(r, std::vector<std::uint8_t>(t, 0));
  for (std::size_t root = 0; root < nodes; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        const std::size_t p = std::min(u, v), q = std::max(u, v) - r;
        in_tree[p][q] = 1;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < t; ++q) {
      if (!s.support[p * t + q]) continue;
      if (in_tree[p][q])
        s.sign[p * t + q] = 1;
      else
        s.free_entries.emplace_back(p, q);
    }

  return s.assign(0);
}

H1F2 h1_f2(const BinaryMatroid& m) {
  const ReducedForm rf = reduce_columns(m.ambient_rank(), m.columns());
  return H1F2{rf.rank, rf.coords};
}

}  // namespace matroidlab
