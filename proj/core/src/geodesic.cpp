#include "matroidlab/geodesic.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "matroidlab/errors.hpp"
#include "matroidlab/poset_ir.hpp"

namespace matroidlab {

std::size_t binary_distance(std::uint32_t e1, std::uint32_t e2) {
  return std::popcount(e1 ^ e2);
}

namespace {

struct Membership {
  std::size_t r;
  std::map<std::uint32_t, bool> memo;
  std::map<std::uint32_t, bool> spanning_memo;

  bool spans(std::uint32_t node) {
    auto it = spanning_memo.find(node);
    if (it == spanning_memo.end())
      it = spanning_memo.emplace(node, matroid_from_node(r, node).rank() == r).first;
    return it->second;
  }
  bool member(std::uint32_t node) {
    auto it = memo.find(node);
    if (it == memo.end()) it = memo.emplace(node, ir_f2_member(r, node)).first;
    return it->second;
  }
};

}  // namespace

PosetPath construct_regular_geodesic(std::size_t r, std::uint32_t e1, std::uint32_t e2) {
  Membership mem{r, {}, {}};
  if (!mem.member(e1) || !mem.member(e2))
    throw NotInPoset("geodesic endpoints must lie in IR(r,F2)");
  if (e1 == e2) return PosetPath{{e1}};
  const std::uint32_t x = e1 & e2;
  // X independent <=> its vectors are linearly independent
  {
    std::vector<std::uint32_t> xcols;
    for (std::uint32_t v = 1; v < (1u << r); ++v)
      if (x >> (v - 1) & 1u) xcols.push_back(v);
    const BinaryMatroid xm(r, xcols);
    if (xm.rank() != xcols.size())
      throw IntersectionDependent("E1 n E2 must be independent");
  }

  // extend X to lexicographic-first bases B1 of E1 and B2 of E2
  auto extend_basis = [&](std::uint32_t inside) {
    std::vector<std::uint32_t> cols;
    std::uint32_t basis = x;
    auto rank_of = [&](std::uint32_t mask) {
      std::vector<std::uint32_t> cs;
      for (std::uint32_t v = 1; v < (1u << r); ++v)
        if (mask >> (v - 1) & 1u) cs.push_back(v);
      return BinaryMatroid(r, cs).rank();
    };
    for (std::uint32_t v = 1; v < (1u << r) && rank_of(basis) < r; ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if (!(inside & bit) || (basis & bit)) continue;
      if (rank_of(basis | bit) > rank_of(basis)) basis |= bit;
    }
    return basis;
  };
  const std::uint32_t b1 = extend_basis(e1);
  const std::uint32_t b2 = extend_basis(e2);

  PosetPath path;
  std::uint32_t cur = e1;
  path.steps.push_back(cur);
  auto step_to = [&](std::uint32_t next) {
    cur = next;
    path.steps.push_back(cur);
  };

  // delete E1 \ B1, lowest vector first
  for (std::uint32_t v = 1; v < (1u << r); ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if ((cur & bit) && !(b1 & bit)) step_to(cur & ~bit);
  }
  // basis exchange walk from B1 to B2
  while (cur != b2) {
    std::uint32_t add = 0;
    for (std::uint32_t v = 1; v < (1u << r); ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if ((b2 & bit) && !(cur & bit)) {
        add = bit;
        break;
      }
    }
    step_to(cur | add);
    // delete the smallest element outside B2 keeping the set spanning
    std::uint32_t del = 0;
    for (std::uint32_t v = 1; v < (1u << r); ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if (!(cur & bit) || (b2 & bit)) continue;
      if (mem.spans(cur & ~bit)) {
        del = bit;
        break;
      }
    }
    if (del == 0) throw MatroidError("basis exchange failed");
    step_to(cur & ~del);
  }
  // add E2 \ B2, lowest vector first
  for (std::uint32_t v = 1; v < (1u << r); ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if ((e2 & bit) && !(cur & bit)) step_to(cur | bit);
  }

  if (path.length() != binary_distance(e1, e2))
    throw MatroidError("constructed path is not a geodesic");
  for (std::uint32_t node : path.steps)
    if (!mem.member(node)) throw MatroidError("constructed path leaves the poset");
  return path;
}

GeodesicSearch geodesic_search(std::size_t r, std::uint32_t e1, std::uint32_t e2) {
  Membership mem{r, {}, {}};
  if (!mem.member(e1) || !mem.member(e2))
    throw NotInPoset("geodesic endpoints must lie in IR(r,F2)");
  GeodesicSearch out;
  const std::uint32_t diff = e1 ^ e2;
  std::vector<std::uint32_t> bits;
  for (std::uint32_t rem = diff; rem; rem &= rem - 1) bits.push_back(rem & -rem);

  std::map<std::uint32_t, bool> visited;  // toggled-subset -> failure memo
  std::vector<std::uint32_t> blocked_seen;
  std::vector<std::uint32_t> stack;

  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t toggled) -> bool {
    const std::uint32_t node = e1 ^ toggled;
    stack.push_back(node);
    if (toggled == diff) return true;
    const auto it = visited.find(toggled);
    if (it != visited.end()) {
      stack.pop_back();
      return false;
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (toggled & bits[i]) continue;
      const std::uint32_t next_node = node ^ bits[i];
      const std::uint32_t next_toggled = toggled | bits[i];
      if (next_toggled != diff && !mem.member(next_node)) {
        if (std::find(blocked_seen.begin(), blocked_seen.end(), next_node) ==
            blocked_seen.end()) {
          blocked_seen.push_back(next_node);
          out.blocked.emplace_back(next_node,
                                   mem.spans(next_node) ? "not_regular" : "not_spanning");
        }
        continue;
      }
      if (dfs(next_toggled)) return true;
    }
    visited[toggled] = false;
    stack.pop_back();
    return false;
  };

  if (dfs(0)) {
    out.exists = true;
    out.path = PosetPath{stack};
  }
  return out;
}

F2Matrix rank5_counterexample_matrix() {
  const char* rows[5] = {
      "1 0 0 0 0 0 0 0 1",
      "0 1 0 0 0 0 0 0 1",
      "0 0 1 0 0 1 1 0 1",
      "0 0 0 1 0 1 0 1 1",
      "0 0 0 0 1 0 1 1 1",
  };
  F2Matrix m(5, 9);
  for (std::size_t i = 0; i < 5; ++i) {
    std::size_t j = 0;
    for (const char* c = rows[i]; *c; ++c) {
      if (*c == ' ') continue;
      m.set(i, j++, *c == '1');
    }
  }
  return m;
}

Rank5Counterexample counterexample_rank5() {
  const F2Matrix full = rank5_counterexample_matrix();
  const BinaryMatroid all = BinaryMatroid::from_matrix(full);

  auto node_of = [&](const BinaryMatroid& m) {
    std::uint32_t node = 0;
    for (std::uint32_t c : m.columns()) {
      if (c == 0) throw MatroidError("counterexample columns must be nonzero");
      node |= 1u << (c - 1);
    }
    return node;
  };

  std::vector<std::uint32_t> c1, c2;
  for (std::size_t j = 0; j < 9; ++j) {
    const std::uint32_t col = full.column_mask(j);
    if (j != 0) c1.push_back(col);
    if (j != 1) c2.push_back(col);
  }
  Rank5Counterexample out{BinaryMatroid(5, c1), BinaryMatroid(5, c2), 0, 0, {}, 0};
  out.e1_node = node_of(out.e1);
  out.e2_node = node_of(out.e2);

  if (out.e1.rank() != 5 || out.e2.rank() != 5)
    throw MatroidError("counterexample deletions must have rank 5");
  if (!is_regular(out.e1) || !is_regular(out.e2))
    throw MatroidError("counterexample deletions must be regular");
  const auto w = find_fano_minor(all);
  if (!w) throw MatroidError("counterexample union must have a Fano minor");
  out.union_witness = *w;
  const BinaryMatroid inter(
      5, std::vector<std::uint32_t>(all.columns().begin() + 2, all.columns().end()));
  out.intersection_rank = inter.rank();
  if (out.intersection_rank != 4)
    throw MatroidError("counterexample intersection must have rank 4");
  if (geodesic_exists(5, out.e1_node, out.e2_node))
    throw MatroidError("counterexample unexpectedly admits a regular geodesic");
  return out;
}

}  // namespace matroidlab
