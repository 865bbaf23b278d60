#include "matroidlab/poset_ir.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("MATROID_LAB_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) n = static_cast<std::size_t>(v);
  }
  return std::min(n, std::max<std::size_t>(jobs, 1));
}

}  // namespace

BinaryMatroid matroid_from_node(std::size_t r, std::uint32_t node) {
  std::vector<std::uint32_t> cols;
  for (std::uint32_t v = 1; v < (1u << r); ++v)
    if (node >> (v - 1) & 1u) cols.push_back(v);
  return BinaryMatroid(r, std::move(cols));
}

bool ir_f2_member(std::size_t r, std::uint32_t node) {
  const BinaryMatroid m = matroid_from_node(r, node);
  return m.rank() == r && is_regular(m);
}

IRPoset enumerate_ir_f2(std::size_t r, bool allow_rank4) {
  if (r < 1 || r > 4) throw RankTooLarge("enumerate_ir_f2 supports 1 <= r <= 4");
  if (r == 4 && !allow_rank4)
    throw RankTooLarge("rank-4 enumeration is gated behind allow_rank4");

  const std::uint32_t space = 1u << ((1u << r) - 1);
  IRPoset p;
  p.r = r;

  auto accept = [r](std::uint32_t mask) {
    const BinaryMatroid m = matroid_from_node(r, mask);
    if (m.rank() != r) return false;
    if (r <= 3) return is_regular(m);
    const bool tu = is_regular_tu(m);
    // spot check the fast oracle against the minor search on a 1% sample
    if (mask % 100 == 0 && tu != is_regular(m))
      throw MatroidError("regularity oracles disagree during enumeration");
    return tu;
  };

  const std::size_t workers = worker_count(space / 1024);
  if (workers <= 1 || space < 2048) {
    for (std::uint32_t mask = 1; mask < space; ++mask)
      if (accept(mask)) p.nodes.push_back(mask);
  } else {
    std::vector<std::vector<std::uint32_t>> found(workers);
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (space + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint32_t lo = std::max<std::uint32_t>(1, w * chunk);
        const std::uint32_t hi = std::min<std::uint32_t>(space, (w + 1) * chunk);
        for (std::uint32_t mask = lo; mask < hi; ++mask)
          if (accept(mask)) found[w].push_back(mask);
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : found)
      p.nodes.insert(p.nodes.end(), part.begin(), part.end());
  }
  const std::uint32_t full = space - 1;
  p.full_set_is_node =
      std::binary_search(p.nodes.begin(), p.nodes.end(), full);
  return p;
}

SimplicialComplex order_complex(const IRPoset& p) {
  // In IR(r,F2) the covers are exactly the single-element additions:
  // subsets of regular sets are regular and supersets of spanning sets span.
  const std::size_t n = p.nodes.size();
  std::vector<std::vector<int>> covers(n);
  std::vector<bool> has_lower(n, false);
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.nodes[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t node = p.nodes[i];
    for (std::uint32_t v = 0; v < (1u << p.r) - 1; ++v) {
      if (node >> v & 1u) continue;
      const auto it = index.find(node | (1u << v));
      if (it != index.end()) {
        covers[i].push_back(static_cast<int>(it->second));
        has_lower[it->second] = true;
      }
    }
  }
  std::vector<std::vector<int>> facets;
  std::vector<int> chain;
  std::function<void(int)> dfs = [&](int v) {
    chain.push_back(v);
    if (covers[v].empty()) {
      facets.push_back(chain);
    } else {
      for (int w : covers[v]) dfs(w);
    }
    chain.pop_back();
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!has_lower[v]) dfs(static_cast<int>(v));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex complement_complex_r3() {
  // lines {a, b, a^b}; their complements are the seven missing tetrahedra
  std::vector<std::uint32_t> circuit4;
  for (std::uint32_t a = 1; a <= 7; ++a)
    for (std::uint32_t b = a + 1; b <= 7; ++b) {
      const std::uint32_t c = a ^ b;
      if (c < b) continue;  // count each line once
      const std::uint32_t line = (1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1));
      circuit4.push_back(0x7fu & ~line);
    }
  std::vector<std::vector<int>> facets;
  for (std::uint32_t s = 0; s < (1u << 7); ++s) {
    if (std::popcount(s) != 4) continue;
    if (std::find(circuit4.begin(), circuit4.end(), s) != circuit4.end()) continue;
    std::vector<int> f;
    for (int v = 0; v < 7; ++v)
      if (s >> v & 1u) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(7, std::move(facets));
}

std::string hasse_dot(const IRPoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"{";
    bool first = true;
    for (std::uint32_t v = 1; v < (1u << p.r); ++v)
      if (p.nodes[i] >> (v - 1) & 1u) {
        if (!first) out << ",";
        out << v;
        first = false;
      }
    out << "}\"];\n";
  }
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) index[p.nodes[i]] = i;
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    for (std::uint32_t v = 0; v < (1u << p.r) - 1; ++v) {
      if (p.nodes[i] >> v & 1u) continue;
      const auto it = index.find(p.nodes[i] | (1u << v));
      if (it != index.end()) out << "  n" << i << " -> n" << it->second << ";\n";
    }
  out << "}\n";
  return out.str();
}

namespace {

IR2ZVec canonical(IR2ZVec v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
  return v;
}

long long det2(IR2ZVec a, IR2ZVec b) { return a.x * b.y - a.y * b.x; }

long long norm2(IR2ZVec v) { return v.x * v.x + v.y * v.y; }

bool closes_triangle(IR2ZVec a, IR2ZVec b, IR2ZVec c) {
  // some choice of signs sums to zero; up to global negation two cases
  const IR2ZVec s1{a.x + b.x + c.x, a.y + b.y + c.y};
  const IR2ZVec s2{a.x + b.x - c.x, a.y + b.y - c.y};
  const IR2ZVec s3{a.x - b.x + c.x, a.y - b.y + c.y};
  const IR2ZVec s4{a.x - b.x - c.x, a.y - b.y - c.y};
  const IR2ZVec zero{};
  return s1 == zero || s2 == zero || s3 == zero || s4 == zero;
}

}  // namespace

IR2ZNode IR2ZNode::basis_pair(IR2ZVec a, IR2ZVec b) {
  a = canonical(a);
  b = canonical(b);
  if (std::abs(det2(a, b)) != 1)
    throw MatroidError("basis pair must have determinant +-1");
  IR2ZNode n;
  n.kind = Kind::BasisPair;
  n.vecs = {std::min(a, b), std::max(a, b), IR2ZVec{}};
  return n;
}

IR2ZNode IR2ZNode::triangle(IR2ZVec a, IR2ZVec b, IR2ZVec c) {
  a = canonical(a);
  b = canonical(b);
  c = canonical(c);
  if (std::abs(det2(a, b)) != 1 || std::abs(det2(a, c)) != 1 ||
      std::abs(det2(b, c)) != 1)
    throw MatroidError("triangle must have unimodular pairs");
  if (!closes_triangle(a, b, c))
    throw MatroidError("triangle vectors must sum to zero up to signs");
  IR2ZNode n;
  n.kind = Kind::Triangle;
  n.vecs = {a, b, c};
  std::sort(n.vecs.begin(), n.vecs.end());
  return n;
}

IR2ZNode ir2z_standard_basis() {
  return IR2ZNode::basis_pair({1, 0}, {0, 1});
}

std::vector<IR2ZNode> ir2z_neighbors(const IR2ZNode& node) {
  std::vector<IR2ZNode> out;
  if (node.kind == IR2ZNode::Kind::BasisPair) {
    const IR2ZVec a = node.vecs[0], b = node.vecs[1];
    out.push_back(IR2ZNode::triangle(a, b, {a.x + b.x, a.y + b.y}));
    out.push_back(IR2ZNode::triangle(a, b, {a.x - b.x, a.y - b.y}));
  } else {
    out.push_back(IR2ZNode::basis_pair(node.vecs[0], node.vecs[1]));
    out.push_back(IR2ZNode::basis_pair(node.vecs[0], node.vecs[2]));
    out.push_back(IR2ZNode::basis_pair(node.vecs[1], node.vecs[2]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IR2ZBall ir2z_ball(const IR2ZNode& center, int depth) {
  if (depth < 0 || depth > 12) throw MatroidError("ball depth must be in [0,12]");
  IR2ZBall ball;
  std::map<IR2ZNode, int> index;
  ball.nodes.push_back(center);
  ball.depth.push_back(0);
  index[center] = 0;
  std::size_t head = 0;
  while (head < ball.nodes.size()) {
    const int d = ball.depth[head];
    const IR2ZNode u = ball.nodes[head];
    if (d == depth) {
      ++head;
      continue;
    }
    for (const IR2ZNode& v : ir2z_neighbors(u)) {
      auto it = index.find(v);
      if (it == index.end()) {
        index[v] = static_cast<int>(ball.nodes.size());
        ball.nodes.push_back(v);
        ball.depth.push_back(d + 1);
        it = index.find(v);
      }
      const int a = std::min<int>(head, it->second);
      const int b = std::max<int>(head, it->second);
      ball.edges.emplace_back(a, b);
    }
    ++head;
  }
  // boundary-to-boundary adjacencies
  for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
    if (ball.depth[i] != depth) continue;
    for (const IR2ZNode& v : ir2z_neighbors(ball.nodes[i])) {
      const auto it = index.find(v);
      if (it == index.end()) continue;
      ball.edges.emplace_back(std::min<int>(i, it->second),
                              std::max<int>(i, it->second));
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  ball.edges.erase(std::unique(ball.edges.begin(), ball.edges.end()),
                   ball.edges.end());
  return ball;
}

double ir2z_morse_value(const IR2ZNode& node) {
  if (node.kind != IR2ZNode::Kind::Triangle)
    throw NotATriangle("Morse value is defined on triangles");
  long long best = 0;
  for (const IR2ZVec& v : node.vecs) best = std::max(best, norm2(v));
  return std::sqrt(static_cast<double>(best));
}

bool ir2z_is_morse_minimum(const IR2ZNode& node) {
  if (node.kind != IR2ZNode::Kind::Triangle)
    throw NotATriangle("Morse minima are triangle nodes");
  long long fsq = 0;
  for (const IR2ZVec& v : node.vecs) fsq = std::max(fsq, norm2(v));
  // the alternate triangle over each basis-pair neighbor
  for (const IR2ZNode& pair : ir2z_neighbors(node)) {
    for (const IR2ZNode& other : ir2z_neighbors(pair)) {
      if (other == node) continue;
      long long osq = 0;
      for (const IR2ZVec& v : other.vecs) osq = std::max(osq, norm2(v));
      if (osq < fsq) return false;
    }
  }
  return true;
}

std::uint32_t ir2z_reduce_mod2(const IR2ZNode& node) {
  std::uint32_t mask = 0;
  const std::size_t count = node.kind == IR2ZNode::Kind::Triangle ? 3 : 2;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t x = static_cast<std::uint32_t>(((node.vecs[i].x % 2) + 2) % 2);
    const std::uint32_t y = static_cast<std::uint32_t>(((node.vecs[i].y % 2) + 2) % 2);
    const std::uint32_t v = 2 * x + y;  // lexicographic encoding, x most significant
    mask |= 1u << (v - 1);
  }
  return mask;
}

std::string ball_dot(const IR2ZBall& ball) {
  std::ostringstream out;
  out << "graph ir2z_ball {\n";
  for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
    const IR2ZNode& n = ball.nodes[i];
    out << "  n" << i << " [label=\"";
    const std::size_t count = n.kind == IR2ZNode::Kind::Triangle ? 3 : 2;
    for (std::size_t v = 0; v < count; ++v) {
      if (v) out << " ";
      out << "(" << n.vecs[v].x << "," << n.vecs[v].y << ")";
    }
    out << "\" shape=" << (count == 3 ? "circle" : "box") << "];\n";
  }
  for (const auto& [a, b] : ball.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace matroidlab
