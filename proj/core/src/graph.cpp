#include "matroidlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "matroidlab/errors.hpp"

namespace matroidlab {

Graph::Graph(std::size_t vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices) {
  incidence_.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices ||
        static_cast<std::size_t>(v) >= vertices)
      throw DimensionMismatch("edge endpoint out of range");
    incidence_.push_back(u);
    incidence_.push_back(v);
  }
}

Graph Graph::complete(std::size_t n) {
  if (n < 1) throw DimensionMismatch("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(n, std::move(edges));
}

namespace {

std::size_t component_count(std::size_t vertices, const std::vector<int>& incidence,
                            std::size_t skip_edge) {
  if (vertices == 0) return 0;
  std::vector<int> comp(vertices, -1);
  std::size_t count = 0;
  for (std::size_t root = 0; root < vertices; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = static_cast<int>(count);
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < incidence.size() / 2; ++e) {
        if (e == skip_edge) continue;
        const int a = incidence[2 * e], b = incidence[2 * e + 1];
        int other = -1;
        if (static_cast<std::size_t>(a) == u) other = b;
        if (static_cast<std::size_t>(b) == u) other = a;
        if (other >= 0 && comp[other] == -1) {
          comp[other] = static_cast<int>(count);
          stack.push_back(other);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

bool Graph::connected() const {
  return component_count(vertices_, incidence_, edge_count()) <= 1;
}

bool Graph::is_separating(std::size_t e) const {
  if (is_loop(e)) return false;
  return component_count(vertices_, incidence_, e) >
         component_count(vertices_, incidence_, edge_count());
}

Graph Graph::delete_edge(std::size_t e) const {
  if (is_separating(e)) throw SeparatingEdge("deleting a separating edge");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < edge_count(); ++i)
    if (i != e) edges.push_back(endpoints(i));
  return Graph(vertices_, std::move(edges));
}

Graph Graph::contract_edge(std::size_t e) const {
  if (is_loop(e)) throw LoopEdge("contracting a loop");
  const auto [u, v] = endpoints(e);
  const int target = std::min(u, v), removed = std::max(u, v);
  auto remap = [&](int w) {
    if (w == removed) w = target;
    return w > removed ? w - 1 : w;
  };
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < edge_count(); ++i) {
    if (i == e) continue;
    const auto [a, b] = endpoints(i);
    edges.emplace_back(remap(a), remap(b));
  }
  return Graph(vertices_ - 1, std::move(edges));
}

FreelyOrientedMatroid graphic_matroid(const Graph& g) {
  if (!g.connected()) throw DisconnectedGraph("graphic matroid needs a connected graph");
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(e);
    m.at(u, e) += 1;
    m.at(v, e) -= 1;  // a loop gives the zero column
  }
  return FreelyOrientedMatroid::from_signed_matrix(m);
}

FreelyOrientedMatroid cographic_matroid(const Graph& g) {
  if (!g.connected())
    throw DisconnectedGraph("cographic matroid needs a connected graph");
  return dual(graphic_matroid(g));
}

namespace {

unsigned long long factorial(std::size_t k) {
  unsigned long long f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

unsigned long long count_graph_autos(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // multiplicity per unordered non-loop pair, loop count per vertex
  std::map<std::pair<int, int>, std::size_t> mult;
  std::vector<std::size_t> loops(n, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v) {
      ++loops[u];
      continue;
    }
    if (u > v) std::swap(u, v);
    ++mult[{u, v}];
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long total = 0;
  do {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if (loops[v] != loops[perm[v]]) ok = false;
    for (const auto& [pair, k] : mult) {
      if (!ok) break;
      int a = perm[pair.first], b = perm[pair.second];
      if (a > b) std::swap(a, b);
      const auto it = mult.find({a, b});
      if (it == mult.end() || it->second != k) ok = false;
    }
    if (!ok) continue;
    // half-edge freedom: parallel classes permute, each loop can flip
    unsigned long long ways = 1;
    for (const auto& [pair, k] : mult) ways *= factorial(k);
    for (std::size_t v = 0; v < n; ++v)
      ways *= factorial(loops[v]) << loops[v];
    total += ways;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct SignedAutCounter {
  std::size_t n;
  std::vector<SignedSubset> circuits;
  std::set<SignedSubset> family;
  std::vector<int> circuit_count;  // circuits through each element

  std::vector<int> image;  // element -> element
  std::vector<int> sign;   // +-1
  std::uint32_t used = 0, assigned = 0;
  unsigned long long count = 0;

  explicit SignedAutCounter(const FreelyOrientedMatroid& fom)
      : n(fom.pair_count()),
        circuits(fom.signed_circuits()),
        family(circuits.begin(), circuits.end()),
        circuit_count(n, 0),
        image(n, -1),
        sign(n, 1) {
    for (const SignedSubset& c : circuits)
      for (std::uint32_t rem = c.support(); rem; rem &= rem - 1)
        ++circuit_count[std::countr_zero(rem)];
  }

  bool circuits_ok(std::size_t upto) const {
    for (const SignedSubset& c : circuits) {
      if ((c.support() & ~assigned) != 0) continue;
      if (!(c.support() >> upto & 1u)) continue;  // already checked earlier
      SignedSubset img;
      for (std::uint32_t rem = c.pos; rem; rem &= rem - 1) {
        const std::size_t i = std::countr_zero(rem);
        (sign[i] > 0 ? img.pos : img.neg) |= 1u << image[i];
      }
      for (std::uint32_t rem = c.neg; rem; rem &= rem - 1) {
        const std::size_t i = std::countr_zero(rem);
        (sign[i] > 0 ? img.neg : img.pos) |= 1u << image[i];
      }
      if (!family.count(img)) return false;
    }
    return true;
  }

  void recurse(std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t target = 0; target < n; ++target) {
      if (used >> target & 1u) continue;
      if (circuit_count[i] != circuit_count[target]) continue;
      image[i] = static_cast<int>(target);
      used |= 1u << target;
      assigned |= 1u << i;
      for (int s : {1, -1}) {
        sign[i] = s;
        if (circuits_ok(i)) recurse(i + 1);
      }
      used &= ~(1u << target);
      assigned &= ~(1u << i);
    }
    image[i] = -1;
  }
};

}  // namespace

AutomorphismCounts automorphism_counts(const Graph& g) {
  AutomorphismCounts out;
  out.graph_autos = count_graph_autos(g);
  SignedAutCounter counter(graphic_matroid(g));
  counter.recurse(0);
  out.matroid_autos = counter.count;
  return out;
}

}  // namespace matroidlab
