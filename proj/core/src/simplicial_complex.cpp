#include "matroidlab/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matroidlab/errors.hpp"

namespace matroidlab {

struct SimplicialComplex::Cache {
  std::once_flag faces_flag;
  std::vector<std::vector<std::vector<int>>> faces_by_dim;
};

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices,
                                                 std::vector<std::vector<int>> faces) {
  SimplicialComplex k;
  k.vertices_ = vertices;
  k.cache_ = std::make_shared<Cache>();
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (std::unique(f.begin(), f.end()) != f.end())
      throw DimensionMismatch("face with repeated vertices");
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= vertices)
        throw DimensionMismatch("face vertex out of range");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (const auto& f : faces) {
    if (f.empty()) continue;
    bool maximal = true;
    for (const auto& g : faces) {
      if (&f == &g || g.size() <= f.size()) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) k.facets_.push_back(f);
  }
  std::sort(k.facets_.begin(), k.facets_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) - 1 != dimension()) return false;
  return true;
}

const std::vector<std::vector<std::vector<int>>>& SimplicialComplex::faces_by_dim() const {
  std::call_once(cache_->faces_flag, [this] {
    const int dim = dimension();
    std::vector<std::set<std::vector<int>>> sets(dim + 1);
    for (const auto& f : facets_) {
      const std::size_t m = f.size();
      for (std::uint32_t s = 1; s < (1u << m); ++s) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < m; ++i)
          if (s >> i & 1u) sub.push_back(f[i]);
        sets[sub.size() - 1].insert(std::move(sub));
      }
    }
    cache_->faces_by_dim.assign(sets.size(), {});
    for (std::size_t d = 0; d < sets.size(); ++d)
      cache_->faces_by_dim[d].assign(sets[d].begin(), sets[d].end());
  });
  return cache_->faces_by_dim;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& faces : faces_by_dim()) f.push_back(faces.size());
  return f;
}

bool SimplicialComplex::has_face(const std::vector<int>& sorted_verts) const {
  if (sorted_verts.empty()) return false;
  const auto& by_dim = faces_by_dim();
  const std::size_t d = sorted_verts.size() - 1;
  if (d >= by_dim.size()) return false;
  return std::binary_search(by_dim[d].begin(), by_dim[d].end(), sorted_verts);
}

ChainComplex::ChainComplex(const SimplicialComplex& k) {
  const auto& faces = k.faces_by_dim();
  const int dim = static_cast<int>(faces.size()) - 1;
  for (int d = 1; d <= dim; ++d) {
    const auto& rows = faces[d - 1];
    const auto& cols = faces[d];
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& f = cols[j];
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub;
        sub.reserve(f.size() - 1);
        for (std::size_t x = 0; x < f.size(); ++x)
          if (x != i) sub.push_back(f[x]);
        const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        m.at(it - rows.begin(), j) = (i % 2 == 0) ? 1 : -1;
      }
    }
    d_.push_back(std::move(m));
  }
  // boundary-of-boundary must vanish; check sparsely per top simplex
  for (std::size_t kk = 2; kk <= d_.size(); ++kk) {
    const IntMatrix& hi = d_[kk - 1];
    const IntMatrix& lo = d_[kk - 2];
    for (std::size_t j = 0; j < hi.cols(); ++j) {
      std::map<std::size_t, BigInt> acc;
      for (std::size_t i = 0; i < hi.rows(); ++i) {
        if (hi.at(i, j) == 0) continue;
        for (std::size_t p = 0; p < lo.rows(); ++p)
          if (lo.at(p, i) != 0) acc[p] += lo.at(p, i) * hi.at(i, j);
      }
      for (const auto& [p, v] : acc)
        if (v != 0) throw MatroidError("boundary composition is nonzero");
    }
  }
}

ChainComplex boundary_matrices(const SimplicialComplex& k) { return ChainComplex(k); }

HomologyReport betti_numbers(const SimplicialComplex& k) {
  const auto& faces = k.faces_by_dim();
  const int dim = static_cast<int>(faces.size()) - 1;
  HomologyReport rep;
  rep.f_vector = k.f_vector();
  rep.euler = euler_characteristic(k);
  if (dim < 0) return rep;

  const ChainComplex cc(k);
  std::vector<std::size_t> rank(dim + 2, 0);
  std::vector<std::vector<BigInt>> tors(dim + 1);
  for (int d = 1; d <= dim; ++d) {
    const SmithResult s = smith_normal_form(cc.boundary(d));
    rank[d] = s.rank;
    for (const BigInt& x : s.diagonal)
      if (x > 1) tors[d - 1].push_back(x);
  }
  rep.betti.resize(dim + 1);
  rep.torsion.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    rep.betti[d] = faces[d].size() - rank[d] - rank[d + 1];
    rep.torsion[d] = tors[d];
  }
  return rep;
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  const auto f = k.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d)
    chi += (d % 2 == 0) ? static_cast<long long>(f[d]) : -static_cast<long long>(f[d]);
  return chi;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Shelling step condition for facet `cand` against the already-placed
// prefix: the intersection complex is nonempty and every piece lies in a
// shared (d-1)-face.
bool step_ok(const std::vector<std::vector<int>>& facets,
             const std::vector<std::size_t>& prefix, std::size_t cand) {
  const std::size_t d = facets[cand].size() - 1;  // facet dimension
  if (d == 0) return true;  // 0-dimensional complexes shell in any order
  std::vector<std::vector<int>> inters;
  bool nonempty = false;
  for (std::size_t g : prefix) {
    auto i = intersect_sorted(facets[cand], facets[g]);
    if (!i.empty()) nonempty = true;
    inters.push_back(std::move(i));
  }
  if (!nonempty) return false;
  for (const auto& i : inters) {
    if (i.empty()) continue;
    bool covered = false;
    for (const auto& big : inters)
      if (big.size() == d &&
          std::includes(big.begin(), big.end(), i.begin(), i.end())) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

struct ShellingSearch {
  const std::vector<std::vector<int>>& facets;
  std::size_t budget;
  std::size_t states = 0;
  std::vector<std::size_t> order;
  std::vector<bool> used;
  bool exhausted = false;

  ShellingSearch(const std::vector<std::vector<int>>& f, std::size_t b)
      : facets(f), budget(b), used(f.size(), false) {}

  bool search() {
    if (order.size() == facets.size()) return true;
    for (std::size_t c = 0; c < facets.size(); ++c) {
      if (used[c]) continue;
      if (++states > budget) {
        exhausted = true;
        return false;
      }
      if (!order.empty() && !step_ok(facets, order, c)) continue;
      used[c] = true;
      order.push_back(c);
      if (search()) return true;
      order.pop_back();
      used[c] = false;
      if (exhausted) return false;
    }
    return false;
  }
};

// Recursive shellability of a small pure complex, following the recursive
// definition directly (used by verify_shelling on intersection complexes,
// which have at most dim+1 facets).
bool shellable_recursive(std::vector<std::vector<int>> facets) {
  if (facets.size() <= 1) return true;
  if (facets[0].size() == 1) return true;  // 0-dimensional
  const std::size_t d = facets[0].size() - 1;
  std::vector<std::size_t> order;
  std::vector<bool> used(facets.size(), false);
  std::function<bool()> rec = [&]() {
    if (order.size() == facets.size()) return true;
    for (std::size_t c = 0; c < facets.size(); ++c) {
      if (used[c]) continue;
      if (!order.empty()) {
        if (!step_ok(facets, order, c)) continue;
        // the intersection complex must itself be shellable
        std::vector<std::vector<int>> inters;
        for (std::size_t g : order) {
          auto i = intersect_sorted(facets[c], facets[g]);
          if (i.size() == d) inters.push_back(std::move(i));
        }
        std::sort(inters.begin(), inters.end());
        inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
        if (!shellable_recursive(inters)) continue;
      }
      used[c] = true;
      order.push_back(c);
      if (rec()) return true;
      order.pop_back();
      used[c] = false;
    }
    return false;
  };
  return rec();
}

}  // namespace

std::optional<std::vector<std::size_t>> find_shelling(const SimplicialComplex& k,
                                                      std::size_t state_budget) {
  if (!k.pure()) throw NotPure("find_shelling needs a pure complex");
  if (k.facets().size() <= 1)
    return k.facets().empty() ? std::vector<std::size_t>{}
                              : std::vector<std::size_t>{0};
  ShellingSearch s(k.facets(), state_budget);
  if (s.search()) return s.order;
  return std::nullopt;
}

bool verify_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& order) {
  if (!k.pure()) throw NotPure("verify_shelling needs a pure complex");
  const auto& facets = k.facets();
  std::vector<bool> seen(facets.size(), false);
  if (order.size() != facets.size()) throw BadPermutation("order has the wrong length");
  for (std::size_t i : order) {
    if (i >= facets.size() || seen[i]) throw BadPermutation("order is not a permutation");
    seen[i] = true;
  }
  if (facets.size() <= 1) return true;
  const std::size_t d = facets[order[0]].size() - 1;
  if (d == 0) return true;
  for (std::size_t j = 1; j < order.size(); ++j) {
    const std::vector<std::size_t> prefix(order.begin(), order.begin() + j);
    if (!step_ok(facets, prefix, order[j])) return false;
    std::vector<std::vector<int>> inters;
    for (std::size_t g : prefix) {
      auto i = intersect_sorted(facets[order[j]], facets[g]);
      if (i.size() == d) inters.push_back(std::move(i));
    }
    std::sort(inters.begin(), inters.end());
    inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
    if (!shellable_recursive(inters)) return false;
  }
  return true;
}

namespace {

void free_and_cyclic_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  w = std::move(out);
}

}  // namespace

Pi1Status pi1_trivial(const SimplicialComplex& k, std::size_t budget) {
  const auto& faces = k.faces_by_dim();
  if (faces.empty()) throw Disconnected("empty complex");
  const auto& verts = faces[0];
  const std::size_t nv = verts.size();
  std::map<int, std::size_t> vid;
  for (std::size_t i = 0; i < nv; ++i) vid[verts[i][0]] = i;

  std::vector<std::vector<std::size_t>> adj(nv);
  std::map<std::pair<std::size_t, std::size_t>, int> edge_gen;  // -1 = tree
  if (faces.size() > 1) {
    for (const auto& e : faces[1]) {
      const std::size_t a = vid[e[0]], b = vid[e[1]];
      adj[a].push_back(b);
      adj[b].push_back(a);
      edge_gen[{std::min(a, b), std::max(a, b)}] = -2;  // not yet classified
    }
  }
  // BFS spanning tree from the smallest vertex
  std::vector<int> parent(nv, -2);
  std::vector<std::size_t> bfs{0};
  parent[0] = -1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const std::size_t u = bfs[head];
    for (std::size_t v : adj[u])
      if (parent[v] == -2) {
        parent[v] = static_cast<int>(u);
        edge_gen[{std::min(u, v), std::max(u, v)}] = -1;
        bfs.push_back(v);
      }
  }
  if (bfs.size() != nv) throw Disconnected("complex is not connected");

  std::size_t ngens = 0;
  for (auto& [e, g] : edge_gen)
    if (g == -2) g = static_cast<int>(ngens++);

  auto edge_letter = [&](int u, int v) -> int {  // signed generator or 0
    const std::size_t a = vid[u], b = vid[v];
    const int g = edge_gen[{std::min(a, b), std::max(a, b)}];
    if (g < 0) return 0;
    return a < b ? g + 1 : -(g + 1);
  };

  std::vector<std::vector<int>> rels;
  if (faces.size() > 2) {
    for (const auto& t : faces[2]) {
      std::vector<int> w;
      if (int x = edge_letter(t[0], t[1])) w.push_back(x);
      if (int x = edge_letter(t[1], t[2])) w.push_back(x);
      if (int x = edge_letter(t[0], t[2])) w.push_back(-x);
      free_and_cyclic_reduce(w);
      if (!w.empty()) rels.push_back(std::move(w));
    }
  }

  std::vector<bool> alive(ngens, true);
  std::size_t steps = 0;

  auto substitute = [&](int gen, const std::vector<int>& expr) {
    // replace every occurrence of (gen+1) by expr, -(gen+1) by expr^{-1}
    for (auto& w : rels) {
      std::vector<int> out;
      for (int x : w) {
        if (x == gen + 1)
          out.insert(out.end(), expr.begin(), expr.end());
        else if (x == -(gen + 1))
          for (auto it = expr.rbegin(); it != expr.rend(); ++it) out.push_back(-*it);
        else
          out.push_back(x);
      }
      free_and_cyclic_reduce(out);
      w = std::move(out);
    }
    rels.erase(std::remove_if(rels.begin(), rels.end(),
                              [](const std::vector<int>& w) { return w.empty(); }),
               rels.end());
  };

  bool progress = true;
  while (progress && steps < budget) {
    progress = false;
    // find a relator with a generator occurring exactly once
    for (std::size_t ri = 0; ri < rels.size() && !progress; ++ri) {
      const std::vector<int> w = rels[ri];
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int gen = std::abs(w[pos]) - 1;
        std::size_t occurrences = 0;
        for (int x : w)
          if (std::abs(x) - 1 == gen) ++occurrences;
        if (occurrences != 1) continue;
        // w = u g^e v = 1  =>  g^e = u^{-1} v^{-1}
        std::vector<int> expr;
        const std::vector<int> u(w.begin(), w.begin() + pos);
        const std::vector<int> v(w.begin() + pos + 1, w.end());
        for (auto it = u.rbegin(); it != u.rend(); ++it) expr.push_back(-*it);
        for (auto it = v.rbegin(); it != v.rend(); ++it) expr.push_back(-*it);
        if (w[pos] < 0) {  // g^{-1} = expr -> g = expr^{-1}
          std::vector<int> inv;
          for (auto it = expr.rbegin(); it != expr.rend(); ++it) inv.push_back(-*it);
          expr = std::move(inv);
        }
        rels.erase(rels.begin() + ri);
        substitute(gen, expr);
        alive[gen] = false;
        ++steps;
        progress = true;
        break;
      }
    }
  }

  const std::size_t remaining =
      static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  if (remaining == 0) return Pi1Status::Trivial;

  // abelianization of the surviving presentation
  std::map<std::size_t, std::size_t> gix;
  for (std::size_t g = 0; g < ngens; ++g)
    if (alive[g]) gix[g] = gix.size();
  IntMatrix ab(rels.size(), remaining);
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (int x : rels[i]) {
      const std::size_t g = std::abs(x) - 1;
      ab.at(i, gix[g]) += x > 0 ? 1 : -1;
    }
  const SmithResult s = smith_normal_form(ab);
  const bool h1_trivial =
      s.rank == remaining &&
      std::all_of(s.diagonal.begin(), s.diagonal.end(),
                  [](const BigInt& d) { return d == 1; });
  return h1_trivial ? Pi1Status::Inconclusive : Pi1Status::NontrivialH1;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  const auto& by_dim = k.faces_by_dim();
  std::vector<const std::vector<int>*> all;
  for (const auto& faces : by_dim)
    for (const auto& f : faces) all.push_back(&f);
  auto less = [&](int i, int j) {
    const auto& a = *all[i];
    const auto& b = *all[j];
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return order_complex(all.size(), less);
}

SimplicialComplex order_complex(std::size_t n,
                                const std::function<bool(int, int)>& strictly_less) {
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) lt[i][j] = strictly_less(static_cast<int>(i), static_cast<int>(j));

  // cover relation: i < j with nothing strictly between
  std::vector<std::vector<int>> covers(n);
  std::vector<bool> has_lower(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      has_lower[j] = true;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (lt[i][z] && lt[z][j]) cover = false;
      if (cover) covers[i].push_back(static_cast<int>(j));
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

}  // namespace matroidlab
