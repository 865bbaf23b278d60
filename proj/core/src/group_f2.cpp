#include "matroidlab/group_f2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

std::uint8_t apply_rows(std::size_t r, const std::array<std::uint8_t, 4>& rows,
                        std::uint8_t v) {
  std::uint8_t out = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (std::popcount(static_cast<unsigned>(rows[i] & v)) % 2) out |= 1u << i;
  return out;
}

}  // namespace

GLElement gl_from_rows(std::size_t r, const std::array<std::uint8_t, 4>& rows) {
  GLElement g;
  g.r = r;
  g.rows = rows;
  for (std::uint32_t v = 0; v < (1u << r); ++v)
    g.table[v] = apply_rows(r, rows, static_cast<std::uint8_t>(v));
  return g;
}

GLElement gl_identity(std::size_t r) {
  std::array<std::uint8_t, 4> rows{};
  for (std::size_t i = 0; i < r; ++i) rows[i] = 1u << i;
  return gl_from_rows(r, rows);
}

GLElement gl_compose(const GLElement& a, const GLElement& b) {
  GLElement g;
  g.r = a.r;
  for (std::uint32_t v = 0; v < (1u << a.r); ++v) g.table[v] = a.table[b.table[v]];
  // row i of the product = preimages of coordinate i through b then a
  for (std::size_t i = 0; i < a.r; ++i) {
    std::uint8_t row = 0;
    for (std::size_t j = 0; j < a.r; ++j)
      if (g.table[1u << j] >> i & 1u) row |= 1u << j;
    g.rows[i] = row;
  }
  return g;
}

std::vector<GLElement> enumerate_group(std::size_t r) {
  if (r < 1 || r > 4) throw RankTooLarge("enumerate_group supports 1 <= r <= 4");
  std::vector<GLElement> out;
  const std::uint32_t space = 1u << r;
  std::array<std::uint8_t, 4> rows{};
  // choose rows as any sequence of vectors staying independent
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                            std::uint32_t span_mask) {
    if (i == r) {
      out.push_back(gl_from_rows(r, rows));
      return;
    }
    for (std::uint32_t v = 1; v < space; ++v) {
      if (span_mask >> v & 1u) continue;  // in the span of previous rows
      rows[i] = static_cast<std::uint8_t>(v);
      // extend the span
      std::uint32_t next = span_mask;
      for (std::uint32_t s = 0; s < space; ++s)
        if (span_mask >> s & 1u || s == 0) next |= 1u << (s ^ v);
      rec(i + 1, next | span_mask | 1u);
      rows[i] = 0;
    }
  };
  rec(0, 1u);  // span of nothing = {0}
  return out;
}

namespace {

std::size_t element_order(const GLElement& g) {
  GLElement x = g;
  const GLElement id = gl_identity(g.r);
  std::size_t order = 1;
  while (!(x == id)) {
    x = gl_compose(x, g);
    ++order;
  }
  return order;
}

// char poly det(xI + A) over F2 by permutation expansion; entry (i,j) is
// the linear polynomial a_ij + [i==j] x, encoded as a coefficient bitmask.
std::vector<int> charpoly_f2(const GLElement& g) {
  const std::size_t r = g.r;
  std::vector<int> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
  std::uint32_t acc = 0;  // coefficient bitmask, bit k = coeff of x^k
  std::sort(perm.begin(), perm.end());
  do {
    std::uint32_t prod = 1;  // the constant polynomial 1
    bool zero = false;
    for (std::size_t i = 0; i < r && !zero; ++i) {
      const std::size_t j = perm[i];
      std::uint32_t entry = (g.rows[i] >> j & 1u) ? 1u : 0u;
      if (i == j) entry ^= 2u;  // + x
      if (entry == 0) {
        zero = true;
        break;
      }
      // multiply prod by entry over F2[x]
      std::uint32_t next = 0;
      for (int k = 0; k < 8; ++k)
        if (entry >> k & 1u) next ^= prod << k;
      prod = next;
    }
    if (!zero) acc ^= prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> coeffs;
  for (int k = static_cast<int>(r); k >= 0; --k) coeffs.push_back(acc >> k & 1u);
  return coeffs;
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(const std::vector<GLElement>& group) {
  if (group.empty()) return {};
  const std::size_t r = group[0].r;
  // conjugating generators: the transvections I + E_ij (self-inverse)
  std::vector<GLElement> gens;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      std::array<std::uint8_t, 4> rows{};
      for (std::size_t k = 0; k < r; ++k) rows[k] = 1u << k;
      rows[i] |= 1u << j;
      gens.push_back(gl_from_rows(r, rows));
    }

  std::set<GLElement> remaining(group.begin(), group.end());
  std::vector<ConjClass> classes;
  while (!remaining.empty()) {
    const GLElement seed = *remaining.begin();
    std::set<GLElement> orbit{seed};
    std::vector<GLElement> queue{seed};
    while (!queue.empty()) {
      const GLElement x = queue.back();
      queue.pop_back();
      for (const GLElement& t : gens) {
        const GLElement y = gl_compose(gl_compose(t, x), t);  // t x t^{-1}, t = t^{-1}
        if (orbit.insert(y).second) queue.push_back(y);
      }
    }
    ConjClass c;
    c.rep = *orbit.begin();
    c.size = orbit.size();
    c.element_order = element_order(c.rep);
    c.charpoly = charpoly_f2(c.rep);
    classes.push_back(std::move(c));
    for (const GLElement& x : orbit) remaining.erase(x);
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.charpoly < b.charpoly;
  });
  return classes;
}

std::vector<long long> action_character_on_points(const std::vector<ConjClass>& classes) {
  std::vector<long long> out;
  for (const ConjClass& c : classes) {
    long long fixed = 0;
    for (std::uint32_t v = 1; v < (1u << c.rep.r); ++v)
      if (c.rep.table[v] == v) ++fixed;
    out.push_back(fixed);
  }
  return out;
}

std::optional<int> face_fix_sign(const GLElement& g, const std::vector<int>& face) {
  std::vector<int> image;
  image.reserve(face.size());
  for (int v : face)
    image.push_back(static_cast<int>(g.table[v + 1]) - 1);
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != face) return std::nullopt;
  // parity of the induced permutation
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<long long> hopf_trace_character(const SimplicialComplex& k,
                                            const std::vector<GLElement>& group,
                                            const std::vector<ConjClass>& classes) {
  if (group.empty()) throw ActionNotSimplicial("empty group");
  const std::size_t r = group[0].r;
  if (k.vertex_count() != (1u << r) - 1)
    throw ActionNotSimplicial("vertex count does not match the point count of F2^r");
  // every group element must map facets to faces
  for (const GLElement& g : group)
    for (const auto& f : k.facets()) {
      std::vector<int> image;
      for (int v : f) image.push_back(static_cast<int>(g.table[v + 1]) - 1);
      std::sort(image.begin(), image.end());
      if (!k.has_face(image))
        throw ActionNotSimplicial("a group element does not preserve the complex");
    }

  const auto& faces = k.faces_by_dim();
  std::vector<long long> out;
  for (const ConjClass& c : classes) {
    long long trace = 0;
    for (std::size_t d = 0; d < faces.size(); ++d) {
      long long dim_trace = 0;
      for (const auto& f : faces[d])
        if (const auto s = face_fix_sign(c.rep, f)) dim_trace += *s;
      trace += (d % 2 == 0) ? dim_trace : -dim_trace;
    }
    out.push_back(trace);
  }
  return out;
}

std::vector<long long> h3_character(const SimplicialComplex& k,
                                    const std::vector<GLElement>& group,
                                    const std::vector<ConjClass>& classes) {
  const HomologyReport h = betti_numbers(k);
  const std::vector<std::size_t> expected{1, 0, 0, 8};
  if (h.betti != expected)
    throw BettiMismatch("h3_character requires betti numbers (1,0,0,8)");
  std::vector<long long> out = hopf_trace_character(k, group, classes);
  for (long long& x : out) x = 1 - x;
  return out;
}

long long character_inner_times_group(const std::vector<long long>& a,
                                      const std::vector<long long>& b,
                                      const std::vector<ConjClass>& classes) {
  long long acc = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    acc += static_cast<long long>(classes[i].size) * a[i] * b[i];
  return acc;
}

}  // namespace matroidlab
