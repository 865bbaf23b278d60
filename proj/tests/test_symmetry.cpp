#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "matroidlab/errors.hpp"
#include "matroidlab/group_f2.hpp"
#include "matroidlab/poset_ir.hpp"
#include "test_support.hpp"

using namespace matroidlab;

namespace {

struct SL3Setup {
  std::vector<GLElement> group = enumerate_group(3);
  std::vector<ConjClass> classes = conjugacy_classes(group);
  SimplicialComplex p = complement_complex_r3();
};

// signed fixed-face character over an arbitrary face family
std::vector<long long> signed_fixed_character(const std::vector<ConjClass>& classes,
                                              const std::vector<std::vector<int>>& faces) {
  std::vector<long long> out;
  for (const ConjClass& c : classes) {
    long long acc = 0;
    for (const auto& f : faces)
      if (const auto s = face_fix_sign(c.rep, f)) acc += *s;
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(1).size() == 1);
  CHECK(enumerate_group(2).size() == 6);
  CHECK(enumerate_group(3).size() == 168);
  CHECK(enumerate_group(4).size() == 20160);  // prod(2^4 - 2^i)
  CHECK_THROWS_AS(enumerate_group(5), RankTooLarge);

  // closure under composition for r = 2
  const auto g2 = enumerate_group(2);
  for (const GLElement& a : g2)
    for (const GLElement& b : g2) {
      const GLElement c = gl_compose(a, b);
      CHECK(std::find(g2.begin(), g2.end(), c) != g2.end());
    }
}

TEST_CASE("conjugacy classes of SL(3,F2)") {
  const SL3Setup s;
  REQUIRE(s.classes.size() == 6);
  std::vector<std::size_t> sizes, orders;
  for (const ConjClass& c : s.classes) {
    sizes.push_back(c.size);
    orders.push_back(c.element_order);
  }
  CHECK(sizes == std::vector<std::size_t>{1, 21, 56, 42, 24, 24});
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 7, 7});

  // the two order-7 classes are split by characteristic polynomial,
  // x^3+x+1 before x^3+x^2+1
  CHECK(s.classes[4].charpoly == std::vector<int>{1, 0, 1, 1});
  CHECK(s.classes[5].charpoly == std::vector<int>{1, 1, 0, 1});

  std::size_t total = 0;
  for (const ConjClass& c : s.classes) {
    total += c.size;
    CHECK(168 % c.size == 0);
  }
  CHECK(total == 168);

  CHECK(conjugacy_classes(enumerate_group(2)).size() == 3);
}

TEST_CASE("fixed points on nonzero vectors") {
  const SL3Setup s;
  const auto chi = action_character_on_points(s.classes);
  CHECK(chi == std::vector<long long>{7, 3, 1, 1, 0, 0});
}

TEST_CASE("hopf trace of the complement complex") {
  const SL3Setup s;
  const auto hopf = hopf_trace_character(s.p, s.group, s.classes);
  CHECK(hopf == std::vector<long long>{-7, 1, 2, 1, 0, 0});

  // identity entry is the Euler characteristic
  CHECK(hopf[0] == euler_characteristic(s.p));

  // trivial group: a single class carrying chi(P)
  const std::vector<GLElement> trivial{gl_identity(3)};
  const auto tc = conjugacy_classes(trivial);
  CHECK(hopf_trace_character(s.p, trivial, tc) == std::vector<long long>{-7});
}

TEST_CASE("hopf trace is a class function") {
  const SL3Setup s;
  const auto hopf = hopf_trace_character(s.p, s.group, s.classes);
  auto rng = testsupport::seeded_rng(51);
  const auto faces = s.p.faces_by_dim();
  // recompute the trace at a random conjugate of each representative
  for (std::size_t ci = 0; ci < s.classes.size(); ++ci) {
    const GLElement& rep = s.classes[ci].rep;
    std::uniform_int_distribution<std::size_t> pick(0, s.group.size() - 1);
    const GLElement& t = s.group[pick(rng)];
    // t rep t^{-1}: find the inverse by search
    const GLElement* tinv = nullptr;
    for (const GLElement& cand : s.group)
      if (gl_compose(t, cand) == gl_identity(3)) tinv = &cand;
    REQUIRE(tinv != nullptr);
    const GLElement conj = gl_compose(gl_compose(t, rep), *tinv);

    long long trace = 0;
    for (std::size_t d = 0; d < faces.size(); ++d) {
      long long dim_trace = 0;
      for (const auto& f : faces[d])
        if (const auto sg = face_fix_sign(conj, f)) dim_trace += *sg;
      trace += (d % 2 == 0) ? dim_trace : -dim_trace;
    }
    CHECK(trace == hopf[ci]);
  }
}

TEST_CASE("H3 character matches the table and is irreducible") {
  const SL3Setup s;
  const auto chi3 = h3_character(s.p, s.group, s.classes);
  CHECK(chi3 == std::vector<long long>{8, 0, -1, 0, 1, 1});
  CHECK(std::equal(chi3.begin(), chi3.end(), SL3F2Table::chi3.begin()));

  CHECK(character_inner_times_group(chi3, chi3, s.classes) == 168);  // norm 1
  const std::vector<long long> trivial(6, 1);
  CHECK(character_inner_times_group(chi3, trivial, s.classes) == 0);

  // a wrong complex raises BettiMismatch (the full simplex is invariant)
  const SimplicialComplex simplex =
      SimplicialComplex::from_facets(7, {{0, 1, 2, 3, 4, 5, 6}});
  CHECK_THROWS_AS(h3_character(simplex, s.group, s.classes), BettiMismatch);

  // a non-invariant complex raises ActionNotSimplicial
  const SimplicialComplex lopsided = SimplicialComplex::from_facets(7, {{0, 1}});
  CHECK_THROWS_AS(hopf_trace_character(lopsided, s.group, s.classes),
                  ActionNotSimplicial);
}

TEST_CASE("the character identity behind the Hopf trace") {
  const SL3Setup s;
  // C0: points; C1: oriented pairs; C2a: oriented hyperplanes (lines)
  std::vector<std::vector<int>> pairs, lines;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      pairs.push_back({a, b});
      const int c = ((a + 1) ^ (b + 1)) - 1;
      if (c > b) lines.push_back({a, b, c});
    }
  REQUIRE(lines.size() == 7);

  const auto c0 = action_character_on_points(s.classes);
  const auto c1 = signed_fixed_character(s.classes, pairs);
  const auto c2a = signed_fixed_character(s.classes, lines);
  CHECK(c0 == std::vector<long long>{7, 3, 1, 1, 0, 0});
  CHECK(c1 == std::vector<long long>{21, 1, 0, -1, 0, 0});
  CHECK(c2a == std::vector<long long>{7, -1, 1, -1, 0, 0});

  const auto hopf = hopf_trace_character(s.p, s.group, s.classes);
  for (std::size_t i = 0; i < 6; ++i) CHECK(c0[i] - c1[i] + c2a[i] == hopf[i]);
}
