#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "matroidlab/errors.hpp"
#include "matroidlab/geodesic.hpp"
#include "matroidlab/poset_ir.hpp"
#include "matroidlab/simplicial_complex.hpp"
#include "test_support.hpp"

using namespace matroidlab;

namespace {

std::uint32_t node_from_vectors(std::initializer_list<std::uint32_t> vs) {
  std::uint32_t node = 0;
  for (std::uint32_t v : vs) node |= 1u << (v - 1);
  return node;
}

}  // namespace

TEST_CASE("binary distance") {
  CHECK(binary_distance(0b10110u, 0b10110u) == 0);
  // two disjoint bases of F2^3 are at distance 2r = 6
  const std::uint32_t b1 = node_from_vectors({1, 2, 4});
  const std::uint32_t b2 = node_from_vectors({3, 5, 7});
  CHECK(binary_distance(b1, b2) == 6);

  const Rank5Counterexample cx = counterexample_rank5();
  CHECK(binary_distance(cx.e1_node, cx.e2_node) == 2);

  // metric axioms on the 91 nodes of IR(3,F2)
  const IRPoset p = enumerate_ir_f2(3);
  auto rng = testsupport::seeded_rng(61);
  std::uniform_int_distribution<std::size_t> pick(0, p.nodes.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t a = p.nodes[pick(rng)], b = p.nodes[pick(rng)],
                        c = p.nodes[pick(rng)];
    CHECK(binary_distance(a, b) + binary_distance(b, c) >= binary_distance(a, c));
    CHECK((binary_distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("regular geodesic construction") {
  const IRPoset p = enumerate_ir_f2(3);
  const std::set<std::uint32_t> members(p.nodes.begin(), p.nodes.end());

  // identical endpoints
  const std::uint32_t basis = node_from_vectors({1, 2, 4});
  CHECK(construct_regular_geodesic(3, basis, basis).length() == 0);

  // single exchange between bases sharing r-1 elements
  const std::uint32_t b2 = node_from_vectors({1, 2, 5});
  const PosetPath two = construct_regular_geodesic(3, basis, b2);
  CHECK(two.length() == 2);
  CHECK(two.steps[1] == (basis | b2));

  // random independent-intersection pairs stay in the poset
  auto rng = testsupport::seeded_rng(62);
  std::uniform_int_distribution<std::size_t> pick(0, p.nodes.size() - 1);
  int tested = 0;
  while (tested < 40) {
    const std::uint32_t e1 = p.nodes[pick(rng)], e2 = p.nodes[pick(rng)];
    if (matroid_from_node(3, e1 & e2).rank() !=
        static_cast<std::size_t>(std::popcount(e1 & e2)))
      continue;
    ++tested;
    const PosetPath path = construct_regular_geodesic(3, e1, e2);
    CHECK(path.length() == binary_distance(e1, e2));
    CHECK(path.steps.front() == e1);
    CHECK(path.steps.back() == e2);
    for (std::size_t i = 0; i + 1 < path.steps.size(); ++i)
      CHECK(binary_distance(path.steps[i], path.steps[i + 1]) == 1);
    for (std::uint32_t node : path.steps) CHECK(members.count(node) == 1);
  }

  // a dependent intersection is rejected: two 6-element sets overlapping in
  // five vectors of rank 3
  const std::uint32_t big1 = 0x7fu & ~(1u << 6);
  const std::uint32_t big2 = 0x7fu & ~(1u << 5);
  CHECK_THROWS_AS(construct_regular_geodesic(3, big1, big2), IntersectionDependent);

  // endpoints must be nodes
  CHECK_THROWS_AS(construct_regular_geodesic(3, node_from_vectors({1, 2, 3}), basis),
                  NotInPoset);
}

TEST_CASE("geodesic existence search") {
  const IRPoset p = enumerate_ir_f2(3);
  auto rng = testsupport::seeded_rng(63);
  std::uniform_int_distribution<std::size_t> pick(0, p.nodes.size() - 1);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t e1 = p.nodes[pick(rng)], e2 = p.nodes[pick(rng)];
    if (matroid_from_node(3, e1 & e2).rank() ==
        static_cast<std::size_t>(std::popcount(e1 & e2)))
      CHECK(geodesic_exists(3, e1, e2));
  }

  // nested nodes connect by adding elements one at a time
  const std::uint32_t inner = node_from_vectors({1, 2, 4});
  const std::uint32_t outer = node_from_vectors({1, 2, 4, 7});
  const GeodesicSearch nested = geodesic_search(3, inner, outer);
  CHECK(nested.exists);
  REQUIRE(nested.path.has_value());
  CHECK(nested.path->length() == 1);
}

TEST_CASE("the rank-3 poset is simply connected") {
  // independent check of the connectivity conclusion behind the geodesic
  // machinery: the order complex of IR(3,F2) has trivial pi1
  const SimplicialComplex k = order_complex(enumerate_ir_f2(3));
  CHECK(pi1_trivial(k) == Pi1Status::Trivial);
}

TEST_CASE("rank-5 counterexample") {
  const Rank5Counterexample cx = counterexample_rank5();
  CHECK(cx.e1.rank() == 5);
  CHECK(cx.e2.rank() == 5);
  CHECK(is_regular(cx.e1));
  CHECK(is_regular(cx.e2));
  CHECK(cx.intersection_rank == 4);
  CHECK(cx.union_witness.type == FanoType::F7);

  const GeodesicSearch search = geodesic_search(5, cx.e1_node, cx.e2_node);
  CHECK_FALSE(search.exists);
  // both length-2 routes are blocked: the union is not regular, the
  // intersection does not span
  const std::uint32_t union_node = cx.e1_node | cx.e2_node;
  const std::uint32_t inter_node = cx.e1_node & cx.e2_node;
  bool union_blocked = false, inter_blocked = false;
  for (const auto& [node, reason] : search.blocked) {
    if (node == union_node) {
      union_blocked = true;
      CHECK(reason == "not_regular");
    }
    if (node == inter_node) {
      inter_blocked = true;
      CHECK(reason == "not_spanning");
    }
  }
  CHECK(union_blocked);
  CHECK(inter_blocked);
  CHECK(search.blocked.size() == 2);
}
