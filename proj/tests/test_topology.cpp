#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "matroidlab/errors.hpp"
#include "matroidlab/poset_ir.hpp"
#include "matroidlab/simplicial_complex.hpp"
#include "test_support.hpp"

using namespace matroidlab;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex solid_triangle() {
  return SimplicialComplex::from_facets(3, {{0, 1, 2}});
}

SimplicialComplex tetra_boundary() {
  return SimplicialComplex::from_facets(
      4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("generic order complexes") {
  // antichain: isolated vertices
  const SimplicialComplex anti = order_complex(4, [](int, int) { return false; });
  CHECK(anti.f_vector() == std::vector<std::size_t>{4});

  // a two-element chain: one edge
  const SimplicialComplex chain =
      order_complex(2, [](int a, int b) { return a < b; });
  CHECK(chain.f_vector() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("boundary matrices") {
  const ChainComplex solid(solid_triangle());
  REQUIRE(solid.top_dimension() == 2);
  const IntMatrix& d2 = solid.boundary(2);
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 1);
  // faces {1,2},{0,2},{0,1} in lexicographic row order {0,1},{0,2},{1,2}
  CHECK(d2.at(0, 0) == 1);   // drop vertex 2
  CHECK(d2.at(1, 0) == -1);  // drop vertex 1
  CHECK(d2.at(2, 0) == 1);   // drop vertex 0

  const ChainComplex hollow(hollow_triangle());
  CHECK(rank_int(hollow.boundary(1)) == 2);
  CHECK(nullspace_int(hollow.boundary(1)).rows() == 1);

  const ChainComplex p(complement_complex_r3());
  CHECK(p.boundary(3).rows() == 35);
  CHECK(p.boundary(3).cols() == 28);
}

TEST_CASE("betti numbers") {
  const HomologyReport p = betti_numbers(complement_complex_r3());
  CHECK(p.betti == std::vector<std::size_t>{1, 0, 0, 8});
  for (const auto& t : p.torsion) CHECK(t.empty());
  CHECK(p.euler == -7);

  CHECK(betti_numbers(hollow_triangle()).betti == std::vector<std::size_t>{1, 1});
  CHECK(betti_numbers(tetra_boundary()).betti == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti_numbers(SimplicialComplex::from_facets(1, {{0}})).betti ==
        std::vector<std::size_t>{1});
}

TEST_CASE("euler characteristics") {
  CHECK(euler_characteristic(complement_complex_r3()) == -7);
  CHECK(euler_characteristic(SimplicialComplex::from_facets(1, {{0}})) == 1);
  // alternating sum of betti equals euler on an assortment
  for (const SimplicialComplex& k :
       {hollow_triangle(), solid_triangle(), tetra_boundary(), complement_complex_r3()}) {
    const HomologyReport h = betti_numbers(k);
    long long alt = 0;
    for (std::size_t i = 0; i < h.betti.size(); ++i)
      alt += (i % 2 == 0) ? static_cast<long long>(h.betti[i])
                          : -static_cast<long long>(h.betti[i]);
    CHECK(alt == h.euler);
  }
}

TEST_CASE("shelling search and verification") {
  CHECK(find_shelling(solid_triangle()) == std::vector<std::size_t>{0});

  const SimplicialComplex p = complement_complex_r3();
  const auto order = find_shelling(p);
  REQUIRE(order.has_value());
  CHECK(verify_shelling(p, *order));

  // two triangles meeting in a vertex: the prefix intersection is a point
  const SimplicialComplex wedge =
      SimplicialComplex::from_facets(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK_FALSE(find_shelling(wedge).has_value());
  CHECK_FALSE(verify_shelling(wedge, {0, 1}));

  // order sensitivity: {0,1,2},{1,2,3},{1,3,4} shells in that order but not
  // with the last two swapped
  const SimplicialComplex strip =
      SimplicialComplex::from_facets(5, {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}});
  CHECK(verify_shelling(strip, {0, 1, 2}));
  CHECK_FALSE(verify_shelling(strip, {0, 2, 1}));
  CHECK_THROWS_AS(verify_shelling(strip, {0, 1}), BadPermutation);
  CHECK_THROWS_AS(verify_shelling(strip, {0, 1, 1}), BadPermutation);

  const SimplicialComplex impure =
      SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
  CHECK_THROWS_AS(find_shelling(impure), NotPure);

  // a shellable connected complex is a wedge of top spheres: b_i = 0 in
  // intermediate dimensions
  const HomologyReport hp = betti_numbers(p);
  for (std::size_t i = 1; i + 1 < hp.betti.size(); ++i) CHECK(hp.betti[i] == 0);
}

TEST_CASE("fundamental group statuses") {
  CHECK(pi1_trivial(complement_complex_r3()) == Pi1Status::Trivial);
  CHECK(pi1_trivial(order_complex(enumerate_ir_f2(2))) == Pi1Status::Trivial);
  CHECK(pi1_trivial(hollow_triangle()) == Pi1Status::NontrivialH1);
  CHECK(pi1_trivial(solid_triangle()) == Pi1Status::Trivial);
  CHECK(pi1_trivial(tetra_boundary()) == Pi1Status::Trivial);

  const SimplicialComplex disconnected =
      SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(pi1_trivial(disconnected), Disconnected);
}

TEST_CASE("barycentric subdivision") {
  const SimplicialComplex edge = SimplicialComplex::from_facets(2, {{0, 1}});
  const SimplicialComplex sd_edge = barycentric_subdivision(edge);
  CHECK(sd_edge.f_vector() == std::vector<std::size_t>{3, 2});

  const SimplicialComplex sd_tri = barycentric_subdivision(solid_triangle());
  REQUIRE(sd_tri.f_vector().size() == 3);
  CHECK(sd_tri.f_vector()[2] == 6);

  const HomologyReport a = betti_numbers(hollow_triangle());
  const HomologyReport b = betti_numbers(barycentric_subdivision(hollow_triangle()));
  CHECK(a.betti == b.betti);
}

TEST_CASE("boundary of boundary vanishes on random complexes") {
  auto rng = testsupport::seeded_rng(41);
  std::uniform_int_distribution<int> nfacets(1, 6), fsize(1, 4), vert(0, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::vector<int>> facets;
    for (int i = 0, k = nfacets(rng); i < k; ++i) {
      std::set<int> f;
      for (int j = 0, s = fsize(rng); j < s; ++j) f.insert(vert(rng));
      facets.emplace_back(f.begin(), f.end());
    }
    const SimplicialComplex k = SimplicialComplex::from_facets(7, facets);
    CHECK_NOTHROW(boundary_matrices(k));  // the constructor checks dd = 0
    const HomologyReport h = betti_numbers(k);
    long long alt = 0;
    for (std::size_t i = 0; i < h.betti.size(); ++i)
      alt += (i % 2 == 0) ? static_cast<long long>(h.betti[i])
                          : -static_cast<long long>(h.betti[i]);
    CHECK(alt == h.euler);
  }
}
