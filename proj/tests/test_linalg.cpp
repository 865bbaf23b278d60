#include <random>
#include <vector>

#include "doctest.h"
#include "matroidlab/errors.hpp"
#include "matroidlab/f2_matrix.hpp"
#include "matroidlab/int_matrix.hpp"
#include "matroidlab/matrix_io.hpp"
#include "test_support.hpp"

using namespace matroidlab;

namespace {

// Independent oracle: determinant by cofactor expansion.
BigInt det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    const BigInt term = m.at(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

// Independent oracle for invariant factors: determinantal divisors
// D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}.
std::vector<BigInt> snf_oracle(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<BigInt> dd;  // D_1, D_2, ...
  for (std::size_t k = 1; k <= kmax; ++k) {
    BigInt g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    for (std::size_t i = 0; i < k; ++i) rs[i] = i;
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) cs[i] = i;
      for (;;) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
        BigInt d = det_cofactor(sub);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cs[i] == m.cols() - k + i) --i;
        if (i < 0) break;
        ++cs[i];
        for (std::size_t x = i + 1; x < k; ++x) cs[x] = cs[x - 1] + 1;
      }
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && rs[i] == m.rows() - k + i) --i;
      if (i < 0) break;
      ++rs[i];
      for (std::size_t x = i + 1; x < k; ++x) rs[x] = rs[x - 1] + 1;
    }
    if (g == 0) break;
    dd.push_back(g);
  }
  std::vector<BigInt> diag;
  for (std::size_t k = 0; k < dd.size(); ++k)
    diag.push_back(k == 0 ? dd[0] : BigInt(dd[k] / dd[k - 1]));
  return diag;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t maxdim, int span) {
  std::uniform_int_distribution<std::size_t> dim(1, maxdim);
  std::uniform_int_distribution<int> val(-span, span);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
  return m;
}

F2Matrix random_f2_matrix(std::mt19937_64& rng, std::size_t maxdim) {
  std::uniform_int_distribution<std::size_t> dim(1, maxdim);
  std::uniform_int_distribution<int> bit(0, 1);
  F2Matrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, bit(rng) == 1);
  return m;
}

}  // namespace

TEST_CASE("rank_f2 on the named matrices") {
  CHECK(rank_f2(testsupport::fano_matrix()) == 3);
  CHECK(rank_f2(F2Matrix(3, 4)) == 0);
  CHECK(rank_f2(testsupport::fano_dual_matrix()) == 4);
  CHECK(rank_f2(F2Matrix::identity(5)) == 5);
}

TEST_CASE("nullspace_f2 basics") {
  CHECK(nullspace_f2(F2Matrix::identity(3)).rows() == 0);
  const F2Matrix fano = testsupport::fano_matrix();
  const F2Matrix ns = nullspace_f2(fano);
  CHECK(ns.rows() == 4);  // 7 - 3 by rank-nullity
  // every basis vector is in the kernel
  for (std::size_t v = 0; v < ns.rows(); ++v)
    for (std::size_t i = 0; i < fano.rows(); ++i) {
      int parity = 0;
      for (std::size_t j = 0; j < fano.cols(); ++j)
        parity ^= (fano.get(i, j) && ns.get(v, j)) ? 1 : 0;
      CHECK(parity == 0);
    }
  CHECK(rank_f2(ns) == ns.rows());

  const F2Matrix dup = parse_f2_matrix("1 1\n0 0\n");
  const F2Matrix dns = nullspace_f2(dup);
  REQUIRE(dns.rows() == 1);
  CHECK(dns.get(0, 0));
  CHECK(dns.get(0, 1));
}

TEST_CASE("rank/nullity and transpose invariance on random matrices") {
  auto rng = testsupport::seeded_rng(11);
  for (int t = 0; t < 200; ++t) {
    const F2Matrix m = random_f2_matrix(rng, 10);
    CHECK(rank_f2(m) == rank_f2(m.transposed()));
    CHECK(rank_f2(m) + nullspace_f2(m).rows() == m.cols());
  }
}

TEST_CASE("smith normal form of simple matrices") {
  SUBCASE("identity") {
    const SmithResult s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.rank == 3);
    CHECK(s.diagonal == std::vector<BigInt>{1, 1, 1});
  }
  SUBCASE("already diagonal") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    const SmithResult s = smith_normal_form(m);
    CHECK(s.rank == 1);
    CHECK(s.diagonal == std::vector<BigInt>{2});
  }
  SUBCASE("boundary matrix of the 3-cycle graph") {
    // vertices 3, edges (0,1),(1,2),(2,0); expected values frozen from the
    // determinantal-divisor oracle.
    const IntMatrix b = parse_int_matrix(
        "-1 0 1\n"
        "1 -1 0\n"
        "0 1 -1\n");
    const SmithResult s = smith_normal_form(b);
    CHECK(s.rank == 2);
    CHECK(s.diagonal == std::vector<BigInt>{1, 1});
    CHECK(snf_oracle(b) == s.diagonal);
  }
}

TEST_CASE("smith normal form agrees with the determinantal-divisor oracle") {
  auto rng = testsupport::seeded_rng(12);
  for (int t = 0; t < 120; ++t) {
    const IntMatrix m = random_int_matrix(rng, 4, 6);
    const SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal == snf_oracle(m));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
}

TEST_CASE("smith normal form is invariant under permutations and sign flips") {
  auto rng = testsupport::seeded_rng(13);
  for (int t = 0; t < 80; ++t) {
    const IntMatrix m = random_int_matrix(rng, 5, 5);
    IntMatrix p = m;
    // random row/col permutation and sign flips
    std::vector<std::size_t> rp(m.rows()), cp(m.cols());
    for (std::size_t i = 0; i < rp.size(); ++i) rp[i] = i;
    for (std::size_t j = 0; j < cp.size(); ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> rs(m.rows()), cs(m.cols());
    for (auto& x : rs) x = coin(rng) ? -1 : 1;
    for (auto& x : cs) x = coin(rng) ? -1 : 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        p.at(i, j) = BigInt(rs[i] * cs[j]) * m.at(rp[i], cp[j]);
    CHECK(smith_normal_form(p).diagonal == smith_normal_form(m).diagonal);
  }
}

TEST_CASE("determinant matches cofactor expansion and SNF diagonal product") {
  auto rng = testsupport::seeded_rng(14);
  for (int t = 0; t < 120; ++t) {
    IntMatrix m = random_int_matrix(rng, 4, 5);
    if (m.rows() != m.cols()) continue;
    const BigInt d = determinant(m);
    CHECK(d == det_cofactor(m));
    const SmithResult s = smith_normal_form(m);
    if (s.rank == m.rows()) {
      BigInt prod = 1;
      for (const auto& x : s.diagonal) prod *= x;
      CHECK((d == prod || d == -prod));
    } else {
      CHECK(d == 0);
    }
  }
}

TEST_CASE("row transform tracks the column-space saturation") {
  auto rng = testsupport::seeded_rng(15);
  for (int t = 0; t < 60; ++t) {
    const IntMatrix m = random_int_matrix(rng, 4, 4);
    const SmithWithTransform st = smith_normal_form_with_row_transform(m);
    const IntMatrix& u = st.row_transform;
    BigInt du = determinant(u);
    CHECK((du == 1 || du == -1));
    // U maps any column-space vector into the first `rank` coordinates.
    std::uniform_int_distribution<int> cf(-3, 3);
    std::vector<BigInt> x(m.rows(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const int c = cf(rng);
      for (std::size_t i = 0; i < m.rows(); ++i) x[i] += c * m.at(i, j);
    }
    for (std::size_t i = st.snf.rank; i < m.rows(); ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < m.rows(); ++j) acc += u.at(i, j) * x[j];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("integer nullspace vectors are primitive kernel elements") {
  auto rng = testsupport::seeded_rng(16);
  for (int t = 0; t < 80; ++t) {
    const IntMatrix m = random_int_matrix(rng, 4, 4);
    const IntMatrix ns = nullspace_int(m);
    CHECK(ns.rows() + rank_int(m) == m.cols());
    for (std::size_t v = 0; v < ns.rows(); ++v) {
      BigInt g = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * ns.at(v, j);
        CHECK(acc == 0);
      }
      for (std::size_t j = 0; j < m.cols(); ++j)
        g = boost::multiprecision::gcd(g, ns.at(v, j));
      CHECK(g == 1);
    }
  }
}

TEST_CASE("is_unimodular_basis") {
  using V = std::vector<BigInt>;
  CHECK(is_unimodular_basis({V{1, 0}, V{0, 1}}));
  CHECK_FALSE(is_unimodular_basis({V{1, 0}, V{1, 2}}));
  CHECK(is_unimodular_basis({V{1, 0}, V{1, 1}}));
  CHECK_THROWS_AS(is_unimodular_basis({V{1, 0, 0}, V{0, 1, 0}}), DimensionMismatch);
}

TEST_CASE("matrix text format round trip") {
  const F2Matrix f = testsupport::fano_matrix();
  CHECK(parse_f2_matrix(to_text(f)) == f);
  const IntMatrix m = parse_int_matrix("1 -2 3\n0 4 -5\n");
  CHECK(parse_int_matrix(to_text(m)) == m);
  CHECK_THROWS_AS(parse_f2_matrix("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_f2_matrix("1 0\n1\n"), ParseError);
}
