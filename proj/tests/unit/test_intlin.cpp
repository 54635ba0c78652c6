#include <doctest.h>

#include "solk/errors.hpp"
#include "solk/intlin.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace solk;
using solk::testing::Rng;

namespace {

void check_smith(const IntMatrix& a, const SmithDecomposition& s) {
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0) {
        CHECK(d[i + 1] == 0);
      } else {
        CHECK(d[i + 1] % d[i] == 0);
      }
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of small fixed matrices") {
  auto id = IntMatrix::identity(2);
  auto s = smith_normal_form(id);
  CHECK(s.D == id);
  CHECK(s.U == id);
  CHECK(s.V == id);

  auto two = IntMatrix::from_rows({{2}});
  CHECK(smith_normal_form(two).D == two);

  auto delta = IntMatrix::from_rows({{-1, 1, 0}, {1, -1, 0}});
  auto sd = smith_normal_form(delta);
  CHECK(sd.D == IntMatrix::from_rows({{1, 0, 0}, {0, 0, 0}}));
  check_smith(delta, sd);

  auto diag23 = IntMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(smith_normal_form(diag23).diagonal() == std::vector<Int>{1, 6});
}

TEST_CASE("smith normal form is deterministic") {
  auto a = IntMatrix::from_rows({{4, 6, -2}, {2, 8, 10}, {0, 3, 9}});
  auto s1 = smith_normal_form(a);
  auto s2 = smith_normal_form(a);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
  CHECK(s1.D == s2.D);
}

TEST_CASE("smith diagonal agrees with the determinantal-divisor oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t m = 1 + rng() % 4;
    std::size_t n = 1 + rng() % 4;
    IntMatrix a = testing::random_matrix(rng, m, n);
    auto s = smith_normal_form(a);
    check_smith(a, s);
    CHECK(s.diagonal() == testing::smith_diagonal_by_minors(a));
  }
}

TEST_CASE("empty matrices") {
  IntMatrix a(0, 3);
  auto s = smith_normal_form(a);
  CHECK(s.V == IntMatrix::identity(3));
  CHECK(kernel_basis(a) == IntMatrix::identity(3));
  CHECK(cokernel(IntMatrix(2, 0)).free_rank == 2);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);
  CHECK(kernel_basis(IntMatrix(2, 3)) == IntMatrix::identity(3));

  auto delta = IntMatrix::from_rows({{-1, 1, 0}, {1, -1, 0}});
  auto k = kernel_basis(delta);
  auto expected = IntMatrix::from_rows({{1, 0}, {1, 0}, {0, 1}});
  CHECK(testing::same_lattice(k, expected));
  // Column HNF of this lattice is exactly (alpha, beta).
  CHECK(k == expected);
}

TEST_CASE("kernel basis properties on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng() % 5;
    std::size_t n = 1 + rng() % 6;
    IntMatrix a = testing::random_matrix(rng, m, n, -3, 3);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(rank(a) + k.cols() == n);
    // Saturated: Smith diagonal of the basis is all ones.
    for (const auto& d : smith_normal_form(k).diagonal()) CHECK(d == 1);
    CHECK(column_hnf(k) == k);
  }
}

TEST_CASE("cokernel") {
  auto c = cokernel(IntMatrix::from_rows({{-1, 1, 0}, {1, -1, 0}}));
  CHECK(c.free_rank == 1);
  CHECK(c.torsion.empty());
  CHECK(cokernel(IntMatrix::identity(3)) == CokernelStructure{0, {}});
  auto t = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(t.free_rank == 0);
  CHECK(t.torsion == std::vector<Int>{6});
  CHECK(t.to_string() == "Z/6");
}

TEST_CASE("restrict endomorphism") {
  auto b = IntMatrix::from_rows({{1, 0}, {1, 0}, {0, 1}});
  CHECK(restrict_endomorphism(IntMatrix::identity(3), b) == IntMatrix::identity(2));

  auto aabab = IntMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 0, 1}});
  CHECK(restrict_endomorphism(aabab, b) == IntMatrix::from_rows({{2, 1}, {1, 1}}));

  auto fib = IntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {0, 1, 0}});
  CHECK(restrict_endomorphism(fib, b) == IntMatrix::from_rows({{1, 1}, {1, 0}}));

  auto leaks = IntMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(restrict_endomorphism(leaks, b), NotInvariant);
}

TEST_CASE("restrict endomorphism round trip on random invariant lattices") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 3;
    // T = P diag-block P^-1 keeps the span of P's first columns invariant.
    IntMatrix p = testing::random_unimodular(rng, n);
    IntMatrix block = testing::random_matrix(rng, n, n, -3, 3);
    std::size_t r = 1 + rng() % (n - 1);
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) block(i, j) = 0;
    IntMatrix t = p * block * unimodular_inverse(p);
    IntMatrix b = p.column_block(0, r);
    IntMatrix s = restrict_endomorphism(t, b);
    CHECK(b * s == t * b);
  }
}

TEST_CASE("determinant, power and characteristic polynomial") {
  auto m = IntMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(m) == 1);
  CHECK(matrix_power(m, 3) == m * m * m);
  CHECK(characteristic_polynomial(m) == std::vector<Int>{1, -3, 1});
  auto z = IntMatrix::from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(determinant(z) == 0);
  CHECK(characteristic_polynomial(z).front() == -determinant(z));
}

TEST_CASE("saturation and unimodular inverse") {
  auto a = IntMatrix::from_rows({{2, 2}, {2, 2}});
  CHECK(saturation(a) == IntMatrix::from_rows({{1}, {1}}));
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto u = testing::random_unimodular(rng, 4);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(4));
  }
  CHECK_THROWS(unimodular_inverse(IntMatrix::from_rows({{2}})));
}

TEST_CASE("bigint entries survive normal forms") {
  Int big = Int(1) << 90;
  IntMatrix a(2, 2, {big, big + 1, big - 1, big});
  auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.diagonal() == std::vector<Int>{1, 1});
}
