#include <doctest.h>

#include "solk/errors.hpp"
#include "solk/ktheory.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace solk;
using solk::testing::NamePair;
using solk::testing::Rng;

namespace {

std::vector<NamePair> order_of(const Presentation& p, const QuotientModel& q) {
  std::vector<NamePair> out;
  for (const auto& c : q.classes) out.push_back({p.edge_name(c.in.edge), p.edge_name(c.out.edge)});
  return out;
}

std::vector<Int> ones(std::size_t n) { return std::vector<Int>(n, 1); }

}  // namespace

TEST_CASE("boundary and pullback for aab/ab in descending class order") {
  Presentation p = testing::load_data("aabab.sol");
  QuotientModel q = occurring_classes(p, ClassOrder::paper);
  CHECK(boundary_matrix(p, q) == IntMatrix::from_rows({{-1, 1, 0}, {1, -1, 0}}));
  // Rows ba, ab, aa: every class pulls back to ba; ab and aa also collect
  // interior junction traces.
  IntMatrix t = trace_pullback_matrix(p, q);
  CHECK(t == IntMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 0, 1}}));
  auto o = testing::brute_force_germs(p);
  CHECK(t == testing::oracle_pullback(p, o, order_of(p, q)));
  CHECK(boundary_matrix(p, q) == testing::oracle_boundary(p, order_of(p, q)));
}

TEST_CASE("edge traces of aab/ab") {
  Presentation p = testing::load_data("aabab.sol");
  QuotientModel q = occurring_classes(p, ClassOrder::paper);
  // ba, ab, aa
  CHECK(edge_trace_row(p, q, 0) == std::vector<Int>{1, 0, 1});
  CHECK(edge_trace_row(p, q, 1) == std::vector<Int>{0, 1, 0});
  CHECK(edge_trace_row_from_target(p, q, 0) == std::vector<Int>{0, 1, 1});
  CHECK(edge_trace_row_from_target(p, q, 1) == std::vector<Int>{1, 0, 0});
}

TEST_CASE("K-theory of aab/ab") {
  Presentation p = testing::load_data("aabab.sol");
  QuotientModel lex = occurring_classes(p);
  auto g0 = k_theory_of_g0(p, lex);
  CHECK(g0.k0_basis == IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 1}}));
  CHECK(g0.k1.group == CokernelStructure{1, {}});
  CHECK(psi_star_k0(p, lex) == IntMatrix::from_rows({{1, 1}, {1, 2}}));

  QuotientModel paper = occurring_classes(p, ClassOrder::paper);
  auto g0p = k_theory_of_g0(p, paper);
  CHECK(testing::same_lattice(g0p.k0_basis, IntMatrix::from_rows({{1, 0}, {1, 0}, {0, 1}})));
  CHECK(psi_star_k0(p, paper) == IntMatrix::from_rows({{2, 1}, {1, 1}}));
  CHECK(psi_star_k1(p, paper) == IntMatrix::identity(1));
  CHECK(first_edge_map(p) == IntMatrix::from_rows({{1, 1}, {0, 0}}));

  KTheoryReport r = ktheory_report(p, ClassOrder::paper);
  CHECK(r.class_names == std::vector<std::string>{"ba", "ab", "aa"});
  CHECK(r.k0_class.name() == "FreeAbelian(2)");
  CHECK(r.k1_class.name() == "FreeAbelian(1)");
  CHECK(r.k1_pretty() == "Z");
  CHECK_FALSE(r.diagnostics.quotient.hausdorff);
  CHECK_FALSE(r.diagnostics.trace_target);
}

TEST_CASE("K-theory of the n-solenoids") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    KTheoryReport r = ktheory_report(testing::n_solenoid(n));
    CHECK(r.class_names == std::vector<std::string>{"aa"});
    CHECK(r.delta0.is_zero());
    CHECK(r.psi0 == IntMatrix::from_rows({{static_cast<long long>(n)}}));
    CHECK(r.k0_class.name() == "ZOneOver(" + std::to_string(n) + ")");
    CHECK(r.k1.group == CokernelStructure{1, {}});
    CHECK(r.psi1 == IntMatrix::identity(1));
    CHECK(r.k1_class.name() == "FreeAbelian(1)");
    CHECK(r.diagnostics.trace_target == "Z[1/" + std::to_string(n) + "]");
  }
}

TEST_CASE("K-theory of the Fibonacci solenoid") {
  Presentation p = testing::load_data("fibonacci.sol");
  QuotientModel q = occurring_classes(p, ClassOrder::paper);
  CHECK(order_of(p, q) == std::vector<NamePair>{{"b", "a"}, {"a", "b"}, {"a", "a"}});
  IntMatrix t = trace_pullback_matrix(p, q);
  CHECK(t == testing::oracle_pullback(p, testing::brute_force_germs(p), order_of(p, q)));
  CHECK(t == IntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 0, 0}}));
  KTheoryReport r = ktheory_report(p, ClassOrder::paper);
  CHECK(abs(determinant(r.psi0)) == 1);
  CHECK(characteristic_polynomial(r.psi0) == std::vector<Int>{-1, -1, 1});
  CHECK(r.k0_class.name() == "FreeAbelian(2)");
  CHECK(r.psi1 == IntMatrix::identity(1));
}

TEST_CASE("a Hausdorff two-vertex circle") {
  Presentation p = testing::load_data("circle2.sol");
  KTheoryReport r = ktheory_report(p);
  CHECK(r.class_names.size() == 2);
  CHECK(r.psi0 == IntMatrix::from_rows({{2}}));
  CHECK(r.k0_class.name() == "ZOneOver(2)");
  CHECK(r.diagnostics.quotient.degree == 2u);
  CHECK(r.diagnostics.trace_target == "Z[1/2]");
}

TEST_CASE("invalid presentations are rejected by the pipeline") {
  CHECK_THROWS_AS(ktheory_report(testing::load_data("identity.sol")), InvalidPresentation);
  CHECK_THROWS_AS(ktheory_report(testing::load_data("reversing.sol")), InvalidPresentation);
}

TEST_CASE("subdivided circles behave like the n-solenoid") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t d = 2; d <= 4; ++d) {
      CAPTURE(m);
      CAPTURE(d);
      KTheoryReport r = ktheory_report(testing::subdivided_circle(m, d));
      CHECK(r.k0_class.name() == "ZOneOver(" + std::to_string(d) + ")");
      CHECK(r.diagnostics.quotient.hausdorff);
      CHECK(r.diagnostics.quotient.degree == d);
      CHECK(r.k1.group == CokernelStructure{1, {}});
    }
  }
}

TEST_CASE("pipeline invariants on random presentations") {
  Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    Presentation p = testing::random_valid_presentation(rng);
    QuotientModel q = occurring_classes(p);
    IntMatrix d = boundary_matrix(p, q);
    IntMatrix t = trace_pullback_matrix(p, q);
    IntMatrix k = kernel_basis(d);
    CHECK((d * t * k).is_zero());
    CHECK(t == testing::oracle_pullback(p, testing::brute_force_germs(p), order_of(p, q)));

    // Each edge's two end traces differ by the boundary row.
    for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
      auto in = edge_trace_row_from_target(p, q, e);
      auto out = edge_trace_row(p, q, e);
      for (std::size_t c = 0; c < q.classes.size(); ++c) CHECK(in[c] - out[c] == d(e, c));
    }

    KTheoryReport r = ktheory_report(p);
    CHECK(k * r.psi0 == t * k);
    CHECK(r.psi1.rows() == r.k1.generator_rows.size());

    if (r.diagnostics.quotient.degree) {
      Int n = static_cast<long long>(*r.diagnostics.quotient.degree);
      CHECK(row_times(ones(q.classes.size()), t * k) == row_times(ones(q.classes.size()), n * k));
    }
  }
}
