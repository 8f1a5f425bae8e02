#include "skeinrep/pairing.hpp"

#include "skeinrep/temperley_lieb.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace skeinrep;

TEST_CASE("loop values") {
  const CycField& f = CycField::get(5);
  CHECK(loop_value(f, 0).is_one());
  CHECK(loop_value(f, 1) == -quantum_int(f, 2));
  for (long n = 0; n <= 3; ++n) {
    CHECK(loop_value(f, n) == markov_trace(jones_wenzl(f, static_cast<int>(n))));
    CHECK_FALSE(loop_value(f, n).is_zero());
  }
  CHECK_THROWS_AS(loop_value(f, 4), std::out_of_range);
  CHECK_THROWS_AS(loop_value(f, -1), std::out_of_range);
}

TEST_CASE("theta coefficients") {
  const CycField& f = CycField::get(5);
  CHECK(theta(f, 0, 0, 0).is_one());
  CHECK(theta(f, 1, 1, 0) == -quantum_int(f, 2));
  CHECK(theta(f, 1, 1, 0) == loop_value(f, 1));
  CHECK(theta(f, 2, 1, 1) == quantum_int(f, 3));
  CHECK_THROWS_AS(theta(f, 1, 1, 1), std::invalid_argument);

  // symmetry and the degenerate identity
  for (int a = 0; a <= 3; ++a) {
    CHECK(theta(f, a, a, 0) == loop_value(f, a));
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        if (!triple_admissible(a, b, c, 5)) continue;
        const CycNum t = theta(f, a, b, c);
        CHECK(theta(f, b, a, c) == t);
        CHECK(theta(f, c, b, a) == t);
        CHECK(theta(f, a, c, b) == t);
        CHECK(conj(t) == t);
        CHECK_FALSE(t.is_zero());
      }
  }
}

TEST_CASE("theta matches the skein-network oracle") {
  for (long r : {4L, 5L}) {
    const CycField& f = CycField::get(r);
    for (int a = 0; a <= r - 2; ++a)
      for (int b = 0; b <= r - 2; ++b)
        for (int c = 0; c <= r - 2; ++c) {
          if (!triple_admissible(a, b, c, r)) continue;
          if (a + b + c > 10) continue;
          CHECK(test::theta_oracle(f, a, b, c) == theta(f, a, b, c));
        }
  }
}

TEST_CASE("gram forms") {
  const GramForm g1 = gram_form(standard_graph(1), 5);
  CHECK(g1.norms.size() == 4);
  for (const auto& n : g1.norms) CHECK(n.is_one());

  const CycField& f = CycField::get(4);
  const GramForm g2 = gram_form(standard_graph(2), 4);
  REQUIRE(g2.norms.size() == 10);
  CHECK(g2.norms[0].is_one());  // coloring (0,0,0)
  for (std::size_t i = 0; i < g2.basis.size(); ++i) {
    const auto& v = g2.basis[i].values;
    const CycNum expect =
        theta(f, v[0], v[1], v[2]) * theta(f, v[0], v[1], v[2]) *
        (loop_value(f, v[0]) * loop_value(f, v[1]) * loop_value(f, v[2])).inv();
    CHECK(g2.norms[i] == expect);
    CHECK(conj(g2.norms[i]) == g2.norms[i]);
  }
}

TEST_CASE("gram form against the skein-network oracle") {
  for (long r : {3L, 4L}) {
    const CycField& f = CycField::get(r);
    const GramForm g = gram_form(standard_graph(2), r);
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
      const auto& v = g.basis[i].values;
      const CycNum th = test::theta_oracle(f, v[0], v[1], v[2]);
      const CycNum loops = markov_trace(jones_wenzl(f, v[0])) *
                           markov_trace(jones_wenzl(f, v[1])) *
                           markov_trace(jones_wenzl(f, v[2]));
      CHECK(g.norms[i] == th * th * loops.inv());
    }
  }
}

TEST_CASE("hopf pairing matrix") {
  for (long r = 2; r <= 12; ++r) {
    const CycField& f = CycField::get(r);
    const HopfMatrix h = hopf_matrix(r);
    const int n = h.entries.rows();
    REQUIRE(n == r - 1);
    CHECK(h.entries.at(0, 0).is_one());
    if (r >= 3) CHECK(h.entries.at(1, 1) == quantum_int(f, 4));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(h.entries.at(i, j) == h.entries.at(j, i));
        CHECK(conj(h.entries.at(i, j)) == h.entries.at(i, j));
      }
    const CycNum a22 = CycNum::a_power(f, 2) - CycNum::a_power(f, -2);
    const CycNum scale = CycNum::from_integer(f, -2 * r) * (a22 * a22).inv();
    CHECK(h.entries * h.entries == scale * Matrix::identity(f, n));
  }
}

TEST_CASE("annulus duals") {
  const CycField& f = CycField::get(5);
  Polynomial sum(f);
  for (long i = 0; i <= 3; ++i) {
    const Polynomial t = annulus_dual(f, i);
    for (long j = 0; j <= 3; ++j) {
      const CycNum v = t.eval(encircling_eigenvalue(f, j));
      CHECK(v == (i == j ? CycNum::one(f) : CycNum::zero(f)));
    }
    sum = sum + t;
  }
  // partition of unity: the interpolant of the constant 1
  CHECK(sum == Polynomial::constant(f, CycNum::one(f)));

  const CycField& f3 = CycField::get(3);
  CHECK(annulus_dual(f3, 0).degree() == 1);
  CHECK(annulus_dual(f3, 1).degree() == 1);
  CHECK_THROWS_AS(annulus_dual(f3, 2), std::out_of_range);
}

TEST_CASE("signature of the hermitian form") {
  for (long r = 3; r <= 7; ++r) {
    const GramForm g1 = gram_form(standard_graph(1), r);
    for (long m : {1L, 3L}) {
      if (std::gcd(m, 4 * r) != 1) continue;
      const auto [p, q] = signature(g1, m);
      CHECK(p == r - 1);
      CHECK(q == 0);
    }
  }
  const GramForm g2 = gram_form(standard_graph(2), 3);
  const auto [p, q] = signature(g2, 1);
  CHECK(p + q == 4);
  CHECK_THROWS_AS(signature(g2, 2), std::invalid_argument);
}
