#include "skeinrep/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace skeinrep;

namespace {

CycNum random_value(const CycField& f, std::mt19937_64& rng) {
  CycNum x = CycNum::zero(f);
  for (int t = 0; t < 3; ++t) {
    const long k = static_cast<long>(rng() % 13) - 6;
    const long e = static_cast<long>(rng() % static_cast<unsigned long>(f.root_order()));
    x += CycNum::a_power(f, e) * k;
  }
  return x;
}

}  // namespace

TEST_CASE("root of unity basics") {
  const CycField& f = CycField::get(5);
  const CycNum a = CycNum::a_power(f, 1);
  CHECK(a * CycNum::a_power(f, -1) == CycNum::one(f));
  CHECK(CycNum::a_power(f, 4 * 5) == CycNum::one(f));
  CHECK(CycNum::a_power(f, 2 * 5) == -CycNum::one(f));
}

TEST_CASE("field degree is the totient of 4r") {
  CHECK(CycField::get(3).degree() == 4);
  CHECK(CycField::get(5).degree() == 8);
  CHECK(CycField::get(7).degree() == 12);
  CHECK(CycField::get(10).degree() == 16);
}

TEST_CASE("inverse and division errors") {
  const CycField& f = CycField::get(5);
  const CycNum q2 = quantum_int(f, 2);
  const CycNum v = q2.inv();
  CHECK(v * q2 == CycNum::one(f));
  CHECK_THROWS_AS(CycNum::zero(f).inv(), DivisionByZeroError);

  const CycField& g = CycField::get(7);
  CHECK_THROWS_AS(quantum_int(f, 2) * quantum_int(g, 2), std::invalid_argument);
}

TEST_CASE("conjugation is the involution fixing quantum integers") {
  const CycField& f = CycField::get(5);
  const long order = f.root_order();
  CHECK(conj(CycNum::a_power(f, 1)) == CycNum::a_power(f, order - 1));
  for (long n = 1; n < 5; ++n) CHECK(conj(quantum_int(f, n)) == quantum_int(f, n));
  const CycNum x = CycNum::a_power(f, 1) + CycNum::a_power(f, 3);
  CHECK(conj(x) == CycNum::a_power(f, -1) + CycNum::a_power(f, -3));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const CycNum u = random_value(f, rng), w = random_value(f, rng);
    CHECK(conj(conj(u)) == u);
    CHECK(conj(u * w) == conj(u) * conj(w));
  }
}

TEST_CASE("quantum integers") {
  const CycField& f = CycField::get(5);
  CHECK(quantum_int(f, 1) == CycNum::one(f));
  CHECK(quantum_int(f, 0).is_zero());
  CHECK(quantum_int(f, -3) == -quantum_int(f, 3));
  CHECK(quantum_int(f, 2) * quantum_int(f, 3) == quantum_int(f, 2) + quantum_int(f, 4));

  for (long r = 2; r <= 10; ++r) {
    const CycField& fr = CycField::get(r);
    CHECK(quantum_int(fr, r).is_zero());
    for (long n = 1; n < r; ++n) CHECK_FALSE(quantum_int(fr, n).is_zero());
  }

  // [n+1][m+1] = [n][m] + [n+m+1]
  const CycField& f7 = CycField::get(7);
  for (long n = 0; n <= 5; ++n) {
    for (long m = 0; m <= 5; ++m) {
      CHECK(quantum_int(f7, n + 1) * quantum_int(f7, m + 1) ==
            quantum_int(f7, n) * quantum_int(f7, m) + quantum_int(f7, n + m + 1));
    }
  }
}

TEST_CASE("quantum factorial") {
  const CycField& f = CycField::get(5);
  CHECK(quantum_factorial(f, 0) == CycNum::one(f));
  CHECK(quantum_factorial(f, 2) == quantum_int(f, 2));
  const CycNum f3 = quantum_factorial(f, 3);
  CHECK(f3 == quantum_int(f, 2) * quantum_int(f, 3));
  CHECK_FALSE(f3.is_zero());
}

TEST_CASE("complex embeddings") {
  const CycField& f3 = CycField::get(3);
  CHECK(complex_embedding(CycNum::one(f3), 1).real() == Catch::Approx(1.0));
  CHECK(complex_embedding(quantum_int(f3, 2), 1).real() == Catch::Approx(1.0).margin(1e-12));
  CHECK(complex_embedding(CycNum::a_power(f3, 6), 1).real() == Catch::Approx(-1.0));
  CHECK_THROWS_AS(complex_embedding(CycNum::one(f3), 2), std::invalid_argument);

  const CycField& f = CycField::get(5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 8; ++t) {
    const CycNum u = random_value(f, rng), w = random_value(f, rng);
    const auto eu = complex_embedding(u, 3), ew = complex_embedding(w, 3);
    CHECK(std::abs(complex_embedding(u * w, 3) - eu * ew) < 1e-9);
    CHECK(std::abs(complex_embedding(u + w, 3) - (eu + ew)) < 1e-9);
    CHECK(std::abs(complex_embedding(conj(u), 3) - std::conj(eu)) < 1e-9);
  }
}

TEST_CASE("field norm") {
  const CycField& f = CycField::get(5);
  CHECK(field_norm(CycNum::one(f)) == 1);
  CHECK(field_norm(CycNum::zero(f)) == 0);
  for (long n = 1; n <= 4; ++n) {
    const BigRational nm = field_norm(quantum_int(f, n));
    CHECK((nm == 1 || nm == -1));
  }
  std::mt19937_64 rng(13);
  for (int t = 0; t < 6; ++t) {
    const CycNum u = random_value(f, rng), w = random_value(f, rng);
    CHECK(field_norm(u * w) == field_norm(u) * field_norm(w));
  }
}

TEST_CASE("algebraic integer test") {
  const CycField& f = CycField::get(5);
  CHECK_FALSE(is_algebraic_integer(CycNum::from_rational(f, BigRational(1, 2))));
  for (long n = 0; n <= 6; ++n) CHECK(is_algebraic_integer(quantum_int(f, n)));
  const CycNum v = quantum_int(f, 2).inv();
  CHECK(is_algebraic_integer(v));
  const BigRational nm = field_norm(quantum_int(f, 2));
  CHECK((nm == 1 || nm == -1));
}

TEST_CASE("exact arithmetic survives representation promotion") {
  const CycField& f = CycField::get(5);
  // force coefficients far past int64 by repeated squaring
  CycNum big = quantum_int(f, 2) * 1000000 + CycNum::a_power(f, 1);
  for (int k = 0; k < 4; ++k) big *= big;
  CHECK_FALSE(big.is_small_repr());
  CHECK(big * big.inv() == CycNum::one(f));
  CHECK(conj(conj(big)) == big);
  // mixed-mode addition stays exact
  CHECK(big + (-big) == CycNum::zero(f));
}
