#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "popswitch/qarith.hpp"
#include "support.hpp"

using namespace popswitch;
using namespace testing;

namespace {

// [n] as the sum q^(n-1) + q^(n-3) + ... + q^(1-n).
LaurentPoly sum_formula(int n) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += mono(1, n - 1 - 2 * j);
  return p;
}

// Quantum binomials from the q-Pascal rule
// [n, k] = q^k [n-1, k] + q^-(n-k) [n-1, k-1].
std::vector<std::vector<LaurentPoly>> pascal(int max) {
  std::vector<std::vector<LaurentPoly>> t(static_cast<std::size_t>(max) + 1);
  for (int n = 0; n <= max; ++n) {
    t[n].resize(static_cast<std::size_t>(n) + 1);
    t[n][0] = t[n][n] = LaurentPoly(1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k].shifted(k) + t[n - 1][k - 1].shifted(-(n - k));
  }
  return t;
}

}  // namespace

TEST_CASE("quantum integers agree with the sum formula") {
  for (int n = 0; n <= 40; ++n) CHECK(quantum_int(n) == sum_formula(n));
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(1) == LaurentPoly(1));
  CHECK_THROWS_AS(quantum_int(-1), std::domain_error);
}

TEST_CASE("quantum binomials agree with the q-Pascal rule") {
  const auto t = pascal(24);
  for (int n = 0; n <= 24; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(quantum_binom(n, k) == t[n][k]);
  }
  CHECK_THROWS_AS(quantum_binom(3, 4), std::domain_error);
  CHECK_THROWS_AS(quantum_binom(3, -1), std::domain_error);
}

TEST_CASE("canonical text") {
  CHECK(quantum_int(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(quantum_int(1).to_string() == "1");
  CHECK(quantum_int(2).to_string() == "q + q^-1");
  CHECK(quantum_binom(4, 2).to_string() == "q^4 + q^2 + 2 + q^-2 + q^-4");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((mono(-2, 3) - q()).to_string() == "-2*q^3 - q");
  CHECK((LaurentPoly(-1) + mono(3, -2)).to_string() == "-1 + 3*q^-2");
  CHECK(RatFunc(q(), quantum_int(2)).to_string() == "(q^2)/(q^2 + 1)");
  CHECK(RatFunc(LaurentPoly(-4)).to_string() == "-4");
}

TEST_CASE("Laurent polynomial ring laws on random inputs") {
  std::mt19937 gen(1);
  const Rational q0(3, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
    CHECK((a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0));
    CHECK((a * b).bar() == a.bar() * b.bar());
    if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("exact division") {
  CHECK(divide_exact(mono(1, 2) - LaurentPoly(1), q() - LaurentPoly(1)) == q() + LaurentPoly(1));
  CHECK_FALSE(divide_exact(mono(1, 2) + LaurentPoly(1), q() - LaurentPoly(1)).has_value());
  CHECK_FALSE(divide_exact(LaurentPoly(3), LaurentPoly(2)).has_value());
  CHECK_THROWS_AS(divide_exact(q(), LaurentPoly()), std::domain_error);
}

TEST_CASE("rational functions are canonical") {
  // (q - q^-1) / (1 - q^-2) = q
  CHECK(RatFunc(q() - qi(), LaurentPoly(1) - mono(1, -2)) == RatFunc(q()));
  // scaling numerator and denominator changes nothing
  const RatFunc x(mono(2, 1) + LaurentPoly(4), mono(6, 3) - LaurentPoly(2));
  CHECK(RatFunc(x.num().times_integer(-5).shifted(3), x.den().times_integer(-5).shifted(-2)) ==
        RatFunc(x.num().shifted(5), x.den()));
  CHECK(x.den().min_exponent() == 0);
  CHECK(x.den().leading_coefficient() > 0);
  CHECK(x * x.inverse() == RatFunc(1));
  CHECK((x - x).is_zero());
  CHECK(RatFunc(quantum_int(4), quantum_int(2)) == RatFunc(mono(1, 2) + mono(1, -2)));
  CHECK_THROWS_AS(RatFunc(q(), LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("rational function field laws on random inputs") {
  std::mt19937 gen(2);
  const Rational q0(5, 3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly d1 = random_poly(gen), d2 = random_poly(gen);
    if (d1.is_zero() || d2.is_zero()) continue;
    const RatFunc a(random_poly(gen), d1), b(random_poly(gen), d2);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a + b).bar() == a.bar() + b.bar());
    if (d1.evaluate(q0) != 0 && d2.evaluate(q0) != 0) {
      CHECK((a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0));
      CHECK((a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0));
    }
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("evaluation rejects the degenerate points") {
  CHECK_THROWS_AS(q().evaluate(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(q().evaluate(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(q().evaluate(Rational(-1)), std::domain_error);
  CHECK(quantum_int(3).evaluate(Rational(2)) == Rational(21, 4));
  CHECK(lp_eval(quantum_int(2), Rational(1, 2)) == Rational(5, 2));
}

TEST_CASE("quantum identities") {
  for (int k = 1; k <= 12; ++k) {
    for (int l = 1; l <= 12; ++l) {
      CHECK(verify_lemma_q(k, l));
      CHECK(verify_cor_q(k, l));
      CHECK(verify_lemma_q(k, l, Rational(7, 5)));
      CHECK(verify_cor_q(k, l, Rational(-3)));
    }
  }
  CHECK(verify_lemma_q(1, 0));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7/5") == Rational(7, 5));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+4/-6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("primitive gcd") {
  const LaurentPoly a = (q() + LaurentPoly(1)) * (q() - LaurentPoly(2)) * LaurentPoly(6);
  const LaurentPoly b = (q() + LaurentPoly(1)).shifted(-3) * (q() + LaurentPoly(5)) * LaurentPoly(4);
  CHECK(primitive_gcd(a, b) == q() + LaurentPoly(1));
  CHECK(primitive_gcd(a, LaurentPoly()) == divide_exact(a, LaurentPoly(6)));
}
