#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "popswitch/tldiag.hpp"
#include "support.hpp"

using namespace popswitch;
using namespace testing;

namespace {

// Position of a point when walking the boundary: bottom left to right, then
// top right to left.
int boundary_position(int bottom, int top, int point) {
  return point < bottom ? point : bottom + (top - 1 - (point - bottom));
}

// Every perfect matching of the points, kept when no two chords cross.
void brute_force(int bottom, int top, std::vector<int>& partner, std::set<std::vector<std::uint8_t>>& out) {
  const int total = bottom + top;
  int first = -1;
  for (int p = 0; p < total; ++p) {
    if (partner[p] < 0) {
      first = p;
      break;
    }
  }
  if (first < 0) {
    for (int a = 0; a < total; ++a) {
      for (int c = 0; c < total; ++c) {
        int pa = boundary_position(bottom, top, a), pb = boundary_position(bottom, top, partner[a]);
        int pc = boundary_position(bottom, top, c), pd = boundary_position(bottom, top, partner[c]);
        if (pa > pb) std::swap(pa, pb);
        if (pc > pd) std::swap(pc, pd);
        if (pa < pc && pc < pb && pb < pd) return;
      }
    }
    out.insert(std::vector<std::uint8_t>(partner.begin(), partner.end()));
    return;
  }
  for (int other = first + 1; other < total; ++other) {
    if (partner[other] >= 0) continue;
    partner[first] = other;
    partner[other] = first;
    brute_force(bottom, top, partner, out);
    partner[first] = partner[other] = -1;
  }
}

}  // namespace

TEST_CASE("basis sizes are Catalan numbers") {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    CHECK(enumerate_basis(n, n).size() == static_cast<std::size_t>(expected[n]));
    CHECK(catalan(n) == expected[n]);
  }
  CHECK(enumerate_basis(3, 2).empty());
  CHECK(enumerate_basis(0, 0).size() == 1);
}

TEST_CASE("enumeration matches brute force over all perfect matchings") {
  for (int bottom = 0; bottom <= 5; ++bottom) {
    for (int top = 0; top <= 5; ++top) {
      if ((bottom + top) % 2 != 0) continue;
      std::vector<int> partner(static_cast<std::size_t>(bottom + top), -1);
      std::set<std::vector<std::uint8_t>> expected;
      brute_force(bottom, top, partner, expected);
      std::set<std::vector<std::uint8_t>> got;
      for (const auto& m : enumerate_basis(bottom, top)) got.insert(m.partners());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("invalid matchings are rejected") {
  CHECK_THROWS_AS(Matching(2, 2, {3, 2, 1, 0}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(Matching(1, 1, {0, 1}), std::invalid_argument);        // fixed points
  CHECK_THROWS_AS(Matching(2, 0, {1}), std::invalid_argument);           // wrong size
  CHECK_NOTHROW(Matching(2, 2, {1, 0, 3, 2}));
}

TEST_CASE("text form") {
  CHECK(Matching::identity(2).to_string() == "TL(2,2){(b0,t0),(b1,t1)}");
  CHECK(cup(2, 0).to_string() == "1 * TL(0,2){(t0,t1)}");
  CHECK(tl_generator(3, 1).to_string() == "1 * TL(3,3){(b0,t0),(b1,b2),(t1,t2)}");
  CHECK(Element(2, 2).to_string() == "0");
  const Element e = tl_generator(2, 0) * RatFunc(LaurentPoly(1), quantum_int(2));
  CHECK(e.to_string() == "(q)/(q^2 + 1) * TL(2,2){(b0,b1),(t0,t1)}");
}

TEST_CASE("loop relation") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k + 1 < n; ++k) {
      const Element e = tl_generator(n, k);
      CHECK(compose(e, e) == e * delta());
    }
  }
  CHECK(compose(cap(2, 0), cup(2, 0)) == Element::scalar(delta()));
}

TEST_CASE("Temperley-Lieb relations between generators") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 0; k + 2 < n; ++k) {
      const Element a = tl_generator(n, k), b = tl_generator(n, k + 1);
      CHECK(compose(compose(a, b), a) == a);
      CHECK(compose(compose(b, a), b) == b);
    }
    for (int k = 0; k + 3 < n; ++k) {
      CHECK(compose(tl_generator(n, k), tl_generator(n, k + 2)) ==
            compose(tl_generator(n, k + 2), tl_generator(n, k)));
    }
  }
}

TEST_CASE("category axioms on random elements") {
  std::mt19937 gen(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int a = static_cast<int>(gen() % 5), b = a + 2 * static_cast<int>(gen() % 2),
              c = static_cast<int>(gen() % 3) * 2 + (b % 2), d = static_cast<int>(gen() % 3) * 2 + (c % 2);
    const Element h = random_element(gen, a, b), g = random_element(gen, b, c), f = random_element(gen, c, d);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(Element::identity(d), f) == f);
    CHECK(compose(f, Element::identity(c)) == f);
    CHECK(vertical_flip(compose(f, g)) == compose(vertical_flip(g), vertical_flip(f)));
    CHECK(vertical_flip(vertical_flip(f)) == f);
  }
}

TEST_CASE("interchange law and tensor unit") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int i = static_cast<int>(gen() % 4), j = static_cast<int>(gen() % 4);
    const Element a = random_element(gen, i, i), c = random_element(gen, i, i);
    const Element b = random_element(gen, j, j), d = random_element(gen, j, j);
    CHECK(compose(tensor(a, b), tensor(c, d)) == tensor(compose(a, c), compose(b, d)));
    CHECK(tensor(Element::identity(0), a) == a);
    CHECK(tensor(a, Element::scalar(RatFunc(1))) == a);
  }
}

TEST_CASE("closure") {
  CHECK(close_trace(Element::identity(0)) == RatFunc(1));
  RatFunc power(1);
  for (int n = 1; n <= 6; ++n) {
    power *= delta();
    CHECK(close_trace(Element::identity(n)) == power);
  }
  CHECK(close_trace(tl_generator(2, 0)) == delta());
  std::mt19937 gen(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    const Element a = random_element(gen, n, n), b = random_element(gen, n, n);
    CHECK(close_trace(compose(a, b)) == close_trace(compose(b, a)));
  }
  CHECK_THROWS_AS(close_trace(cup(2, 0)), std::invalid_argument);
}

TEST_CASE("arity mismatch throws") {
  CHECK_THROWS_AS(compose(Element::identity(2), Element::identity(3)), std::invalid_argument);
  Element x(2, 2);
  CHECK_THROWS_AS(x.add_term(Matching::identity(1), RatFunc(1)), std::invalid_argument);
  CHECK_THROWS_AS(x += Element::identity(1), std::invalid_argument);
}

TEST_CASE("cups and caps") {
  CHECK(cup(4, 1).bottom_count() == 2);
  CHECK(cup(4, 1).top_count() == 4);
  CHECK(vertical_flip(cup(4, 1)) == cap(4, 1));
  CHECK(compose(cup(4, 1), cap(4, 1)) == tl_generator(4, 1));
  // zigzag
  CHECK(compose(tensor(Element::identity(1), cap(2, 0)), tensor(cup(2, 0), Element::identity(1))) ==
        Element::identity(1));
}
