// Shared helpers for the unit tests.

#pragma once

#include <random>
#include <vector>

#include "popswitch/otl.hpp"
#include "popswitch/tldiag.hpp"

namespace testing {

using namespace popswitch;

inline LaurentPoly q() { return LaurentPoly::q(); }
inline LaurentPoly qi() { return LaurentPoly::q_inverse(); }
inline LaurentPoly mono(long c, int e) { return LaurentPoly::monomial(c, e); }
inline RatFunc rf(const LaurentPoly& num, const LaurentPoly& den = LaurentPoly(1)) { return RatFunc(num, den); }

inline Matching pick(std::mt19937& gen, int bottom, int top) {
  const std::vector<Matching> basis = enumerate_basis(bottom, top);
  return basis[gen() % basis.size()];
}

inline OrMatching pick_oriented(std::mt19937& gen, int bottom, int top) {
  const std::vector<OrMatching> all = OrMatching::orientations(pick(gen, bottom, top));
  return all[gen() % all.size()];
}

/// Random Laurent polynomial with small coefficients.
inline LaurentPoly random_poly(std::mt19937& gen, int spread = 3, int terms = 3) {
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    const long c = static_cast<long>(gen() % 7) - 3;
    const int e = static_cast<int>(gen() % (2 * spread + 1)) - spread;
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

/// A combination of a few basis diagrams with random coefficients.
inline Element random_element(std::mt19937& gen, int bottom, int top, int terms = 3) {
  Element x(bottom, top);
  for (int i = 0; i < terms; ++i) x.add_term(pick(gen, bottom, top), RatFunc(random_poly(gen)));
  return x;
}

}  // namespace testing
