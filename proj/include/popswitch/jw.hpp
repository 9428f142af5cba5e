// Jones-Wenzl idempotents.

#pragma once

#include <string>

#include "popswitch/tldiag.hpp"

namespace popswitch {

/// A verified Jones-Wenzl idempotent on n strands.
struct JonesWenzl {
  int n = 0;
  Element element{0, 0};
};

/// Outcome of checking the four characterizing properties.
struct JwReport {
  bool nonzero = false;
  bool idempotent = false;
  bool left_uncappable = false;   // every cap on top kills it
  bool right_uncappable = false;  // every cup underneath kills it

  bool all() const { return nonzero && idempotent && left_uncappable && right_uncappable; }
  std::string to_string() const;
};

/// Builds p_n by the Wenzl recursion
///   p_{k+1} = p_k (x) 1 - [k]/[k+1] (p_k (x) 1) E_k (p_k (x) 1),
/// then runs check_jw_properties on it. Results are memoized (thread-safe).
/// Throws std::domain_error for n < 1 and std::logic_error if the checker
/// rejects the result.
JonesWenzl jones_wenzl(int n);

/// Checks x != 0, x^2 = x, cap o x = 0 and x o cup = 0 at every position, in
/// exact arithmetic. Throws std::invalid_argument unless x is an endomorphism.
JwReport check_jw_properties(const Element& x);

/// Independent construction: solves the linear system "coefficient of the
/// identity is 1, every cap annihilates" over the diagram basis, and requires
/// the solution to be unique and idempotent. Desk-scale only (1 <= n <= 6).
/// Throws std::domain_error outside that range, std::logic_error if the system
/// is not uniquely solvable.
Element jw_solve_by_uniqueness(int n);

}  // namespace popswitch
