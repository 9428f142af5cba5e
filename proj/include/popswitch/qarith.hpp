// Exact arithmetic in the quantum parameter q.
//
// LaurentPoly is a sparse Laurent polynomial in q with arbitrary-precision
// integer coefficients. RatFunc is a quotient of two of them kept in a
// canonical form, so that equality of rational functions is structural.
// Together they model the field Q(q) in which every coefficient of this
// library lives.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace popswitch {

using BigInt = mpz_class;
using Rational = mpq_class;

class LaurentPoly {
 public:
  /// (exponent, coefficient); kept sorted by ascending exponent, no zero
  /// coefficients.
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& constant);

  static LaurentPoly monomial(const BigInt& coefficient, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }
  static LaurentPoly q_inverse() { return monomial(1, -1); }
  /// Builds from arbitrary terms: duplicates are summed, zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Preconditions: !is_zero().
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  const BigInt& leading_coefficient() const { return terms_.back().second; }

  BigInt coefficient(int exponent) const;
  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  /// The bar involution q -> q^-1.
  LaurentPoly bar() const;
  /// gcd of the coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Divides every coefficient by d, which must divide all of them.
  LaurentPoly divided_by_integer(const BigInt& d) const;
  LaurentPoly times_integer(const BigInt& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  /// Arbitrary but fixed total order, for use as a map key.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact value at q = q0. Throws std::domain_error if q0 == 0 or |q0| == 1.
  Rational evaluate(const Rational& q0) const;

  /// Canonical text, e.g. `q^2 + 1 + q^-2`, `-2*q^3 - q`, `0`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// a / b when b divides a in Z[q, q^-1]; std::nullopt otherwise.
/// Throws std::domain_error if b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// A primitive greatest common divisor with positive leading coefficient and
/// minimal exponent 0 (units q^k and signs are normalized away).
LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// An element of Q(q) in canonical form:
///   * den has minimal exponent 0 and positive leading coefficient,
///   * gcd(num, den) is a unit in Q[q, q^-1],
///   * the integer coefficients of num and den together have content 1.
/// Equality of RatFunc is therefore field equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long constant) : num_(constant), den_(1) {}           // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}   // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den is zero.
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  RatFunc inverse() const;
  RatFunc bar() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Rational evaluate(const Rational& q0) const;

  /// `<num>` when den == 1, otherwise `(<num>)/(<den>)`.
  std::string to_string() const;

 private:
  struct Normalized {};
  RatFunc(LaurentPoly num, LaurentPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// The loop value q + q^-1.
RatFunc delta();

/// [n] = (q^n - q^-n) / (q - q^-1) for n >= 0. Throws std::domain_error for n < 0.
LaurentPoly quantum_int(int n);

/// Quantum binomial [n choose k]. Throws std::domain_error unless 0 <= k <= n,
/// and std::logic_error if the defining quotient is not exact.
LaurentPoly quantum_binom(int n, int k);

/// Checks [k+l] = [k][l+1] - [k-1][l] exactly (k >= 1, l >= 0).
/// When screen is set, a mismatch at q = *screen is reported without running
/// the exact comparison; a match is always confirmed exactly.
bool verify_lemma_q(int k, int l, const std::optional<Rational>& screen = std::nullopt);

/// Checks qbinom(k+l, l) = [l+1] qbinom(k+l-1, l) - [k-1] qbinom(k+l-1, l-1)
/// exactly (k, l >= 1).
bool verify_cor_q(int k, int l, const std::optional<Rational>& screen = std::nullopt);

/// Exact value of p at q0; see LaurentPoly::evaluate.
Rational lp_eval(const LaurentPoly& p, const Rational& q0);

/// Parses a rational such as `7/5` or `-3`. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace popswitch
