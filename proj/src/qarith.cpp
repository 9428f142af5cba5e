#include "popswitch/qarith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace popswitch {

namespace {

// Dense polynomials in Z[x], index = degree, used for gcd and division.
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Coefficients of p * q^-min_exponent.
Dense to_dense(const LaurentPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  const int lo = p.min_exponent();
  out.assign(static_cast<std::size_t>(p.max_exponent() - lo + 1), BigInt(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) terms.emplace_back(static_cast<int>(i) + shift, d[i]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

BigInt dense_content(const Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  trim(p);
  if (p.empty()) return;
  BigInt g = dense_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b (b nonzero), with a scaled by powers of lc(b).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    // keep coefficients small
    if (!a.empty()) {
      BigInt g = dense_content(a);
      if (g > 1) {
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    make_primitive(r);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  LaurentPoly p;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) p.terms_.emplace_back(static_cast<int>(i) + lo, std::move(acc[i]));
  }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::divided_by_integer(const BigInt& d) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), d.get_mpz_t());
  return p;
}

LaurentPoly LaurentPoly::times_integer(const BigInt& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first <=> b.terms_[i].first;
    const int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  if (q0 == 0) throw std::domain_error("evaluation at q = 0");
  if (abs(q0) == 1) throw std::domain_error("evaluation at |q| = 1 is not allowed");
  if (terms_.empty()) return 0;
  // Horner from the top exponent down to the bottom one.
  Rational value = 0;
  int current = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->first; --current) value *= q0;
    value += Rational(it->second);
  }
  Rational scale = 1;
  const int lo = min_exponent();
  const Rational base = lo >= 0 ? q0 : Rational(1) / q0;
  for (int i = 0; i < std::abs(lo); ++i) scale *= base;
  Rational out = value * scale;
  out.canonicalize();
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  Dense r = to_dense(a);
  const Dense d = to_dense(b);
  if (r.size() < d.size()) return std::nullopt;
  const std::size_t dd = d.size() - 1;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i <= dd; ++i) {
    if (d[i] != 0) support.push_back(i);
  }
  Dense quotient(r.size() - dd);
  for (std::size_t top = r.size() - 1;; --top) {
    if (r[top] != 0) {
      if (!mpz_divisible_p(r[top].get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
      BigInt factor;
      mpz_divexact(factor.get_mpz_t(), r[top].get_mpz_t(), d.back().get_mpz_t());
      const std::size_t shift = top - dd;
      for (std::size_t i : support) mpz_submul(r[i + shift].get_mpz_t(), factor.get_mpz_t(), d[i].get_mpz_t());
      quotient[shift] = std::move(factor);
    }
    if (top == dd) break;
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return from_dense(quotient, a.min_exponent() - b.min_exponent());
}

LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return from_dense(dense_gcd(to_dense(a), to_dense(b)), 0);
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = den_.min_exponent();
  if (shift != 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  if (den_.size() > 1) {
    LaurentPoly g = primitive_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  BigInt c = num_.content();
  const BigInt cd = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading_coefficient() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_by_integer(c);
    den_ = den_.divided_by_integer(c);
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero() || other.is_zero()) return *this = RatFunc();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& other) { return *this *= other.inverse(); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

Rational RatFunc::evaluate(const Rational& q0) const {
  const Rational d = den_.evaluate(q0);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  Rational out = num_.evaluate(q0) / d;
  out.canonicalize();
  return out;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// quantum numbers

RatFunc delta() { return RatFunc(LaurentPoly::q() + LaurentPoly::q_inverse()); }

LaurentPoly quantum_int(int n) {
  if (n < 0) throw std::domain_error("quantum_int requires n >= 0");
  const LaurentPoly numerator = LaurentPoly::monomial(1, n) - LaurentPoly::monomial(1, -n);
  const LaurentPoly denominator = LaurentPoly::q() - LaurentPoly::q_inverse();
  auto quotient = divide_exact(numerator, denominator);
  if (!quotient) throw std::logic_error("quantum_int: inexact division");
  return *quotient;
}

LaurentPoly quantum_binom(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("quantum_binom requires 0 <= k <= n");
  // [n choose i+1] = [n choose i] [n-i] / [i+1]. Every partial quotient is a
  // Laurent polynomial, and the factors q - q^-1 hidden in [n-i] and [i+1]
  // cancel, so each step multiplies and divides by a binomial q^m - q^-m.
  k = std::min(k, n - k);
  const auto binomial = [](int m) { return LaurentPoly::monomial(1, m) - LaurentPoly::monomial(1, -m); };
  LaurentPoly result(1);
  for (int i = 0; i < k; ++i) {
    auto quotient = divide_exact(result * binomial(n - i), binomial(i + 1));
    if (!quotient) throw std::logic_error("quantum_binom: inexact division");
    result = std::move(*quotient);
  }
  return result;
}

namespace {

bool screened_equal(const LaurentPoly& lhs, const LaurentPoly& rhs, const std::optional<Rational>& screen) {
  if (screen && lhs.evaluate(*screen) != rhs.evaluate(*screen)) return false;
  return lhs == rhs;
}

}  // namespace

bool verify_lemma_q(int k, int l, const std::optional<Rational>& screen) {
  const LaurentPoly lhs = quantum_int(k + l);
  const LaurentPoly rhs = quantum_int(k) * quantum_int(l + 1) - quantum_int(k - 1) * quantum_int(l);
  return screened_equal(lhs, rhs, screen);
}

bool verify_cor_q(int k, int l, const std::optional<Rational>& screen) {
  const LaurentPoly lhs = quantum_binom(k + l, l);
  const LaurentPoly rhs = quantum_int(l + 1) * quantum_binom(k + l - 1, l) -
                          quantum_int(k - 1) * quantum_binom(k + l - 1, l - 1);
  return screened_equal(lhs, rhs, screen);
}

Rational lp_eval(const LaurentPoly& p, const Rational& q0) { return p.evaluate(q0); }

Rational parse_rational(const std::string& text) {
  const auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find_first_not_of("+-0") == std::string::npos) {
    throw std::invalid_argument("not a rational number: " + text);
  }
  Rational r(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den[0] == '+' ? den.substr(1) : den));
  r.canonicalize();
  return r;
}

}  // namespace popswitch
