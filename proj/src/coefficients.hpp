// Internal helpers shared by the diagram modules: bulk coefficient
// arithmetic over a common denominator, and text rendering of combinations.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "popswitch/qarith.hpp"

namespace popswitch::detail {

/// Rewrites {key: a_k / d_k} as {key: n_k} over one denominator L, so that
/// products of two combinations need only Laurent polynomial arithmetic.
template <class Key>
class CommonDenominator {
 public:
  explicit CommonDenominator(const std::map<Key, RatFunc>& terms) {
    keys_.reserve(terms.size());
    for (const auto& [k, c] : terms) {
      if (den_.is_one() && c.den().is_one()) continue;
      if (c.den() == den_) continue;
      const LaurentPoly g = primitive_gcd(den_, c.den());
      den_ = den_ * *divide_exact(c.den(), g);
    }
    for (const auto& [k, c] : terms) {
      keys_.push_back(&k);
      nums_.push_back(c.den() == den_ ? c.num() : c.num() * *divide_exact(den_, c.den()));
    }
  }

  std::size_t size() const { return keys_.size(); }
  const Key& key(std::size_t i) const { return *keys_[i]; }
  const LaurentPoly& numerator(std::size_t i) const { return nums_[i]; }
  const LaurentPoly& denominator() const { return den_; }

 private:
  std::vector<const Key*> keys_;
  std::vector<LaurentPoly> nums_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// Sums products a*b*delta^m*q^s per key, normalizing each coefficient once.
template <class Key>
class LoopAccumulator {
 public:
  void add(const Key& key, int delta_power, int q_shift, const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly product = a * b;
    if (q_shift != 0) product = product.shifted(q_shift);
    auto& buckets = acc_[key];
    if (static_cast<int>(buckets.size()) <= delta_power) buckets.resize(static_cast<std::size_t>(delta_power) + 1);
    buckets[static_cast<std::size_t>(delta_power)] += product;
  }

  template <class Sink>
  void emit(const LaurentPoly& den, Sink&& sink) const {
    std::vector<LaurentPoly> powers{LaurentPoly(1)};
    const LaurentPoly d = LaurentPoly::q() + LaurentPoly::q_inverse();
    for (const auto& [key, buckets] : acc_) {
      LaurentPoly total;
      for (std::size_t l = 0; l < buckets.size(); ++l) {
        if (buckets[l].is_zero()) continue;
        while (powers.size() <= l) powers.push_back(powers.back() * d);
        total += l == 0 ? buckets[l] : buckets[l] * powers[l];
      }
      if (!total.is_zero()) sink(key, RatFunc(std::move(total), den));
    }
  }

 private:
  std::map<Key, std::vector<LaurentPoly>> acc_;
};

inline std::string render_coefficient(const RatFunc& c) {
  if (c.is_laurent() && c.num().size() > 1) return "(" + c.to_string() + ")";
  return c.to_string();
}

template <class Key, class ToText>
std::string render_combination(const std::map<Key, RatFunc>& terms, ToText&& to_text) {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::string, const RatFunc*>> items;
  items.reserve(terms.size());
  for (const auto& [k, c] : terms) items.emplace_back(to_text(k), &c);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += " + ";
    out += render_coefficient(*items[i].second) + " * " + items[i].first;
  }
  return out;
}

}  // namespace popswitch::detail
