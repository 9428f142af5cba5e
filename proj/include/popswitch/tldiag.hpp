// Temperley-Lieb diagrams as morphisms of the rectangular category.
//
// A diagram i -> j has i boundary points on the bottom edge and j on the top
// edge, indexed left to right. f o g stacks f on top of g; every closed loop
// produced by stacking is removed at the cost of a factor delta = q + q^-1.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "popswitch/qarith.hpp"

namespace popswitch {

enum class Side : std::uint8_t { kBottom, kTop };

struct Point {
  Side side = Side::kBottom;
  int index = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  /// `b<k>` or `t<k>`.
  std::string to_string() const;
};

/// A crossingless perfect matching of the boundary points of a rectangle.
///
/// Points are numbered 0..bottom-1 for b0..b_{bottom-1} and
/// bottom..bottom+top-1 for t0..t_{top-1}. The partner table is the canonical
/// representation: two diagrams are equal iff their tables are.
class Matching {
 public:
  /// Throws std::invalid_argument unless `partner` is a planar perfect matching.
  Matching(int bottom, int top, std::vector<std::uint8_t> partner);

  static Matching from_pairs(int bottom, int top, const std::vector<std::pair<Point, Point>>& pairs);
  static Matching identity(int n);

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  int point_count() const { return bottom_ + top_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<std::uint8_t>& partners() const { return partner_; }

  Point point_at(int index) const;
  int index_of(Point p) const;

  /// Each pair ordered (smaller, larger) with bottom points before top points;
  /// the list is sorted.
  std::vector<std::pair<Point, Point>> pairs() const;
  int through_strands() const;

  /// `TL(i,j){(b0,t0),(b1,b2),...}`
  std::string to_string() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::uint8_t> partner_;
};

/// All crossingless matchings with the given arities, sorted; empty when
/// bottom + top is odd.
std::vector<Matching> enumerate_basis(int bottom, int top);

/// Catalan number C_n, computed by the usual product formula.
BigInt catalan(int n);

namespace detail {

/// Result of stacking `upper` on `lower` before loops are evaluated.
struct Stacked {
  Matching matching;
  /// For each closed loop, the leftmost interface point it passes through.
  std::vector<int> loop_leftmost;
};

/// Throws std::invalid_argument if upper.bottom_count() != lower.top_count().
Stacked stack(const Matching& upper, const Matching& lower);

Matching tensor(const Matching& left, const Matching& right);
Matching flip(const Matching& m);

}  // namespace detail

/// A finite Q(q)-linear combination of diagrams with fixed arities.
class Element {
 public:
  using Terms = std::map<Matching, RatFunc>;

  Element(int bottom, int top) : bottom_(bottom), top_(top) {}
  explicit Element(const Matching& m, RatFunc coefficient = RatFunc(1));

  static Element identity(int n) { return Element(Matching::identity(n)); }
  /// The empty diagram 0 -> 0 scaled by c.
  static Element scalar(const RatFunc& c);

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RatFunc coefficient(const Matching& m) const;
  /// Adds c to the coefficient of m. Throws on arity mismatch.
  void add_term(const Matching& m, const RatFunc& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const RatFunc& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const RatFunc& c) { return a *= c; }
  friend Element operator*(const RatFunc& c, Element a) { return a *= c; }

  friend bool operator==(const Element&, const Element&) = default;

  /// `c1 * D1 + c2 * D2 + ...` sorted by the diagrams' text; `0` when empty.
  std::string to_string() const;

 private:
  int bottom_;
  int top_;
  Terms terms_;
};

/// f o g (f stacked on top of g). Throws std::invalid_argument unless
/// f.bottom_count() == g.top_count().
Element compose(const Element& f, const Element& g);

/// x to the left of y.
Element tensor(const Element& x, const Element& y);

/// Joins t_k to b_k around the right-hand side for every k and evaluates the
/// loops. Throws std::invalid_argument unless x is an endomorphism.
RatFunc close_trace(const Element& x);

/// Reflection in a horizontal line: i -> j becomes j -> i.
Element vertical_flip(const Element& x);

/// (n-2) -> n with an arc joining top points k and k+1 (0-based).
Element cup(int n, int k);
/// n -> (n-2) with an arc joining bottom points k and k+1 (0-based).
Element cap(int n, int k);
/// cup(n,k) o cap(n,k): the generator usually written e_{k+1}.
Element tl_generator(int n, int k);

}  // namespace popswitch
