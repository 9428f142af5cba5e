// Oriented Temperley-Lieb diagrams: a concrete model of the pop-switch
// planar algebra.
//
// Every strand carries a direction. Stacking two oriented diagrams whose
// orientations disagree at an interface point gives zero; a closed oriented
// loop is removed at the cost of a scalar, q for one rotation sense and q^-1
// for the other (the Convention decides which). Summing the two orientations
// of a loop therefore gives q + q^-1, so lift(), which replaces an unoriented
// strand by the sum of its orientations, embeds Temperley-Lieb diagrams.
//
// Closed diagrams are scalars in this model, which makes the bubbles beta_n
// and alpha_n numbers. The model on its own has no pop-switch relation; that
// relation is imposed by passing Relations::kPopSwitch to the comparison and
// quotient functions below, which work through the weight functor
// pop_switch_image(). Results obtained here are evidence about the planar
// algebra, not proofs in it.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "popswitch/tldiag.hpp"

namespace popswitch {

enum class Orientation : std::uint8_t { kUp, kDown };

/// Orientations of a row of vertical strand positions, written with `^` and
/// `v`. Ordered lexicographically with up before down.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Orientation> values) : values_(std::move(values)) {}
  /// Throws std::invalid_argument on characters other than '^' and 'v'.
  static Signature parse(std::string_view text);
  static Signature uniform(int n, Orientation o);
  /// All 2^n signatures of length n in increasing order.
  static std::vector<Signature> all(int n);

  std::size_t size() const { return values_.size(); }
  Orientation operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Orientation>& values() const { return values_; }
  /// (#up) - (#down).
  int charge() const;
  Signature reversed() const;
  Signature operator+(const Signature& right) const;
  std::string to_string() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<Orientation> values_;
};

/// Which rotation sense of a closed loop evaluates to q.
enum class Convention : std::uint8_t { kCounterclockwiseIsQ, kClockwiseIsQ };
std::string to_string(Convention c);

/// Relations imposed when comparing oriented elements.
///   kLoopValues: only loop removal (the bare model).
///   kPopSwitch:  additionally, a pair of opposite vertical strands equals the
///                oriented cup-cap on them divided by the value of the loop
///                that the cup-cap closes when squared.
enum class Relations : std::uint8_t { kLoopValues, kPopSwitch };
std::string to_string(Relations r);

/// A Matching with a direction on every strand.
class OrMatching {
 public:
  /// `source[p]` is true when the strand through point p starts at p. Throws
  /// std::invalid_argument unless each pair has exactly one source.
  OrMatching(Matching matching, std::vector<bool> source);

  /// The orientation of m forced by the boundary signatures, if any. A
  /// bottom point is `^` when its strand starts there, a top point is `^`
  /// when its strand ends there.
  static std::optional<OrMatching> with_boundary(const Matching& m, const Signature& bottom, const Signature& top);
  /// All 2^(#strands) orientations of m, sorted.
  static std::vector<OrMatching> orientations(const Matching& m);

  const Matching& matching() const { return matching_; }
  bool is_source(int point) const { return source_[static_cast<std::size_t>(point)]; }
  Signature bottom_signature() const;
  Signature top_signature() const;

  /// tldiag's text with an arrow inside each pair: `(b0>t0)` runs from b0 to
  /// t0, `(b0<b1)` from b1 to b0.
  std::string to_string() const;

  friend auto operator<=>(const OrMatching&, const OrMatching&) = default;

 private:
  Matching matching_;
  std::vector<bool> source_;
};

/// A finite Q(q)-linear combination of oriented diagrams with fixed arities.
/// Terms may have different boundary signatures.
class OrElement {
 public:
  using Terms = std::map<OrMatching, RatFunc>;

  OrElement(int bottom, int top) : bottom_(bottom), top_(top) {}
  explicit OrElement(const OrMatching& m, RatFunc coefficient = RatFunc(1));
  /// The empty diagram scaled by c.
  static OrElement scalar(const RatFunc& c);

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RatFunc coefficient(const OrMatching& m) const;
  void add_term(const OrMatching& m, const RatFunc& c);
  std::set<Signature> bottom_signatures() const;
  std::set<Signature> top_signatures() const;

  OrElement& operator+=(const OrElement& other);
  OrElement& operator-=(const OrElement& other);
  OrElement& operator*=(const RatFunc& c);
  friend OrElement operator+(OrElement a, const OrElement& b) { return a += b; }
  friend OrElement operator-(OrElement a, const OrElement& b) { return a -= b; }
  friend OrElement operator*(OrElement a, const RatFunc& c) { return a *= c; }
  friend OrElement operator*(const RatFunc& c, OrElement a) { return a *= c; }

  friend bool operator==(const OrElement&, const OrElement&) = default;

  std::string to_string() const;

 private:
  int bottom_;
  int top_;
  Terms terms_;
};

/// Value of one closed loop of the given rotation sense.
RatFunc loop_value(bool counterclockwise, Convention convention);

/// f o g. Mismatched orientations at the interface contribute zero. A closed
/// loop's rotation sense is read at its leftmost interface point: pointing
/// down there means counterclockwise. Throws std::invalid_argument on arity
/// mismatch.
OrElement or_compose(const OrElement& f, const OrElement& g,
                     Convention convention = Convention::kCounterclockwiseIsQ);

OrElement or_tensor(const OrElement& x, const OrElement& y);

/// Sum over all orientations of every diagram, coefficients unchanged.
OrElement lift(const Element& x);

/// Vertical strands with the given orientations.
OrElement iota(const Signature& s);

/// n nested counterclockwise loops (clockwise for n < 0), evaluated in the
/// model by actually stacking oriented cups and caps.
RatFunc beta(int n, Convention convention = Convention::kCounterclockwiseIsQ);
/// beta(-n) nested inside beta(n).
RatFunc alpha(int n, Convention convention = Convention::kCounterclockwiseIsQ);

/// Oriented closure: t_k joined to b_k around the right-hand side. Terms whose
/// top and bottom signatures differ contribute zero.
RatFunc or_close_trace(const OrElement& x, Convention convention = Convention::kCounterclockwiseIsQ);

/// x (x) iota(s) == iota(s) (x) x for the closed diagram with value x.
/// Throws std::domain_error unless s has as many ups as downs.
bool verify_teleport(const RatFunc& x, const Signature& s);

/// iota(^k) (x) alpha_n == iota(^k) and iota(v^k) (x) alpha_-n == iota(v^k),
/// for k >= n >= 0 (std::domain_error otherwise).
bool verify_ia(int k, int n, Convention convention = Convention::kCounterclockwiseIsQ);

/// iota(^n) == beta_-n (x) iota(^n) (x) beta_n, n >= 0.
bool verify_oio(int n, Convention convention = Convention::kCounterclockwiseIsQ);

/// Sliding an oriented return arc under p_{n+2} from the right of n upward
/// strands to their left:
///   lift(p_{n+2}) o (iota(^n) (x) cup_ab)
///     == (-1)^(n+1) beta_n * lift(p_{n+2}) o (cup_ba (x) iota(^n)),
/// where cup_ab is the oriented cup running from its left foot to its right
/// foot and cup_ba the reversed one; and the variant with every arrow
/// reversed (downward strands, both cups reversed, beta_-n).
struct ArcMoveReport {
  int n = 0;
  Relations relations = Relations::kPopSwitch;
  bool holds_ccw_is_q = false;  // both variants hold under kCounterclockwiseIsQ
  bool holds_cw_is_q = false;   // both variants hold under kClockwiseIsQ

  bool valid() const { return holds_ccw_is_q || holds_cw_is_q; }
  /// "ccw->q", "cw->q", "both", or "ENCODING-FAIL".
  std::string validating_convention() const;
};

/// 0 <= n <= 5; std::domain_error otherwise.
ArcMoveReport verify_arc_move(int n, Relations relations = Relations::kPopSwitch);

// ---------------------------------------------------------------------------
// Pop-switch quotient

/// Image of an oriented element under the weight functor. Each oriented
/// diagram D: s -> t maps to q^w(D) times the matrix unit (t, s), where w(D)
/// counts top arcs run left to right minus bottom arcs run left to right (sign
/// flipped for Convention::kClockwiseIsQ). Stacking multiplies these matrices,
/// and the functor identifies a pair of opposite vertical strands with its
/// normalized cup-cap, so equality of images is equality modulo the pop-switch
/// relation.
class WeightMatrix {
 public:
  using Key = std::pair<Signature, Signature>;  // (top, bottom)
  using Entries = std::map<Key, RatFunc>;

  WeightMatrix(int bottom, int top) : bottom_(bottom), top_(top) {}

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  void add(const Signature& top, const Signature& bottom, const RatFunc& c);

  WeightMatrix& operator+=(const WeightMatrix& other);
  WeightMatrix& operator*=(const RatFunc& c);
  friend WeightMatrix operator+(WeightMatrix a, const WeightMatrix& b) { return a += b; }
  friend WeightMatrix operator*(WeightMatrix a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

  std::string to_string() const;

 private:
  int bottom_;
  int top_;
  Entries entries_;
};

/// The exponent w(D) described above.
int diagram_weight(const OrMatching& d, Convention convention);

WeightMatrix pop_switch_image(const OrElement& x, Convention convention = Convention::kCounterclockwiseIsQ);
/// f o g as a matrix product. Throws std::invalid_argument on arity mismatch.
WeightMatrix compose(const WeightMatrix& f, const WeightMatrix& g);

/// Equality of oriented elements under the chosen relations.
bool equal_under(const OrElement& a, const OrElement& b, Relations relations,
                 Convention convention = Convention::kCounterclockwiseIsQ);

}  // namespace popswitch
