#include "popswitch/otl.hpp"

#include <algorithm>
#include <stdexcept>

#include "coefficients.hpp"
#include "popswitch/jw.hpp"

namespace popswitch {

// ---------------------------------------------------------------------------
// Signature

Signature Signature::parse(std::string_view text) {
  std::vector<Orientation> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c == '^') {
      values.push_back(Orientation::kUp);
    } else if (c == 'v') {
      values.push_back(Orientation::kDown);
    } else {
      throw std::invalid_argument("Signature: unexpected character '" + std::string(1, c) + "'");
    }
  }
  return Signature(std::move(values));
}

Signature Signature::uniform(int n, Orientation o) {
  return Signature(std::vector<Orientation>(static_cast<std::size_t>(std::max(n, 0)), o));
}

std::vector<Signature> Signature::all(int n) {
  std::vector<Signature> out;
  const std::size_t count = std::size_t{1} << n;
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::vector<Orientation> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const bool down = (bits >> (n - 1 - i)) & 1U;
      v[static_cast<std::size_t>(i)] = down ? Orientation::kDown : Orientation::kUp;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

int Signature::charge() const {
  int c = 0;
  for (auto o : values_) c += o == Orientation::kUp ? 1 : -1;
  return c;
}

Signature Signature::reversed() const {
  std::vector<Orientation> v = values_;
  for (auto& o : v) o = o == Orientation::kUp ? Orientation::kDown : Orientation::kUp;
  return Signature(std::move(v));
}

Signature Signature::operator+(const Signature& right) const {
  std::vector<Orientation> v = values_;
  v.insert(v.end(), right.values_.begin(), right.values_.end());
  return Signature(std::move(v));
}

std::string Signature::to_string() const {
  std::string out;
  for (auto o : values_) out += o == Orientation::kUp ? '^' : 'v';
  return out;
}

std::string to_string(Convention c) {
  return c == Convention::kCounterclockwiseIsQ ? "ccw->q" : "cw->q";
}

std::string to_string(Relations r) { return r == Relations::kLoopValues ? "loop-values" : "pop-switch"; }

// ---------------------------------------------------------------------------
// OrMatching

OrMatching::OrMatching(Matching matching, std::vector<bool> source)
    : matching_(std::move(matching)), source_(std::move(source)) {
  if (static_cast<int>(source_.size()) != matching_.point_count()) {
    throw std::invalid_argument("OrMatching: orientation table has wrong size");
  }
  for (int p = 0; p < matching_.point_count(); ++p) {
    if (source_[static_cast<std::size_t>(p)] == source_[static_cast<std::size_t>(matching_.partner(p))]) {
      throw std::invalid_argument("OrMatching: each strand needs exactly one source");
    }
  }
}

namespace {

// Whether a boundary point with sign `o` is where its strand starts.
bool starts_here(bool bottom, Orientation o) { return bottom == (o == Orientation::kUp); }

}  // namespace

std::optional<OrMatching> OrMatching::with_boundary(const Matching& m, const Signature& bottom,
                                                     const Signature& top) {
  if (static_cast<int>(bottom.size()) != m.bottom_count() || static_cast<int>(top.size()) != m.top_count()) {
    throw std::invalid_argument("OrMatching::with_boundary: signature length mismatch");
  }
  const int b = m.bottom_count();
  std::vector<bool> source(static_cast<std::size_t>(m.point_count()));
  for (int p = 0; p < m.point_count(); ++p) {
    const bool is_bottom = p < b;
    const Orientation o = is_bottom ? bottom[static_cast<std::size_t>(p)] : top[static_cast<std::size_t>(p - b)];
    source[static_cast<std::size_t>(p)] = starts_here(is_bottom, o);
  }
  for (int p = 0; p < m.point_count(); ++p) {
    if (source[static_cast<std::size_t>(p)] == source[static_cast<std::size_t>(m.partner(p))]) return std::nullopt;
  }
  return OrMatching(m, std::move(source));
}

std::vector<OrMatching> OrMatching::orientations(const Matching& m) {
  std::vector<int> firsts;
  for (int p = 0; p < m.point_count(); ++p) {
    if (m.partner(p) > p) firsts.push_back(p);
  }
  std::vector<OrMatching> out;
  const std::size_t count = std::size_t{1} << firsts.size();
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::vector<bool> source(static_cast<std::size_t>(m.point_count()));
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      const bool forward = ((bits >> i) & 1U) == 0;
      source[static_cast<std::size_t>(firsts[i])] = forward;
      source[static_cast<std::size_t>(m.partner(firsts[i]))] = !forward;
    }
    out.emplace_back(m, std::move(source));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Signature OrMatching::bottom_signature() const {
  std::vector<Orientation> v(static_cast<std::size_t>(matching_.bottom_count()));
  for (int p = 0; p < matching_.bottom_count(); ++p) {
    v[static_cast<std::size_t>(p)] = is_source(p) ? Orientation::kUp : Orientation::kDown;
  }
  return Signature(std::move(v));
}

Signature OrMatching::top_signature() const {
  const int b = matching_.bottom_count();
  std::vector<Orientation> v(static_cast<std::size_t>(matching_.top_count()));
  for (int k = 0; k < matching_.top_count(); ++k) {
    v[static_cast<std::size_t>(k)] = is_source(b + k) ? Orientation::kDown : Orientation::kUp;
  }
  return Signature(std::move(v));
}

std::string OrMatching::to_string() const {
  std::string out =
      "TL(" + std::to_string(matching_.bottom_count()) + "," + std::to_string(matching_.top_count()) + "){";
  bool first = true;
  for (const auto& [a, b] : matching_.pairs()) {
    if (!first) out += ",";
    first = false;
    const bool forward = is_source(matching_.index_of(a));
    out += "(" + a.to_string() + (forward ? ">" : "<") + b.to_string() + ")";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// OrElement

OrElement::OrElement(const OrMatching& m, RatFunc coefficient)
    : bottom_(m.matching().bottom_count()), top_(m.matching().top_count()) {
  if (!coefficient.is_zero()) terms_.emplace(m, std::move(coefficient));
}

OrElement OrElement::scalar(const RatFunc& c) { return OrElement(OrMatching(Matching(0, 0, {}), {}), c); }

RatFunc OrElement::coefficient(const OrMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

void OrElement::add_term(const OrMatching& m, const RatFunc& c) {
  if (m.matching().bottom_count() != bottom_ || m.matching().top_count() != top_) {
    throw std::invalid_argument("OrElement: arity mismatch");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<Signature> OrElement::bottom_signatures() const {
  std::set<Signature> out;
  for (const auto& [m, c] : terms_) out.insert(m.bottom_signature());
  return out;
}

std::set<Signature> OrElement::top_signatures() const {
  std::set<Signature> out;
  for (const auto& [m, c] : terms_) out.insert(m.top_signature());
  return out;
}

OrElement& OrElement::operator+=(const OrElement& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw std::invalid_argument("OrElement: arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

OrElement& OrElement::operator-=(const OrElement& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw std::invalid_argument("OrElement: arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

OrElement& OrElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string OrElement::to_string() const {
  return detail::render_combination(terms_, [](const OrMatching& m) { return m.to_string(); });
}

// ---------------------------------------------------------------------------
// composition

RatFunc loop_value(bool counterclockwise, Convention convention) {
  const bool is_q = counterclockwise == (convention == Convention::kCounterclockwiseIsQ);
  return RatFunc(is_q ? LaurentPoly::q() : LaurentPoly::q_inverse());
}

OrElement or_compose(const OrElement& f, const OrElement& g, Convention convention) {
  if (f.bottom_count() != g.top_count()) throw std::invalid_argument("or_compose: arity mismatch");
  OrElement out(g.bottom_count(), f.top_count());
  if (f.is_zero() || g.is_zero()) return out;
  const detail::CommonDenominator cf(f.terms());
  const detail::CommonDenominator cg(g.terms());

  std::map<Signature, std::vector<std::size_t>> g_by_top;
  for (std::size_t i = 0; i < cg.size(); ++i) g_by_top[cg.key(i).top_signature()].push_back(i);

  const int kb = g.bottom_count();
  const int ccw_shift = convention == Convention::kCounterclockwiseIsQ ? 1 : -1;
  detail::LoopAccumulator<OrMatching> acc;
  for (std::size_t fi = 0; fi < cf.size(); ++fi) {
    const OrMatching& upper = cf.key(fi);
    const Signature interface = upper.bottom_signature();
    auto it = g_by_top.find(interface);
    if (it == g_by_top.end()) continue;
    for (std::size_t gi : it->second) {
      const OrMatching& lower = cg.key(gi);
      auto stacked = detail::stack(upper.matching(), lower.matching());
      int shift = 0;
      for (int m : stacked.loop_leftmost) {
        const bool counterclockwise = interface[static_cast<std::size_t>(m)] == Orientation::kDown;
        shift += counterclockwise ? ccw_shift : -ccw_shift;
      }
      std::vector<bool> source(static_cast<std::size_t>(stacked.matching.point_count()));
      for (int p = 0; p < kb; ++p) source[static_cast<std::size_t>(p)] = lower.is_source(p);
      const int mid = upper.matching().bottom_count();
      for (int t = 0; t < f.top_count(); ++t) {
        source[static_cast<std::size_t>(kb + t)] = upper.is_source(mid + t);
      }
      acc.add(OrMatching(std::move(stacked.matching), std::move(source)), 0, shift, cf.numerator(fi),
              cg.numerator(gi));
    }
  }
  acc.emit(cf.denominator() * cg.denominator(), [&](const OrMatching& m, const RatFunc& c) { out.add_term(m, c); });
  return out;
}

OrElement or_tensor(const OrElement& x, const OrElement& y) {
  OrElement out(x.bottom_count() + y.bottom_count(), x.top_count() + y.top_count());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const Matching joined = detail::tensor(mx.matching(), my.matching());
      const int xb = mx.matching().bottom_count();
      const int yb = my.matching().bottom_count();
      std::vector<bool> source(static_cast<std::size_t>(joined.point_count()));
      for (int p = 0; p < xb; ++p) source[static_cast<std::size_t>(p)] = mx.is_source(p);
      for (int p = 0; p < yb; ++p) source[static_cast<std::size_t>(xb + p)] = my.is_source(p);
      for (int t = 0; t < mx.matching().top_count(); ++t) {
        source[static_cast<std::size_t>(xb + yb + t)] = mx.is_source(xb + t);
      }
      for (int t = 0; t < my.matching().top_count(); ++t) {
        source[static_cast<std::size_t>(xb + yb + mx.matching().top_count() + t)] = my.is_source(yb + t);
      }
      out.add_term(OrMatching(joined, std::move(source)), cx * cy);
    }
  }
  return out;
}

OrElement lift(const Element& x) {
  OrElement out(x.bottom_count(), x.top_count());
  for (const auto& [m, c] : x.terms()) {
    for (const auto& o : OrMatching::orientations(m)) out.add_term(o, c);
  }
  return out;
}

OrElement iota(const Signature& s) {
  return OrElement(*OrMatching::with_boundary(Matching::identity(static_cast<int>(s.size())), s, s));
}

namespace {

// Oriented nested cups 0 -> 2m whose loops, once capped, all turn the same way.
OrElement nested_cup(int m, bool counterclockwise) {
  std::vector<std::pair<Point, Point>> pairs;
  for (int k = 0; k < m; ++k) pairs.push_back({{Side::kTop, k}, {Side::kTop, 2 * m - 1 - k}});
  const Matching matching = Matching::from_pairs(0, 2 * m, pairs);
  // Leftmost point of loop k is position k; pointing down there is ccw.
  const Orientation left = counterclockwise ? Orientation::kDown : Orientation::kUp;
  const Orientation right = counterclockwise ? Orientation::kUp : Orientation::kDown;
  const Signature top = Signature::uniform(m, left) + Signature::uniform(m, right);
  return OrElement(*OrMatching::with_boundary(matching, Signature(), top));
}

OrElement nested_cap(int m, bool counterclockwise) {
  std::vector<std::pair<Point, Point>> pairs;
  for (int k = 0; k < m; ++k) pairs.push_back({{Side::kBottom, k}, {Side::kBottom, 2 * m - 1 - k}});
  const Matching matching = Matching::from_pairs(2 * m, 0, pairs);
  const Orientation left = counterclockwise ? Orientation::kDown : Orientation::kUp;
  const Orientation right = counterclockwise ? Orientation::kUp : Orientation::kDown;
  const Signature bottom = Signature::uniform(m, left) + Signature::uniform(m, right);
  return OrElement(*OrMatching::with_boundary(matching, bottom, Signature()));
}

RatFunc scalar_value(const OrElement& closed) {
  if (closed.bottom_count() != 0 || closed.top_count() != 0) throw std::logic_error("expected a closed diagram");
  return closed.is_zero() ? RatFunc() : closed.terms().begin()->second;
}

}  // namespace

RatFunc beta(int n, Convention convention) {
  const int m = std::abs(n);
  const bool ccw = n >= 0;
  return scalar_value(or_compose(nested_cap(m, ccw), nested_cup(m, ccw), convention));
}

RatFunc alpha(int n, Convention convention) { return beta(-n, convention) * beta(n, convention); }

RatFunc or_close_trace(const OrElement& x, Convention convention) {
  if (x.bottom_count() != x.top_count()) throw std::invalid_argument("or_close_trace: not an endomorphism");
  const int n = x.bottom_count();
  const int sign = convention == Convention::kCounterclockwiseIsQ ? 1 : -1;
  RatFunc total;
  for (const auto& [m, c] : x.terms()) {
    const Signature top = m.top_signature();
    if (top != m.bottom_signature()) continue;
    // Closing strand k: an upward one passes over a maximum left to right
    // (-1), a downward one under a minimum left to right (+1).
    int exponent = diagram_weight(m, Convention::kCounterclockwiseIsQ);
    for (int k = 0; k < n; ++k) exponent += top[static_cast<std::size_t>(k)] == Orientation::kUp ? -1 : 1;
    total += c * RatFunc(LaurentPoly::monomial(1, sign * exponent));
  }
  return total;
}

// ---------------------------------------------------------------------------
// lemma checks

bool verify_teleport(const RatFunc& x, const Signature& s) {
  if (s.charge() != 0) throw std::domain_error("verify_teleport: signature must be balanced");
  const OrElement closed = OrElement::scalar(x);
  return or_tensor(closed, iota(s)) == or_tensor(iota(s), closed);
}

bool verify_ia(int k, int n, Convention convention) {
  if (n < 0 || k < n) throw std::domain_error("verify_ia requires k >= n >= 0");
  const OrElement up = iota(Signature::uniform(k, Orientation::kUp));
  const OrElement down = iota(Signature::uniform(k, Orientation::kDown));
  const bool forward = or_tensor(up, OrElement::scalar(alpha(n, convention))) == up;
  const bool backward = or_tensor(down, OrElement::scalar(alpha(-n, convention))) == down;
  return forward && backward;
}

bool verify_oio(int n, Convention convention) {
  if (n < 0) throw std::domain_error("verify_oio requires n >= 0");
  const OrElement strands = iota(Signature::uniform(n, Orientation::kUp));
  const OrElement sandwiched = or_tensor(or_tensor(OrElement::scalar(beta(-n, convention)), strands),
                                         OrElement::scalar(beta(n, convention)));
  return sandwiched == strands;
}

namespace {

// Oriented cup 0 -> 2; left_to_right means the strand starts at t0.
OrElement oriented_cup(bool left_to_right) {
  const Matching m = Matching::from_pairs(0, 2, {{{Side::kTop, 0}, {Side::kTop, 1}}});
  return OrElement(OrMatching(m, {left_to_right, !left_to_right}));
}

bool arc_move_holds(int n, Relations relations, Convention convention) {
  const OrElement p = lift(jones_wenzl(n + 2).element);
  const RatFunc sign = (n + 1) % 2 == 0 ? RatFunc(1) : RatFunc(-1);
  bool ok = true;
  for (const bool upward : {true, false}) {
    const OrElement strands = iota(Signature::uniform(n, upward ? Orientation::kUp : Orientation::kDown));
    const OrElement right_arc = oriented_cup(upward);
    const OrElement left_arc = oriented_cup(!upward);
    const OrElement lhs = or_compose(p, or_tensor(strands, right_arc), convention);
    const OrElement moved = or_compose(p, or_tensor(left_arc, strands), convention);
    const OrElement rhs = moved * (sign * beta(upward ? n : -n, convention));
    ok = ok && equal_under(lhs, rhs, relations, convention);
  }
  return ok;
}

}  // namespace

std::string ArcMoveReport::validating_convention() const {
  if (holds_ccw_is_q && holds_cw_is_q) return "both";
  if (holds_ccw_is_q) return "ccw->q";
  if (holds_cw_is_q) return "cw->q";
  return "ENCODING-FAIL";
}

ArcMoveReport verify_arc_move(int n, Relations relations) {
  if (n < 0 || n > 5) throw std::domain_error("verify_arc_move requires 0 <= n <= 5");
  ArcMoveReport report;
  report.n = n;
  report.relations = relations;
  report.holds_ccw_is_q = arc_move_holds(n, relations, Convention::kCounterclockwiseIsQ);
  report.holds_cw_is_q = arc_move_holds(n, relations, Convention::kClockwiseIsQ);
  return report;
}

// ---------------------------------------------------------------------------
// weight functor

void WeightMatrix::add(const Signature& top, const Signature& bottom, const RatFunc& c) {
  if (static_cast<int>(top.size()) != top_ || static_cast<int>(bottom.size()) != bottom_) {
    throw std::invalid_argument("WeightMatrix: arity mismatch");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Key{top, bottom}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

WeightMatrix& WeightMatrix::operator+=(const WeightMatrix& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw std::invalid_argument("WeightMatrix: arity mismatch");
  for (const auto& [k, c] : other.entries_) add(k.first, k.second, c);
  return *this;
}

WeightMatrix& WeightMatrix::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

std::string WeightMatrix::to_string() const {
  return detail::render_combination(
      entries_, [](const Key& k) { return "[" + k.first.to_string() + "<-" + k.second.to_string() + "]"; });
}

int diagram_weight(const OrMatching& d, Convention convention) {
  const Matching& m = d.matching();
  const int b = m.bottom_count();
  int w = 0;
  for (int p = 0; p < m.point_count(); ++p) {
    const int other = m.partner(p);
    if (other < p || !d.is_source(p)) continue;  // visit each strand at its left end when run left to right
    if (p < b && other < b) w -= 1;              // bottom arc run left to right
    if (p >= b && other >= b) w += 1;            // top arc run left to right
  }
  return convention == Convention::kCounterclockwiseIsQ ? w : -w;
}

WeightMatrix pop_switch_image(const OrElement& x, Convention convention) {
  WeightMatrix out(x.bottom_count(), x.top_count());
  for (const auto& [m, c] : x.terms()) {
    out.add(m.top_signature(), m.bottom_signature(), c * RatFunc(LaurentPoly::monomial(1, diagram_weight(m, convention))));
  }
  return out;
}

WeightMatrix compose(const WeightMatrix& f, const WeightMatrix& g) {
  if (f.bottom_count() != g.top_count()) throw std::invalid_argument("compose: arity mismatch");
  WeightMatrix out(g.bottom_count(), f.top_count());
  std::map<Signature, std::vector<const std::pair<const WeightMatrix::Key, RatFunc>*>> f_by_bottom;
  for (const auto& entry : f.entries()) f_by_bottom[entry.first.second].push_back(&entry);
  for (const auto& [gk, gc] : g.entries()) {
    auto it = f_by_bottom.find(gk.first);
    if (it == f_by_bottom.end()) continue;
    for (const auto* fe : it->second) out.add(fe->first.first, gk.second, fe->second * gc);
  }
  return out;
}

bool equal_under(const OrElement& a, const OrElement& b, Relations relations, Convention convention) {
  if (relations == Relations::kLoopValues) return a == b;
  return pop_switch_image(a, convention) == pop_switch_image(b, convention);
}

}  // namespace popswitch
