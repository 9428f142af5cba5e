#include "popswitch/tldiag.hpp"

#include <algorithm>
#include <stdexcept>

#include "coefficients.hpp"

namespace popswitch {

std::string Point::to_string() const {
  return (side == Side::kBottom ? "b" : "t") + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Matching

namespace {

// Position of a point along the boundary read b0..b_{i-1}, t_{j-1}..t0.
int cyclic_position(int bottom, int top, int point) {
  return point < bottom ? point : bottom + (top - 1 - (point - bottom));
}

}  // namespace

Matching::Matching(int bottom, int top, std::vector<std::uint8_t> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
  if (bottom < 0 || top < 0) throw std::invalid_argument("Matching: negative arity");
  const int n = bottom + top;
  if (n > 250) throw std::invalid_argument("Matching: too many boundary points");
  if (static_cast<int>(partner_.size()) != n) throw std::invalid_argument("Matching: partner table has wrong size");
  for (int p = 0; p < n; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q >= n || q == p || partner_[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("Matching: not a perfect matching");
    }
  }
  // Planarity: the pairs must nest along the boundary circle.
  std::vector<int> by_position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) by_position[static_cast<std::size_t>(cyclic_position(bottom, top, p))] = p;
  std::vector<int> open;
  for (int pos = 0; pos < n; ++pos) {
    const int p = by_position[static_cast<std::size_t>(pos)];
    const int other = cyclic_position(bottom, top, partner_[static_cast<std::size_t>(p)]);
    if (other > pos) {
      open.push_back(p);
    } else {
      if (open.empty() || open.back() != partner_[static_cast<std::size_t>(p)]) {
        throw std::invalid_argument("Matching: strands cross");
      }
      open.pop_back();
    }
  }
}

Matching Matching::from_pairs(int bottom, int top, const std::vector<std::pair<Point, Point>>& pairs) {
  const int n = bottom + top;
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(std::max(n, 0)), 255);
  auto index = [&](Point p) {
    const int limit = p.side == Side::kBottom ? bottom : top;
    if (p.index < 0 || p.index >= limit) throw std::invalid_argument("Matching: point out of range");
    return p.side == Side::kBottom ? p.index : bottom + p.index;
  };
  for (const auto& [a, b] : pairs) {
    const int x = index(a);
    const int y = index(b);
    if (partner[static_cast<std::size_t>(x)] != 255 || partner[static_cast<std::size_t>(y)] != 255) {
      throw std::invalid_argument("Matching: point used twice");
    }
    partner[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
    partner[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(x);
  }
  return Matching(bottom, top, std::move(partner));
}

Matching Matching::identity(int n) {
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    partner[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(n + k);
    partner[static_cast<std::size_t>(n + k)] = static_cast<std::uint8_t>(k);
  }
  return Matching(n, n, std::move(partner));
}

Point Matching::point_at(int index) const {
  return index < bottom_ ? Point{Side::kBottom, index} : Point{Side::kTop, index - bottom_};
}

int Matching::index_of(Point p) const { return p.side == Side::kBottom ? p.index : bottom_ + p.index; }

std::vector<std::pair<Point, Point>> Matching::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (int p = 0; p < point_count(); ++p) {
    if (partner(p) > p) out.emplace_back(point_at(p), point_at(partner(p)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Matching::through_strands() const {
  int count = 0;
  for (int p = 0; p < bottom_; ++p) count += partner(p) >= bottom_ ? 1 : 0;
  return count;
}

std::string Matching::to_string() const {
  std::string out = "TL(" + std::to_string(bottom_) + "," + std::to_string(top_) + "){";
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + a.to_string() + "," + b.to_string() + ")";
  }
  return out + "}";
}

std::vector<Matching> enumerate_basis(int bottom, int top) {
  if (bottom < 0 || top < 0) throw std::invalid_argument("enumerate_basis: negative arity");
  const int n = bottom + top;
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  std::vector<int> point_at_position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) point_at_position[static_cast<std::size_t>(cyclic_position(bottom, top, p))] = p;

  // Noncrossing matchings of positions 0..n-1: position `lo` pairs with an
  // odd offset, splitting the rest into an inside and an outside interval.
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> pending;  // intervals still to be matched
  auto recurse = [&](auto&& self) -> void {
    if (pending.empty()) {
      out.emplace_back(bottom, top, partner);
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo > hi) {
      self(self);
    } else {
      for (int mate = lo + 1; mate <= hi; mate += 2) {
        const int a = point_at_position[static_cast<std::size_t>(lo)];
        const int b = point_at_position[static_cast<std::size_t>(mate)];
        partner[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        partner[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
        pending.emplace_back(mate + 1, hi);
        pending.emplace_back(lo + 1, mate - 1);
        self(self);
        pending.pop_back();
        pending.pop_back();
      }
    }
    pending.emplace_back(lo, hi);
  };
  pending.emplace_back(0, n - 1);
  recurse(recurse);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= k + 2;
  }
  return c;
}

// ---------------------------------------------------------------------------
// stacking

namespace detail {

Stacked stack(const Matching& upper, const Matching& lower) {
  const int mid = upper.bottom_count();
  if (lower.top_count() != mid) throw std::invalid_argument("compose: arity mismatch");
  const int kb = lower.bottom_count();
  const int jt = upper.top_count();
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(kb + jt));
  std::vector<bool> seen(static_cast<std::size_t>(mid), false);

  // Lower points: 0..kb-1 bottom, kb..kb+mid-1 interface.
  // Upper points: 0..mid-1 interface, mid..mid+jt-1 top.
  // Result points: 0..kb-1 bottom, kb..kb+jt-1 top.
  auto walk = [&](int result_point) {
    bool in_lower = result_point < kb;
    int at = in_lower ? result_point : mid + (result_point - kb);
    while (true) {
      if (in_lower) {
        const int next = lower.partner(at);
        if (next < kb) return next;
        const int m = next - kb;
        seen[static_cast<std::size_t>(m)] = true;
        in_lower = false;
        at = m;
      } else {
        const int next = upper.partner(at);
        if (next >= mid) return kb + (next - mid);
        seen[static_cast<std::size_t>(next)] = true;
        in_lower = true;
        at = kb + next;
      }
    }
  };
  for (int p = 0; p < kb + jt; ++p) {
    partner[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(walk(p));
  }
  std::vector<int> loops;
  for (int m = 0; m < mid; ++m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    loops.push_back(m);
    // Alternate lower and upper arcs until the loop closes.
    int at = m;
    do {
      seen[static_cast<std::size_t>(at)] = true;
      const int down = lower.partner(kb + at) - kb;
      seen[static_cast<std::size_t>(down)] = true;
      at = upper.partner(down);
    } while (at != m);
  }
  return Stacked{Matching(kb, jt, std::move(partner)), std::move(loops)};
}

Matching tensor(const Matching& left, const Matching& right) {
  const int lb = left.bottom_count();
  const int lt = left.top_count();
  const int rb = right.bottom_count();
  const int rt = right.top_count();
  const int bottom = lb + rb;
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(bottom + lt + rt));
  auto map_left = [&](int p) { return p < lb ? p : bottom + (p - lb); };
  auto map_right = [&](int p) { return p < rb ? lb + p : bottom + lt + (p - rb); };
  for (int p = 0; p < left.point_count(); ++p) {
    partner[static_cast<std::size_t>(map_left(p))] = static_cast<std::uint8_t>(map_left(left.partner(p)));
  }
  for (int p = 0; p < right.point_count(); ++p) {
    partner[static_cast<std::size_t>(map_right(p))] = static_cast<std::uint8_t>(map_right(right.partner(p)));
  }
  return Matching(bottom, lt + rt, std::move(partner));
}

Matching flip(const Matching& m) {
  const int b = m.bottom_count();
  const int t = m.top_count();
  // old bottom k -> new top k; old top k -> new bottom k
  auto map = [&](int p) { return p < b ? t + p : p - b; };
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(b + t));
  for (int p = 0; p < b + t; ++p) partner[static_cast<std::size_t>(map(p))] = static_cast<std::uint8_t>(map(m.partner(p)));
  return Matching(t, b, std::move(partner));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

Element::Element(const Matching& m, RatFunc coefficient) : bottom_(m.bottom_count()), top_(m.top_count()) {
  if (!coefficient.is_zero()) terms_.emplace(m, std::move(coefficient));
}

Element Element::scalar(const RatFunc& c) { return Element(Matching(0, 0, {}), c); }

RatFunc Element::coefficient(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

void Element::add_term(const Matching& m, const RatFunc& c) {
  if (m.bottom_count() != bottom_ || m.top_count() != top_) throw std::invalid_argument("Element: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw std::invalid_argument("Element: arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw std::invalid_argument("Element: arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string Element::to_string() const {
  return detail::render_combination(terms_, [](const Matching& m) { return m.to_string(); });
}

Element compose(const Element& f, const Element& g) {
  if (f.bottom_count() != g.top_count()) throw std::invalid_argument("compose: arity mismatch");
  Element out(g.bottom_count(), f.top_count());
  if (f.is_zero() || g.is_zero()) return out;
  const detail::CommonDenominator cf(f.terms());
  const detail::CommonDenominator cg(g.terms());
  detail::LoopAccumulator<Matching> acc;
  for (std::size_t gi = 0; gi < cg.size(); ++gi) {
    for (std::size_t fi = 0; fi < cf.size(); ++fi) {
      auto stacked = detail::stack(cf.key(fi), cg.key(gi));
      acc.add(stacked.matching, static_cast<int>(stacked.loop_leftmost.size()), 0, cf.numerator(fi),
              cg.numerator(gi));
    }
  }
  const LaurentPoly den = cf.denominator() * cg.denominator();
  acc.emit(den, [&](const Matching& m, const RatFunc& c) { out.add_term(m, c); });
  return out;
}

Element tensor(const Element& x, const Element& y) {
  Element out(x.bottom_count() + y.bottom_count(), x.top_count() + y.top_count());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) out.add_term(detail::tensor(mx, my), cx * cy);
  }
  return out;
}

namespace {

int closure_loops(const Matching& m) {
  const int n = m.bottom_count();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int at = start;
    do {
      seen[static_cast<std::size_t>(at)] = true;
      const int across = m.partner(at);
      seen[static_cast<std::size_t>(across)] = true;
      at = across < n ? across + n : across - n;  // closing strand t_k <-> b_k
    } while (at != start);
  }
  return loops;
}

}  // namespace

RatFunc close_trace(const Element& x) {
  if (x.bottom_count() != x.top_count()) throw std::invalid_argument("close_trace: not an endomorphism");
  RatFunc total;
  const RatFunc d = delta();
  for (const auto& [m, c] : x.terms()) {
    RatFunc term = c;
    for (int i = closure_loops(m); i > 0; --i) term *= d;
    total += term;
  }
  return total;
}

Element vertical_flip(const Element& x) {
  Element out(x.top_count(), x.bottom_count());
  for (const auto& [m, c] : x.terms()) out.add_term(detail::flip(m), c);
  return out;
}

Element cup(int n, int k) {
  if (n < 2 || k < 0 || k + 1 >= n) throw std::invalid_argument("cup: position out of range");
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0, b = 0; i < n; ++i) {
    if (i == k) {
      pairs.push_back({{Side::kTop, k}, {Side::kTop, k + 1}});
      ++i;
      continue;
    }
    pairs.push_back({{Side::kBottom, b++}, {Side::kTop, i}});
  }
  return Element(Matching::from_pairs(n - 2, n, pairs));
}

Element cap(int n, int k) { return vertical_flip(cup(n, k)); }

Element tl_generator(int n, int k) { return compose(cup(n, k), cap(n, k)); }

}  // namespace popswitch
