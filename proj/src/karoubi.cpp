#include "popswitch/karoubi.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "popswitch/jw.hpp"
#include "popswitch/linalg.hpp"

namespace popswitch {

IdempotentObject::IdempotentObject(std::string name, OrElement idem) : name_(std::move(name)), idem_(std::move(idem)) {
  if (idem_.bottom_count() != idem_.top_count()) {
    throw std::invalid_argument("IdempotentObject " + name_ + ": not an endomorphism");
  }
  if (!(or_compose(idem_, idem_) == idem_)) {
    throw std::invalid_argument("IdempotentObject " + name_ + ": not idempotent");
  }
}

IdempotentObject IdempotentObject::strands(const Signature& s) {
  return IdempotentObject("iota(" + s.to_string() + ")", iota(s));
}

IdempotentObject IdempotentObject::lifted(std::string name, const Element& x) {
  IdempotentObject out(std::move(name), lift(x));
  out.unoriented_ = x;
  return out;
}

namespace {

// Coordinates in which elements are compared: raw diagrams in the bare model,
// weight-functor matrix entries modulo pop-switch.
struct LoopSpace {
  using Key = OrMatching;
  static SparseVector<Key> image(const OrElement& x, Convention) { return {x.terms().begin(), x.terms().end()}; }
};

struct PopSpace {
  using Key = WeightMatrix::Key;
  static SparseVector<Key> image(const OrElement& x, Convention c) {
    const WeightMatrix w = pop_switch_image(x, c);
    return {w.entries().begin(), w.entries().end()};
  }
};

bool is_zero_under(const OrElement& x, const KaroubiOptions& options) {
  if (options.relations == Relations::kLoopValues) return x.is_zero();
  return pop_switch_image(x, options.convention).is_zero();
}

std::vector<OrElement> candidate_diagrams(const IdempotentObject& p, const IdempotentObject& r,
                                          const KaroubiOptions& options) {
  std::vector<OrElement> out;
  const std::vector<Matching> basis = enumerate_basis(p.arity(), r.arity());
  if (options.candidates == Candidates::kUnoriented) {
    for (const auto& m : basis) out.push_back(lift(Element(m)));
    return out;
  }
  const std::set<Signature> sources = p.idem().top_signatures();
  const std::set<Signature> targets = r.idem().bottom_signatures();
  // Modulo pop-switch every diagram with given boundary maps to a multiple of
  // the same matrix unit, so one representative per boundary suffices.
  std::set<std::pair<Signature, Signature>> seen;
  for (const auto& m : basis) {
    for (const auto& o : OrMatching::orientations(m)) {
      Signature bottom = o.bottom_signature();
      Signature top = o.top_signature();
      if (!sources.contains(bottom) || !targets.contains(top)) continue;
      if (options.relations == Relations::kPopSwitch && !seen.emplace(top, bottom).second) continue;
      out.emplace_back(o);
    }
  }
  return out;
}

template <class Space>
std::vector<OrElement> hom_basis_in(const IdempotentObject& p, const IdempotentObject& r,
                                    const KaroubiOptions& options) {
  SpanBuilder<typename Space::Key> span;
  std::vector<OrElement> basis;
  for (const auto& x : candidate_diagrams(p, r, options)) {
    OrElement y = or_compose(r.idem(), or_compose(x, p.idem(), options.convention), options.convention);
    if (span.offer(Space::image(y, options.convention))) basis.push_back(std::move(y));
  }
  return basis;
}

OrElement combine(const std::vector<OrElement>& basis, const std::vector<RatFunc>& coefficients, int bottom,
                  int top) {
  OrElement out(bottom, top);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coefficients[i].is_zero()) out += basis[i] * coefficients[i];
  }
  return out;
}

// Small nonzero integers from a generator whose output sequence is fixed by
// the standard, so restarts are reproducible everywhere.
class Coefficients {
 public:
  explicit Coefficients(std::uint32_t seed) : gen_(seed) {}
  RatFunc next() {
    for (;;) {
      const long c = static_cast<long>(gen_() % 9U) - 4;
      if (c != 0) return RatFunc(c);
    }
  }

 private:
  std::mt19937 gen_;
};

template <class Space>
IsomorphismSearch find_isomorphism_in(const IdempotentObject& p, const std::vector<IdempotentObject>& summands,
                                      const KaroubiOptions& options, std::optional<std::size_t> end_dimension) {
  using Key = typename Space::Key;
  const Convention conv = options.convention;
  const std::size_t count = summands.size();
  IsomorphismSearch result;

  bool same_arity = true;
  for (const auto& s : summands) same_arity = same_arity && s.arity() == p.arity();
  if (same_arity && check_direct_sum_hypotheses(p, summands, options)) {
    SumCertificate c{p, summands, {}, {}, options.relations, conv};
    for (const auto& s : summands) {
      c.u.push_back(s.idem());
      c.v.push_back(s.idem());
    }
    result.certificate = std::move(c);
    return result;
  }

  std::vector<std::vector<OrElement>> into(count);   // Hom(summand_k, p)
  std::vector<std::vector<OrElement>> out_of(count);  // Hom(p, summand_k)
  for (std::size_t k = 0; k < count; ++k) {
    into[k] = hom_basis_in<Space>(summands[k], p, options);
    out_of[k] = hom_basis_in<Space>(p, summands[k], options);
    if (into[k].empty() || out_of[k].empty()) {
      result.reason = "dimension: no nonzero morphisms between " + summands[k].name() + " and " + p.name();
      return result;
    }
  }
  const std::size_t end_p = end_dimension ? *end_dimension : hom_basis_in<Space>(p, p, options).size();
  std::size_t expected = 0;
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      expected += hom_basis_in<Space>(summands[j], summands[k], options).size();
    }
  }
  if (end_p != expected) {
    result.reason = "dimension: End(" + p.name() + ") has dimension " + std::to_string(end_p) +
                    ", the proposed sum has " + std::to_string(expected);
    return result;
  }

  std::vector<std::size_t> offset(count + 1, 0);
  for (std::size_t k = 0; k < count; ++k) offset[k + 1] = offset[k] + out_of[k].size();
  const std::size_t unknowns = offset[count];

  Coefficients random(options.seed);
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    std::vector<OrElement> u;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<RatFunc> a(into[k].size(), RatFunc(1));
      if (attempt > 0) {
        for (auto& c : a) c = random.next();
      }
      u.push_back(combine(into[k], a, summands[k].arity(), p.arity()));
    }

    // Equation groups: (j, k) for v_j o u_k, and count*count for sum u_k o v_k.
    using Row = std::pair<std::size_t, Key>;
    std::map<Row, std::map<std::size_t, RatFunc>> lhs;
    std::map<Row, RatFunc> rhs;
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t group = j * count + k;
        for (std::size_t i = 0; i < out_of[j].size(); ++i) {
          for (const auto& [key, c] : Space::image(or_compose(out_of[j][i], u[k], conv), conv)) {
            lhs[{group, key}][offset[j] + i] += c;
          }
        }
        if (j == k) {
          for (const auto& [key, c] : Space::image(summands[k].idem(), conv)) rhs[{group, key}] = c;
        }
      }
    }
    const std::size_t sum_group = count * count;
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t i = 0; i < out_of[k].size(); ++i) {
        for (const auto& [key, c] : Space::image(or_compose(u[k], out_of[k][i], conv), conv)) {
          lhs[{sum_group, key}][offset[k] + i] += c;
        }
      }
    }
    for (const auto& [key, c] : Space::image(p.idem(), conv)) rhs[{sum_group, key}] = c;

    std::set<Row> rows;
    for (const auto& [r, e] : lhs) rows.insert(r);
    for (const auto& [r, e] : rhs) rows.insert(r);
    RfMatrix matrix;
    RfVector b;
    matrix.reserve(rows.size());
    for (const auto& r : rows) {
      RfVector row(unknowns);
      if (auto it = lhs.find(r); it != lhs.end()) {
        for (const auto& [col, c] : it->second) row[col] = c;
      }
      matrix.push_back(std::move(row));
      auto it = rhs.find(r);
      b.push_back(it == rhs.end() ? RatFunc() : it->second);
    }
    const SolveResult solved = rf_solve(matrix, b);
    if (!solved.consistent()) continue;

    SumCertificate c{p, summands, u, {}, options.relations, conv};
    for (std::size_t k = 0; k < count; ++k) {
      const std::vector<RatFunc> coeffs(solved.solution->begin() + static_cast<std::ptrdiff_t>(offset[k]),
                                        solved.solution->begin() + static_cast<std::ptrdiff_t>(offset[k + 1]));
      c.v.push_back(combine(out_of[k], coeffs, p.arity(), summands[k].arity()));
    }
    const CertificateCheck check = revalidate(c);
    if (!check.ok) throw std::logic_error("find_isomorphism: solved certificate fails revalidation: " + check.failure);
    result.certificate = std::move(c);
    return result;
  }
  result.reason = "no solution: linear system inconsistent for " + std::to_string(options.attempts) + " choices of u";
  return result;
}

IsomorphismSearch find_isomorphism_with(const IdempotentObject& p, const std::vector<IdempotentObject>& summands,
                                        const KaroubiOptions& options, std::optional<std::size_t> end_dimension) {
  if (options.relations == Relations::kLoopValues) {
    return find_isomorphism_in<LoopSpace>(p, summands, options, end_dimension);
  }
  return find_isomorphism_in<PopSpace>(p, summands, options, end_dimension);
}

}  // namespace

std::vector<OrElement> hom_basis(const IdempotentObject& p, const IdempotentObject& r,
                                 const KaroubiOptions& options) {
  if (options.relations == Relations::kLoopValues) return hom_basis_in<LoopSpace>(p, r, options);
  return hom_basis_in<PopSpace>(p, r, options);
}

bool check_direct_sum_hypotheses(const OrElement& p, const std::vector<OrElement>& parts,
                                 const KaroubiOptions& options) {
  if (p.bottom_count() != p.top_count()) throw std::invalid_argument("check_direct_sum_hypotheses: not an endomorphism");
  OrElement total(p.bottom_count(), p.top_count());
  for (const auto& part : parts) {
    if (part.bottom_count() != p.bottom_count() || part.top_count() != p.top_count()) {
      throw std::invalid_argument("check_direct_sum_hypotheses: arity mismatch");
    }
    total += part;
  }
  if (!equal_under(total, p, options.relations, options.convention)) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i != j && !is_zero_under(or_compose(parts[i], parts[j], options.convention), options)) return false;
    }
  }
  return true;
}

bool check_direct_sum_hypotheses(const IdempotentObject& p, const std::vector<IdempotentObject>& parts,
                                 const KaroubiOptions& options) {
  std::vector<OrElement> elements;
  for (const auto& part : parts) elements.push_back(part.idem());
  return check_direct_sum_hypotheses(p.idem(), elements, options);
}

CertificateCheck revalidate(const SumCertificate& c) {
  const Convention conv = c.convention;
  auto same = [&](const OrElement& a, const OrElement& b) { return equal_under(a, b, c.relations, conv); };
  CertificateCheck check;
  const std::size_t count = c.summands.size();
  if (c.u.size() != count || c.v.size() != count) {
    check.failure = "certificate has the wrong number of morphisms";
    return check;
  }
  const OrElement& p = c.p.idem();
  for (std::size_t k = 0; k < count; ++k) {
    const OrElement& q = c.summands[k].idem();
    const std::string name = std::to_string(k);
    if (c.u[k].bottom_count() != q.top_count() || c.u[k].top_count() != p.bottom_count() ||
        c.v[k].bottom_count() != p.top_count() || c.v[k].top_count() != q.bottom_count()) {
      check.failure = "arity of u" + name + " or v" + name;
      return check;
    }
    if (!same(or_compose(or_compose(p, c.u[k], conv), q, conv), c.u[k])) {
      check.failure = "u" + name + " != p o u" + name + " o q" + name;
      return check;
    }
    if (!same(or_compose(or_compose(q, c.v[k], conv), p, conv), c.v[k])) {
      check.failure = "v" + name + " != q" + name + " o v" + name + " o p";
      return check;
    }
  }
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      const OrElement product = or_compose(c.v[j], c.u[k], conv);
      const OrElement expected =
          j == k ? c.summands[k].idem() : OrElement(c.summands[k].arity(), c.summands[j].arity());
      if (!same(product, expected)) {
        check.failure = "v" + std::to_string(j) + " o u" + std::to_string(k) + (j == k ? " != q" : " != 0") +
                        (j == k ? std::to_string(k) : "");
        return check;
      }
    }
  }
  OrElement total(p.bottom_count(), p.top_count());
  for (std::size_t k = 0; k < count; ++k) total += or_compose(c.u[k], c.v[k], conv);
  if (!same(total, p)) {
    check.failure = "sum of u_k o v_k != p";
    return check;
  }
  check.ok = true;
  return check;
}

IsomorphismSearch find_isomorphism(const IdempotentObject& p, const std::vector<IdempotentObject>& summands,
                                   const KaroubiOptions& options) {
  return find_isomorphism_with(p, summands, options, std::nullopt);
}

LaurentPoly charge_sum(const std::vector<Signature>& signatures) {
  LaurentPoly total;
  for (const auto& s : signatures) total += LaurentPoly::monomial(1, s.charge());
  return total;
}

namespace {

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DecompositionSearch decompose_jw(int n, const KaroubiOptions& options) {
  if (n < 1 || n > 4) throw std::domain_error("decompose_jw requires 1 <= n <= 4");
  DecompositionSearch search;
  search.n = n;
  const IdempotentObject p = IdempotentObject::lifted("lift(p_" + std::to_string(n) + ")", jones_wenzl(n).element);
  const std::vector<Signature> all = Signature::all(n);
  const LaurentPoly target = quantum_int(n + 1);
  const std::size_t k = static_cast<std::size_t>(n) + 1;

  std::optional<std::size_t> end_dimension;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    ++search.subsets_examined;
    std::vector<Signature> chosen;
    for (auto i : idx) chosen.push_back(all[i]);
    if (charge_sum(chosen) != target) continue;
    ++search.subsets_tried;
    if (!end_dimension) end_dimension = hom_basis(p, p, options).size();
    std::vector<IdempotentObject> summands;
    for (const auto& s : chosen) summands.push_back(IdempotentObject::strands(s));
    IsomorphismSearch found = find_isomorphism_with(p, summands, options, end_dimension);
    if (!found.certificate) {
      search.last_reason = found.reason;
      continue;
    }
    const CertificateCheck check = revalidate(*found.certificate);
    if (!check.ok) {
      search.last_reason = "revalidation: " + check.failure;
      continue;
    }
    Decomposition d{n, chosen, std::move(*found.certificate), {}, RatFunc(), or_close_trace(p.idem(), options.convention)};
    for (const auto& s : chosen) {
      d.closures.push_back(or_close_trace(iota(s), options.convention));
      d.closure_total += d.closures.back();
    }
    search.found = std::move(d);
    return search;
  } while (next_combination(idx, all.size()));
  return search;
}

std::string serialize(const Decomposition& d) {
  const SumCertificate& c = d.certificate;
  std::ostringstream out;
  out << "decomposition of " << c.p.name() << "\n";
  out << "relations: " << to_string(c.relations) << "\n";
  out << "convention: " << to_string(c.convention) << "\n";
  out << "signatures:";
  for (const auto& s : d.signatures) out << " " << s.to_string();
  out << "\n";
  for (std::size_t k = 0; k < c.summands.size(); ++k) {
    out << "summand " << k << ": " << c.summands[k].name() << "\n";
    out << "  closure: " << d.closures[k].to_string() << "\n";
    out << "  u" << k << " = " << c.u[k].to_string() << "\n";
    out << "  v" << k << " = " << c.v[k].to_string() << "\n";
  }
  out << "closure sum: " << d.closure_total.to_string() << "\n";
  out << "trace: " << d.trace.to_string() << "\n";
  const CertificateCheck check = revalidate(c);
  const bool traces_agree = d.closure_total == d.trace;
  if (check.ok && traces_agree) {
    out << "VERIFIED n=" << d.n << " summands=" << c.summands.size() << "\n";
  } else {
    out << "FAILED n=" << d.n << ": " << (check.ok ? "closure sum differs from trace" : check.failure) << "\n";
  }
  return out.str();
}

}  // namespace popswitch
