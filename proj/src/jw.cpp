#include "popswitch/jw.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "popswitch/linalg.hpp"

namespace popswitch {

std::string JwReport::to_string() const {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  return std::string("nonzero: ") + flag(nonzero) + "\nidempotent: " + flag(idempotent) +
         "\nleft-uncappable: " + flag(left_uncappable) + "\nright-uncappable: " + flag(right_uncappable) + "\n";
}

JwReport check_jw_properties(const Element& x) {
  if (x.bottom_count() != x.top_count()) throw std::invalid_argument("check_jw_properties: not an endomorphism");
  const int n = x.bottom_count();
  JwReport report;
  report.nonzero = !x.is_zero();
  report.idempotent = compose(x, x) == x;
  report.left_uncappable = true;
  report.right_uncappable = true;
  for (int k = 0; k + 1 < n; ++k) {
    if (!compose(cap(n, k), x).is_zero()) report.left_uncappable = false;
    if (!compose(x, cup(n, k)).is_zero()) report.right_uncappable = false;
  }
  return report;
}

namespace {

Element wenzl_step(const Element& previous, int k) {
  // previous = p_k; returns p_{k+1}.
  const Element lifted = tensor(previous, Element::identity(1));
  const int n = k + 1;
  const Element upper = compose(lifted, cup(n, k - 1));
  const Element lower = compose(cap(n, k - 1), lifted);
  const RatFunc ratio(quantum_int(k), quantum_int(k + 1));
  return lifted - compose(upper, lower) * ratio;
}

struct JwCache {
  std::mutex mutex;
  std::vector<Element> elements;  // elements[k-1] = p_k
  std::vector<bool> verified;
};

JwCache& cache() {
  static JwCache instance;
  return instance;
}

}  // namespace

JonesWenzl jones_wenzl(int n) {
  if (n < 1) throw std::domain_error("jones_wenzl requires n >= 1");
  JwCache& c = cache();
  std::lock_guard lock(c.mutex);
  if (c.elements.empty()) {
    c.elements.push_back(Element::identity(1));
    c.verified.push_back(false);
  }
  while (static_cast<int>(c.elements.size()) < n) {
    const int k = static_cast<int>(c.elements.size());
    c.elements.push_back(wenzl_step(c.elements.back(), k));
    c.verified.push_back(false);
  }
  const auto idx = static_cast<std::size_t>(n - 1);
  if (!c.verified[idx]) {
    if (!check_jw_properties(c.elements[idx]).all()) {
      throw std::logic_error("jones_wenzl: recursion produced an element failing the JW properties");
    }
    c.verified[idx] = true;
  }
  return JonesWenzl{n, c.elements[idx]};
}

Element jw_solve_by_uniqueness(int n) {
  if (n < 1 || n > 6) throw std::domain_error("jw_solve_by_uniqueness is limited to 1 <= n <= 6");
  const std::vector<Matching> basis = enumerate_basis(n, n);
  const std::size_t unknowns = basis.size();
  const Matching id = Matching::identity(n);

  RfMatrix rows;
  RfVector rhs;
  {
    RfVector row(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) {
      if (basis[i] == id) row[i] = RatFunc(1);
    }
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  // cap_k o x = 0: one equation per (k, output diagram).
  for (int k = 0; k + 1 < n; ++k) {
    const Element c = cap(n, k);
    std::map<Matching, RfVector> equations;
    for (std::size_t i = 0; i < unknowns; ++i) {
      const Element image = compose(c, Element(basis[i]));
      for (const auto& [m, coef] : image.terms()) {
        auto [it, inserted] = equations.try_emplace(m, RfVector(unknowns));
        it->second[i] += coef;
      }
    }
    for (auto& [m, row] : equations) {
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  const SolveResult solved = rf_solve(rows, rhs);
  if (!solved.consistent()) throw std::logic_error("jw_solve_by_uniqueness: system is inconsistent");
  if (!solved.nullspace.empty()) throw std::logic_error("jw_solve_by_uniqueness: solution is not unique");
  Element x(n, n);
  for (std::size_t i = 0; i < unknowns; ++i) x.add_term(basis[i], (*solved.solution)[i]);
  if (!(compose(x, x) == x)) throw std::logic_error("jw_solve_by_uniqueness: solution is not idempotent");
  return x;
}

}  // namespace popswitch
