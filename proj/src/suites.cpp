#include "popswitch/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "popswitch/jw.hpp"
#include "popswitch/karoubi.hpp"
#include "popswitch/otl.hpp"
#include "popswitch/tldiag.hpp"

namespace popswitch {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  std::size_t ok = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    ok += c.passed ? 1 : 0;
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << checks.size() << ")\n";
  return out.str();
}

namespace {

struct SuiteSpec {
  std::string name;
  int low;
  int high;
  int fallback;
};

const std::vector<SuiteSpec>& specs() {
  static const std::vector<SuiteSpec> s = {
      {"qidentities", 1, 200, 30}, {"tl", 1, 10, 8}, {"jw", 1, 8, 6}, {"otl", 0, 8, 6}, {"karoubi", 1, 4, 4},
  };
  return s;
}

// Outcome of one check body: pass/fail plus a message.
struct Outcome {
  bool passed = false;
  std::string detail;
};

class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& id, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto stop = std::chrono::steady_clock::now();
    report_.checks.push_back(
        {id, o.passed, std::chrono::duration<double, std::milli>(stop - start).count(), std::move(o.detail)});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string ids(const std::vector<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

// ---------------------------------------------------------------------------

void qidentities(Runner& run, int max, const std::optional<Rational>& q0) {
  for (int k = 1; k <= max; ++k) {
    run.check("lemma_q k=" + std::to_string(k) + " l=1.." + std::to_string(max), [&, k] {
      std::vector<int> bad;
      for (int l = 1; l <= max; ++l) {
        if (!verify_lemma_q(k, l, q0)) bad.push_back(l);
      }
      return bad.empty() ? pass() : fail("fails for l=" + ids(bad));
    });
  }
  for (int k = 1; k <= max; ++k) {
    run.check("cor_q k=" + std::to_string(k) + " l=1.." + std::to_string(max), [&, k] {
      std::vector<int> bad;
      for (int l = 1; l <= max; ++l) {
        if (!verify_cor_q(k, l, q0)) bad.push_back(l);
      }
      return bad.empty() ? pass() : fail("fails for l=" + ids(bad));
    });
  }
}

// Number of noncrossing perfect matchings of m points on a line, by the
// first-point recursion (independent of enumerate_basis).
BigInt count_noncrossing(int m) {
  if (m % 2 != 0) return 0;
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = 1;
  for (int k = 2; k <= m; k += 2) {
    for (int j = 1; j < k; j += 2) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(j - 1)] * c[static_cast<std::size_t>(k - j - 1)];
  }
  return c[static_cast<std::size_t>(m)];
}

Element random_basis_element(std::mt19937& gen, int bottom, int top) {
  const std::vector<Matching> basis = enumerate_basis(bottom, top);
  return Element(basis[gen() % basis.size()]);
}

void tl(Runner& run, int max) {
  std::mt19937 gen(7);
  for (int n = 1; n <= max; ++n) {
    const std::string sn = " n=" + std::to_string(n);
    run.check("tl.basis_count" + sn, [n] {
      const BigInt got = BigInt(static_cast<unsigned long>(enumerate_basis(n, n).size()));
      const BigInt formula = catalan(n);
      const BigInt recursion = count_noncrossing(2 * n);
      if (got == formula && got == recursion) return pass(got.get_str());
      return fail("enumerated " + got.get_str() + ", Catalan " + formula.get_str() + ", recursion " +
                  recursion.get_str());
    });
    if (n >= 2) {
      run.check("tl.loop_relation" + sn, [n] {
        const Element e = tl_generator(n, 0);
        return compose(e, e) == e * delta() ? pass() : fail("e_1 o e_1 = " + compose(e, e).to_string());
      });
    }
    run.check("tl.associativity" + sn, [&gen, n] {
      for (int trial = 0; trial < 10; ++trial) {
        const Element a = random_basis_element(gen, n, n);
        const Element b = random_basis_element(gen, n, n);
        const Element c = random_basis_element(gen, n, n);
        if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
          return fail("a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
        }
      }
      return pass();
    });
    run.check("tl.trace_cyclicity" + sn, [&gen, n] {
      for (int trial = 0; trial < 10; ++trial) {
        const Element a = random_basis_element(gen, n, n);
        const Element b = random_basis_element(gen, n, n);
        if (!(close_trace(compose(a, b)) == close_trace(compose(b, a)))) {
          return fail("a=" + a.to_string() + " b=" + b.to_string());
        }
      }
      return pass();
    });
    run.check("tl.interchange" + sn, [&gen, n] {
      // (a (x) b) o (c (x) d) == (a o c) (x) (b o d), split n = i + (n - i).
      for (int i = 0; i <= n; ++i) {
        const Element a = random_basis_element(gen, i, i);
        const Element b = random_basis_element(gen, n - i, n - i);
        const Element c = random_basis_element(gen, i, i);
        const Element d = random_basis_element(gen, n - i, n - i);
        if (!(compose(tensor(a, b), tensor(c, d)) == tensor(compose(a, c), compose(b, d)))) {
          return fail("split " + std::to_string(i) + ": a=" + a.to_string() + " b=" + b.to_string() +
                      " c=" + c.to_string() + " d=" + d.to_string());
        }
      }
      return pass();
    });
  }
}

void jw(Runner& run, int max) {
  for (int n = 1; n <= max; ++n) {
    const std::string sn = " n=" + std::to_string(n);
    run.check("jw.properties" + sn, [n] {
      const JwReport r = check_jw_properties(jones_wenzl(n).element);
      return r.all() ? pass() : fail(r.to_string());
    });
    if (n <= 6) {
      run.check("jw.uniqueness_oracle" + sn, [n] {
        return jw_solve_by_uniqueness(n) == jones_wenzl(n).element ? pass()
                                                                   : fail("recursion and linear system differ");
      });
    }
    run.check("jw.trace" + sn, [n] {
      const RatFunc t = close_trace(jones_wenzl(n).element);
      return t == RatFunc(quantum_int(n + 1)) ? pass(t.to_string()) : fail("closure is " + t.to_string());
    });
  }
}

void otl(Runner& run, int max) {
  run.check("otl.bubble", [] {
    const OrElement cap2 = lift(cap(2, 0));
    const OrElement cup2 = lift(cup(2, 0));
    for (auto c : {Convention::kCounterclockwiseIsQ, Convention::kClockwiseIsQ}) {
      const OrElement loop = or_compose(cap2, cup2, c);
      if (!(loop == OrElement::scalar(delta()))) return fail(to_string(c) + ": " + loop.to_string());
      if (!(loop_value(true, c) + loop_value(false, c) == delta())) return fail(to_string(c) + ": loop values");
    }
    return pass();
  });
  run.check("otl.lift_functor", [] {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      int a = 0, b = 0, c = 0;
      do {
        a = static_cast<int>(gen() % 7);
        b = static_cast<int>(gen() % 7);
        c = static_cast<int>(gen() % 7);
      } while ((a + b) % 2 != 0 || (b + c) % 2 != 0 || a + b > 8 || b + c > 8);
      const Element g = random_basis_element(gen, a, b);
      const Element f = random_basis_element(gen, b, c);
      if (!(lift(compose(f, g)) == or_compose(lift(f), lift(g)))) {
        return fail("compose: f=" + f.to_string() + " g=" + g.to_string());
      }
      if (a + b + b + c <= 8 && !(lift(tensor(f, g)) == or_tensor(lift(f), lift(g)))) {
        return fail("tensor: f=" + f.to_string() + " g=" + g.to_string());
      }
    }
    return pass("200 pairs");
  });
  for (int n = 0; n <= std::min(max, 6); ++n) {
    run.check("otl.strand_sum n=" + std::to_string(n), [n] {
      const std::vector<Signature> all = Signature::all(n);
      OrElement total(n, n);
      for (const auto& s : all) total += iota(s);
      if (!(total == lift(Element::identity(n)))) return fail("sum of iota(s) differs from lift(id)");
      for (const auto& s : all) {
        for (const auto& t : all) {
          if (s != t && !or_compose(iota(s), iota(t)).is_zero()) {
            return fail("iota(" + s.to_string() + ") o iota(" + t.to_string() + ") != 0");
          }
        }
      }
      return pass();
    });
  }
  for (int n = 1; n <= std::min(max, 6); ++n) {
    run.check("otl.lift_jw n=" + std::to_string(n), [n] {
      const OrElement p = lift(jones_wenzl(n).element);
      if (!(or_compose(p, p) == p)) return fail("not idempotent");
      // The unoriented cap is the sum of its orientations; a single oriented
      // cap does not annihilate lift(p_n).
      for (int k = 0; k + 1 < n; ++k) {
        if (!or_compose(lift(cap(n, k)), p).is_zero()) return fail("survives cap at " + std::to_string(k));
        if (!or_compose(p, lift(cup(n, k))).is_zero()) return fail("survives cup at " + std::to_string(k));
      }
      const RatFunc t = or_close_trace(p);
      if (!(t == RatFunc(quantum_int(n + 1)))) return fail("oriented closure " + t.to_string());
      return pass();
    });
  }
  run.check("otl.teleport", [] {
    const std::vector<std::pair<RatFunc, std::string>> cases = {
        {beta(2), "^v"}, {alpha(1), "^^vv"}, {beta(1) + beta(-1), "^v^v"}, {beta(-3), "v^"}, {delta(), ""}};
    for (const auto& [x, s] : cases) {
      if (!verify_teleport(x, Signature::parse(s))) return fail("x=" + x.to_string() + " s=" + s);
    }
    return pass();
  });
  for (int k = 0; k <= max; ++k) {
    run.check("otl.ia k=" + std::to_string(k), [k] {
      std::vector<int> bad;
      for (int n = 0; n <= k; ++n) {
        if (!verify_ia(k, n)) bad.push_back(n);
      }
      return bad.empty() ? pass() : fail("fails for n=" + ids(bad));
    });
  }
  for (int n = 0; n <= max; ++n) {
    run.check("otl.oio n=" + std::to_string(n), [n] { return verify_oio(n) ? pass() : fail("beta_-n iota beta_n != iota"); });
  }
  for (int n = 0; n <= std::min(max, 5); ++n) {
    run.check("otl.arc_move n=" + std::to_string(n), [n] {
      const ArcMoveReport r = verify_arc_move(n, Relations::kPopSwitch);
      const ArcMoveReport bare = verify_arc_move(n, Relations::kLoopValues);
      const std::string detail = "convention " + r.validating_convention() + " modulo pop-switch; " +
                                 bare.validating_convention() + " in the bare model";
      return r.valid() ? pass(detail) : fail(detail);
    });
  }
}

void karoubi(Runner& run, int max) {
  KaroubiOptions exact;
  exact.relations = Relations::kLoopValues;
  const Element e1 = tl_generator(2, 0) * RatFunc(LaurentPoly(1), quantum_int(2));

  run.check("karoubi.dirsum id_1 = iota(^) + iota(v)", [&] {
    const auto p = IdempotentObject::lifted("lift(id_1)", Element::identity(1));
    const std::vector<IdempotentObject> parts = {IdempotentObject::strands(Signature::parse("^")),
                                                 IdempotentObject::strands(Signature::parse("v"))};
    if (!check_direct_sum_hypotheses(p, parts, exact)) return fail("hypotheses");
    const IsomorphismSearch s = find_isomorphism(p, parts, exact);
    if (!s.certificate || !revalidate(*s.certificate).ok) return fail("certificate: " + s.reason);
    return pass();
  });
  run.check("karoubi.dirsum id_2 = p_2 + e_1/[2]", [&] {
    const auto p = IdempotentObject::lifted("lift(id_2)", Element::identity(2));
    const std::vector<IdempotentObject> parts = {IdempotentObject::lifted("lift(p_2)", jones_wenzl(2).element),
                                                 IdempotentObject::lifted("lift(e_1/[2])", e1)};
    if (!check_direct_sum_hypotheses(p, parts, exact)) return fail("hypotheses");
    const IsomorphismSearch s = find_isomorphism(p, parts, exact);
    if (!s.certificate) return fail("no certificate: " + s.reason);
    const CertificateCheck c = revalidate(*s.certificate);
    return c.ok ? pass() : fail(c.failure);
  });
  run.check("karoubi.dirsum_rejects id_2 = p_2 + e_1", [&] {
    const bool holds = check_direct_sum_hypotheses(lift(Element::identity(2)),
                                                   {lift(jones_wenzl(2).element), lift(tl_generator(2, 0))}, exact);
    return holds ? fail("hypotheses accepted") : pass();
  });
  run.check("karoubi.hom_examples", [&] {
    const auto up = IdempotentObject::strands(Signature::parse("^"));
    const auto down = IdempotentObject::strands(Signature::parse("v"));
    if (hom_basis(up, up, exact).size() != 1) return fail("dim Hom(iota(^), iota(^)) != 1");
    if (!hom_basis(up, down, exact).empty()) return fail("Hom(iota(^), iota(v)) != 0");
    KaroubiOptions tl_only = exact;
    tl_only.candidates = Candidates::kUnoriented;
    const auto e = IdempotentObject::lifted("lift(e_1/[2])", e1);
    const auto p2 = IdempotentObject::lifted("lift(p_2)", jones_wenzl(2).element);
    if (!hom_basis(e, p2, tl_only).empty()) return fail("Hom(e_1/[2], p_2) != 0 over unoriented diagrams");
    return pass();
  });
  for (int n = 1; n <= max; ++n) {
    run.check("karoubi.decompose n=" + std::to_string(n), [n] {
      const DecompositionSearch s = decompose_jw(n);
      if (!s.found) return fail("NOT-FOUND: " + s.last_reason);
      const Decomposition& d = *s.found;
      if (static_cast<int>(d.signatures.size()) != n + 1) return fail("wrong number of summands");
      const CertificateCheck c = revalidate(d.certificate);
      if (!c.ok) return fail("revalidation: " + c.failure);
      const RatFunc target(quantum_int(n + 1));
      if (!(d.closure_total == target) || !(d.trace == target)) {
        return fail("closures " + d.closure_total.to_string() + ", trace " + d.trace.to_string());
      }
      std::string sigs;
      for (const auto& g : d.signatures) sigs += (sigs.empty() ? "" : " ") + g.to_string();
      return pass(sigs);
    });
  }
  if (max >= 2) {
    run.check("karoubi.bare_model_obstruction n=2", [] {
      KaroubiOptions bare;
      bare.relations = Relations::kLoopValues;
      const DecompositionSearch s = decompose_jw(2, bare);
      return s.found ? fail("bare model certified p_2") : pass(s.last_reason);
    });
  }
}

int resolve_max(const SuiteSpec& spec, const SuiteOptions& options, bool clamp) {
  int m = options.max_n.value_or(spec.fallback);
  if (clamp) m = std::clamp(m, spec.low, spec.high);
  if (m < spec.low || m > spec.high) {
    throw std::invalid_argument("--max for " + spec.name + " must be in " + std::to_string(spec.low) + ".." +
                                std::to_string(spec.high));
  }
  return m;
}

void run_one(Runner& run, const SuiteSpec& spec, const SuiteOptions& options, bool clamp) {
  const int max = resolve_max(spec, options, clamp);
  if (spec.name == "qidentities") qidentities(run, max, options.q0);
  if (spec.name == "tl") tl(run, max);
  if (spec.name == "jw") jw(run, max);
  if (spec.name == "otl") otl(run, max);
  if (spec.name == "karoubi") karoubi(run, max);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"qidentities", "tl", "jw", "otl", "karoubi", "all"};
  return names;
}

int default_max(const std::string& suite) {
  for (const auto& s : specs()) {
    if (s.name == suite) return s.fallback;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  Runner run(suite);
  if (suite == "all") {
    for (const auto& s : specs()) run_one(run, s, options, true);
    return run.take();
  }
  for (const auto& s : specs()) {
    if (s.name == suite) {
      run_one(run, s, options, false);
      return run.take();
    }
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace popswitch
