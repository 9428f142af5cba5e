// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "popswitch/jw.hpp"
#include "popswitch/karoubi.hpp"
#include "popswitch/otl.hpp"
#include "popswitch/qarith.hpp"
#include "popswitch/tldiag.hpp"

using namespace popswitch;

namespace {

// Time limits, in seconds.
constexpr double kQuantumIdentityLimit = 5.0;
constexpr double kJonesWenzlLimit = 60.0;
constexpr double kDecomposeLimit = 600.0;

constexpr int kFunctorPairs = 200;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << x;
  return out.str();
}

// [m] as the sum q^(m-1) + q^(m-3) + ... + q^(1-m).
LaurentPoly quantum_int_by_sum(int m) {
  LaurentPoly p;
  for (int i = 0; i < m; ++i) p += LaurentPoly::monomial(1, m - 1 - 2 * i);
  return p;
}

Element random_element(std::mt19937& gen, int bottom, int top) {
  const std::vector<Matching> basis = enumerate_basis(bottom, top);
  Element x(bottom, top);
  for (int t = 0; t < 3; ++t) {
    const LaurentPoly c = LaurentPoly::monomial(static_cast<long>(gen() % 7) - 3, static_cast<int>(gen() % 5) - 2);
    x.add_term(basis[gen() % basis.size()], RatFunc(c));
  }
  return x;
}

Outcome quantum_identities() {
  Outcome o;
  const auto start = Clock::now();
  for (int k = 1; k <= 30; ++k) {
    for (int l = 1; l <= 30; ++l) {
      if (!verify_lemma_q(k, l)) o.fail("lemma fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
      if (!verify_cor_q(k, l)) o.fail("corollary fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  }
  const double t = seconds_since(start);
  if (t >= kQuantumIdentityLimit) o.fail("took " + fixed(t) + " s");
  if (o.passed) o.detail = "900 pairs, " + fixed(t) + " s";
  return o;
}

Outcome tl_combinatorics() {
  Outcome o;
  const long catalan_numbers[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const std::size_t size = enumerate_basis(n, n).size();
    if (size != static_cast<std::size_t>(catalan_numbers[n - 1])) {
      o.fail("basis of size " + std::to_string(size) + " for n=" + std::to_string(n));
    }
  }
  const Element e1 = tl_generator(2, 0);
  const RatFunc loop(LaurentPoly::q() + LaurentPoly::q_inverse());
  if (!(compose(e1, e1) == e1 * loop)) o.fail("e1 o e1 != (q+q^-1) e1");
  if (o.passed) o.detail = "Catalan sizes n=1..8, e1 o e1 = (q+q^-1) e1";
  return o;
}

Outcome jones_wenzl_properties() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    const Element p = jones_wenzl(n).element;
    const JwReport r = check_jw_properties(p);
    if (!r.all()) o.fail("n=" + std::to_string(n) + ": " + r.to_string());
    if (n <= 6 && !(jw_solve_by_uniqueness(n) == p)) o.fail("oracle disagrees at n=" + std::to_string(n));
  }
  const double t = seconds_since(start);
  if (t >= kJonesWenzlLimit) o.fail("took " + fixed(t) + " s");
  if (o.passed) o.detail = "n=1..8, oracle n=1..6, " + fixed(t) + " s";
  return o;
}

Outcome quantum_dimension() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    if (!(close_trace(jones_wenzl(n).element) == RatFunc(quantum_int_by_sum(n + 1)))) {
      o.fail("closure of p_" + std::to_string(n) + " is " + close_trace(jones_wenzl(n).element).to_string());
    }
  }
  if (o.passed) o.detail = "closure(p_n) = [n+1] for n=1..8";
  return o;
}

Outcome oriented_soundness() {
  Outcome o;
  std::mt19937 gen(20240229);
  for (int trial = 0; trial < kFunctorPairs; ++trial) {
    const int a = static_cast<int>(gen() % 5);
    const int b = (a % 2) + 2 * static_cast<int>(gen() % 3);
    const int c = (b % 2) + 2 * static_cast<int>(gen() % 3);
    const Element g = random_element(gen, a, b), f = random_element(gen, b, c);
    if (!(lift(compose(f, g)) == or_compose(lift(f), lift(g)))) o.fail("lift(f o g) differs, trial " + std::to_string(trial));
    if (!(lift(tensor(f, g)) == or_tensor(lift(f), lift(g)))) o.fail("lift(f (x) g) differs, trial " + std::to_string(trial));
  }
  const RatFunc loop(LaurentPoly::q() + LaurentPoly::q_inverse());
  const OrElement bubble = or_compose(lift(cap(2, 0)), lift(cup(2, 0)));
  if (!(bubble == OrElement::scalar(loop))) o.fail("orientation sum of a loop is " + bubble.to_string());
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Signature> all = Signature::all(n);
    OrElement sum(n, n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      sum += iota(all[i]);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j && !or_compose(iota(all[i]), iota(all[j])).is_zero()) o.fail("iota products nonzero at n=" + std::to_string(n));
      }
    }
    if (!(sum == lift(Element::identity(n)))) o.fail("strand sum differs at n=" + std::to_string(n));
  }
  if (o.passed) o.detail = std::to_string(kFunctorPairs) + " pairs, loop sum, strand sums n<=6";
  return o;
}

Outcome oriented_lemmas() {
  Outcome o;
  const RatFunc x(LaurentPoly::monomial(3, 2) - LaurentPoly::q_inverse());
  for (const char* s : {"", "^v", "v^", "^^vv", "^v^v", "vv^^"}) {
    if (!verify_teleport(x, Signature::parse(s))) o.fail(std::string("teleport fails for ") + s);
  }
  for (int k = 0; k <= 8; ++k) {
    for (int n = 0; n <= k; ++n) {
      if (!verify_ia(k, n)) o.fail("ia fails at k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  for (int n = 0; n <= 8; ++n) {
    if (!verify_oio(n)) o.fail("oio fails at n=" + std::to_string(n));
  }
  std::string conventions;
  for (int n = 0; n <= 5; ++n) {
    const ArcMoveReport r = verify_arc_move(n);
    if (!r.valid()) o.fail("arc move fails at n=" + std::to_string(n));
    conventions += (n ? " " : "") + r.validating_convention();
  }
  if (o.passed) o.detail = "arc move modulo pop-switch, conventions n=0..5: " + conventions;
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::string found;
  for (int n = 1; n <= 4; ++n) {
    const auto start = Clock::now();
    const DecompositionSearch s = decompose_jw(n);
    const double t = seconds_since(start);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    if (!s.found) {
      o.fail(tag + s.last_reason);
      continue;
    }
    const Decomposition& d = *s.found;
    if (d.signatures.size() != static_cast<std::size_t>(n + 1)) o.fail(tag + "wrong number of summands");
    const CertificateCheck check = revalidate(d.certificate);
    if (!check.ok) o.fail(tag + check.failure);
    RatFunc total;
    for (const auto& summand : d.certificate.summands) total += or_close_trace(summand.idem());
    if (!(total == RatFunc(quantum_int_by_sum(n + 1)))) o.fail(tag + "closures sum to " + total.to_string());
    if (n == 4 && t >= kDecomposeLimit) o.fail(tag + "took " + fixed(t) + " s");
    found += (n > 1 ? "; " : "");
    for (std::size_t k = 0; k < d.signatures.size(); ++k) found += (k ? " " : "") + d.signatures[k].to_string();
    if (n == 4) found += " (" + fixed(t) + " s)";
  }
  if (o.passed) o.detail = "modulo pop-switch: " + found;
  return o;
}

Outcome direct_sum_instance() {
  Outcome o;
  KaroubiOptions options;
  options.relations = Relations::kLoopValues;
  const auto id2 = IdempotentObject::lifted("id_2", Element::identity(2));
  const std::vector<IdempotentObject> parts = {
      IdempotentObject::lifted("p_2", jones_wenzl(2).element),
      IdempotentObject::lifted("e_1/[2]", tl_generator(2, 0) * RatFunc(LaurentPoly(1), quantum_int(2)))};
  if (!check_direct_sum_hypotheses(id2, parts, options)) o.fail("hypotheses do not hold");
  const IsomorphismSearch s = find_isomorphism(id2, parts, options);
  if (!s.certificate) {
    o.fail("no certificate: " + s.reason);
  } else if (!revalidate(*s.certificate).ok) {
    o.fail("certificate does not revalidate");
  }
  if (o.passed) o.detail = "id_2 = p_2 + e_1/[2]";
  return o;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string command = std::string(POPSWITCH_CLI) + " " + args + " 2>&1";
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "qnum 7",        "qnum 9 --choose 4", "jw --n 4",          "jw --n 5 --check",
      "verify all",    "decompose 1",       "decompose 2",       "decompose 3",
      "decompose 4",   "decompose 3 --convention cw",           "decompose 2 --relations loop-values",
      "qnum 3 --choose 9", "verify bogus"};
  for (const auto& command : commands) {
    const Captured a = run_cli(command), b = run_cli(command);
    if (a.status != b.status || a.out != b.out) o.fail("'" + command + "' differs between runs");
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quantum identities", quantum_identities},
      {"TL combinatorics", tl_combinatorics},
      {"Jones-Wenzl properties", jones_wenzl_properties},
      {"quantum dimension", quantum_dimension},
      {"oriented model soundness", oriented_soundness},
      {"oriented lemmas", oriented_lemmas},
      {"Jones-Wenzl decomposition", main_theorem},
      {"direct sum id_2", direct_sum_instance},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
