// popswitch: command-line front end.
//
//   popswitch qnum <n> [--choose k]
//   popswitch jw --n <k> [--check]
//   popswitch verify <suite> [--max N] [--q0 r] [--out report.json]
//   popswitch decompose <n> [--relations pop-switch|loop-values] [--convention ccw|cw] [--out cert.json]
//
// Exit codes: 0 success, 1 a check failed or no certificate was found, 2 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "popswitch/jw.hpp"
#include "popswitch/karoubi.hpp"
#include "popswitch/suites.hpp"

namespace {

using nlohmann::json;
using namespace popswitch;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << doc.dump(2) << "\n";
  return static_cast<bool>(out);
}

int cmd_qnum(int n, std::optional<int> k) {
  if (n < 0) throw UsageError("qnum: n must be >= 0");
  if (k) {
    if (*k < 0 || *k > n) throw UsageError("qnum: --choose k needs 0 <= k <= n");
    std::cout << quantum_binom(n, *k).to_string() << "\n";
  } else {
    std::cout << quantum_int(n).to_string() << "\n";
  }
  return kOk;
}

int cmd_jw(int n, bool check) {
  if (n < 1) throw UsageError("jw: --n must be >= 1");
  const JonesWenzl p = jones_wenzl(n);
  if (!check) {
    std::cout << p.element.to_string() << "\n";
    return kOk;
  }
  const JwReport report = check_jw_properties(p.element);
  std::cout << report.to_string();
  return report.all() ? kOk : kFailed;
}

int cmd_verify(const std::string& suite, std::optional<int> max, const std::optional<std::string>& q0,
               const std::optional<std::string>& out) {
  SuiteOptions options;
  options.max_n = max;
  if (q0) {
    try {
      options.q0 = parse_rational(*q0);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--q0: ") + e.what());
    }
    if (options.q0 == 0 || abs(*options.q0) == 1) throw UsageError("--q0 must not be 0, 1 or -1");
  }
  SuiteReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = run_suite(suite, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.to_text();
  if (out) {
    json doc = {{"suite", report.suite}, {"passed", report.passed()}, {"elapsed_ms", total}};
    doc["checks"] = json::array();
    for (const auto& c : report.checks) {
      doc["checks"].push_back({{"id", c.id}, {"passed", c.passed}, {"elapsed_ms", c.elapsed_ms}, {"detail", c.detail}});
    }
    if (!write_json(*out, doc)) return kFailed;
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_decompose(int n, const std::string& relations, const std::string& convention,
                  const std::optional<std::string>& out) {
  if (n < 1 || n > 4) throw UsageError("decompose: n must be in 1..4");
  KaroubiOptions options;
  options.relations = relations == "loop-values" ? Relations::kLoopValues : Relations::kPopSwitch;
  options.convention = convention == "cw" ? Convention::kClockwiseIsQ : Convention::kCounterclockwiseIsQ;
  const DecompositionSearch search = decompose_jw(n, options);
  json doc = {{"n", n},
              {"relations", to_string(options.relations)},
              {"convention", to_string(options.convention)},
              {"subsets_examined", search.subsets_examined},
              {"subsets_tried", search.subsets_tried}};
  int status = kOk;
  if (!search.found) {
    std::cout << "NOT-FOUND n=" << n << ": " << search.last_reason << "\n";
    doc["found"] = false;
    doc["reason"] = search.last_reason;
    status = kFailed;
  } else {
    const Decomposition& d = *search.found;
    const std::string text = serialize(d);
    std::cout << text;
    doc["found"] = true;
    doc["verified"] = revalidate(d.certificate).ok;
    doc["signatures"] = json::array();
    for (const auto& s : d.signatures) doc["signatures"].push_back(s.to_string());
    doc["u"] = json::array();
    doc["v"] = json::array();
    for (std::size_t k = 0; k < d.signatures.size(); ++k) {
      doc["u"].push_back(d.certificate.u[k].to_string());
      doc["v"].push_back(d.certificate.v[k].to_string());
    }
    doc["closure_sum"] = d.closure_total.to_string();
    doc["certificate"] = text;
    if (!doc["verified"].get<bool>()) status = kFailed;
  }
  if (out && !write_json(*out, doc)) return kFailed;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Temperley-Lieb and pop-switch planar algebras"};
  app.require_subcommand(1);

  int qnum_n = 0;
  std::optional<int> qnum_k;
  auto* qnum = app.add_subcommand("qnum", "Print [n], or the quantum binomial with --choose");
  qnum->add_option("n", qnum_n, "n >= 0")->required();
  qnum->add_option("--choose", qnum_k, "k with 0 <= k <= n");

  int jw_n = 0;
  bool jw_check = false;
  auto* jw = app.add_subcommand("jw", "Print the Jones-Wenzl idempotent p_n");
  jw->add_option("--n", jw_n, "number of strands")->required();
  jw->add_flag("--check", jw_check, "print the property report instead");

  std::string suite;
  std::optional<int> verify_max;
  std::optional<std::string> verify_q0;
  std::optional<std::string> verify_out;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "qidentities, tl, jw, otl, karoubi or all")->required();
  verify->add_option("--max", verify_max, "size bound");
  verify->add_option("--q0", verify_q0, "rational point for the numeric pre-screen");
  verify->add_option("--out", verify_out, "write a JSON report here");

  int decompose_n = 0;
  std::string relations = "pop-switch";
  std::string convention = "ccw";
  std::optional<std::string> decompose_out;
  auto* decompose = app.add_subcommand("decompose", "Split lift(p_n) into strand objects with a certificate");
  decompose->add_option("n", decompose_n, "1..4")->required();
  decompose->add_option("--relations", relations, "pop-switch (default) or loop-values")
      ->check(CLI::IsMember({"pop-switch", "loop-values"}));
  decompose->add_option("--convention", convention, "ccw (default): counterclockwise loops are q; cw: the mirror")
      ->check(CLI::IsMember({"ccw", "cw"}));
  decompose->add_option("--out", decompose_out, "write a JSON document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*qnum) return cmd_qnum(qnum_n, qnum_k);
    if (*jw) return cmd_jw(jw_n, jw_check);
    if (*verify) return cmd_verify(suite, verify_max, verify_q0, verify_out);
    if (*decompose) return cmd_decompose(decompose_n, relations, convention, decompose_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
