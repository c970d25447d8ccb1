// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "walg/suites.hpp"

using namespace walg;

namespace {

struct Gate {
  int failures = 0;
  std::vector<SuiteResult> first_pass;

  // Runs a criterion body under a wall-clock budget and prints a verdict.
  void criterion(const char* label, double budget_s,
                 const std::function<std::string(std::vector<SuiteResult>&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string verdict;
    std::vector<SuiteResult> produced;
    try {
      verdict = body(produced);
    } catch (const std::exception& e) {
      verdict = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (verdict.empty() && secs > budget_s)
      verdict = "over budget: " + std::to_string(secs) + "s > " + std::to_string(budget_s) + "s";
    if (verdict.empty()) {
      std::printf("[PASS] %s (%.1fs)\n", label, secs);
      for (auto& r : produced) first_pass.push_back(std::move(r));
    } else {
      std::printf("[FAIL] %s (%.1fs)\n       %s\n", label, secs, verdict.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

std::string all_pass(const SuiteResult& r) {
  for (const CheckResult& c : r.checks)
    if (c.status == "fail") return r.suite + "/" + c.name + ": " + c.witness;
  return "";
}

}  // namespace

int main() {
  Gate gate;
  const SuiteOptions opt;  // seed 42, per-suite default degrees

  gate.criterion("01 graded-dimensions", 1.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("branching", opt);
    if (r.checks.size() != 9) return std::string("expected nine rows");
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("02 parity", 5.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("parity", opt);
    std::size_t asserted = 0, reported = 0;
    for (const CheckResult& c : r.checks)
      (c.status == "reported" ? reported : asserted)++;
    if (asserted != 10) return std::string("expected ten asserted rows");
    if (reported == 0) return std::string("expected reported rows for the first family");
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("03 coordinate-inversion", 30.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("weyl-maps", opt);
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("04 plane-split", 60.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("plane-split", opt);
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("05 laurent-extension", 120.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("hat-algebra", opt);
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("06 casimir-localization", 120.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("sl2-structure", opt);
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("07 whittaker-derivation", 600.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("whittaker", opt);
    // generator totals must equal the root-data prediction for each case
    for (const char* tag : {"a2", "a3", "c2"}) {
      bool found = false;
      for (const CheckResult& c : r.checks)
        if (c.name == std::string("generator-count-") + tag) found = true;
      if (!found) return std::string("missing generator count for ") + tag;
    }
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("08 engine-soundness", 120.0, [&](std::vector<SuiteResult>& out) {
    SuiteResult r = run_suite("consistency", opt);
    std::string v = all_pass(r);
    out.push_back(std::move(r));
    return v;
  });

  gate.criterion("09 determinism", 1200.0, [&](std::vector<SuiteResult>&) {
    std::vector<SuiteResult> rerun;
    for (const std::string& name : suite_names()) rerun.push_back(run_suite(name, opt));
    if (gate.first_pass.size() != rerun.size())
      return std::string("criteria above must pass before determinism is measured");
    const std::string a = report_json(gate.first_pass, opt);
    const std::string b = report_json(rerun, opt);
    if (a != b) return std::string("reports differ between runs of the same seed");
    return std::string();
  });

  if (gate.failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", gate.failures);
  return 1;
}
