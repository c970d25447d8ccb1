#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walg/algebras.hpp"
#include "walg/presentation.hpp"

namespace walg {

// Outcome of one verified identity. status is "pass", "fail", or
// "reported" (a measurement published without an assertion attached).
// The anchor states the identity being checked; checks that only exercise
// machinery carry the literal anchor "plumbing".
struct CheckResult {
  std::string name;
  std::string anchor;
  std::string status;
  std::string witness;  // failure detail or reported value; empty on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  long elapsed_ms = 0;  // human output only, never serialized to JSON

  bool ok() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  // 0 keeps the per-suite defaults; positive values override the main
  // degree knob of a suite (documented per suite in the README).
  int degree = 0;
};

// Canonical order: branching, parity, weyl-maps, plane-split, hat-algebra,
// sl2-structure, whittaker, consistency.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite; throws UnknownSuite for names outside the catalog.
// Individual check failures and exceptions are captured in the result, so
// this only throws for unusable configuration.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

// Machine report: UTF-8 JSON, keys sorted, no wall-clock data; the same
// results and options serialize to the same bytes.
std::string report_json(const std::vector<SuiteResult>& results, const SuiteOptions& opt);
// Human report: one line per check plus per-suite timings.
std::string report_text(const std::vector<SuiteResult>& results, const SuiteOptions& opt);

// --- definition documents (UTF-8 JSON) ---

// {"name": ..., "generators": [...], "relations": [{"pair": [hi, lo],
//  "normal": "..."}], "localized_final": "integer"|"half"}. The "normal"
// text is the full normal form of hi*lo, written in ascending generator
// order; out-of-order words are rejected rather than reordered.
struct AlgebraDef {
  std::string name;
  Presentation pres;
};
AlgebraDef parse_algebra_def(const std::string& text);
std::string serialize_algebra_def(const Presentation& P, const std::string& name);

// {"kind": "minimal-w", "g0": {...}, "g1_names": [...], "action": [...],
//  "b_lower": [...], "central_name": ...}; consumable by build_minimal_w.
std::string serialize_minimal_w(const MinimalWData& data);
MinimalWData parse_minimal_w(const std::string& text);

}  // namespace walg
