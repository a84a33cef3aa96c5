#pragma once

#include <optional>

#include "prism/laws/registry.hpp"

namespace prism {

enum class CheckMode { exhaustive, sampled };

struct CheckConfig {
  std::size_t space_size = 2;
  CheckMode mode = CheckMode::exhaustive;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
};

enum class LawStatus { pass, fail, audit_note };

struct UniverseDesc {
  std::size_t space_size = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t filtered = 0;
};

/// Outcome of one measured facet of an audit-class law.
struct FacetOutcome {
  std::string facet;
  std::uint64_t failures = 0;
  std::string counterexample_json;  // shrunk; empty when the facet held
};

struct LawReport {
  std::string id;
  LawGroup group = LawGroup::core;
  LawClass law_class = LawClass::asserted;
  UniverseDesc universe;
  LawStatus status = LawStatus::pass;
  std::string counterexample_json;  // empty unless a check failed
  std::string note;                 // audit facet verdicts
  std::vector<FacetOutcome> facets;  // audit-class laws only

  bool failed() const { return status == LawStatus::fail; }
};

/// Checks one law over one universe. Counterexamples are shrunk (states,
/// then set elements and pairs) to a local minimum that still falsifies
/// the law.
LawReport check_law(const std::string& id, const CheckConfig& config);

/// The same driver for a caller-supplied law, registered or not.
LawReport check_law(const LawSpec& law, const CheckConfig& config);

/// Re-runs a single operand tuple; used by tests and by anyone replaying
/// a reported counterexample.
bool check_case(const LawSpec& law, const LawCase& c);

/// Serializes a case as JSON (kind-tagged operand list).
std::string case_to_json(const LawCase& c);

/// Rebuilds a case from its JSON form. Expression operands are reported
/// as printed text and are not reconstructed here.
LawCase case_from_json(const LawSpec& law, const std::string& json);

/// Greedily minimizes a case (drop states, then precondition states,
/// postcondition pairs, set members, relation pairs, counters, and
/// expression children) while `fails` keeps holding.
LawCase shrink_to_minimal(LawCase seed, const std::function<bool(const LawCase&)>& fails);

struct SuiteConfig {
  std::size_t exhaustive_space = 2;
  std::vector<std::size_t> sampled_spaces = {3, 4};
  std::size_t samples = 10000;
  std::size_t expr_samples = 1000;
  std::size_t expr_space = 3;
  std::uint64_t seed = 1;
  bool parallel = true;
  std::optional<std::string> only_law;
  std::optional<LawGroup> only_group;
};

struct SuiteResult {
  std::vector<LawReport> reports;
  std::string audit_report;
  bool asserted_ok = true;
};

/// Runs every registered law: exhaustively at the small space where the
/// arity permits, sampled elsewhere. Audit-class laws annotate and never
/// fail the suite. Deterministic for a fixed config, including the audit
/// report.
SuiteResult run_suite(const SuiteConfig& config);

std::string report_to_json(const LawReport& report);
std::string report_to_text(const LawReport& report);

}  // namespace prism
