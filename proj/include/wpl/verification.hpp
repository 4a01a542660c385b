#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpl/constant_solver.hpp"

namespace wpl {

struct VerifyConfig {
  double p = 1.5;
  double r = 2.5;
  int dim = 4;
  long samples = 10000;
  std::uint64_t seed = 1;
  double slack = 1e-9;  // relative slack for the ">= 0" defect assertions
  // Replaces the classified law constant in the vector-defect and
  // optimality suites; constants above the optimum make the optimality
  // suite fail with an extremal witness.
  std::optional<double> constant_override;
};

// One verification suite: the most adverse (normalized) value seen and the
// witness producing it. The sign convention is "negative is bad": defect
// suites record the minimum defect/scale, residual suites the negated
// maximum residual, bound suites the minimum margin.
struct SuiteResult {
  std::string name;
  long pairs_tested = 0;
  double worst_defect = 0.0;
  nlohmann::ordered_json worst_witness;
  bool passed = true;
};

// Comparison of the two dual-power conventions against the extremal-family
// supremum on the upper-law side.
struct Adjudication {
  double base_p = 0.0;
  double base_r = 0.0;
  double paper_constant = 0.0;
  double duality_constant = 0.0;
  double extremal_supremum = 0.0;
  double gap_paper = 0.0;
  double gap_duality = 0.0;
  std::string verdict;
  bool passed = true;
};

struct VerificationReport {
  VerifyConfig config;
  LawClassification classification;
  std::optional<double> lwp_constant;
  std::optional<double> uwp_constant_paper;
  std::optional<double> uwp_constant_duality;
  std::vector<SuiteResult> suites;
  std::optional<Adjudication> adjudication;
  bool passed = true;
};

// Runs, in order: the scalar grid checks (h positivity, k nonnegativity
// and symmetry, monotonicity in r), the vector law defects, Hanner,
// Clarkson, the Pythagorean inequalities, the optimality witness, the
// dual-convention adjudication, and the derived-constant consistency
// check. Deterministic for a fixed config.
VerificationReport run_suite(const VerifyConfig& cfg);

nlohmann::ordered_json report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

nlohmann::ordered_json classification_to_json(const LawClassification& cls);

}  // namespace wpl
