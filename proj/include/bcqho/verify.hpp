#pragma once

#include <string>
#include <vector>

#include "bcqho/fock.hpp"
#include "bcqho/oscillator.hpp"

// Executable versions of the module invariants: each check returns its
// worst observed residual against a pinned threshold. Randomized checks
// draw from fixed seeds, so a report is byte-identical across runs of
// the same build.

namespace bcqho {

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  OscillatorParams params;
  std::size_t trunc = 32;
  Tolerance tol;
};

std::vector<CheckResult> verify_core(const VerifyConfig& cfg);
std::vector<CheckResult> verify_fock(const VerifyConfig& cfg);
std::vector<CheckResult> verify_oscillator(const VerifyConfig& cfg);
std::vector<CheckResult> verify_wavefn(const VerifyConfig& cfg);

// suite: core | fock | oscillator | wavefn | all
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyConfig& cfg);

bool all_pass(const std::vector<CheckResult>& results);

// one line per check plus a summary; stable formatting
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace bcqho
