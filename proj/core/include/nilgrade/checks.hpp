#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgrade/spec_io.hpp"

namespace nilgrade {

/// fail: a decision came out negative (an expected-negative fixture when
/// `expected` is false). falsified: a guaranteed statement was violated or a
/// decision contradicts `expected`.
enum class CheckStatus { pass, fail, falsified, skipped_resource };
std::string to_string(CheckStatus status);

struct CheckReport {
  std::string spec;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::optional<bool> expected;
  /// Hypotheses did not hold, so nothing was tested.
  bool vacuous = false;
  std::vector<std::pair<std::string, std::string>> witness;
  std::string detail;
  double millis = 0;
};

struct CheckInfo {
  std::string name;
  std::string statement;
};

const std::vector<CheckInfo>& registered_checks();
bool is_registered_check(const std::string& name);

/// Runs `checks`, or the description's own list when empty, or every registered
/// check when that is empty too. Reports come back in registry order.
std::vector<CheckReport> run_checks(const RingSpec& spec, const std::vector<std::string>& checks = {},
                                    const Limits& limits = {});

/// 1 if anything is falsified, else 3 if anything was skipped for a
/// resource cap, else 0.
int exit_code(const std::vector<CheckReport>& reports);

/// "x (degree d)" style rendering.
std::string render(const Grading& grading, Element x);

}  // namespace nilgrade
