#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilgrade/limits.hpp"

namespace nilgrade {

/// "R_e m-nil clean implies R graded m-nil clean" with no hypothesis on the
/// grading group. Known to fail; the search should turn up an instance.
inline constexpr const char* kConverseTarget = "Re_mnc_implies_graded_mnc_without_torsion_hypothesis";
/// Every forward check at once (see forward_targets()).
inline constexpr const char* kAllForwardTarget = "all_forward";

/// Checks that state an implication and can be searched for violations.
const std::vector<std::string>& forward_targets();
std::vector<std::string> search_targets();

enum class SearchStatus { found, exhausted, empty };
std::string to_string(SearchStatus status);

/// One violated check on one distinct sample.
struct Counterexample {
  std::size_t sample = 0;
  nlohmann::json spec;
  std::string check;
  std::string detail;
};

struct SearchReport {
  std::string target;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t distinct = 0;
  /// Samples whose hypotheses held (non-vacuous outcome).
  std::size_t exercised = 0;
  std::size_t skipped_resource = 0;
  SearchStatus status = SearchStatus::empty;
  std::vector<Counterexample> counterexamples;
};

/// Random ring description from the structured families (triangular,
/// matrix, diagonal Z-graded, group ring, product, quotient, amalgamation
/// over small bases). Deterministic in (seed, index).
nlohmann::json sample_spec(std::uint64_t seed, std::size_t index);

/// Samples `budget` descriptions; evaluation is memoized on the description
/// and spread over `jobs` threads. Throws PreconditionError for an unknown
/// target.
SearchReport counterexample_search(const std::string& target, std::size_t budget, std::uint64_t seed,
                                   const Limits& limits = {}, unsigned jobs = 1);

nlohmann::json to_json(const SearchReport& report);

}  // namespace nilgrade
