#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilgrade/constructions.hpp"
#include "nilgrade/errors.hpp"

namespace nilgrade {

/// Malformed ring description. `where` is a JSON pointer to the offending
/// field or "line N" for syntax errors.
class SpecError : public Error {
 public:
  SpecError(std::string where, const std::string& message)
      : Error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Claimed properties of one element, checked by the element_facts check.
struct ElementFact {
  std::string text;
  Element element = 0;
  std::optional<unsigned> m;  // overrides the description's m
  std::optional<bool> homogeneous;
  std::optional<std::optional<std::int64_t>> degree;  // inner nullopt means the zero marker
  std::optional<bool> m_potent;
  std::optional<bool> nilpotent;
  std::optional<bool> unit;
  std::optional<bool> graded_m_nil_clean;
  std::optional<bool> graded_strongly_m_nil_clean;
  std::optional<bool> graded_pi_regular;
  std::optional<std::size_t> lift_ideal;  // index into RingSpec::ideals
  std::optional<Element> lift_to;
};

struct NamedIdeal {
  std::string name;
  ElementSet elements;
};

/// What the construction knows beyond the grading itself.
struct ConstructionInfo {
  std::string kind;
  std::optional<Grading> base;
  std::size_t n = 0;
  SigmaVector sigma;
  std::vector<Grading> factors;
  std::optional<GroupRingResult> group_ring;
  std::optional<AmalgamationResult> amalgamation;
  std::optional<Grading> amalgamation_a;
  /// Ideals the construction provides (zero-diagonal ideal, augmentation
  /// ideal, the kernel of a quotient, ...).
  std::vector<NamedIdeal> ideals;
  /// For quotients: the ideal of `base` that was factored out.
  std::optional<ElementSet> kernel;
  std::vector<std::string> notes;
};

/// Checks whose outcome is a decision that a spec may pin with "expect".
const std::vector<std::string>& decision_checks();

struct RingSpec {
  explicit RingSpec(Grading g) : grading(std::move(g)) {}

  std::string name;
  std::string description;
  unsigned m = 2;
  Grading grading;
  ConstructionInfo construction;
  /// Empty means every registered check.
  std::vector<std::string> checks;
  std::map<std::string, bool> expect;
  std::vector<NamedIdeal> ideals;
  std::vector<ElementFact> elements;
  std::optional<bool> expect_torsion_free;  // (m-1)-torsion freeness of the group
  nlohmann::json source;
};

/// Parses and builds a ring description. Throws SpecError for malformed
/// input and lets ValidationError / ResourceError from the constructions
/// through.
RingSpec parse_ring_spec(const std::string& text, const Limits& limits = {});
RingSpec parse_ring_spec(const nlohmann::json& doc, const Limits& limits = {});
// String literals would otherwise convert to both of the above.
inline RingSpec parse_ring_spec(const char* text, const Limits& limits = {}) {
  return parse_ring_spec(std::string(text), limits);
}
RingSpec load_ring_spec(const std::string& path, const Limits& limits = {});

/// Table description ({"kind": "table", ...} with a grading block) that
/// parses back to the same tables and components.
nlohmann::json to_table_spec(const Grading& grading);

/// Element named by an index or by its rendering.
Element resolve_element(const FiniteRing& ring, const nlohmann::json& value, const std::string& where);

nlohmann::json group_to_json(const GradingGroup& group);
GradingGroup group_from_json(const nlohmann::json& node, const std::string& where);

}  // namespace nilgrade
