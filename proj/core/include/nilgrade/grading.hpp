#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nilgrade/element_set.hpp"
#include "nilgrade/group.hpp"
#include "nilgrade/limits.hpp"
#include "nilgrade/ring.hpp"

namespace nilgrade {

/// Result of asking for the degree of an element: 0 gets its own marker
/// since it lies in every component.
struct DegreeOf {
  enum class Kind { zero, homogeneous, not_homogeneous };
  Kind kind = Kind::zero;
  Degree degree{};

  static DegreeOf zero() { return {Kind::zero, {}}; }
  static DegreeOf of(Degree d) { return {Kind::homogeneous, d}; }
  static DegreeOf none() { return {Kind::not_homogeneous, {}}; }
  bool is_zero() const { return kind == Kind::zero; }
  bool is_homogeneous() const { return kind != Kind::not_homogeneous; }
  friend bool operator==(const DegreeOf&, const DegreeOf&) = default;
};

struct Component {
  Degree degree;
  ElementSet elements;
  std::vector<Element> members;     // ascending, includes 0
  std::vector<Element> generators;  // additive generators
};

using ComponentGenerators = std::vector<std::pair<Degree, std::vector<Element>>>;

/// A validated G-grading of a finite ring. Cheap to copy; immutable apart
/// from internally synchronised caches.
class Grading {
 public:
  /// Closes each generator set additively and checks the internal direct
  /// sum, multiplicativity and 1 in R_e. Throws ValidationError with a
  /// witness on failure.
  static Grading verify(RingPtr ring, GradingGroup group, const ComponentGenerators& generators,
                        const Limits& limits = {});
  /// R_e = R.
  static Grading trivial(RingPtr ring, GradingGroup group = GradingGroup::trivial(), const Limits& limits = {});

  const FiniteRing& ring() const { return *state_->ring; }
  const RingPtr& ring_ptr() const { return state_->ring; }
  const GradingGroup& group() const { return state_->group; }

  /// Nonzero components ordered by degree.
  const std::vector<Component>& components() const { return state_->components; }
  std::vector<Degree> support() const;
  /// Index into components() or nullopt when R_d = 0.
  std::optional<std::size_t> component_index(Degree d) const;
  /// Members of R_d (just {0} when R_d = 0).
  const std::vector<Element>& component_members(Degree d) const;
  /// Index of the identity component or nullopt for the zero ring.
  std::optional<std::size_t> identity_component() const { return component_index(group().identity()); }

  DegreeOf degree_of(Element x) const;
  bool is_homogeneous(Element x) const { return degree_of(x).is_homogeneous(); }
  /// Unique homogeneous parts of x, zero parts omitted.
  std::map<Degree, Element> decompose(Element x) const;

  /// m-potents of component c in ascending order (cached).
  const std::vector<Element>& component_m_potents(std::size_t c, unsigned m) const;
  /// Nilpotents of component c in ascending order (cached).
  const std::vector<Element>& component_nilpotents(std::size_t c) const;

 private:
  struct State {
    RingPtr ring;
    GradingGroup group;
    std::vector<Component> components;
    std::vector<std::int32_t> slot;   // component index, -1 for 0, -2 not homogeneous
    std::vector<Element> parts;       // size * components.size()
    std::vector<Element> zero_only{0};
    mutable std::mutex cache_mutex;
    mutable std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const std::vector<Element>>> m_potents;
    mutable std::map<std::size_t, std::shared_ptr<const std::vector<Element>>> nilpotents;
  };
  explicit Grading(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

struct HomogeneousElement {
  Element element;
  DegreeOf degree;
};

/// Every nonzero homogeneous element once with its degree, preceded by
/// (0, zero marker). Components in degree order, elements ascending.
std::vector<HomogeneousElement> homogeneous_elements(const Grading& grading);

std::vector<Degree> support(const Grading& grading);

enum class Sidedness { right, two_sided };

struct HomogeneousIdeal {
  ElementSet elements;
  Sidedness sidedness = Sidedness::right;
  std::vector<std::pair<Element, DegreeOf>> homogeneous_generators;
};

/// True iff the additive subgroup equals the direct sum of its intersections
/// with the components.
bool is_homogeneous_subgroup(const Grading& grading, const ElementSet& set);

/// Least right ideal containing the generators. Throws PreconditionError for
/// a non-homogeneous generator.
HomogeneousIdeal homogeneous_right_ideal_closure(const Grading& grading, const std::vector<Element>& generators);
HomogeneousIdeal homogeneous_two_sided_ideal_closure(const Grading& grading, const std::vector<Element>& generators);

/// All graded-maximal right ideals, in a deterministic order. Enumerates the
/// lattice of proper homogeneous right ideals as the fixpoint of sums of
/// cyclic ones xR (x homogeneous).
std::vector<HomogeneousIdeal> graded_maximal_right_ideals(const Grading& grading, const Limits& limits = {});
HomogeneousIdeal graded_jacobson_radical(const Grading& grading, const Limits& limits = {});
bool is_graded_local(const Grading& grading, const Limits& limits = {});
bool is_graded_nil(const Grading& grading, const ElementSet& ideal);

struct GradedQuotient {
  Grading grading;
  std::vector<Element> projection;
};
/// R/I with (R/I)_g = R_g/(I ∩ R_g). Throws ValidationError if I is not a
/// homogeneous two-sided ideal.
GradedQuotient graded_quotient(const Grading& grading, const ElementSet& ideal, const Limits& limits = {});

/// Induced grading on a subring that is a homogeneous additive subgroup.
Grading subring_grading(const Grading& grading, const std::shared_ptr<const SubRing>& subring,
                        const Limits& limits = {});
/// R_e as a ring in its own right.
std::shared_ptr<const SubRing> identity_component_ring(const Grading& grading);

}  // namespace nilgrade
