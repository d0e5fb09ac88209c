#include "nilgrade/grading.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "nilgrade/errors.hpp"

namespace nilgrade {

namespace {

constexpr std::int32_t kZeroSlot = -1;
constexpr std::int32_t kNotHomogeneous = -2;

}  // namespace

Grading Grading::verify(RingPtr ring, GradingGroup group, const ComponentGenerators& generators,
                        const Limits& limits) {
  auto state = std::make_shared<State>();
  state->ring = ring;
  state->group = group;
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();

  std::map<Degree, std::vector<Element>> merged;
  for (const auto& [d, gens] : generators) {
    if (!group.contains(d)) throw ValidationError("grading degree", "degree " + group.format(d) + " not in " + group.label());
    for (Element g : gens) {
      if (g >= n) throw ValidationError("grading generator", "element index " + std::to_string(g) + " out of range");
    }
    auto& dst = merged[d];
    dst.insert(dst.end(), gens.begin(), gens.end());
  }
  for (auto& [d, gens] : merged) {
    ElementSet closure = additive_closure(r, gens);
    if (closure.size() <= 1) continue;
    Component c;
    c.degree = d;
    c.members = closure.to_vector();
    c.generators = subgroup_generators(r, closure);
    c.elements = std::move(closure);
    state->components.push_back(std::move(c));
  }

  // Internal direct sum: sizes multiply to |R| and the sum map is injective.
  std::size_t product = 1;
  for (const auto& c : state->components) {
    product *= c.members.size();
    if (product > n) break;
  }
  if (product != n) {
    std::ostringstream os;
    os << "component sizes multiply to " << (product > n ? "more than " + std::to_string(n) : std::to_string(product))
       << " but |R| = " << n;
    if (product < n) {
      ElementSet covered(n);
      // Every sum of component parts; the first uncovered element is the witness.
      std::vector<Element> sums{0};
      for (const auto& c : state->components) {
        std::vector<Element> next;
        for (Element s : sums)
          for (Element m : c.members) next.push_back(r.add(s, m));
        sums = std::move(next);
      }
      for (Element s : sums) covered.insert(s);
      for (Element x = 0; x < n; ++x)
        if (!covered.contains(x)) {
          os << "; " << r.format(x) << " is not a sum of homogeneous parts";
          break;
        }
    }
    throw ValidationError("direct sum", os.str());
  }

  const std::size_t k = state->components.size();
  state->slot.assign(n, kNotHomogeneous);
  state->slot[0] = kZeroSlot;
  state->parts.assign(n * k, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t t = 0; t < n; ++t) {
    Element sum = 0;
    for (std::size_t c = 0; c < k; ++c) sum = r.add(sum, state->components[c].members[digit[c]]);
    if (seen[sum]) {
      throw ValidationError("direct sum", r.format(sum) + " has two decompositions into homogeneous parts");
    }
    seen[sum] = true;
    for (std::size_t c = 0; c < k; ++c) state->parts[sum * k + c] = state->components[c].members[digit[c]];
    for (std::size_t c = 0; c < k; ++c) {
      if (++digit[c] < state->components[c].members.size()) break;
      digit[c] = 0;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (Element x : state->components[c].members)
      if (x != 0) state->slot[x] = static_cast<std::int32_t>(c);

  auto slot_of_degree = [&](Degree d) -> std::int32_t {
    for (std::size_t c = 0; c < k; ++c)
      if (state->components[c].degree == d) return static_cast<std::int32_t>(c);
    return kZeroSlot;
  };

  if (r.one() != 0 && state->slot[r.one()] != slot_of_degree(group.identity())) {
    throw ValidationError("identity component", "1 is not homogeneous of degree " + group.format(group.identity()));
  }

  std::size_t pair_work = 0;
  for (const auto& a : state->components)
    for (const auto& b : state->components) pair_work += a.members.size() * b.members.size();
  const bool exhaustive = pair_work <= limits.axiom_budget;
  for (const auto& a : state->components) {
    for (const auto& b : state->components) {
      const Degree target = group.multiply(a.degree, b.degree);
      const std::int32_t want = slot_of_degree(target);
      const auto& xs = exhaustive ? a.members : a.generators;
      const auto& ys = exhaustive ? b.members : b.generators;
      for (Element x : xs) {
        for (Element y : ys) {
          const Element p = r.mul(x, y);
          if (p != 0 && state->slot[p] != want) {
            std::ostringstream os;
            os << r.format(x) << " (degree " << group.format(a.degree) << ") * " << r.format(y) << " (degree "
               << group.format(b.degree) << ") = " << r.format(p) << " is not in R_" << group.format(target);
            throw ValidationError("multiplicativity", os.str());
          }
        }
      }
    }
  }
  return Grading(std::move(state));
}

Grading Grading::trivial(RingPtr ring, GradingGroup group, const Limits& limits) {
  const Degree e = group.identity();
  ComponentGenerators gens{{e, ring->additive_generators()}};
  return verify(std::move(ring), std::move(group), gens, limits);
}

std::vector<Degree> Grading::support() const {
  std::vector<Degree> out;
  for (const auto& c : components()) out.push_back(c.degree);
  return out;
}

std::optional<std::size_t> Grading::component_index(Degree d) const {
  const auto& cs = components();
  for (std::size_t c = 0; c < cs.size(); ++c)
    if (cs[c].degree == d) return c;
  return std::nullopt;
}

const std::vector<Element>& Grading::component_members(Degree d) const {
  auto c = component_index(d);
  return c ? components()[*c].members : state_->zero_only;
}

DegreeOf Grading::degree_of(Element x) const {
  const std::int32_t s = state_->slot[x];
  if (s == kZeroSlot) return DegreeOf::zero();
  if (s == kNotHomogeneous) return DegreeOf::none();
  return DegreeOf::of(components()[static_cast<std::size_t>(s)].degree);
}

std::map<Degree, Element> Grading::decompose(Element x) const {
  std::map<Degree, Element> out;
  const std::size_t k = components().size();
  for (std::size_t c = 0; c < k; ++c) {
    const Element part = state_->parts[x * k + c];
    if (part != 0) out.emplace(components()[c].degree, part);
  }
  return out;
}

const std::vector<Element>& Grading::component_m_potents(std::size_t c, unsigned m) const {
  {
    std::lock_guard lock(state_->cache_mutex);
    auto it = state_->m_potents.find({c, m});
    if (it != state_->m_potents.end()) return *it->second;
  }
  auto list = std::make_shared<std::vector<Element>>();
  for (Element x : components()[c].members)
    if (ring().is_m_potent(x, m)) list->push_back(x);
  std::lock_guard lock(state_->cache_mutex);
  auto [it, inserted] = state_->m_potents.emplace(std::make_pair(c, m), std::move(list));
  return *it->second;
}

const std::vector<Element>& Grading::component_nilpotents(std::size_t c) const {
  {
    std::lock_guard lock(state_->cache_mutex);
    auto it = state_->nilpotents.find(c);
    if (it != state_->nilpotents.end()) return *it->second;
  }
  auto list = std::make_shared<std::vector<Element>>();
  for (Element x : components()[c].members)
    if (ring().is_nilpotent(x)) list->push_back(x);
  std::lock_guard lock(state_->cache_mutex);
  auto [it, inserted] = state_->nilpotents.emplace(c, std::move(list));
  return *it->second;
}

std::vector<HomogeneousElement> homogeneous_elements(const Grading& grading) {
  std::vector<HomogeneousElement> out{{0, DegreeOf::zero()}};
  for (const auto& c : grading.components())
    for (Element x : c.members)
      if (x != 0) out.push_back({x, DegreeOf::of(c.degree)});
  return out;
}

std::vector<Degree> support(const Grading& grading) { return grading.support(); }

bool is_homogeneous_subgroup(const Grading& grading, const ElementSet& set) {
  std::size_t product = 1;
  for (const auto& c : grading.components()) product *= set.intersect(c.elements).size();
  return product == set.size();
}

namespace {

std::vector<std::pair<Element, DegreeOf>> tag_generators(const Grading& grading, const std::vector<Element>& gens) {
  std::vector<std::pair<Element, DegreeOf>> out;
  for (Element g : gens) {
    const DegreeOf d = grading.degree_of(g);
    if (!d.is_homogeneous())
      throw PreconditionError("generator " + grading.ring().format(g) + " is not homogeneous");
    out.emplace_back(g, d);
  }
  return out;
}

ElementSet right_multiples(const FiniteRing& ring, Element x) {
  ElementSet s(ring.size());
  for (Element r = 0; r < ring.size(); ++r) s.insert(ring.mul(x, r));
  return s;
}

}  // namespace

HomogeneousIdeal homogeneous_right_ideal_closure(const Grading& grading, const std::vector<Element>& generators) {
  HomogeneousIdeal ideal;
  ideal.homogeneous_generators = tag_generators(grading, generators);
  ideal.sidedness = Sidedness::right;
  const FiniteRing& r = grading.ring();
  // With an identity, the right ideal generated by g_1..g_k is g_1R + ... + g_kR.
  ElementSet acc(r.size());
  acc.insert(0);
  for (Element g : generators) acc = subgroup_sum(r, acc, right_multiples(r, g));
  ideal.elements = std::move(acc);
  return ideal;
}

HomogeneousIdeal homogeneous_two_sided_ideal_closure(const Grading& grading, const std::vector<Element>& generators) {
  HomogeneousIdeal ideal = homogeneous_right_ideal_closure(grading, generators);
  ideal.sidedness = Sidedness::two_sided;
  const FiniteRing& r = grading.ring();
  const auto ring_gens = r.additive_generators();
  // Left products of a right ideal stay closed under right multiplication,
  // so iterating left multiplication by additive generators reaches RIR.
  for (;;) {
    std::vector<Element> extra;
    ideal.elements.for_each([&](Element i) {
      for (Element g : ring_gens) {
        const Element p = r.mul(g, i);
        if (!ideal.elements.contains(p)) extra.push_back(p);
      }
    });
    if (extra.empty()) break;
    ideal.elements = subgroup_sum(r, ideal.elements, additive_closure(r, extra));
  }
  return ideal;
}

std::vector<HomogeneousIdeal> graded_maximal_right_ideals(const Grading& grading, const Limits& limits) {
  const FiniteRing& r = grading.ring();
  if (r.size() > limits.max_radical_elements)
    throw ResourceError("max_radical_elements", limits.max_radical_elements, r.size());
  if (r.size() == 1) return {};

  // Distinct proper cyclic ideals xR for nonzero homogeneous x.
  std::vector<ElementSet> cyclic;
  std::unordered_set<ElementSet, ElementSetHash> cyclic_seen;
  for (const auto& c : grading.components()) {
    for (Element x : c.members) {
      if (x == 0) continue;
      ElementSet s = right_multiples(r, x);
      if (s.contains(r.one())) continue;
      if (cyclic_seen.insert(s).second) cyclic.push_back(std::move(s));
    }
  }

  ElementSet zero(r.size());
  zero.insert(0);
  std::vector<ElementSet> lattice{zero};
  std::vector<bool> extendable{false};
  std::unordered_set<ElementSet, ElementSetHash> seen{zero};
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subset_of(lattice[i])) continue;
      ElementSet sum = subgroup_sum(r, lattice[i], c);
      if (sum.contains(r.one())) continue;
      extendable[i] = true;
      if (seen.insert(sum).second) {
        lattice.push_back(std::move(sum));
        extendable.push_back(false);
        if (lattice.size() > limits.max_ideals) throw ResourceError("max_ideals", limits.max_ideals, lattice.size());
      }
    }
  }

  std::vector<HomogeneousIdeal> maximal;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (extendable[i]) continue;
    HomogeneousIdeal ideal;
    ideal.elements = lattice[i];
    ideal.sidedness = Sidedness::right;
    for (Element g : subgroup_generators(r, lattice[i])) {
      // Report homogeneous parts as generators.
      for (const auto& [d, part] : grading.decompose(g)) ideal.homogeneous_generators.emplace_back(part, DegreeOf::of(d));
    }
    maximal.push_back(std::move(ideal));
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const HomogeneousIdeal& a, const HomogeneousIdeal& b) { return a.elements < b.elements; });
  return maximal;
}

HomogeneousIdeal graded_jacobson_radical(const Grading& grading, const Limits& limits) {
  const FiniteRing& r = grading.ring();
  const auto maximal = graded_maximal_right_ideals(grading, limits);
  ElementSet meet(r.size());
  for (Element x = 0; x < r.size(); ++x) meet.insert(x);
  for (const auto& m : maximal) meet = meet.intersect(m.elements);
  if (auto v = two_sided_ideal_violation(r, meet)) throw ValidationError("graded radical is not two-sided", *v);
  if (!is_homogeneous_subgroup(grading, meet)) throw ValidationError("graded radical is not homogeneous", "counting criterion failed");
  HomogeneousIdeal out;
  out.sidedness = Sidedness::two_sided;
  for (Element g : subgroup_generators(r, meet))
    for (const auto& [d, part] : grading.decompose(g)) out.homogeneous_generators.emplace_back(part, DegreeOf::of(d));
  out.elements = std::move(meet);
  return out;
}

bool is_graded_local(const Grading& grading, const Limits& limits) {
  return graded_maximal_right_ideals(grading, limits).size() == 1;
}

bool is_graded_nil(const Grading& grading, const ElementSet& ideal) {
  bool nil = true;
  ideal.for_each([&](Element x) {
    if (nil && grading.is_homogeneous(x) && !grading.ring().is_nilpotent(x)) nil = false;
  });
  return nil;
}

GradedQuotient graded_quotient(const Grading& grading, const ElementSet& ideal, const Limits& limits) {
  const FiniteRing& r = grading.ring();
  if (!is_homogeneous_subgroup(grading, ideal)) {
    std::string witness = "counting criterion failed";
    ideal.for_each([&](Element x) {
      if (witness != "counting criterion failed") return;
      for (const auto& [d, part] : grading.decompose(x)) {
        if (!ideal.contains(part)) {
          witness = r.format(x) + " has part " + r.format(part) + " of degree " + grading.group().format(d) +
                    " outside the ideal";
          return;
        }
      }
    });
    throw ValidationError("ideal is not homogeneous", witness);
  }
  auto q = quotient_ring(grading.ring_ptr(), ideal);
  ComponentGenerators gens;
  for (const auto& c : grading.components()) {
    std::vector<Element> images;
    for (Element g : c.generators) images.push_back(q.projection[g]);
    gens.emplace_back(c.degree, std::move(images));
  }
  Grading g = Grading::verify(q.ring, grading.group(), gens, limits);
  return {std::move(g), std::move(q.projection)};
}

Grading subring_grading(const Grading& grading, const std::shared_ptr<const SubRing>& subring, const Limits& limits) {
  ComponentGenerators gens;
  for (const auto& c : grading.components()) {
    std::vector<Element> local;
    for (Element x : c.members)
      if (auto y = subring->from_parent(x)) local.push_back(*y);
    gens.emplace_back(c.degree, std::move(local));
  }
  return Grading::verify(subring, grading.group(), gens, limits);
}

std::shared_ptr<const SubRing> identity_component_ring(const Grading& grading) {
  const auto& members = grading.component_members(grading.group().identity());
  return make_subring(grading.ring_ptr(), ElementSet(grading.ring().size(), members), grading.ring().label() + "_e");
}

}  // namespace nilgrade
