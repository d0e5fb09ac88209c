#include "nilgrade/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "nilgrade/nilclean.hpp"

namespace nilgrade {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::falsified: return "falsified";
    case CheckStatus::skipped_resource: return "skipped-resource";
  }
  return "?";
}

std::string render(const Grading& grading, Element x) {
  const DegreeOf d = grading.degree_of(x);
  std::string s = grading.ring().format(x);
  if (d.is_zero()) return s + " (zero)";
  if (!d.is_homogeneous()) return s + " (not homogeneous)";
  return s + " (degree " + grading.group().format(d.degree) + ")";
}

namespace {

// Cap on rings built inside checks (products, matrices, triangular rings).
constexpr std::size_t kDerivedRingCap = 4096;

const char* yes_no(bool b) { return b ? "true" : "false"; }

class Context {
 public:
  Context(const RingSpec& spec, const Limits& limits)
      : spec(spec), g(spec.grading), r(spec.grading.ring()), m(spec.m), limits(limits), derived(limits) {
    // Rings built here are graded by construction; generator-level
    // multiplicativity is enough and exhaustive checking dominates runtime.
    derived.axiom_budget = std::min<std::size_t>(derived.axiom_budget, std::size_t{1} << 16);
  }

  const RingSpec& spec;
  const Grading& g;
  const FiniteRing& r;
  const unsigned m;
  const Limits& limits;
  Limits derived;

  const RingDecision& gmnc(bool strong) {
    auto& slot = strong ? strong_ : plain_;
    if (!slot) slot = is_graded_m_nil_clean_ring(g, m, strong);
    return *slot;
  }
  bool re_mnc(bool strong = false) {
    auto& slot = strong ? re_strong_ : re_plain_;
    if (!slot) slot = is_m_nil_clean_ring(*identity_component_ring(g), m, strong).holds;
    return *slot;
  }
  bool torsion_free() const { return is_m_torsion_free(g.group(), m - 1); }
  bool m1_unit() const { return r.is_unit(r.from_integer(static_cast<std::int64_t>(m) - 1)); }
  const HomogeneousIdeal& jg() {
    if (!jg_) jg_ = graded_jacobson_radical(g, limits);
    return *jg_;
  }

  /// Two-sided ideals worth testing: the description's, the construction's, J^g
  /// and J. Entries that hit a resource cap are left out.
  const std::vector<NamedIdeal>& ideals() {
    if (ideals_) return *ideals_;
    ideals_.emplace();
    std::set<std::vector<Element>> seen;
    auto add = [&](const std::string& name, const ElementSet& set) {
      if (set.universe() != r.size()) return;
      if (two_sided_ideal_violation(r, set)) return;
      if (seen.insert(set.to_vector()).second) ideals_->push_back({name, set});
    };
    for (const auto& i : spec.ideals) add(i.name, i.elements);
    for (const auto& i : spec.construction.ideals) add(i.name, i.elements);
    try {
      add("graded_jacobson", jg().elements);
    } catch (const ResourceError&) {
    }
    try {
      add("jacobson", jacobson_radical(r, limits));
    } catch (const ResourceError&) {
    }
    return *ideals_;
  }

  /// Every element when the ring is small enough, else the homogeneous ones.
  std::vector<Element> elementwise() const {
    if (r.size() <= limits.max_elementwise) {
      std::vector<Element> all(r.size());
      for (Element x = 0; x < r.size(); ++x) all[x] = x;
      return all;
    }
    std::vector<Element> out;
    for (const auto& h : homogeneous_elements(g)) out.push_back(h.element);
    return out;
  }
  std::vector<Element> homogeneous() const {
    std::vector<Element> out;
    for (const auto& h : homogeneous_elements(g)) out.push_back(h.element);
    return out;
  }

 private:
  std::optional<RingDecision> plain_, strong_;
  std::optional<bool> re_plain_, re_strong_;
  std::optional<HomogeneousIdeal> jg_;
  std::optional<std::vector<NamedIdeal>> ideals_;
};

CheckReport vacuous(std::string why) {
  CheckReport r;
  r.vacuous = true;
  r.detail = "vacuous: " + why;
  return r;
}

// Probes that build a bigger ring from R are opportunistic: past the cap
// they are not attempted rather than reported as a resource failure.
CheckReport not_attempted(const std::string& what, std::size_t size) {
  return vacuous(what + " would have " + std::to_string(size) + " elements, over the probe cap of " +
                 std::to_string(kDerivedRingCap));
}

CheckReport falsified(std::string detail, std::vector<std::pair<std::string, std::string>> witness = {}) {
  CheckReport r;
  r.status = CheckStatus::falsified;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

CheckReport passed(std::string detail, std::vector<std::pair<std::string, std::string>> witness = {}) {
  CheckReport r;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

std::string decision_text(bool b) { return b ? "graded m-nil clean" : "not graded m-nil clean"; }

// ---------------------------------------------------------------------------

CheckReport decision_check(Context& c, bool strong, const char* name) {
  const RingDecision& d = c.gmnc(strong);
  CheckReport rep;
  rep.status = d.holds ? CheckStatus::pass : CheckStatus::fail;
  rep.detail = std::string(strong ? "strongly " : "") + std::to_string(c.m) + "-nil clean decision: " + yes_no(d.holds);
  if (d.failing) {
    rep.witness.emplace_back("failing_element", render(c.g, *d.failing));
    rep.witness.emplace_back("reason", d.reason);
  }
  auto it = c.spec.expect.find(name);
  if (it != c.spec.expect.end()) {
    rep.expected = it->second;
    if (it->second != d.holds) {
      rep.status = CheckStatus::falsified;
      rep.detail += std::string(", expected ") + yes_no(it->second);
    }
  }
  return rep;
}

CheckReport check_gmnc(Context& c) { return decision_check(c, false, "graded_m_nil_clean"); }
CheckReport check_sgmnc(Context& c) { return decision_check(c, true, "graded_strongly_m_nil_clean"); }

CheckReport check_same_component(Context& c) {
  std::size_t tested = 0;
  for (Element x : c.homogeneous()) {
    for (bool strong : {false, true}) {
      const bool restricted = graded_m_nil_clean_witness(c.g, x, c.m, strong).has_value();
      const bool unrestricted = homogeneous_m_nil_clean_witness(c.g, x, c.m, strong).has_value();
      ++tested;
      if (restricted != unrestricted)
        return falsified("component-restricted and unrestricted searches disagree",
                         {{"element", render(c.g, x)},
                          {"strong", yes_no(strong)},
                          {"restricted", yes_no(restricted)},
                          {"unrestricted", yes_no(unrestricted)}});
    }
  }
  return passed("searches agree on " + std::to_string(tested) + " (element, strength) pairs");
}

CheckReport check_homomorphic_image(Context& c) {
  std::vector<std::pair<std::string, GradedQuotient>> images;
  for (const auto& i : c.ideals())
    if (is_homogeneous_subgroup(c.g, i.elements) && i.elements.size() > 1)
      images.emplace_back(i.name, graded_quotient(c.g, i.elements, c.limits));
  std::size_t tested = 0;
  for (bool strong : {false, true}) {
    if (!c.gmnc(strong).holds) continue;
    for (const auto& [name, q] : images) {
      ++tested;
      const auto d = is_graded_m_nil_clean_ring(q.grading, c.m, strong);
      if (!d.holds)
        return falsified("image R/" + name + " is not graded " + (strong ? "strongly " : "") + "m-nil clean",
                         {{"ideal", name}, {"failing_element", render(q.grading, *d.failing)}});
    }
  }
  // A quotient spec is itself an image of its base.
  const auto& info = c.spec.construction;
  if (info.kind == "quotient" && info.base) {
    for (bool strong : {false, true}) {
      if (!is_graded_m_nil_clean_ring(*info.base, c.m, strong).holds) continue;
      ++tested;
      if (!c.gmnc(strong).holds)
        return falsified("quotient of a graded m-nil clean base is not graded m-nil clean",
                         {{"failing_element", render(c.g, *c.gmnc(strong).failing)}});
    }
  }
  if (tested == 0) return vacuous("ring is not graded m-nil clean or has no proper homogeneous ideals");
  return passed(std::to_string(tested) + " images graded m-nil clean");
}

CheckReport check_product_law(Context& c) {
  std::vector<std::pair<std::string, std::vector<Grading>>> products;
  const auto& info = c.spec.construction;
  if (info.kind == "product") products.emplace_back("spec factors", info.factors);
  if (c.r.size() * c.r.size() <= kDerivedRingCap) products.emplace_back("R x R", std::vector<Grading>{c.g, c.g});
  if (c.r.size() * 2 <= kDerivedRingCap)
    products.emplace_back("R x Z2", std::vector<Grading>{c.g, Grading::trivial(make_zn(2), c.g.group(), c.derived)});
  if (products.empty()) return not_attempted("R x Z2", c.r.size() * 2);
  std::string detail;
  for (const auto& [label, factors] : products) {
    const Grading p = product_grading(factors, c.derived);
    for (bool strong : {false, true}) {
      bool all = true;
      for (const auto& f : factors) all = all && is_graded_m_nil_clean_ring(f, c.m, strong).holds;
      const bool whole = is_graded_m_nil_clean_ring(p, c.m, strong).holds;
      if (all != whole)
        return falsified("product decision differs from the factors", {{"product", label},
                                                                       {"strong", yes_no(strong)},
                                                                       {"product_decision", yes_no(whole)},
                                                                       {"all_factors", yes_no(all)}});
    }
    detail += (detail.empty() ? "" : ", ") + label;
  }
  return passed("agrees on " + detail);
}

CheckReport check_mpotent_degree_lemma(Context& c) {
  const GradingGroup& G = c.g.group();
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.g.components().size(); ++i) {
    const Degree h = c.g.components()[i].degree;
    for (Element f : c.g.component_m_potents(i, c.m)) {
      if (f == 0) continue;
      ++count;
      if (!(G.power(h, static_cast<std::int64_t>(c.m) - 1) == G.identity()))
        return falsified("nonzero homogeneous m-potent whose degree h has h^(m-1) != e", {{"element", render(c.g, f)}});
    }
  }
  return passed(std::to_string(count) + " nonzero homogeneous m-potents, all with h^(m-1) = e");
}

CheckReport check_torsion_free_corollary(Context& c) {
  if (!c.torsion_free()) return vacuous(c.g.group().label() + " is not (m-1)-torsion free");
  const auto e = c.g.identity_component();
  for (std::size_t i = 0; i < c.g.components().size(); ++i) {
    if (e && i == *e) continue;
    for (Element f : c.g.component_m_potents(i, c.m))
      if (f != 0) return falsified("nonzero homogeneous m-potent outside R_e", {{"element", render(c.g, f)}});
  }
  return passed("all nonzero homogeneous m-potents lie in R_e");
}

CheckReport check_necessary_conditions(Context& c) {
  if (!c.gmnc(false).holds) return vacuous("ring is not graded m-nil clean");
  const auto re = identity_component_ring(c.g);
  const auto d = is_m_nil_clean_ring(*re, c.m, false);
  if (!d.holds) return falsified("R_e is not m-nil clean", {{"element", re->format(*d.failing)}});
  if (c.torsion_free()) {
    for (Element x : c.homogeneous())
      if (!c.g.degree_of(x).is_zero() && !(c.g.degree_of(x) == DegreeOf::of(c.g.group().identity())) &&
          !c.r.is_nilpotent(x))
        return falsified("homogeneous element outside R_e is not nilpotent", {{"element", render(c.g, x)}});
    return passed("R_e is m-nil clean; homogeneous elements outside R_e are nilpotent");
  }
  return passed("R_e is m-nil clean; group not (m-1)-torsion free so part (ii) is vacuous");
}

CheckReport check_lifting_lemma(Context& c) {
  if (!c.m1_unit()) return vacuous("m-1 is not a unit");
  std::size_t lifts = 0, ideals = 0;
  const auto xs = c.elementwise();
  for (const auto& i : c.ideals()) {
    if (!is_nil_set(c.r, i.elements)) continue;
    ++ideals;
    for (Element x : xs) {
      if (!i.elements.contains(c.r.sub(c.r.pow(x, c.m), x))) continue;
      ++lifts;
      const auto f = lift_m_potent(c.r, x, i.elements, c.m);
      if (!f)
        return falsified("no m-potent in x + I", {{"ideal", i.name}, {"element", render(c.g, x)}});
    }
  }
  if (ideals == 0) return vacuous("no nil two-sided ideal among the candidates");
  return passed(std::to_string(lifts) + " lifts across " + std::to_string(ideals) + " nil ideals");
}

CheckReport check_quotient_theorem(Context& c) {
  if (!c.torsion_free()) return vacuous(c.g.group().label() + " is not (m-1)-torsion free");
  if (!c.m1_unit()) return vacuous("m-1 is not a unit");
  std::size_t tested = 0;
  auto compare = [&](const Grading& whole, const Grading& quotient, const std::string& name) -> std::optional<CheckReport> {
    ++tested;
    const bool a = is_graded_m_nil_clean_ring(whole, c.m, false).holds;
    const bool b = is_graded_m_nil_clean_ring(quotient, c.m, false).holds;
    if (a != b)
      return falsified("R and R/I disagree", {{"ideal", name}, {"R", decision_text(a)}, {"R/I", decision_text(b)}});
    return std::nullopt;
  };
  for (const auto& i : c.ideals()) {
    if (!is_homogeneous_subgroup(c.g, i.elements) || !is_graded_nil(c.g, i.elements)) continue;
    const auto q = graded_quotient(c.g, i.elements, c.limits);
    if (auto bad = compare(c.g, q.grading, i.name)) return *bad;
  }
  const auto& info = c.spec.construction;
  if (info.kind == "quotient" && info.base && info.kernel && is_graded_nil(*info.base, *info.kernel)) {
    const FiniteRing& base = info.base->ring();
    if (base.is_unit(base.from_integer(static_cast<std::int64_t>(c.m) - 1)))
      if (auto bad = compare(*info.base, c.g, "kernel of the described quotient")) return *bad;
  }
  if (tested == 0) return vacuous("no graded-nil homogeneous ideal among the candidates");
  return passed(std::to_string(tested) + " graded-nil quotients agree with R");
}

CheckReport check_jg_graded_nil(Context& c) {
  if (!c.gmnc(false).holds) return vacuous("ring is not graded m-nil clean");
  const auto& jg = c.jg();
  bool ok = true;
  Element bad = 0;
  jg.elements.for_each([&](Element x) {
    if (ok && c.g.is_homogeneous(x) && !c.r.is_nilpotent(x)) {
      ok = false;
      bad = x;
    }
  });
  if (!ok) return falsified("J^g(R) has a non-nilpotent homogeneous element", {{"element", render(c.g, bad)}});
  return passed("J^g(R) has " + std::to_string(jg.elements.size()) + " elements, graded-nil");
}

CheckReport check_jg_quotient_corollary(Context& c) {
  if (!c.torsion_free()) return vacuous(c.g.group().label() + " is not (m-1)-torsion free");
  if (!c.m1_unit()) return vacuous("m-1 is not a unit");
  const auto& jg = c.jg();
  const bool nil = is_graded_nil(c.g, jg.elements);
  const auto q = graded_quotient(c.g, jg.elements, c.limits);
  const bool rhs = nil && is_graded_m_nil_clean_ring(q.grading, c.m, false).holds;
  const bool lhs = c.gmnc(false).holds;
  if (lhs != rhs)
    return falsified("R versus R/J^g(R) with J^g(R) graded-nil disagree",
                     {{"R", decision_text(lhs)}, {"J^g graded-nil", yes_no(nil)}, {"R/J^g", yes_no(rhs)}});
  return passed(std::string("both sides ") + yes_no(lhs));
}

CheckReport check_sufficient_orthogonal(Context& c) {
  const GradingGroup& G = c.g.group();
  if (!G.is_finite()) return vacuous("grading group is infinite");
  for (const auto& a : c.g.components()) {
    if (a.degree == G.identity()) continue;
    const auto b = c.g.component_index(G.inverse(a.degree));
    if (!b) continue;
    for (Element x : a.generators)
      for (Element y : c.g.components()[*b].generators)
        if (c.r.mul(x, y) != 0) return vacuous("R_g R_{g^-1} != 0 for g = " + G.format(a.degree));
  }
  if (!c.re_mnc()) return vacuous("R_e is not m-nil clean");
  if (!c.gmnc(false).holds)
    return falsified("hypotheses hold but the ring is not graded m-nil clean",
                     {{"failing_element", render(c.g, *c.gmnc(false).failing)}});
  return passed("hypotheses hold and the ring is graded m-nil clean");
}

CheckReport check_sufficient_graded_local(Context& c) {
  const GradingGroup& G = c.g.group();
  if (!G.is_finite()) return vacuous("grading group is infinite");
  if (!c.torsion_free()) return vacuous(G.label() + " is not (m-1)-torsion free");
  if (!c.m1_unit()) return vacuous("m-1 is not a unit");
  if (!c.r.is_unit(c.r.from_integer(static_cast<std::int64_t>(G.finite_group().order()))))
    return vacuous("|G| is not a unit");
  if (!is_graded_local(c.g, c.limits)) return vacuous("ring is not graded-local");
  if (!c.re_mnc()) return vacuous("R_e is not m-nil clean");
  if (!c.gmnc(false).holds)
    return falsified("hypotheses hold but the ring is not graded m-nil clean",
                     {{"failing_element", render(c.g, *c.gmnc(false).failing)}});
  return passed("hypotheses hold and the ring is graded m-nil clean");
}

CheckReport check_pi_regular_from_smnc(Context& c) {
  std::size_t graded = 0, plain = 0;
  auto build = [&](const NilCleanCertificate& cert) -> std::optional<CheckReport> {
    try {
      strongly_pi_regular_from_m_nil_clean(c.r, cert.f, cert.n, c.m);
    } catch (const Error& e) {
      return falsified(std::string("no valid decomposition: ") + e.what(),
                       {{"element", render(c.g, cert.x)}, {"f", c.r.format(cert.f)}, {"n", c.r.format(cert.n)}});
    }
    return std::nullopt;
  };
  for (Element a : c.homogeneous())
    if (auto cert = graded_m_nil_clean_witness(c.g, a, c.m, true)) {
      ++graded;
      if (auto bad = build(*cert)) return *bad;
    }
  for (Element a : c.elementwise())
    if (auto cert = m_nil_clean_witness(c.r, a, c.m, true)) {
      ++plain;
      if (auto bad = build(*cert)) return *bad;
    }
  return passed(std::to_string(graded) + " graded and " + std::to_string(plain) +
                " ungraded strongly m-nil clean elements are strongly pi-regular");
}

CheckReport check_identity_component_pi_regular(Context& c) {
  if (!c.gmnc(false).holds) return vacuous("ring is not graded m-nil clean");
  const auto re = identity_component_ring(c.g);
  for (Element x = 0; x < re->size(); ++x)
    if (strongly_pi_regular_certificates(*re, x).empty())
      return falsified("element of R_e without a strongly pi-regular decomposition in R_e", {{"element", re->format(x)}});
  return passed("all " + std::to_string(re->size()) + " elements of R_e are strongly pi-regular");
}

CheckReport check_commuting_equivalence(Context& c) {
  std::size_t tested = 0;
  for (Element a : c.elementwise())
    for (const auto& cert : strongly_pi_regular_certificates(c.r, a)) {
      ++tested;
      const auto eq = prop_commuting_equivalence_check(c.r, a, cert.f, cert.u, c.m);
      if (!eq.agree())
        return falsified("commuting m-potent criterion and strong m-nil cleanness disagree",
                         {{"element", render(c.g, a)},
                          {"f", c.r.format(cert.f)},
                          {"u", c.r.format(cert.u)},
                          {"exists_g", yes_no(eq.exists_g)},
                          {"strongly_m_nil_clean", yes_no(eq.strongly_m_nil_clean)}});
    }
  if (tested == 0) return vacuous("no strongly pi-regular element");
  return passed(std::to_string(tested) + " decompositions agree");
}

std::vector<PiRegularCertificate> graded_certificates(const Grading& g, Element a) {
  std::vector<PiRegularCertificate> out;
  for (const auto& cert : strongly_pi_regular_certificates(g.ring(), a))
    if (g.is_homogeneous(cert.f) && g.is_homogeneous(cert.u)) out.push_back(cert);
  return out;
}

CheckReport check_graded_commuting_equivalence(Context& c) {
  if (!c.torsion_free()) return vacuous(c.g.group().label() + " is not (m-1)-torsion free");
  std::size_t tested = 0;
  for (Element a : c.homogeneous())
    for (const auto& cert : graded_certificates(c.g, a)) {
      ++tested;
      const auto eq = graded_commuting_equivalence_check(c.g, a, cert.f, cert.u, c.m);
      if (!eq.agree())
        return falsified("graded commuting criterion and graded strong m-nil cleanness disagree",
                         {{"element", render(c.g, a)},
                          {"f", render(c.g, cert.f)},
                          {"u", render(c.g, cert.u)},
                          {"exists_g", yes_no(eq.exists_g)},
                          {"graded_strongly_m_nil_clean", yes_no(eq.strongly_m_nil_clean)}});
    }
  if (tested == 0) return vacuous("no graded strongly pi-regular homogeneous element");
  return passed(std::to_string(tested) + " graded decompositions agree");
}

CheckReport check_pi_regular_uniqueness(Context& c) {
  std::size_t tested = 0;
  for (Element a : c.elementwise()) {
    const auto certs = strongly_pi_regular_certificates(c.r, a);
    if (certs.empty()) continue;
    ++tested;
    if (certs.size() > 1)
      return falsified("two strongly pi-regular decompositions", {{"element", render(c.g, a)},
                                                                   {"f1", c.r.format(certs[0].f)},
                                                                   {"f2", c.r.format(certs[1].f)}});
  }
  return passed(std::to_string(tested) + " strongly pi-regular elements, each with a unique decomposition");
}

bool is_graded_surjection(const Grading& from, const Grading& to, const std::vector<Element>& map, std::string& why) {
  const FiniteRing& a = from.ring();
  const FiniteRing& b = to.ring();
  ElementSet image(b.size());
  for (Element x = 0; x < a.size(); ++x) image.insert(map[x]);
  if (image.size() != b.size()) {
    why = "not surjective";
    return false;
  }
  if (map[a.one()] != b.one()) {
    why = "1 is not preserved";
    return false;
  }
  const auto gens = a.additive_generators();
  for (Element x : gens)
    for (Element y = 0; y < a.size(); ++y) {
      if (map[a.add(x, y)] != b.add(map[x], map[y]) || map[a.mul(x, y)] != b.mul(map[x], map[y]) ||
          map[a.mul(y, x)] != b.mul(map[y], map[x])) {
        why = "not a ring homomorphism at " + a.format(x) + ", " + a.format(y);
        return false;
      }
    }
  for (const auto& comp : from.components())
    for (Element x : comp.members) {
      const DegreeOf d = to.degree_of(map[x]);
      if (!d.is_zero() && !(d == DegreeOf::of(comp.degree))) {
        why = "degree of " + a.format(x) + " not preserved";
        return false;
      }
    }
  return true;
}

CheckReport check_amalgamation_theorem(Context& c) {
  const auto& info = c.spec.construction;
  if (info.kind != "amalgamation" || !info.amalgamation) return vacuous("not an amalgamation");
  const auto& am = *info.amalgamation;
  std::string why;
  if (!is_graded_surjection(c.g, *info.amalgamation_a, am.project_a, why))
    return falsified("projection onto A: " + why);
  if (!is_graded_surjection(c.g, am.image, am.project_image, why))
    return falsified("projection onto f(A)+J: " + why);
  if (!c.torsion_free()) return vacuous(c.g.group().label() + " is not (m-1)-torsion free (projections verified)");
  const bool whole = c.gmnc(false).holds;
  const bool a = is_graded_m_nil_clean_ring(*info.amalgamation_a, c.m, false).holds;
  const bool img = is_graded_m_nil_clean_ring(am.image, c.m, false).holds;
  if (whole != (a && img))
    return falsified("amalgamation decision differs from A and f(A)+J",
                     {{"amalgamation", yes_no(whole)}, {"A", yes_no(a)}, {"f(A)+J", yes_no(img)}});
  return passed(std::string("amalgamation ") + yes_no(whole) + ", A " + yes_no(a) + ", f(A)+J " + yes_no(img),
                {{"amalgamation", yes_no(whole)}, {"A", yes_no(a)}, {"f(A)+J", yes_no(img)}});
}

CheckReport check_group_ring_theorem(Context& c) {
  const auto& info = c.spec.construction;
  if (info.kind != "group_ring" || !info.group_ring || !info.base) return vacuous("not a group ring");
  const auto& gr = *info.group_ring;
  const Grading& base = *info.base;
  const FiniteRing& R = base.ring();
  const auto& G = base.group().finite_group();
  const auto aug = augmentation_ideal(c.g);
  std::vector<std::pair<std::string, std::string>> w{
      {"mode", to_string(gr.mode)},
      {"augmentation_nilpotency_index", aug.nilpotency_index ? std::to_string(*aug.nilpotency_index) : "not nilpotent"}};
  for (const auto& o : gr.outcomes) w.emplace_back("mode_" + to_string(o.mode), o.valid ? "validates" : o.detail);
  const bool rg = c.gmnc(false).holds;
  const bool r = is_graded_m_nil_clean_ring(base, c.m, false).holds;
  w.emplace_back("RG_graded_m_nil_clean", yes_no(rg));
  w.emplace_back("R_graded_m_nil_clean", yes_no(r));
  if (!rg) w.emplace_back("RG_failing_element", render(c.g, *c.gmnc(false).failing) + ": " + c.gmnc(false).reason);

  // (i): p prime dividing m, p nilpotent in R, G a p-group.
  std::optional<unsigned> prime;
  for (unsigned p = 2; p <= c.m; ++p)
    if (is_prime(p) && c.m % p == 0 && R.is_nilpotent(R.from_integer(p)) && is_p_group(G, p)) prime = p;
  bool tested = false;
  if (prime && r) {
    tested = true;
    w.emplace_back("p", std::to_string(*prime));
    if (!rg) return falsified("R graded m-nil clean, p nilpotent, G a p-group, but RG is not graded m-nil clean", w);
  }
  // (ii): all m-potents and nilpotents of R homogeneous.
  bool all_homogeneous = true;
  for (Element x : R.m_potents(c.m)) all_homogeneous = all_homogeneous && base.is_homogeneous(x);
  for (Element x : R.nilpotents()) all_homogeneous = all_homogeneous && base.is_homogeneous(x);
  if (all_homogeneous && rg) {
    tested = true;
    if (!r) return falsified("RG graded m-nil clean but R is not", w);
  }
  if (!tested) {
    CheckReport rep = vacuous("hypotheses of neither part hold");
    rep.witness = w;
    return rep;
  }
  return passed("group ring statements hold", w);
}

bool sigma_all_identity(const GradingGroup& G, const SigmaVector& sigma) {
  return std::all_of(sigma.begin(), sigma.end(), [&](Degree d) { return d == G.identity(); });
}

CheckReport check_matrix_theorem(Context& c) {
  const auto& info = c.spec.construction;
  std::optional<Grading> base;
  std::size_t n = 2;
  std::optional<Grading> matrices;
  if (info.kind == "matrix" && info.base && sigma_all_identity(info.base->group(), info.sigma)) {
    base = info.base;
    n = info.n;
    matrices = c.g;
  } else {
    base = c.g;
  }
  const FiniteRing& R = base->ring();
  const unsigned m = c.m;
  if (!R.is_commutative()) return vacuous("base ring is not commutative");
  if (!is_m_torsion_free(base->group(), m - 1)) return vacuous("group is not (m-1)-torsion free");
  if (!R.is_unit(R.from_integer(static_cast<std::int64_t>(m) - 1))) return vacuous("m-1 is not a unit");
  if (!jacobson_radical(R, c.limits).is_subset_of(graded_jacobson_radical(*base, c.limits).elements))
    return vacuous("J(R) is not contained in J^g(R)");
  if (!is_graded_m_nil_clean_ring(*base, m, false).holds) return vacuous("base is not graded m-nil clean");
  if (!matrices) {
    const std::size_t q = R.size();
    if (q * q * q * q > kDerivedRingCap) return not_attempted("M_2(R)", q * q * q * q);
    matrices = matrix_graded(*base, 2, SigmaVector(2, base->group().identity()), c.derived);
  }
  const auto d = is_graded_m_nil_clean_ring(*matrices, m, false);
  if (!d.holds)
    return falsified("M_n(R) with sigma = (e,...,e) is not graded m-nil clean",
                     {{"n", std::to_string(n)}, {"failing_element", render(*matrices, *d.failing)}});
  return passed("M_" + std::to_string(n) + "(R) graded m-nil clean");
}

CheckReport check_diagonal_z_theorem(Context& c) {
  const auto& info = c.spec.construction;
  RingPtr a;
  std::size_t n = 2;
  std::optional<Grading> dz;
  if (info.kind == "diagonal_z" && info.base) {
    a = info.base->ring_ptr();
    n = info.n;
    dz = c.g;
  } else {
    a = c.g.ring_ptr();
    const std::size_t q = a->size();
    if (q * q * q * q > kDerivedRingCap) return not_attempted("M_2(R)", q * q * q * q);
    dz = diagonal_z_grading(a, n, c.derived);
  }
  const auto base = is_m_nil_clean_ring(*a, c.m, false);
  const auto whole = is_graded_m_nil_clean_ring(*dz, c.m, false);
  std::vector<std::pair<std::string, std::string>> w{{"n", std::to_string(n)},
                                                     {"A_m_nil_clean", yes_no(base.holds)},
                                                     {"diagonal_graded_m_nil_clean", yes_no(whole.holds)}};
  if (base.holds != whole.holds) return falsified("A and diagonal Z-graded M_n(A) disagree", w);
  return passed(std::string("both ") + yes_no(base.holds), w);
}

CheckReport check_triangular_theorem(Context& c) {
  const GradingGroup& G = c.g.group();
  if (!c.torsion_free()) return vacuous(G.label() + " is not (m-1)-torsion free");
  if (!c.m1_unit()) return vacuous("m-1 is not a unit");
  const bool base = c.gmnc(false).holds;
  const Degree e = G.identity();
  std::optional<Degree> h;
  if (G.is_integer()) h = Degree{1};
  else if (G.finite_group().order() > 1) h = Degree{1};
  std::vector<SigmaVector> sigmas2{{e, e}}, sigmas3{{e, e, e}};
  if (h) {
    sigmas2.push_back({e, *h});
    sigmas2.push_back({*h, e});
    sigmas3.push_back({e, *h, G.multiply(*h, *h)});
    sigmas3.push_back({*h, e, *h});
  }
  std::size_t tested = 0;
  std::vector<std::string> skipped;
  const std::size_t q = c.r.size();
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n * (n + 1) / 2 && size <= kDerivedRingCap; ++i) size *= q;
    if (size > kDerivedRingCap) {
      skipped.push_back("n=" + std::to_string(n));
      continue;
    }
    for (const auto& sigma : n == 2 ? sigmas2 : sigmas3) {
      const auto t = triangular_graded(c.g, n, sigma, c.derived);
      const auto d = is_graded_m_nil_clean_ring(t.grading, c.m, false);
      ++tested;
      if (d.holds != base) {
        std::string s;
        for (Degree x : sigma) s += (s.empty() ? "" : ",") + G.format(x);
        return falsified("R and T_n(R)(sigma) disagree", {{"n", std::to_string(n)},
                                                          {"sigma", "(" + s + ")"},
                                                          {"R", decision_text(base)},
                                                          {"T_n", decision_text(d.holds)}});
      }
    }
  }
  if (tested == 0) return not_attempted("T_2(R)", q * q * q);
  std::string detail = std::to_string(tested) + " triangular rings agree with R (" + decision_text(base) + ")";
  for (const auto& s : skipped) detail += "; " + s + " over the size cap";
  return passed(detail);
}

CheckReport check_jacobson_identity_component(Context& c) {
  const auto re = identity_component_ring(c.g);
  const ElementSet jre = jacobson_radical(*re, c.limits);
  const auto e = c.g.identity_component();
  ElementSet lhs(c.r.size());
  if (e) lhs = c.jg().elements.intersect(c.g.components()[*e].elements);
  ElementSet rhs(c.r.size());
  jre.for_each([&](Element x) { rhs.insert(re->to_parent(x)); });
  const bool equal = lhs == rhs;
  std::vector<std::pair<std::string, std::string>> w{{"|J^g(R) cap R_e|", std::to_string(lhs.size())},
                                                     {"|J(R_e)|", std::to_string(rhs.size())}};
  if (!c.g.group().is_finite()) {
    CheckReport rep = passed(std::string("recorded for an infinite group: ") + (equal ? "equal" : "different"), w);
    return rep;
  }
  if (!equal) return falsified("J^g(R) cap R_e != J(R_e)", w);
  return passed("J^g(R) cap R_e = J(R_e)", w);
}

CheckReport check_element_facts(Context& c) {
  if (c.spec.elements.empty() && !c.spec.expect_torsion_free) return vacuous("no element facts");
  std::vector<std::pair<std::string, std::string>> mismatches;
  auto compare = [&](const std::string& text, const char* what, bool claimed, bool actual) {
    if (claimed != actual)
      mismatches.emplace_back(text + " " + what, std::string("claimed ") + yes_no(claimed) + ", found " + yes_no(actual));
  };
  if (c.spec.expect_torsion_free)
    compare(c.g.group().label(), "(m-1)-torsion free", *c.spec.expect_torsion_free, c.torsion_free());
  std::size_t count = 0;
  for (const auto& f : c.spec.elements) {
    const unsigned m = f.m.value_or(c.m);
    const Element x = f.element;
    const DegreeOf d = c.g.degree_of(x);
    ++count;
    if (f.homogeneous) compare(f.text, "homogeneous", *f.homogeneous, d.is_homogeneous());
    if (f.degree) {
      const bool ok = *f.degree ? (d.kind == DegreeOf::Kind::homogeneous && d.degree.value == **f.degree) : d.is_zero();
      if (!ok) mismatches.emplace_back(f.text + " degree", "found " + render(c.g, x));
    }
    if (f.m_potent) compare(f.text, "m-potent", *f.m_potent, c.r.is_m_potent(x, m));
    if (f.nilpotent) compare(f.text, "nilpotent", *f.nilpotent, c.r.is_nilpotent(x));
    if (f.unit) compare(f.text, "unit", *f.unit, c.r.is_unit(x));
    if (f.graded_m_nil_clean || f.graded_strongly_m_nil_clean || f.graded_pi_regular) {
      if (!d.is_homogeneous()) {
        mismatches.emplace_back(f.text, "graded facts need a homogeneous element");
        continue;
      }
    }
    if (f.graded_m_nil_clean)
      compare(f.text, "graded m-nil clean", *f.graded_m_nil_clean,
              graded_m_nil_clean_witness(c.g, x, m, false).has_value());
    if (f.graded_strongly_m_nil_clean)
      compare(f.text, "graded strongly m-nil clean", *f.graded_strongly_m_nil_clean,
              graded_m_nil_clean_witness(c.g, x, m, true).has_value());
    if (f.graded_pi_regular)
      compare(f.text, "graded pi-regular", *f.graded_pi_regular, graded_pi_regular_witness(c.g, x).has_value());
    if (f.lift_ideal) {
      const auto lifted = lift_m_potent(c.r, x, c.spec.ideals[*f.lift_ideal].elements, m);
      if (!lifted)
        mismatches.emplace_back(f.text + " lift", "no m-potent in the coset");
      else if (f.lift_to && *lifted != *f.lift_to)
        mismatches.emplace_back(f.text + " lift", "found " + c.r.format(*lifted) + ", claimed " + c.r.format(*f.lift_to));
    }
  }
  if (!mismatches.empty()) return falsified(std::to_string(mismatches.size()) + " element facts do not hold", mismatches);
  return passed(std::to_string(count) + " element fact groups hold");
}

CheckReport check_construction_notes(Context& c) {
  const auto& info = c.spec.construction;
  std::vector<std::pair<std::string, std::string>> w{
      {"kind", info.kind},
      {"ring", c.r.label()},
      {"size", std::to_string(c.r.size())},
      {"group", c.g.group().label()},
      {"support", std::to_string(c.g.components().size())}};
  for (std::size_t i = 0; i < info.notes.size(); ++i) w.emplace_back("note" + std::to_string(i), info.notes[i]);
  for (const auto& i : info.ideals) w.emplace_back("ideal " + i.name, std::to_string(i.elements.size()) + " elements");
  return passed("construction recorded", w);
}

struct Entry {
  CheckInfo info;
  std::function<CheckReport(Context&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"graded_m_nil_clean", "every homogeneous element is a homogeneous m-potent plus a homogeneous nilpotent"}, check_gmnc},
      {{"graded_strongly_m_nil_clean", "as graded_m_nil_clean with commuting summands"}, check_sgmnc},
      {{"same_component", "graded decompositions live in the component of the element"}, check_same_component},
      {{"homomorphic_image", "graded quotients of a graded m-nil clean ring are graded m-nil clean"}, check_homomorphic_image},
      {{"product_law", "a product is graded (strongly) m-nil clean iff every factor is"}, check_product_law},
      {{"mpotent_degree_lemma", "a nonzero m-potent of degree h has h^(m-1) = e"}, check_mpotent_degree_lemma},
      {{"torsion_free_corollary", "(m-1)-torsion free group: nonzero homogeneous m-potents lie in R_e"}, check_torsion_free_corollary},
      {{"necessary_conditions", "graded m-nil clean: R_e m-nil clean; torsion free: other components nilpotent"}, check_necessary_conditions},
      {{"lifting_lemma", "m-1 a unit, I nil: m-potents lift modulo I"}, check_lifting_lemma},
      {{"quotient_theorem", "graded-nil I, m-1 unit, torsion free: R graded m-nil clean iff R/I is"}, check_quotient_theorem},
      {{"jg_graded_nil", "graded m-nil clean: J^g(R) is graded-nil"}, check_jg_graded_nil},
      {{"jg_quotient_corollary", "R graded m-nil clean iff R/J^g(R) is and J^g(R) is graded-nil"}, check_jg_quotient_corollary},
      {{"sufficient_condition_orthogonal", "finite G, R_g R_{g^-1} = 0, R_e m-nil clean: graded m-nil clean"}, check_sufficient_orthogonal},
      {{"sufficient_condition_graded_local", "graded-local, finite torsion-free G, m-1 and |G| units, R_e m-nil clean"}, check_sufficient_graded_local},
      {{"pi_regular_from_strongly_m_nil_clean", "strongly m-nil clean elements are strongly pi-regular"}, check_pi_regular_from_smnc},
      {{"identity_component_pi_regular", "graded m-nil clean: R_e is strongly pi-regular"}, check_identity_component_pi_regular},
      {{"commuting_equivalence", "strong m-nil cleanness via a commuting m-potent g"}, check_commuting_equivalence},
      {{"graded_commuting_equivalence", "graded form of commuting_equivalence with g, u in R_e"}, check_graded_commuting_equivalence},
      {{"pi_regular_uniqueness", "strongly pi-regular decompositions are unique"}, check_pi_regular_uniqueness},
      {{"amalgamation_theorem", "A join^f J graded m-nil clean iff A and f(A)+J are"}, check_amalgamation_theorem},
      {{"group_ring_theorem", "group ring inherits graded m-nil cleanness and conversely"}, check_group_ring_theorem},
      {{"matrix_theorem", "M_n(R) with sigma = (e,...,e) inherits graded m-nil cleanness"}, check_matrix_theorem},
      {{"diagonal_z_theorem", "A m-nil clean iff diagonal Z-graded M_n(A) is graded m-nil clean"}, check_diagonal_z_theorem},
      {{"triangular_theorem", "R graded m-nil clean iff T_n(R)(sigma) is"}, check_triangular_theorem},
      {{"jacobson_identity_component", "J^g(R) cap R_e = J(R_e)"}, check_jacobson_identity_component},
      {{"element_facts", "stated properties of individual elements"}, check_element_facts},
      {{"construction_notes", "construction details, recorded"}, check_construction_notes},
  };
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_registered_check(const std::string& name) {
  const auto& all = registered_checks();
  return std::any_of(all.begin(), all.end(), [&](const CheckInfo& i) { return i.name == name; });
}

std::vector<CheckReport> run_checks(const RingSpec& spec, const std::vector<std::string>& checks, const Limits& limits) {
  const std::vector<std::string>& wanted = checks.empty() ? spec.checks : checks;
  for (const auto& name : wanted)
    if (!is_registered_check(name)) throw SpecError("/checks", "unknown check '" + name + "'");
  Context ctx(spec, limits);
  std::vector<CheckReport> reports;
  for (const auto& entry : registry()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), entry.info.name) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = entry.run(ctx);
    } catch (const ResourceError& e) {
      rep = CheckReport{};
      rep.status = CheckStatus::skipped_resource;
      rep.detail = e.what();
      rep.witness = {{"cap", e.cap()}, {"limit", std::to_string(e.limit())}};
    } catch (const Error& e) {
      // A certificate failing re-verification or a construction rejecting
      // its own output is a defect, never a quiet pass.
      rep = falsified(std::string("internal validation failure: ") + e.what());
    }
    rep.spec = spec.name;
    rep.check = entry.info.name;
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::falsified) return 1;
    skipped = skipped || r.status == CheckStatus::skipped_resource;
  }
  return skipped ? 3 : 0;
}

}  // namespace nilgrade
