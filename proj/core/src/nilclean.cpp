#include "nilgrade/nilclean.hpp"

#include <algorithm>

#include "nilgrade/errors.hpp"

namespace nilgrade {

namespace {

void require_m(unsigned m) {
  if (m < 2) throw PreconditionError("m >= 2");
}

bool commute(const FiniteRing& r, Element a, Element b) { return r.mul(a, b) == r.mul(b, a); }

std::string fmt(const FiniteRing& r, Element x) { return r.format(x); }

}  // namespace

void verify_certificate(const FiniteRing& ring, const NilCleanCertificate& c, bool strong) {
  if (ring.add(c.f, c.n) != c.x) throw ValidationError("certificate sum", fmt(ring, c.f) + " + " + fmt(ring, c.n) + " != " + fmt(ring, c.x));
  if (!ring.is_m_potent(c.f, c.m)) throw ValidationError("certificate m-potent", fmt(ring, c.f));
  if (!ring.is_nilpotent(c.n)) throw ValidationError("certificate nilpotent", fmt(ring, c.n));
  const bool comm = commute(ring, c.f, c.n);
  if (c.commuting != comm) throw ValidationError("certificate commuting flag", fmt(ring, c.x));
  if (strong && !comm) throw ValidationError("certificate commutation", fmt(ring, c.f) + ", " + fmt(ring, c.n));
}

void verify_certificate(const Grading& grading, const NilCleanCertificate& c, bool strong) {
  verify_certificate(grading.ring(), c, strong);
  const DegreeOf dx = grading.degree_of(c.x);
  if (!dx.is_homogeneous()) throw ValidationError("certificate degree", fmt(grading.ring(), c.x) + " is not homogeneous");
  for (Element part : {c.f, c.n}) {
    const DegreeOf d = grading.degree_of(part);
    if (!d.is_homogeneous()) throw ValidationError("certificate degree", fmt(grading.ring(), part) + " is not homogeneous");
  }
}

void verify_certificate(const FiniteRing& ring, const PiRegularCertificate& c) {
  if (ring.add(c.f, c.u) != c.a) throw ValidationError("certificate sum", fmt(ring, c.f) + " + " + fmt(ring, c.u) + " != " + fmt(ring, c.a));
  if (ring.mul(c.f, c.f) != c.f) throw ValidationError("certificate idempotent", fmt(ring, c.f));
  if (!ring.is_unit(c.u)) throw ValidationError("certificate unit", fmt(ring, c.u));
  if (!commute(ring, c.a, c.f)) throw ValidationError("certificate af = fa", fmt(ring, c.a));
  if (!ring.is_nilpotent(ring.mul(ring.mul(c.f, c.a), c.f))) throw ValidationError("certificate faf nilpotent", fmt(ring, c.a));
}

void verify_graded_certificate(const Grading& grading, const PiRegularCertificate& c) {
  verify_certificate(grading.ring(), c);
  for (Element part : {c.f, c.u})
    if (!grading.is_homogeneous(part)) throw ValidationError("certificate degree", fmt(grading.ring(), part) + " is not homogeneous");
}

std::optional<NilCleanCertificate> m_nil_clean_witness(const FiniteRing& ring, Element x, unsigned m, bool strong) {
  require_m(m);
  for (Element f : ring.m_potents(m)) {
    const Element n = ring.sub(x, f);
    if (!ring.is_nilpotent(n)) continue;
    const bool comm = commute(ring, f, n);
    if (strong && !comm) continue;
    NilCleanCertificate cert{x, f, n, m, comm, std::nullopt};
    verify_certificate(ring, cert, strong);
    return cert;
  }
  return std::nullopt;
}

std::optional<NilCleanCertificate> graded_m_nil_clean_witness(const Grading& grading, Element x, unsigned m,
                                                              bool strong) {
  require_m(m);
  const DegreeOf d = grading.degree_of(x);
  if (!d.is_homogeneous()) throw PreconditionError(grading.ring().format(x) + " is homogeneous");
  const FiniteRing& r = grading.ring();
  auto try_f = [&](Element f) -> std::optional<NilCleanCertificate> {
    const Element n = r.sub(x, f);
    if (!r.is_nilpotent(n)) return std::nullopt;
    const bool comm = commute(r, f, n);
    if (strong && !comm) return std::nullopt;
    NilCleanCertificate cert{x, f, n, m, comm, d};
    verify_certificate(grading, cert, strong);
    return cert;
  };
  if (d.is_zero()) return try_f(0);
  const std::size_t c = *grading.component_index(d.degree);
  for (Element f : grading.component_m_potents(c, m))
    if (auto cert = try_f(f)) return cert;
  return std::nullopt;
}

std::optional<NilCleanCertificate> homogeneous_m_nil_clean_witness(const Grading& grading, Element x, unsigned m,
                                                                   bool strong) {
  require_m(m);
  const FiniteRing& r = grading.ring();
  std::vector<Element> candidates{0};
  for (std::size_t c = 0; c < grading.components().size(); ++c)
    for (Element f : grading.component_m_potents(c, m))
      if (f != 0) candidates.push_back(f);
  std::sort(candidates.begin(), candidates.end());
  for (Element f : candidates) {
    const Element n = r.sub(x, f);
    if (!grading.is_homogeneous(n) || !r.is_nilpotent(n)) continue;
    const bool comm = commute(r, f, n);
    if (strong && !comm) continue;
    // Report the degree of x when it is homogeneous; otherwise leave it unset.
    std::optional<DegreeOf> deg;
    if (grading.is_homogeneous(x)) deg = grading.degree_of(x);
    NilCleanCertificate cert{x, f, n, m, comm, deg};
    verify_certificate(r, cert, strong);
    return cert;
  }
  return std::nullopt;
}

std::vector<Element> canonical_homogeneous_order(const Grading& grading) {
  const FiniteRing& r = grading.ring();
  std::vector<Element> order;
  ElementSet seen(r.size());
  for (std::int64_t k = 0;; ++k) {
    const Element x = r.from_integer(k);
    if (!seen.insert(x)) break;
    order.push_back(x);
  }
  const auto e = grading.identity_component();
  if (e)
    for (Element x : grading.components()[*e].members)
      if (seen.insert(x)) order.push_back(x);
  for (std::size_t c = 0; c < grading.components().size(); ++c) {
    if (e && c == *e) continue;
    for (Element x : grading.components()[c].members)
      if (seen.insert(x)) order.push_back(x);
  }
  return order;
}

namespace {

ElementSet cover_component(const Grading& grading, std::size_t c, unsigned m, bool strong) {
  const FiniteRing& r = grading.ring();
  ElementSet covered(r.size());
  const auto& nil = grading.component_nilpotents(c);
  for (Element f : grading.component_m_potents(c, m))
    for (Element n : nil)
      if (!strong || commute(r, f, n)) covered.insert(r.add(f, n));
  return covered;
}

}  // namespace

RingDecision is_graded_m_nil_clean_ring(const Grading& grading, unsigned m, bool strong) {
  require_m(m);
  const FiniteRing& r = grading.ring();
  const auto& comps = grading.components();
  const auto e = grading.identity_component();
  const bool torsion_free = is_m_torsion_free(grading.group(), m - 1);

  // Pre-pass: R_e must be m-nil clean; with (m-1)-torsion freeness every
  // other homogeneous element must be nilpotent.
  std::vector<ElementSet> covered(comps.size());
  if (e) {
    covered[*e] = cover_component(grading, *e, m, strong);
    if (covered[*e].size() != comps[*e].members.size()) {
      for (Element x : canonical_homogeneous_order(grading))
        if (!covered[*e].contains(x))
          return {false, x, "R_e is not " + std::string(strong ? "strongly " : "") + std::to_string(m) + "-nil clean"};
    }
  }
  if (torsion_free) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (e && c == *e) continue;
      for (Element x : comps[c].members)
        if (!r.is_nilpotent(x))
          return {false, x, "homogeneous element of degree " + grading.group().format(comps[c].degree) +
                                " is not nilpotent although the group is (m-1)-torsion free"};
    }
    return {true, std::nullopt, {}};
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (e && c == *e) continue;
    covered[c] = cover_component(grading, c, m, strong);
    if (covered[c].size() == comps[c].members.size()) continue;
    for (Element x : comps[c].members)
      if (!covered[c].contains(x)) return {false, x, "no homogeneous decomposition"};
  }
  return {true, std::nullopt, {}};
}

RingDecision is_m_nil_clean_ring(const FiniteRing& ring, unsigned m, bool strong) {
  require_m(m);
  ElementSet covered(ring.size());
  const auto& nil = ring.nilpotents();
  for (Element f : ring.m_potents(m))
    for (Element n : nil)
      if (!strong || commute(ring, f, n)) covered.insert(ring.add(f, n));
  for (Element x = 0; x < ring.size(); ++x)
    if (!covered.contains(x)) return {false, x, "no decomposition"};
  return {true, std::nullopt, {}};
}

std::optional<PiRegularCertificate> graded_pi_regular_witness(const Grading& grading, Element a) {
  if (!grading.is_homogeneous(a)) throw PreconditionError(grading.ring().format(a) + " is homogeneous");
  const FiniteRing& r = grading.ring();
  std::vector<Element> idempotents{0};
  for (std::size_t c = 0; c < grading.components().size(); ++c)
    for (Element f : grading.component_m_potents(c, 2))
      if (f != 0) idempotents.push_back(f);
  std::sort(idempotents.begin(), idempotents.end());
  for (Element f : idempotents) {
    const Element u = r.sub(a, f);
    if (!grading.is_homogeneous(u) || !r.is_unit(u)) continue;
    if (!commute(r, a, f)) continue;
    if (!r.is_nilpotent(r.mul(r.mul(f, a), f))) continue;
    PiRegularCertificate cert{a, f, u};
    verify_graded_certificate(grading, cert);
    return cert;
  }
  return std::nullopt;
}

std::vector<PiRegularCertificate> strongly_pi_regular_certificates(const FiniteRing& ring, Element a) {
  std::vector<PiRegularCertificate> out;
  for (Element f : ring.m_potents(2)) {
    const Element u = ring.sub(a, f);
    if (!ring.is_unit(u) || !commute(ring, a, f)) continue;
    if (!ring.is_nilpotent(ring.mul(ring.mul(f, a), f))) continue;
    out.push_back({a, f, u});
  }
  return out;
}

PiRegularCertificate strongly_pi_regular_from_m_nil_clean(const FiniteRing& ring, Element f, Element n, unsigned m) {
  require_m(m);
  if (!ring.is_m_potent(f, m)) throw PreconditionError(ring.format(f) + " is " + std::to_string(m) + "-potent");
  if (!ring.is_nilpotent(n)) throw PreconditionError(ring.format(n) + " is nilpotent");
  if (!commute(ring, f, n)) throw PreconditionError("fn = nf");
  const Element fm1 = ring.pow(f, m - 1);
  const Element idem = ring.sub(ring.one(), fm1);
  const Element unit = ring.add(ring.sub(ring.add(f, fm1), ring.one()), n);
  PiRegularCertificate cert{ring.add(f, n), idem, unit};
  verify_certificate(ring, cert);
  return cert;
}

bool strongly_pi_regular_uniqueness_check(const FiniteRing& ring, Element a) {
  return strongly_pi_regular_certificates(ring, a).size() <= 1;
}

std::optional<Element> lift_m_potent(const FiniteRing& ring, Element x, const ElementSet& ideal, unsigned m) {
  require_m(m);
  if (!ring.is_unit(ring.from_integer(static_cast<std::int64_t>(m) - 1)))
    throw PreconditionError("m - 1 = " + std::to_string(m - 1) + " is a unit");
  if (ideal.universe() != ring.size()) throw PreconditionError("I is a subset of R");
  if (auto v = two_sided_ideal_violation(ring, ideal)) throw PreconditionError("I is a two-sided ideal (" + *v + ")");
  if (!is_nil_set(ring, ideal)) throw PreconditionError("I is nil");
  if (!ideal.contains(ring.sub(ring.pow(x, m), x))) throw PreconditionError("x^m - x lies in I");
  std::optional<Element> found;
  ideal.for_each([&](Element i) {
    if (found) return;
    const Element f = ring.add(x, i);
    if (ring.is_m_potent(f, m)) found = f;
  });
  return found;
}

EquivalenceCheck prop_commuting_equivalence_check(const FiniteRing& ring, Element a, Element f, Element u,
                                                  unsigned m) {
  require_m(m);
  verify_certificate(ring, PiRegularCertificate{a, f, u});
  EquivalenceCheck out;
  for (Element g : ring.m_potents(m)) {
    if (!commute(ring, g, f) || !commute(ring, g, u)) continue;
    if (!ring.is_nilpotent(ring.add(ring.sub(f, g), u))) continue;
    out.exists_g = true;
    out.g = g;
    break;
  }
  out.strongly_m_nil_clean = m_nil_clean_witness(ring, a, m, true).has_value();
  return out;
}

EquivalenceCheck graded_commuting_equivalence_sides(const Grading& grading, Element a, Element f, Element u,
                                                    unsigned m) {
  require_m(m);
  verify_graded_certificate(grading, PiRegularCertificate{a, f, u});
  const FiniteRing& r = grading.ring();
  EquivalenceCheck out;
  const auto e = grading.identity_component();
  const DegreeOf du = grading.degree_of(u);
  const bool u_in_e = du.is_zero() || du == DegreeOf::of(grading.group().identity());
  if (e && u_in_e) {
    for (Element g : grading.component_m_potents(*e, m)) {
      if (!commute(r, g, f) || !commute(r, g, u)) continue;
      if (!r.is_nilpotent(r.add(r.sub(f, g), u))) continue;
      out.exists_g = true;
      out.g = g;
      break;
    }
  }
  out.strongly_m_nil_clean =
      grading.is_homogeneous(a) && graded_m_nil_clean_witness(grading, a, m, true).has_value();
  return out;
}

EquivalenceCheck graded_commuting_equivalence_check(const Grading& grading, Element a, Element f, Element u,
                                                    unsigned m) {
  require_m(m);
  if (!is_m_torsion_free(grading.group(), m - 1))
    throw PreconditionError("grading group " + grading.group().label() + " is " + std::to_string(m - 1) +
                            "-torsion free");
  return graded_commuting_equivalence_sides(grading, a, f, u, m);
}

}  // namespace nilgrade
