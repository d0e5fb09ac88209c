#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilgrade/grading.hpp"

namespace nilgrade {

/// x = f + n with f^m = f and n nilpotent.
struct NilCleanCertificate {
  Element x = 0;
  Element f = 0;
  Element n = 0;
  unsigned m = 2;
  bool commuting = false;
  /// Shared degree of x, f and n for graded certificates.
  std::optional<DegreeOf> degree;
};

/// a = f + u with f idempotent, u a unit, af = fa and faf nilpotent.
struct PiRegularCertificate {
  Element a = 0;
  Element f = 0;
  Element u = 0;
};

/// Throws ValidationError if the certificate's invariants fail in `ring`.
void verify_certificate(const FiniteRing& ring, const NilCleanCertificate& cert, bool strong);
void verify_certificate(const Grading& grading, const NilCleanCertificate& cert, bool strong);
void verify_certificate(const FiniteRing& ring, const PiRegularCertificate& cert);
/// Also requires f and u homogeneous.
void verify_graded_certificate(const Grading& grading, const PiRegularCertificate& cert);

/// First certificate over m-potents f in ascending order, or nullopt.
std::optional<NilCleanCertificate> m_nil_clean_witness(const FiniteRing& ring, Element x, unsigned m, bool strong);

/// Search restricted to f in the component of x (f = 0 included). Throws
/// PreconditionError for non-homogeneous x.
std::optional<NilCleanCertificate> graded_m_nil_clean_witness(const Grading& grading, Element x, unsigned m,
                                                              bool strong);
/// Search over every homogeneous m-potent f with x - f homogeneous, in any
/// component.
std::optional<NilCleanCertificate> homogeneous_m_nil_clean_witness(const Grading& grading, Element x, unsigned m,
                                                                   bool strong);

struct RingDecision {
  bool holds = true;
  /// Least failing element in the canonical order.
  std::optional<Element> failing;
  std::string reason;
};

/// Canonical order used for failing witnesses: the multiples k*1, then R_e
/// ascending, then the remaining components by degree.
std::vector<Element> canonical_homogeneous_order(const Grading& grading);

RingDecision is_graded_m_nil_clean_ring(const Grading& grading, unsigned m, bool strong);
RingDecision is_m_nil_clean_ring(const FiniteRing& ring, unsigned m, bool strong);

/// Search over homogeneous idempotents f ascending with u = a - f a
/// homogeneous unit. Throws PreconditionError for non-homogeneous a.
std::optional<PiRegularCertificate> graded_pi_regular_witness(const Grading& grading, Element a);

/// Every decomposition a = f + u of the strongly pi-regular form.
std::vector<PiRegularCertificate> strongly_pi_regular_certificates(const FiniteRing& ring, Element a);

/// (1 - f^(m-1), f + f^(m-1) - 1 + n). Throws PreconditionError when f is not
/// m-potent, n is not nilpotent or fn != nf.
PiRegularCertificate strongly_pi_regular_from_m_nil_clean(const FiniteRing& ring, Element f, Element n, unsigned m);

/// True iff a has at most one strongly pi-regular decomposition.
bool strongly_pi_regular_uniqueness_check(const FiniteRing& ring, Element a);

/// Least f in x + I (by element of I ascending) with f^m = f. Throws
/// PreconditionError naming the hypothesis when m-1 is not a unit, I is not
/// a nil two-sided ideal, or x^m - x is not in I. nullopt means no lift
/// exists despite the hypotheses.
std::optional<Element> lift_m_potent(const FiniteRing& ring, Element x, const ElementSet& ideal, unsigned m);

struct EquivalenceCheck {
  bool exists_g = false;
  std::optional<Element> g;
  bool strongly_m_nil_clean = false;
  bool agree() const { return exists_g == strongly_m_nil_clean; }
};

/// exists_g: some m-potent g commutes with f and u and f - g + u is
/// nilpotent. Throws ValidationError when (f, u) is not a certificate for a.
EquivalenceCheck prop_commuting_equivalence_check(const FiniteRing& ring, Element a, Element f, Element u, unsigned m);

/// Graded form: g ranges over m-potents of R_e and u must lie in R_e; the
/// other side is graded strong m-nil cleanness of a. Requires the grading
/// group to be (m-1)-torsion free.
EquivalenceCheck graded_commuting_equivalence_check(const Grading& grading, Element a, Element f, Element u,
                                                    unsigned m);
/// Both sides of the graded check without the torsion hypothesis.
EquivalenceCheck graded_commuting_equivalence_sides(const Grading& grading, Element a, Element f, Element u,
                                                    unsigned m);

}  // namespace nilgrade
