#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilgrade/grading.hpp"

namespace nilgrade {

/// Matrices over a base ring whose nonzero entries are confined to a fixed
/// set of positions (all of them, or the upper triangle). Element index is
/// the mixed-radix number of the allowed entries in row-major order, the
/// first allowed entry being least significant.
class MatrixRing final : public FiniteRing {
 public:
  MatrixRing(RingPtr base, std::size_t n, bool upper_triangular, const Limits& limits = {});

  const FiniteRing& base() const noexcept { return *base_; }
  const RingPtr& base_ptr() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return n_; }
  bool upper_triangular() const noexcept { return upper_; }
  bool allowed(std::size_t i, std::size_t j) const { return slot_[i * n_ + j] >= 0; }

  Element entry(Element x, std::size_t i, std::size_t j) const;
  /// Row-major n*n entries; entries outside the allowed positions must be 0.
  Element from_entries(const std::vector<Element>& entries) const;
  std::vector<Element> entries(Element x) const;
  /// Base element b placed at (i, j).
  Element unit_matrix(std::size_t i, std::size_t j, Element b) const;

  Element add(Element a, Element b) const override;
  Element mul(Element a, Element b) const override;
  Element neg(Element a) const override;
  std::string format(Element x) const override;
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return true; }

 private:
  RingPtr base_;
  std::size_t n_;
  bool upper_;
  std::vector<int> slot_;               // position -> digit index or -1
  std::vector<std::size_t> positions_;  // digit index -> i*n+j
  std::vector<std::size_t> strides_;
};

using SigmaVector = std::vector<Degree>;

/// M_n(R) with component of degree l = matrices with a_ij in R_{g_i l g_j^-1}.
Grading matrix_graded(const Grading& base, std::size_t n, const SigmaVector& sigma, const Limits& limits = {});

/// M_n(A) graded by the integers along the diagonals: R_t is spanned by the
/// entries (i, i+t).
Grading diagonal_z_grading(const RingPtr& ring, std::size_t n, const Limits& limits = {});

struct TriangularResult {
  Grading grading;
  /// Matrices with zero diagonal; a homogeneous two-sided ideal.
  ElementSet zero_diagonal;
};
TriangularResult triangular_graded(const Grading& base, std::size_t n, const SigmaVector& sigma,
                                   const Limits& limits = {});

enum class GroupRingMode { paper_twisted, standard };
std::string to_string(GroupRingMode mode);

/// Functions G -> R with coefficient of group element h at digit h (radix
/// |R|). standard:  (a x)(b y) = ab (xy).
/// paper_twisted: (a x)(b y) = sum over the homogeneous parts b_d of b of
/// a b_d (d^-1 x d y), which needs the grading of R by G.
class GroupRingRing final : public FiniteRing {
 public:
  GroupRingRing(const Grading& base, FiniteGroup group, GroupRingMode mode, const Limits& limits = {});

  const FiniteRing& base() const noexcept { return *base_; }
  const RingPtr& base_ptr() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return group_; }
  GroupRingMode mode() const noexcept { return mode_; }

  Element coefficient(Element x, FiniteGroup::Index h) const {
    return static_cast<Element>((x / strides_[h]) % base_->size());
  }
  Element monomial(Element r, FiniteGroup::Index h) const { return static_cast<Element>(r * strides_[h]); }
  /// Sum of the coefficients.
  Element augmentation(Element x) const;

  Element add(Element a, Element b) const override;
  Element mul(Element a, Element b) const override;
  Element neg(Element a) const override;
  std::string format(Element x) const override;
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return true; }

 private:
  RingPtr base_;
  FiniteGroup group_;
  GroupRingMode mode_;
  std::vector<std::size_t> strides_;
  // base element -> (group index of degree, homogeneous part), zero parts omitted
  std::vector<std::vector<std::pair<FiniteGroup::Index, Element>>> parts_;
};

struct ModeOutcome {
  GroupRingMode mode;
  bool valid = false;
  std::string detail;  // failing law and witness when invalid
};

struct GroupRingResult {
  Grading grading;
  GroupRingMode mode;
  /// Every mode that was attempted, in order.
  std::vector<ModeOutcome> outcomes;
};

/// RG with (RG)_g = sum_h R_{gh^-1} h. The base must be graded by G itself.
/// Throws ValidationError naming the failing law if the requested mode does
/// not give a graded ring.
GroupRingResult group_ring_graded(const Grading& base, const FiniteGroup& group, GroupRingMode mode,
                                  const Limits& limits = {});
/// Tries paper_twisted first and falls back to standard; throws only when
/// neither validates.
GroupRingResult group_ring_graded_auto(const Grading& base, const FiniteGroup& group, const Limits& limits = {});

struct AugmentationIdeal {
  ElementSet elements;
  std::optional<unsigned> nilpotency_index;
};
/// Kernel of the augmentation map. Throws PreconditionError if the grading is
/// not on a group ring.
AugmentationIdeal augmentation_ideal(const Grading& group_ring);

struct AmalgamationSpec {
  Grading a;
  Grading b;
  /// f as an element map A -> B.
  std::vector<Element> f;
  ElementSet j;
};

struct AmalgamationResult {
  /// A join^f J as a subring of A x B.
  Grading grading;
  /// f(A) + J as a subring of B.
  Grading image;
  std::vector<Element> project_a;      // local element -> A
  std::vector<Element> project_image;  // local element -> f(A)+J (local index)
};

/// Validates the input (commutativity, f a unital graded homomorphism, J a
/// homogeneous two-sided ideal) and builds the amalgamated ring.
AmalgamationResult amalgamation(const AmalgamationSpec& spec, const Limits& limits = {});

/// Componentwise grading of the direct product.
Grading product_grading(const std::vector<Grading>& factors, const Limits& limits = {});

}  // namespace nilgrade
