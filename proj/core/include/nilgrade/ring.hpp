#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilgrade/element_set.hpp"
#include "nilgrade/limits.hpp"

namespace nilgrade {

/// Finite ring with identity. Elements are indices 0..size-1; 0 is always
/// the additive identity. Subclasses provide the arithmetic; classification
/// queries are cached and safe to call concurrently.
class FiniteRing {
 public:
  virtual ~FiniteRing() = default;
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }

  virtual Element add(Element a, Element b) const = 0;
  virtual Element mul(Element a, Element b) const = 0;
  virtual Element neg(Element a) const = 0;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  virtual std::string format(Element x) const;
  /// A generating set of the additive group.
  virtual std::vector<Element> additive_generators() const;
  /// True when multiplication is bilinear by the way it is computed, so that
  /// multiplicative laws may be checked on additive generators alone.
  virtual bool biadditive_by_construction() const { return false; }

  Element pow(Element x, std::uint64_t k) const;
  /// k * 1.
  Element from_integer(std::int64_t k) const;

  std::optional<unsigned> nilpotency_index(Element x) const;
  bool is_nilpotent(Element x) const { return nilpotency_index(x).has_value(); }
  bool is_m_potent(Element x, unsigned m) const { return pow(x, m) == x; }
  std::optional<Element> inverse(Element x) const;
  bool is_unit(Element x) const { return inverse(x).has_value(); }
  bool is_commutative() const;

  /// All m-potents in ascending order (cached per m).
  const std::vector<Element>& m_potents(unsigned m) const;
  /// All nilpotents in ascending order (cached).
  const std::vector<Element>& nilpotents() const;

 protected:
  FiniteRing(std::size_t size, Element one, std::string label);

 private:
  std::size_t size_;
  Element one_;
  std::string label_;
  // 0 = unknown, -1 = not nilpotent, k > 0 = nilpotency index.
  std::unique_ptr<std::atomic<std::int16_t>[]> nil_cache_;
  // 0 = unknown, 1 = not a unit, 2 + inverse otherwise.
  std::unique_ptr<std::atomic<std::uint32_t>[]> unit_cache_;
  mutable std::mutex list_mutex_;
  mutable std::map<unsigned, std::shared_ptr<const std::vector<Element>>> m_potent_lists_;
  mutable std::shared_ptr<const std::vector<Element>> nilpotent_list_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Integers modulo n. n = 1 gives the zero ring.
class ZnRing final : public FiniteRing {
 public:
  explicit ZnRing(std::uint32_t n);
  std::uint32_t modulus() const noexcept { return n_; }
  Element add(Element a, Element b) const override { return static_cast<Element>((a + b) % n_); }
  Element mul(Element a, Element b) const override {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % n_);
  }
  Element neg(Element a) const override { return a == 0 ? 0 : n_ - a; }
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return true; }

 private:
  std::uint32_t n_;
};

/// GF(p^k) as Z_p[x]/(q) for the least monic irreducible q of degree k,
/// where polynomials are ordered by the integer sum c_i p^i of their
/// non-leading coefficients. Element index = sum c_i p^i.
class GaloisField final : public FiniteRing {
 public:
  GaloisField(std::uint32_t p, std::uint32_t k);
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  /// Coefficients c_0..c_{k-1} of the modulus (leading 1 omitted).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const override;
  Element mul(Element a, Element b) const override;
  Element neg(Element a) const override;
  std::string format(Element x) const override;
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return true; }

 private:
  std::vector<std::uint32_t> digits(Element x) const;
  Element encode(const std::vector<std::uint32_t>& d) const;
  Element mul_poly(Element a, Element b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> mul_table_;
};

/// Ring given by explicit addition and multiplication tables.
class TableRing final : public FiniteRing {
 public:
  TableRing(std::size_t size, std::vector<Element> add, std::vector<Element> mul, Element one,
            std::string label, std::vector<std::string> labels = {});

  Element add(Element a, Element b) const override { return add_[a * size() + b]; }
  Element mul(Element a, Element b) const override { return mul_[a * size() + b]; }
  Element neg(Element a) const override { return neg_[a]; }
  std::string format(Element x) const override;

  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<std::string> labels_;
};

/// Direct product with componentwise operations. Element index is the
/// mixed-radix number whose i-th digit (radix |R_i|) is the i-th coordinate,
/// the first factor being least significant.
class ProductRing final : public FiniteRing {
 public:
  ProductRing(std::vector<RingPtr> factors, const Limits& limits);
  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  Element coordinate(Element x, std::size_t i) const {
    return static_cast<Element>((x / strides_[i]) % factors_[i]->size());
  }
  Element embed(std::size_t i, Element y) const { return static_cast<Element>(y * strides_[i]); }
  Element compose(const std::vector<Element>& coords) const;

  Element add(Element a, Element b) const override;
  Element mul(Element a, Element b) const override;
  Element neg(Element a) const override;
  std::string format(Element x) const override;
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return true; }

 private:
  std::vector<RingPtr> factors_;
  std::vector<std::size_t> strides_;
};

/// Quotient by a two-sided ideal. Coset c is represented by its least
/// element; cosets are numbered in order of their representatives.
class QuotientRing final : public FiniteRing {
 public:
  QuotientRing(RingPtr parent, std::vector<Element> projection, std::vector<Element> representatives);
  const FiniteRing& parent() const noexcept { return *parent_; }
  Element project(Element x) const { return projection_[x]; }
  Element representative(Element c) const { return representatives_[c]; }
  const std::vector<Element>& projection() const noexcept { return projection_; }

  Element add(Element a, Element b) const override {
    return projection_[parent_->add(representatives_[a], representatives_[b])];
  }
  Element mul(Element a, Element b) const override {
    return projection_[parent_->mul(representatives_[a], representatives_[b])];
  }
  Element neg(Element a) const override { return projection_[parent_->neg(representatives_[a])]; }
  std::string format(Element x) const override;
  std::vector<Element> additive_generators() const override;
  bool biadditive_by_construction() const override { return parent_->biadditive_by_construction(); }

 private:
  RingPtr parent_;
  std::vector<Element> projection_;
  std::vector<Element> representatives_;
};

/// Unital subring given by its element set; local index i is the i-th
/// smallest parent element.
class SubRing final : public FiniteRing {
 public:
  SubRing(RingPtr parent, const ElementSet& elements, std::string label);
  SubRing(RingPtr parent, std::vector<Element> sorted_elements, std::string label);
  const FiniteRing& parent() const noexcept { return *parent_; }
  const RingPtr& parent_ptr() const noexcept { return parent_; }
  Element to_parent(Element x) const { return elements_[x]; }
  std::optional<Element> from_parent(Element y) const;

  Element add(Element a, Element b) const override { return local(parent_->add(elements_[a], elements_[b])); }
  Element mul(Element a, Element b) const override { return local(parent_->mul(elements_[a], elements_[b])); }
  Element neg(Element a) const override { return local(parent_->neg(elements_[a])); }
  std::string format(Element x) const override { return parent_->format(elements_[x]); }
  bool biadditive_by_construction() const override { return parent_->biadditive_by_construction(); }

 private:
  Element local(Element y) const;

  RingPtr parent_;
  std::vector<Element> elements_;
  std::unordered_map<Element, Element> index_;
};

std::shared_ptr<const ZnRing> make_zn(std::uint32_t n);
std::shared_ptr<const GaloisField> make_gf(std::uint32_t p, std::uint32_t k, const Limits& limits = {});
std::shared_ptr<const ProductRing> product_ring(std::vector<RingPtr> factors, const Limits& limits = {});

struct NilpotencyResult {
  bool nilpotent = false;
  std::optional<unsigned> index;
};
NilpotencyResult is_nilpotent(const FiniteRing& ring, Element x);
bool is_m_potent(const FiniteRing& ring, Element x, unsigned m);

struct UnitResult {
  bool unit = false;
  std::optional<Element> inverse;
};
UnitResult is_unit(const FiniteRing& ring, Element x);

/// Summary of an element's multiplicative behaviour.
struct ElementClass {
  bool is_nilpotent = false;
  std::optional<unsigned> nilpotency_index;
  bool is_unit = false;
  std::optional<Element> inverse;
  std::vector<std::pair<unsigned, bool>> m_potent_for;
};
ElementClass classify(const FiniteRing& ring, Element x, const std::vector<unsigned>& ms);

/// Smallest additive subgroup containing `generators`.
ElementSet additive_closure(const FiniteRing& ring, const std::vector<Element>& generators);
/// A + B for additive subgroups A, B.
ElementSet subgroup_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);
/// Greedy generating set (ascending) of an additive subgroup.
std::vector<Element> subgroup_generators(const FiniteRing& ring, const ElementSet& subgroup);

/// Checks ring axioms. Exhaustive on triples when size^3 fits the budget;
/// otherwise on additive generators, which requires bilinear arithmetic.
/// Returns true for an exhaustive check. Throws ValidationError/ResourceError.
bool verify_ring_axioms(const FiniteRing& ring, const Limits& limits = {});

/// Returns a rendered witness if `set` is not a two-sided ideal.
std::optional<std::string> two_sided_ideal_violation(const FiniteRing& ring, const ElementSet& set);
/// Returns a rendered witness if `set` is not a right ideal.
std::optional<std::string> right_ideal_violation(const FiniteRing& ring, const ElementSet& set);

/// {z : 1 - xz is a unit for every x}.
ElementSet jacobson_radical(const FiniteRing& ring, const Limits& limits = {});
bool is_nil_set(const FiniteRing& ring, const ElementSet& set);

/// Least k with I^k = 0, or nullopt when the powers stabilise at a nonzero ideal.
std::optional<unsigned> ideal_nilpotency_index(const FiniteRing& ring, const ElementSet& ideal);

struct QuotientResult {
  std::shared_ptr<const QuotientRing> ring;
  std::vector<Element> projection;
};
/// Throws ValidationError naming the violated closure when `ideal` is not a
/// two-sided ideal.
QuotientResult quotient_ring(const RingPtr& ring, const ElementSet& ideal);

std::shared_ptr<const SubRing> make_subring(const RingPtr& ring, const ElementSet& elements, std::string label);

/// Element whose rendering equals `text`, searched in ascending order.
std::optional<Element> find_element(const FiniteRing& ring, std::string_view text);

}  // namespace nilgrade
