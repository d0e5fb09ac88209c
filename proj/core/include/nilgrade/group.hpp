#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nilgrade {

/// Finite group given by its multiplication table. Elements are the indices
/// 0..order-1 and the identity is always index 0.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// Validates associativity, the identity law at index 0 and existence of
  /// inverses; throws ValidationError with a witness otherwise.
  FiniteGroup(std::size_t order, std::vector<Index> table, std::string label = {});

  std::size_t order() const noexcept { return order_; }
  Index identity() const noexcept { return 0; }
  Index multiply(Index a, Index b) const { return table_[a * order_ + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index power(Index a, std::int64_t k) const;
  const std::vector<Index>& table() const noexcept { return table_; }
  const std::string& label() const noexcept { return label_; }
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::string label_;
};

FiniteGroup make_cyclic(std::size_t n);
FiniteGroup make_dihedral(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Least k >= 1 with g^k = e.
std::size_t element_order(const FiniteGroup& group, FiniteGroup::Index g);

/// True iff every element has p-power order. Throws PreconditionError when p
/// is not prime.
bool is_p_group(const FiniteGroup& group, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Element of a grading group: a table index for finite groups, a signed
/// integer for the integers.
struct Degree {
  std::int64_t value = 0;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

/// Either a finite group or the infinite cyclic group (the integers under
/// addition).
class GradingGroup {
 public:
  static GradingGroup integers();
  static GradingGroup finite(FiniteGroup group);
  static GradingGroup trivial();

  bool is_integer() const noexcept { return finite_ == nullptr; }
  bool is_finite() const noexcept { return finite_ != nullptr; }
  const FiniteGroup& finite_group() const;

  Degree identity() const noexcept { return Degree{0}; }
  Degree multiply(Degree a, Degree b) const;
  Degree inverse(Degree a) const;
  Degree power(Degree a, std::int64_t k) const;
  bool contains(Degree a) const;
  /// All elements of a finite group; throws for the integers.
  std::vector<Degree> elements() const;
  std::string format(Degree a) const;
  std::string label() const;

  friend bool operator==(const GradingGroup& a, const GradingGroup& b);

 private:
  std::shared_ptr<const FiniteGroup> finite_;
};

/// True iff g^m = e forces g = e.
bool is_m_torsion_free(const GradingGroup& group, std::uint64_t m);

}  // namespace nilgrade
