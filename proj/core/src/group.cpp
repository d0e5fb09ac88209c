#include "nilgrade/group.hpp"

#include <numeric>
#include <sstream>

#include "nilgrade/errors.hpp"

namespace nilgrade {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ == 0) throw ValidationError("group order", "order must be positive");
  if (table_.size() != order_ * order_) {
    throw ValidationError("group table shape", "expected " + std::to_string(order_ * order_) +
                                                   " entries, got " + std::to_string(table_.size()));
  }
  for (Index v : table_) {
    if (v >= order_) throw ValidationError("group table range", "entry " + std::to_string(v));
  }
  for (Index i = 0; i < order_; ++i) {
    if (multiply(0, i) != i || multiply(i, 0) != i) {
      throw ValidationError("identity law", "index 0 is not an identity for " + std::to_string(i));
    }
  }
  for (Index i = 0; i < order_; ++i) {
    for (Index j = 0; j < order_; ++j) {
      for (Index k = 0; k < order_; ++k) {
        if (multiply(multiply(i, j), k) != multiply(i, multiply(j, k))) {
          std::ostringstream os;
          os << "(" << i << "*" << j << ")*" << k << " != " << i << "*(" << j << "*" << k << ")";
          throw ValidationError("associativity", os.str());
        }
      }
    }
  }
  inverse_.assign(order_, 0);
  for (Index i = 0; i < order_; ++i) {
    bool found = false;
    for (Index j = 0; j < order_ && !found; ++j) {
      if (multiply(i, j) == 0 && multiply(j, i) == 0) {
        inverse_[i] = j;
        found = true;
      }
    }
    if (!found) throw ValidationError("inverse law", "no inverse for " + std::to_string(i));
  }
}

FiniteGroup::Index FiniteGroup::power(Index a, std::int64_t k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Index result = 0;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (Index i = 0; i < order_; ++i)
    for (Index j = i + 1; j < order_; ++j)
      if (multiply(i, j) != multiply(j, i)) return false;
  return true;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be >= 1");
  std::vector<FiniteGroup::Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<FiniteGroup::Index>((i + j) % n);
  return FiniteGroup(n, std::move(table), "C" + std::to_string(n));
}

// Rotations r^i are indices 0..n-1, reflections s r^i are n..2n-1.
FiniteGroup make_dihedral(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral group parameter must be >= 1");
  const std::size_t order = 2 * n;
  std::vector<FiniteGroup::Index> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool ra = a < n, rb = b < n;
      const std::size_t i = a % n, j = b % n;
      std::size_t c;
      if (ra && rb) c = (i + j) % n;
      else if (ra && !rb) c = n + (j + n - i) % n;  // r^i s r^j = s r^{j-i}
      else if (!ra && rb) c = n + (i + j) % n;
      else c = (j + n - i) % n;  // s r^i s r^j = r^{j-i}
      table[a * order + b] = static_cast<FiniteGroup::Index>(c);
    }
  }
  return FiniteGroup(order, std::move(table), "D" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<FiniteGroup::Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = static_cast<FiniteGroup::Index>(a / h.order());
      const auto ha = static_cast<FiniteGroup::Index>(a % h.order());
      const auto gb = static_cast<FiniteGroup::Index>(b / h.order());
      const auto hb = static_cast<FiniteGroup::Index>(b % h.order());
      table[a * n + b] =
          static_cast<FiniteGroup::Index>(g.multiply(ga, gb) * h.order() + h.multiply(ha, hb));
    }
  }
  return FiniteGroup(n, std::move(table), g.label() + "x" + h.label());
}

std::size_t element_order(const FiniteGroup& group, FiniteGroup::Index g) {
  std::size_t k = 1;
  FiniteGroup::Index p = g;
  while (p != group.identity()) {
    p = group.multiply(p, g);
    ++k;
  }
  return k;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_group(const FiniteGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  for (FiniteGroup::Index g = 0; g < group.order(); ++g) {
    std::size_t k = element_order(group, static_cast<FiniteGroup::Index>(g));
    while (k % p == 0) k /= p;
    if (k != 1) return false;
  }
  return true;
}

GradingGroup GradingGroup::integers() { return GradingGroup{}; }

GradingGroup GradingGroup::finite(FiniteGroup group) {
  GradingGroup g;
  g.finite_ = std::make_shared<const FiniteGroup>(std::move(group));
  return g;
}

GradingGroup GradingGroup::trivial() { return finite(make_cyclic(1)); }

const FiniteGroup& GradingGroup::finite_group() const {
  if (!finite_) throw PreconditionError("grading group is the integers, not finite");
  return *finite_;
}

Degree GradingGroup::multiply(Degree a, Degree b) const {
  if (is_integer()) return Degree{a.value + b.value};
  return Degree{finite_->multiply(static_cast<FiniteGroup::Index>(a.value),
                                  static_cast<FiniteGroup::Index>(b.value))};
}

Degree GradingGroup::inverse(Degree a) const {
  if (is_integer()) return Degree{-a.value};
  return Degree{finite_->inverse(static_cast<FiniteGroup::Index>(a.value))};
}

Degree GradingGroup::power(Degree a, std::int64_t k) const {
  if (is_integer()) return Degree{a.value * k};
  return Degree{finite_->power(static_cast<FiniteGroup::Index>(a.value), k)};
}

bool GradingGroup::contains(Degree a) const {
  return is_integer() || (a.value >= 0 && static_cast<std::size_t>(a.value) < finite_->order());
}

std::vector<Degree> GradingGroup::elements() const {
  const auto& g = finite_group();
  std::vector<Degree> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(Degree{static_cast<std::int64_t>(i)});
  return out;
}

std::string GradingGroup::format(Degree a) const { return std::to_string(a.value); }

std::string GradingGroup::label() const { return is_integer() ? "Z" : finite_->label(); }

bool operator==(const GradingGroup& a, const GradingGroup& b) {
  if (a.is_integer() || b.is_integer()) return a.is_integer() && b.is_integer();
  return a.finite_ == b.finite_ || *a.finite_ == *b.finite_;
}

bool is_m_torsion_free(const GradingGroup& group, std::uint64_t m) {
  if (m == 0) throw PreconditionError("torsion exponent must be >= 1");
  if (group.is_integer()) return true;
  const auto& g = group.finite_group();
  for (FiniteGroup::Index x = 1; x < g.order(); ++x) {
    if (g.power(x, static_cast<std::int64_t>(m)) == g.identity()) return false;
  }
  return true;
}

}  // namespace nilgrade
