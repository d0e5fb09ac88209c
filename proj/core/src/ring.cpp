#include "nilgrade/ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "nilgrade/errors.hpp"
#include "nilgrade/group.hpp"

namespace nilgrade {

FiniteRing::FiniteRing(std::size_t size, Element one, std::string label)
    : size_(size),
      one_(one),
      label_(std::move(label)),
      nil_cache_(std::make_unique<std::atomic<std::int16_t>[]>(size)),
      unit_cache_(std::make_unique<std::atomic<std::uint32_t>[]>(size)) {}

std::string FiniteRing::format(Element x) const { return std::to_string(x); }

std::vector<Element> FiniteRing::additive_generators() const {
  ElementSet all(size_);
  for (std::size_t i = 0; i < size_; ++i) all.insert(static_cast<Element>(i));
  return subgroup_generators(*this, all);
}

Element FiniteRing::pow(Element x, std::uint64_t k) const {
  Element result = one_;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

Element FiniteRing::from_integer(std::int64_t k) const {
  const bool negative = k < 0;
  std::uint64_t n = negative ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element result = 0;
  Element base = one_;
  while (n > 0) {
    if (n & 1) result = add(result, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return negative ? neg(result) : result;
}

std::optional<unsigned> FiniteRing::nilpotency_index(Element x) const {
  const std::int16_t cached = nil_cache_[x].load(std::memory_order_relaxed);
  if (cached > 0) return static_cast<unsigned>(cached);
  if (cached < 0) return std::nullopt;

  // Nilpotency indices never exceed log2(size): the chain R > xR > x^2R > ...
  // is strictly decreasing for a nilpotent x, and each step at least halves.
  const unsigned bound = static_cast<unsigned>(std::bit_width(size_));
  std::vector<Element> seen;
  Element p = x;
  std::optional<unsigned> index;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == 0) {
      index = k;
      break;
    }
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) break;
    seen.push_back(p);
    p = mul(p, x);
  }
  nil_cache_[x].store(index ? static_cast<std::int16_t>(*index) : std::int16_t{-1}, std::memory_order_relaxed);
  return index;
}

std::optional<Element> FiniteRing::inverse(Element x) const {
  const std::uint32_t cached = unit_cache_[x].load(std::memory_order_relaxed);
  if (cached == 1) return std::nullopt;
  if (cached >= 2) return static_cast<Element>(cached - 2);

  // Brent's cycle detection on x, x^2, x^3, ... gives the period lambda;
  // x is a unit iff x^lambda = 1, and then x^(lambda-1) is its inverse.
  std::uint64_t power = 1, lambda = 1;
  Element tortoise = x;
  Element hare = mul(x, x);
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = mul(hare, x);
    ++lambda;
  }
  std::optional<Element> result;
  if (pow(x, lambda) == one_) {
    const Element y = pow(x, lambda - 1);
    if (mul(x, y) == one_ && mul(y, x) == one_) result = y;
  }
  unit_cache_[x].store(result ? *result + 2 : 1, std::memory_order_relaxed);
  return result;
}

bool FiniteRing::is_commutative() const {
  const auto gens = additive_generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

const std::vector<Element>& FiniteRing::m_potents(unsigned m) const {
  {
    std::lock_guard lock(list_mutex_);
    auto it = m_potent_lists_.find(m);
    if (it != m_potent_lists_.end()) return *it->second;
  }
  auto list = std::make_shared<std::vector<Element>>();
  for (std::size_t i = 0; i < size_; ++i)
    if (is_m_potent(static_cast<Element>(i), m)) list->push_back(static_cast<Element>(i));
  std::lock_guard lock(list_mutex_);
  auto [it, inserted] = m_potent_lists_.emplace(m, std::move(list));
  return *it->second;
}

const std::vector<Element>& FiniteRing::nilpotents() const {
  {
    std::lock_guard lock(list_mutex_);
    if (nilpotent_list_) return *nilpotent_list_;
  }
  auto list = std::make_shared<std::vector<Element>>();
  for (std::size_t i = 0; i < size_; ++i)
    if (is_nilpotent(static_cast<Element>(i))) list->push_back(static_cast<Element>(i));
  std::lock_guard lock(list_mutex_);
  if (!nilpotent_list_) nilpotent_list_ = std::move(list);
  return *nilpotent_list_;
}

// ---------------------------------------------------------------------------

ZnRing::ZnRing(std::uint32_t n) : FiniteRing(n, n == 1 ? 0 : 1, "Z" + std::to_string(n)), n_(n) {}

std::vector<Element> ZnRing::additive_generators() const {
  if (n_ == 1) return {};
  return {1};
}

std::shared_ptr<const ZnRing> make_zn(std::uint32_t n) {
  if (n == 0) throw PreconditionError("modulus must be >= 1");
  return std::make_shared<const ZnRing>(n);
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficient i = x^i; trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if ((static_cast<std::uint64_t>(a) * b) % p == 1) return b;
  return 0;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = (static_cast<std::uint64_t>(a.back()) * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (factor * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

bool has_factor_of_degree(const Poly& f, std::size_t d, std::uint32_t p) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly g(d + 1, 0);
    std::uint64_t t = v;
    for (std::size_t i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    g[d] = 1;
    if (poly_mod(f, g, p).empty()) return true;
  }
  return false;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k)
    : FiniteRing(
          [&] {
            std::size_t q = 1;
            for (std::uint32_t i = 0; i < k; ++i) q *= p;
            return q;
          }(),
          1, k == 1 ? "GF" + std::to_string(p) : "GF" + std::to_string(p) + "^" + std::to_string(k)),
      p_(p),
      k_(k) {
  for (std::uint64_t v = 0; v < size(); ++v) {
    Poly f(k + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[k] = 1;
    bool irreducible = true;
    for (std::size_t d = 1; d <= k / 2 && irreducible; ++d)
      if (has_factor_of_degree(f, d, p)) irreducible = false;
    if (irreducible) {
      modulus_.assign(f.begin(), f.begin() + k);
      break;
    }
  }
  if (size() <= 256) {
    mul_table_.resize(size() * size());
    for (Element a = 0; a < size(); ++a)
      for (Element b = 0; b < size(); ++b) mul_table_[a * size() + b] = mul_poly(a, b);
  }
}

std::vector<std::uint32_t> GaloisField::digits(Element x) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Element GaloisField::encode(const std::vector<std::uint32_t>& d) const {
  Element x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
  return x;
}

Element GaloisField::add(Element a, Element b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

Element GaloisField::neg(Element a) const {
  auto d = digits(a);
  for (auto& c : d) c = (p_ - c) % p_;
  return encode(d);
}

Element GaloisField::mul(Element a, Element b) const {
  if (!mul_table_.empty()) return mul_table_[a * size() + b];
  return mul_poly(a, b);
}

Element GaloisField::mul_poly(Element a, Element b) const {
  const auto da = digits(a), db = digits(b);
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  Poly m(modulus_.begin(), modulus_.end());
  m.push_back(1);
  Poly r = poly_mod(prod, m, p_);
  r.resize(k_, 0);
  return encode(r);
}

std::string GaloisField::format(Element x) const {
  if (k_ == 1) return std::to_string(x);
  const auto d = digits(x);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Element> GaloisField::additive_generators() const {
  std::vector<Element> gens;
  Element e = 1;
  for (std::uint32_t i = 0; i < k_; ++i, e *= p_) gens.push_back(e);
  return gens;
}

std::shared_ptr<const GaloisField> make_gf(std::uint32_t p, std::uint32_t k, const Limits& limits) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (k == 0) throw PreconditionError("field degree must be >= 1");
  std::size_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > limits.max_elements) throw ResourceError("max_elements", limits.max_elements, q);
  }
  return std::make_shared<const GaloisField>(p, k);
}

// ---------------------------------------------------------------------------

TableRing::TableRing(std::size_t size, std::vector<Element> add, std::vector<Element> mul, Element one,
                     std::string label, std::vector<std::string> labels)
    : FiniteRing(size, one, std::move(label)), add_(std::move(add)), mul_(std::move(mul)), labels_(std::move(labels)) {
  if (size == 0) throw ValidationError("ring size", "size must be positive");
  if (add_.size() != size * size || mul_.size() != size * size)
    throw ValidationError("table shape", "tables must have size^2 entries");
  for (Element v : add_)
    if (v >= size) throw ValidationError("table range", "addition entry " + std::to_string(v));
  for (Element v : mul_)
    if (v >= size) throw ValidationError("table range", "multiplication entry " + std::to_string(v));
  if (one >= size) throw ValidationError("table range", "identity index " + std::to_string(one));
  if (!labels_.empty() && labels_.size() != size) throw ValidationError("labels", "need one label per element");
  for (Element a = 0; a < size; ++a)
    if (add_[a] != a || add_[a * size] != a) throw ValidationError("zero law", "index 0 is not additive identity for " + std::to_string(a));
  neg_.assign(size, 0);
  for (Element a = 0; a < size; ++a) {
    bool found = false;
    for (Element b = 0; b < size && !found; ++b) {
      if (add_[a * size + b] == 0) {
        neg_[a] = b;
        found = true;
      }
    }
    if (!found) throw ValidationError("additive inverse", "no negative for " + std::to_string(a));
  }
}

std::string TableRing::format(Element x) const { return labels_.empty() ? std::to_string(x) : labels_[x]; }

// ---------------------------------------------------------------------------

namespace {

std::size_t checked_product(const std::vector<RingPtr>& factors, const Limits& limits) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->size();
    if (n > limits.max_elements) throw ResourceError("max_elements", limits.max_elements, n);
  }
  return n;
}

Element product_one(const std::vector<RingPtr>& factors) {
  Element one = 0;
  std::size_t stride = 1;
  for (const auto& f : factors) {
    one += static_cast<Element>(f->one() * stride);
    stride *= f->size();
  }
  return one;
}

std::string product_label(const std::vector<RingPtr>& factors) {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " x ") + f->label();
  return s;
}

}  // namespace

ProductRing::ProductRing(std::vector<RingPtr> factors, const Limits& limits)
    : FiniteRing(checked_product(factors, limits), product_one(factors), product_label(factors)),
      factors_(std::move(factors)) {
  std::size_t stride = 1;
  for (const auto& f : factors_) {
    strides_.push_back(stride);
    stride *= f->size();
  }
}

Element ProductRing::compose(const std::vector<Element>& coords) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += static_cast<Element>(coords[i] * strides_[i]);
  return x;
}

Element ProductRing::add(Element a, Element b) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x += static_cast<Element>(factors_[i]->add(coordinate(a, i), coordinate(b, i)) * strides_[i]);
  return x;
}

Element ProductRing::mul(Element a, Element b) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x += static_cast<Element>(factors_[i]->mul(coordinate(a, i), coordinate(b, i)) * strides_[i]);
  return x;
}

Element ProductRing::neg(Element a) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x += static_cast<Element>(factors_[i]->neg(coordinate(a, i)) * strides_[i]);
  return x;
}

std::string ProductRing::format(Element x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ", ";
    s += factors_[i]->format(coordinate(x, i));
  }
  return s + ")";
}

std::vector<Element> ProductRing::additive_generators() const {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (Element g : factors_[i]->additive_generators()) gens.push_back(embed(i, g));
  return gens;
}

std::shared_ptr<const ProductRing> product_ring(std::vector<RingPtr> factors, const Limits& limits) {
  if (factors.empty()) throw PreconditionError("product needs at least one factor");
  return std::make_shared<const ProductRing>(std::move(factors), limits);
}

// ---------------------------------------------------------------------------

QuotientRing::QuotientRing(RingPtr parent, std::vector<Element> projection, std::vector<Element> representatives)
    : FiniteRing(representatives.size(), projection[parent->one()], parent->label() + "/I"),
      parent_(std::move(parent)),
      projection_(std::move(projection)),
      representatives_(std::move(representatives)) {}

std::string QuotientRing::format(Element x) const { return "[" + parent_->format(representatives_[x]) + "]"; }

std::vector<Element> QuotientRing::additive_generators() const {
  std::vector<Element> gens;
  for (Element g : parent_->additive_generators()) {
    const Element c = projection_[g];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  return gens;
}

QuotientResult quotient_ring(const RingPtr& ring, const ElementSet& ideal) {
  if (auto violation = two_sided_ideal_violation(*ring, ideal)) {
    throw ValidationError("not a two-sided ideal", *violation);
  }
  const std::size_t n = ring->size();
  constexpr Element unassigned = ~Element{0};
  std::vector<Element> projection(n, unassigned);
  std::vector<Element> reps;
  const auto members = ideal.to_vector();
  for (Element x = 0; x < n; ++x) {
    if (projection[x] != unassigned) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element i : members) projection[ring->add(x, i)] = c;
  }
  auto q = std::make_shared<const QuotientRing>(ring, projection, std::move(reps));
  return {std::move(q), std::move(projection)};
}

// ---------------------------------------------------------------------------

namespace {

Element local_one(const RingPtr& parent, const std::vector<Element>& elems) {
  auto it = std::lower_bound(elems.begin(), elems.end(), parent->one());
  if (it == elems.end() || *it != parent->one()) throw ValidationError("subring identity", "1 is not in the subset");
  return static_cast<Element>(it - elems.begin());
}

}  // namespace

SubRing::SubRing(RingPtr parent, const ElementSet& elements, std::string label)
    : SubRing(std::move(parent), elements.to_vector(), std::move(label)) {}

SubRing::SubRing(RingPtr parent, std::vector<Element> elems, std::string label)
    : FiniteRing(elems.size(), local_one(parent, elems), std::move(label)),
      parent_(std::move(parent)),
      elements_(std::move(elems)) {
  for (Element i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<Element> SubRing::from_parent(Element y) const {
  auto it = index_.find(y);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element SubRing::local(Element y) const {
  auto it = index_.find(y);
  if (it == index_.end()) throw ValidationError("subring closure", parent_->format(y) + " left the subring");
  return it->second;
}

std::shared_ptr<const SubRing> make_subring(const RingPtr& ring, const ElementSet& elements, std::string label) {
  if (!elements.contains(0)) throw ValidationError("subring closure", "0 is missing");
  if (!elements.contains(ring->one())) throw ValidationError("subring identity", "1 is missing");
  const auto list = elements.to_vector();
  const auto gens = subgroup_generators(*ring, elements);
  if (additive_closure(*ring, gens).size() != elements.size())
    throw ValidationError("subring closure", "not an additive subgroup");
  for (Element a : gens) {
    for (Element b : gens) {
      if (!elements.contains(ring->mul(a, b))) {
        throw ValidationError("subring closure",
                              ring->format(a) + " * " + ring->format(b) + " = " + ring->format(ring->mul(a, b)));
      }
    }
  }
  return std::make_shared<const SubRing>(ring, elements, std::move(label));
}

// ---------------------------------------------------------------------------

NilpotencyResult is_nilpotent(const FiniteRing& ring, Element x) {
  auto index = ring.nilpotency_index(x);
  return {index.has_value(), index};
}

bool is_m_potent(const FiniteRing& ring, Element x, unsigned m) {
  if (m < 2) throw PreconditionError("m must be >= 2");
  return ring.is_m_potent(x, m);
}

UnitResult is_unit(const FiniteRing& ring, Element x) {
  auto inv = ring.inverse(x);
  return {inv.has_value(), inv};
}

ElementClass classify(const FiniteRing& ring, Element x, const std::vector<unsigned>& ms) {
  ElementClass c;
  c.nilpotency_index = ring.nilpotency_index(x);
  c.is_nilpotent = c.nilpotency_index.has_value();
  c.inverse = ring.inverse(x);
  c.is_unit = c.inverse.has_value();
  for (unsigned m : ms) c.m_potent_for.emplace_back(m, is_m_potent(ring, x, m));
  return c;
}

ElementSet additive_closure(const FiniteRing& ring, const std::vector<Element>& generators) {
  ElementSet span(ring.size());
  span.insert(0);
  std::vector<Element> members{0};
  for (Element g : generators) {
    if (span.contains(g)) continue;
    const std::vector<Element> base = members;
    Element t = g;
    while (!span.contains(t)) {
      for (Element e : base) {
        const Element s = ring.add(e, t);
        if (span.insert(s)) members.push_back(s);
      }
      t = ring.add(t, g);
    }
  }
  return span;
}

ElementSet subgroup_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  ElementSet result = a;
  const auto base = a.to_vector();
  b.for_each([&](Element y) {
    if (result.contains(y)) return;
    for (Element x : base) result.insert(ring.add(x, y));
  });
  return result;
}

std::vector<Element> subgroup_generators(const FiniteRing& ring, const ElementSet& subgroup) {
  std::vector<Element> gens;
  ElementSet span(ring.size());
  span.insert(0);
  std::vector<Element> members{0};
  subgroup.for_each([&](Element x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    const std::vector<Element> base = members;
    Element t = x;
    while (!span.contains(t)) {
      for (Element e : base) {
        const Element s = ring.add(e, t);
        if (span.insert(s)) members.push_back(s);
      }
      t = ring.add(t, x);
    }
  });
  return gens;
}

namespace {

std::string fmt3(const FiniteRing& r, const char* shape, Element a, Element b, Element c) {
  std::ostringstream os;
  os << shape << " with a=" << r.format(a) << ", b=" << r.format(b) << ", c=" << r.format(c);
  return os.str();
}

}  // namespace

bool verify_ring_axioms(const FiniteRing& ring, const Limits& limits) {
  const std::size_t n = ring.size();
  const bool exhaustive = n <= 1 || (n <= (std::size_t{1} << 21) && n * n * n <= limits.axiom_budget);
  if (exhaustive) {
    for (Element a = 0; a < n; ++a) {
      if (ring.add(a, 0) != a) throw ValidationError("additive identity", ring.format(a));
      if (ring.add(a, ring.neg(a)) != 0) throw ValidationError("additive inverse", ring.format(a));
      if (ring.mul(ring.one(), a) != a || ring.mul(a, ring.one()) != a)
        throw ValidationError("multiplicative identity", ring.format(a));
      for (Element b = 0; b < n; ++b) {
        if (ring.add(a, b) != ring.add(b, a)) throw ValidationError("additive commutativity", ring.format(a) + ", " + ring.format(b));
        for (Element c = 0; c < n; ++c) {
          if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
            throw ValidationError("additive associativity", fmt3(ring, "(a+b)+c", a, b, c));
          if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
            throw ValidationError("associativity", fmt3(ring, "(ab)c", a, b, c));
          if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
            throw ValidationError("left distributivity", fmt3(ring, "a(b+c)", a, b, c));
          if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
            throw ValidationError("right distributivity", fmt3(ring, "(a+b)c", a, b, c));
        }
      }
    }
    return true;
  }
  if (!ring.biadditive_by_construction()) throw ResourceError("axiom_budget", limits.axiom_budget, n * n * n);
  const auto gens = ring.additive_generators();
  if (additive_closure(ring, gens).size() != n)
    throw ValidationError("additive generators", "declared generators do not span the ring");
  for (Element a : gens) {
    if (ring.add(a, ring.neg(a)) != 0) throw ValidationError("additive inverse", ring.format(a));
    if (ring.mul(ring.one(), a) != a || ring.mul(a, ring.one()) != a)
      throw ValidationError("multiplicative identity", ring.format(a));
    for (Element b : gens) {
      if (ring.add(a, b) != ring.add(b, a)) throw ValidationError("additive commutativity", ring.format(a) + ", " + ring.format(b));
      for (Element c : gens) {
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
          throw ValidationError("associativity", fmt3(ring, "(ab)c", a, b, c));
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
          throw ValidationError("left distributivity", fmt3(ring, "a(b+c)", a, b, c));
      }
    }
  }
  return false;
}

std::optional<std::string> right_ideal_violation(const FiniteRing& ring, const ElementSet& set) {
  if (!set.contains(0)) return "0 is missing";
  const auto gens = subgroup_generators(ring, set);
  if (additive_closure(ring, gens).size() != set.size()) return "not closed under addition";
  const auto ring_gens = ring.additive_generators();
  for (Element a : gens)
    for (Element r : ring_gens)
      if (!set.contains(ring.mul(a, r))) return "right multiple " + ring.format(a) + " * " + ring.format(r) + " escapes";
  return std::nullopt;
}

std::optional<std::string> two_sided_ideal_violation(const FiniteRing& ring, const ElementSet& set) {
  if (auto v = right_ideal_violation(ring, set)) return v;
  const auto gens = subgroup_generators(ring, set);
  for (Element a : gens)
    for (Element r : ring.additive_generators())
      if (!set.contains(ring.mul(r, a))) return "left multiple " + ring.format(r) + " * " + ring.format(a) + " escapes";
  return std::nullopt;
}

ElementSet jacobson_radical(const FiniteRing& ring, const Limits& limits) {
  const std::size_t n = ring.size();
  if (n > limits.max_radical_elements) throw ResourceError("max_radical_elements", limits.max_radical_elements, n);
  ElementSet radical(n);
  for (Element z = 0; z < n; ++z) {
    bool member = true;
    for (Element x = 0; x < n && member; ++x) member = ring.is_unit(ring.sub(ring.one(), ring.mul(x, z)));
    if (member) radical.insert(z);
  }
  if (auto v = two_sided_ideal_violation(ring, radical)) throw ValidationError("radical is not an ideal", *v);
  return radical;
}

bool is_nil_set(const FiniteRing& ring, const ElementSet& set) {
  bool nil = true;
  set.for_each([&](Element x) { nil = nil && ring.is_nilpotent(x); });
  return nil;
}

std::optional<unsigned> ideal_nilpotency_index(const FiniteRing& ring, const ElementSet& ideal) {
  const auto ideal_gens = subgroup_generators(ring, ideal);
  ElementSet power = ideal;
  for (unsigned k = 1;; ++k) {
    if (power.size() == 1) return k;
    std::vector<Element> products;
    for (Element a : subgroup_generators(ring, power))
      for (Element b : ideal_gens) products.push_back(ring.mul(a, b));
    ElementSet next = additive_closure(ring, products);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
}

std::optional<Element> find_element(const FiniteRing& ring, std::string_view text) {
  for (Element x = 0; x < ring.size(); ++x)
    if (ring.format(x) == text) return x;
  return std::nullopt;
}

}  // namespace nilgrade
