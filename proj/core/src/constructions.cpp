#include "nilgrade/constructions.hpp"

#include <set>
#include <sstream>

#include "nilgrade/errors.hpp"

namespace nilgrade {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, const Limits& limits) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && n > limits.max_elements / base) throw ResourceError("max_elements", limits.max_elements);
    n *= base;
  }
  if (n > limits.max_elements) throw ResourceError("max_elements", limits.max_elements, n);
  return n;
}

std::size_t matrix_digits(std::size_t n, bool upper) { return upper ? n * (n + 1) / 2 : n * n; }

Element identity_matrix(const FiniteRing& base, std::size_t n, bool upper) {
  // Diagonal entries are always allowed; compute their digit positions.
  Element one = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = upper ? i : 0; j < n; ++j) {
      if (i == j) one += static_cast<Element>(base.one() * stride);
      stride *= base.size();
    }
  return one;
}

}  // namespace

MatrixRing::MatrixRing(RingPtr base, std::size_t n, bool upper_triangular, const Limits& limits)
    : FiniteRing(checked_power(base->size(), matrix_digits(n, upper_triangular), limits),
                 identity_matrix(*base, n, upper_triangular),
                 std::string(upper_triangular ? "T" : "M") + std::to_string(n) + "(" + base->label() + ")"),
      base_(std::move(base)),
      n_(n),
      upper_(upper_triangular),
      slot_(n * n, -1) {
  if (n == 0) throw PreconditionError("matrix size must be positive");
  std::size_t stride = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = upper_ ? i : 0; j < n; ++j) {
      slot_[i * n + j] = static_cast<int>(positions_.size());
      positions_.push_back(i * n + j);
      strides_.push_back(stride);
      stride *= base_->size();
    }
}

Element MatrixRing::entry(Element x, std::size_t i, std::size_t j) const {
  const int s = slot_[i * n_ + j];
  if (s < 0) return 0;
  return static_cast<Element>((x / strides_[static_cast<std::size_t>(s)]) % base_->size());
}

std::vector<Element> MatrixRing::entries(Element x) const {
  std::vector<Element> out(n_ * n_, 0);
  const std::size_t q = base_->size();
  for (std::size_t d = 0; d < positions_.size(); ++d) {
    out[positions_[d]] = static_cast<Element>(x % q);
    x = static_cast<Element>(x / q);
  }
  return out;
}

Element MatrixRing::from_entries(const std::vector<Element>& entries) const {
  if (entries.size() != n_ * n_) throw PreconditionError("expected " + std::to_string(n_ * n_) + " matrix entries");
  Element x = 0;
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (entries[p] >= base_->size()) throw PreconditionError("matrix entry out of range");
    const int s = slot_[p];
    if (s < 0) {
      if (entries[p] != 0) throw PreconditionError("nonzero entry below the diagonal of a triangular matrix");
      continue;
    }
    x += static_cast<Element>(entries[p] * strides_[static_cast<std::size_t>(s)]);
  }
  return x;
}

Element MatrixRing::unit_matrix(std::size_t i, std::size_t j, Element b) const {
  const int s = slot_[i * n_ + j];
  if (s < 0) throw PreconditionError("position outside the allowed pattern");
  return static_cast<Element>(b * strides_[static_cast<std::size_t>(s)]);
}

Element MatrixRing::add(Element a, Element b) const {
  const std::size_t q = base_->size();
  Element x = 0;
  for (std::size_t d = 0; d < positions_.size(); ++d) {
    x += static_cast<Element>(base_->add(static_cast<Element>(a % q), static_cast<Element>(b % q)) * strides_[d]);
    a = static_cast<Element>(a / q);
    b = static_cast<Element>(b / q);
  }
  return x;
}

Element MatrixRing::neg(Element a) const {
  const std::size_t q = base_->size();
  Element x = 0;
  for (std::size_t d = 0; d < positions_.size(); ++d) {
    x += static_cast<Element>(base_->neg(static_cast<Element>(a % q)) * strides_[d]);
    a = static_cast<Element>(a / q);
  }
  return x;
}

Element MatrixRing::mul(Element a, Element b) const {
  const auto ea = entries(a);
  const auto eb = entries(b);
  const FiniteRing& r = *base_;
  Element x = 0;
  for (std::size_t d = 0; d < positions_.size(); ++d) {
    const std::size_t i = positions_[d] / n_;
    const std::size_t j = positions_[d] % n_;
    Element s = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const Element u = ea[i * n_ + k];
      const Element v = eb[k * n_ + j];
      if (u != 0 && v != 0) s = r.add(s, r.mul(u, v));
    }
    x += static_cast<Element>(s * strides_[d]);
  }
  return x;
}

std::string MatrixRing::format(Element x) const {
  const auto e = entries(x);
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + base_->format(e[i * n_ + j]);
    s += "]";
  }
  return s + "]";
}

std::vector<Element> MatrixRing::additive_generators() const {
  std::vector<Element> gens;
  const auto base_gens = base_->additive_generators();
  for (std::size_t d = 0; d < positions_.size(); ++d)
    for (Element g : base_gens) gens.push_back(static_cast<Element>(g * strides_[d]));
  return gens;
}

// ---------------------------------------------------------------------------

namespace {

void check_sigma(const Grading& base, std::size_t n, const SigmaVector& sigma) {
  if (n == 0) throw PreconditionError("matrix size must be positive");
  if (sigma.size() != n)
    throw PreconditionError("sigma has " + std::to_string(sigma.size()) + " entries, expected " + std::to_string(n));
  for (Degree g : sigma)
    if (!base.group().contains(g)) throw PreconditionError("sigma entry " + std::to_string(g.value) + " is not in the grading group");
}

Grading graded_matrices(const Grading& base, std::size_t n, const SigmaVector& sigma, bool upper,
                        const Limits& limits) {
  check_sigma(base, n, sigma);
  auto ring = std::make_shared<const MatrixRing>(base.ring_ptr(), n, upper, limits);
  const GradingGroup& group = base.group();
  // Entry (i, j) of R_d-type sits in degree g_i^-1 d g_j.
  std::map<Degree, std::vector<Element>> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = upper ? i : 0; j < n; ++j)
      for (const auto& c : base.components()) {
        const Degree lambda = group.multiply(group.multiply(group.inverse(sigma[i]), c.degree), sigma[j]);
        auto& dst = gens[lambda];
        for (Element g : c.generators) dst.push_back(ring->unit_matrix(i, j, g));
      }
  ComponentGenerators list(gens.begin(), gens.end());
  return Grading::verify(ring, group, list, limits);
}

}  // namespace

Grading matrix_graded(const Grading& base, std::size_t n, const SigmaVector& sigma, const Limits& limits) {
  return graded_matrices(base, n, sigma, false, limits);
}

Grading diagonal_z_grading(const RingPtr& ring, std::size_t n, const Limits& limits) {
  const Grading base = Grading::trivial(ring, GradingGroup::integers(), limits);
  SigmaVector sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back(Degree{static_cast<std::int64_t>(i)});
  return graded_matrices(base, n, sigma, false, limits);
}

TriangularResult triangular_graded(const Grading& base, std::size_t n, const SigmaVector& sigma,
                                   const Limits& limits) {
  Grading g = graded_matrices(base, n, sigma, true, limits);
  const auto& m = static_cast<const MatrixRing&>(g.ring());
  std::vector<Element> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (Element b : m.base().additive_generators()) gens.push_back(m.unit_matrix(i, j, b));
  ElementSet ideal = additive_closure(m, gens);
  return {std::move(g), std::move(ideal)};
}

// ---------------------------------------------------------------------------

std::string to_string(GroupRingMode mode) {
  return mode == GroupRingMode::paper_twisted ? "paper_twisted" : "standard";
}

GroupRingRing::GroupRingRing(const Grading& base, FiniteGroup group, GroupRingMode mode, const Limits& limits)
    : FiniteRing(checked_power(base.ring().size(), group.order(), limits), base.ring().one(),
                 base.ring().label() + "[" + (group.label().empty() ? "G" : group.label()) + "]"),
      base_(base.ring_ptr()),
      group_(std::move(group)),
      mode_(mode) {
  if (!base.group().is_finite() || !(base.group().finite_group() == group_))
    throw PreconditionError("group ring base must be graded by the group itself");
  std::size_t stride = 1;
  for (std::size_t h = 0; h < group_.order(); ++h) {
    strides_.push_back(stride);
    stride *= base_->size();
  }
  parts_.resize(base_->size());
  for (Element b = 0; b < base_->size(); ++b)
    for (const auto& [d, part] : base.decompose(b))
      parts_[b].emplace_back(static_cast<FiniteGroup::Index>(d.value), part);
}

Element GroupRingRing::augmentation(Element x) const {
  Element s = 0;
  for (FiniteGroup::Index h = 0; h < group_.order(); ++h) s = base_->add(s, coefficient(x, h));
  return s;
}

Element GroupRingRing::add(Element a, Element b) const {
  Element x = 0;
  for (FiniteGroup::Index h = 0; h < group_.order(); ++h)
    x += monomial(base_->add(coefficient(a, h), coefficient(b, h)), h);
  return x;
}

Element GroupRingRing::neg(Element a) const {
  Element x = 0;
  for (FiniteGroup::Index h = 0; h < group_.order(); ++h) x += monomial(base_->neg(coefficient(a, h)), h);
  return x;
}

Element GroupRingRing::mul(Element a, Element b) const {
  const std::size_t order = group_.order();
  std::vector<Element> acc(order, 0);
  for (FiniteGroup::Index x = 0; x < order; ++x) {
    const Element ca = coefficient(a, x);
    if (ca == 0) continue;
    for (FiniteGroup::Index y = 0; y < order; ++y) {
      const Element cb = coefficient(b, y);
      if (cb == 0) continue;
      if (mode_ == GroupRingMode::standard) {
        auto& slot = acc[group_.multiply(x, y)];
        slot = base_->add(slot, base_->mul(ca, cb));
        continue;
      }
      for (const auto& [d, part] : parts_[cb]) {
        const auto target = group_.multiply(group_.multiply(group_.multiply(group_.inverse(d), x), d), y);
        acc[target] = base_->add(acc[target], base_->mul(ca, part));
      }
    }
  }
  Element out = 0;
  for (FiniteGroup::Index h = 0; h < order; ++h) out += monomial(acc[h], h);
  return out;
}

std::string GroupRingRing::format(Element x) const {
  std::string s;
  for (FiniteGroup::Index h = 0; h < group_.order(); ++h) {
    const Element c = coefficient(x, h);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    s += "(" + base_->format(c) + ")g" + std::to_string(h);
  }
  return s.empty() ? "0" : s;
}

std::vector<Element> GroupRingRing::additive_generators() const {
  std::vector<Element> gens;
  const auto base_gens = base_->additive_generators();
  for (FiniteGroup::Index h = 0; h < group_.order(); ++h)
    for (Element g : base_gens) gens.push_back(monomial(g, h));
  return gens;
}

GroupRingResult group_ring_graded(const Grading& base, const FiniteGroup& group, GroupRingMode mode,
                                  const Limits& limits) {
  auto ring = std::make_shared<const GroupRingRing>(base, group, mode, limits);
  verify_ring_axioms(*ring, limits);
  const GradingGroup& gg = base.group();
  // (RG)_g = sum_h R_{g h^-1} h, i.e. R_d placed at h lands in degree d h.
  std::map<Degree, std::vector<Element>> gens;
  for (FiniteGroup::Index h = 0; h < group.order(); ++h)
    for (const auto& c : base.components()) {
      auto& dst = gens[gg.multiply(c.degree, Degree{h})];
      for (Element g : c.generators) dst.push_back(ring->monomial(g, h));
    }
  ComponentGenerators list(gens.begin(), gens.end());
  Grading g = Grading::verify(ring, gg, list, limits);
  return {std::move(g), mode, {{mode, true, {}}}};
}

GroupRingResult group_ring_graded_auto(const Grading& base, const FiniteGroup& group, const Limits& limits) {
  std::vector<ModeOutcome> outcomes;
  for (GroupRingMode mode : {GroupRingMode::paper_twisted, GroupRingMode::standard}) {
    try {
      auto result = group_ring_graded(base, group, mode, limits);
      outcomes.push_back({mode, true, {}});
      result.outcomes = outcomes;
      return result;
    } catch (const ValidationError& e) {
      outcomes.push_back({mode, false, e.what()});
    }
  }
  std::string detail;
  for (const auto& o : outcomes) detail += (detail.empty() ? "" : "; ") + to_string(o.mode) + ": " + o.detail;
  throw ValidationError("group ring grading", detail);
}

AugmentationIdeal augmentation_ideal(const Grading& group_ring) {
  const auto* rg = dynamic_cast<const GroupRingRing*>(&group_ring.ring());
  if (!rg) throw PreconditionError("augmentation ideal needs a group ring");
  ElementSet kernel(rg->size());
  for (Element x = 0; x < rg->size(); ++x)
    if (rg->augmentation(x) == 0) kernel.insert(x);
  return {kernel, ideal_nilpotency_index(*rg, kernel)};
}

// ---------------------------------------------------------------------------

AmalgamationResult amalgamation(const AmalgamationSpec& spec, const Limits& limits) {
  const FiniteRing& a = spec.a.ring();
  const FiniteRing& b = spec.b.ring();
  if (!(spec.a.group() == spec.b.group())) throw PreconditionError("A and B must be graded by the same group");
  if (!a.is_commutative()) throw PreconditionError("A is not commutative");
  if (!b.is_commutative()) throw PreconditionError("B is not commutative");
  const auto& f = spec.f;
  if (f.size() != a.size()) throw ValidationError("homomorphism", "map has " + std::to_string(f.size()) + " entries, |A| = " + std::to_string(a.size()));
  for (Element x = 0; x < a.size(); ++x)
    if (f[x] >= b.size()) throw ValidationError("homomorphism", "image of " + a.format(x) + " out of range");
  if (f[a.one()] != b.one()) throw ValidationError("homomorphism", "f(1) = " + b.format(f[a.one()]));
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y]))
        throw ValidationError("homomorphism", "f(" + a.format(x) + " + " + a.format(y) + ") is not additive");
      if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
        throw ValidationError("homomorphism", "f(" + a.format(x) + " * " + a.format(y) + ") is not multiplicative");
    }
  for (const auto& c : spec.a.components())
    for (Element x : c.members) {
      const DegreeOf d = spec.b.degree_of(f[x]);
      if (!d.is_zero() && !(d == DegreeOf::of(c.degree)))
        throw ValidationError("graded homomorphism", "f(" + a.format(x) + ") leaves degree " + spec.a.group().format(c.degree));
    }
  if (spec.j.universe() != b.size()) throw ValidationError("ideal", "J is not a subset of B");
  if (auto v = two_sided_ideal_violation(b, spec.j)) throw ValidationError("ideal", *v);
  if (!is_homogeneous_subgroup(spec.b, spec.j)) throw ValidationError("ideal", "J is not homogeneous");

  auto product = product_ring({spec.a.ring_ptr(), spec.b.ring_ptr()}, limits);
  if (a.size() * spec.j.size() > limits.max_elements)
    throw ResourceError("max_elements", limits.max_elements, a.size() * spec.j.size());
  ElementSet members(product->size());
  ElementSet image_set(b.size());
  for (Element x = 0; x < a.size(); ++x)
    spec.j.for_each([&](Element j) {
      const Element y = b.add(f[x], j);
      members.insert(product->compose({x, y}));
      image_set.insert(y);
    });
  auto ring = make_subring(product, members, a.label() + " join^f J");
  auto image_ring = make_subring(spec.b.ring_ptr(), image_set, "f(A)+J");

  std::map<Degree, std::vector<Element>> gens;
  for (const auto& c : spec.a.components())
    for (Element x : c.generators) gens[c.degree].push_back(*ring->from_parent(product->compose({x, f[x]})));
  for (const auto& c : spec.b.components())
    for (Element j : subgroup_generators(b, spec.j.intersect(c.elements)))
      gens[c.degree].push_back(*ring->from_parent(product->compose({0, j})));
  ComponentGenerators list(gens.begin(), gens.end());
  Grading grading = Grading::verify(ring, spec.a.group(), list, limits);
  Grading image = subring_grading(spec.b, image_ring, limits);

  AmalgamationResult result{std::move(grading), std::move(image), {}, {}};
  for (Element x = 0; x < ring->size(); ++x) {
    const Element p = ring->to_parent(x);
    result.project_a.push_back(product->coordinate(p, 0));
    result.project_image.push_back(*image_ring->from_parent(product->coordinate(p, 1)));
  }
  return result;
}

Grading product_grading(const std::vector<Grading>& factors, const Limits& limits) {
  if (factors.empty()) throw PreconditionError("product of no factors");
  std::vector<RingPtr> rings;
  for (const auto& g : factors) {
    if (!(g.group() == factors.front().group())) throw PreconditionError("factors are graded by different groups");
    rings.push_back(g.ring_ptr());
  }
  auto ring = product_ring(rings, limits);
  std::map<Degree, std::vector<Element>> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& c : factors[i].components())
      for (Element g : c.generators) gens[c.degree].push_back(ring->embed(i, g));
  ComponentGenerators list(gens.begin(), gens.end());
  return Grading::verify(ring, factors.front().group(), list, limits);
}

}  // namespace nilgrade
