#pragma once

// Brute-force reference computations. They read the ring only through add
// and mul tables captured once, and use none of the library's searches,
// caches or closures.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "nilgrade/errors.hpp"
#include "nilgrade/grading.hpp"

namespace oracle {

using nilgrade::Element;

struct Tables {
  std::size_t n = 0;
  Element one = 0;
  std::vector<Element> add, mul;

  explicit Tables(const nilgrade::FiniteRing& r) : n(r.size()), one(r.one()), add(n * n), mul(n * n) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        add[a * n + b] = r.add(a, b);
        mul[a * n + b] = r.mul(a, b);
      }
  }
  Element plus(Element a, Element b) const { return add[a * n + b]; }
  Element times(Element a, Element b) const { return mul[a * n + b]; }
  Element minus(Element a, Element b) const {
    for (Element c = 0; c < n; ++c)
      if (plus(b, c) == a) return c;
    return 0;
  }
  Element power(Element x, unsigned k) const {
    Element p = one;
    for (unsigned i = 0; i < k; ++i) p = times(p, x);
    return p;
  }
  bool nilpotent(Element x) const {
    Element p = x;
    for (std::size_t i = 0; i <= n; ++i) {
      if (p == 0) return true;
      p = times(p, x);
    }
    return false;
  }
  bool m_potent(Element x, unsigned m) const { return power(x, m) == x; }
  bool unit(Element x) const {
    for (Element y = 0; y < n; ++y)
      if (times(x, y) == one && times(y, x) == one) return true;
    return false;
  }
  bool commute(Element a, Element b) const { return times(a, b) == times(b, a); }
};

/// x = f + n with f^m = f, n nilpotent (commuting if strong), f and n drawn
/// from `allowed` (the whole ring when empty).
inline bool m_nil_clean(const Tables& t, Element x, unsigned m, bool strong,
                        const std::function<bool(Element)>& allowed = {}) {
  for (Element f = 0; f < t.n; ++f) {
    if (allowed && !allowed(f)) continue;
    if (!t.m_potent(f, m)) continue;
    const Element nil = t.minus(x, f);
    if (allowed && !allowed(nil)) continue;
    if (!t.nilpotent(nil)) continue;
    if (strong && !t.commute(f, nil)) continue;
    return true;
  }
  return false;
}

inline bool m_nil_clean_ring(const Tables& t, unsigned m, bool strong = false) {
  for (Element x = 0; x < t.n; ++x)
    if (!m_nil_clean(t, x, m, strong)) return false;
  return true;
}

/// Component index of a homogeneous element, -1 for zero, -2 otherwise,
/// read off the component member lists.
inline int component_of(const nilgrade::Grading& g, Element x) {
  if (x == 0) return -1;
  const auto& comps = g.components();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Element y : comps[c].members)
      if (y == x) return static_cast<int>(c);
  return -2;
}

inline bool homogeneous(const nilgrade::Grading& g, Element x) { return component_of(g, x) != -2; }

/// Graded m-nil clean ring by definition: every homogeneous x is f + n with
/// f, n homogeneous (any degrees).
inline bool graded_m_nil_clean_ring(const nilgrade::Grading& g, unsigned m, bool strong = false) {
  const Tables t(g.ring());
  auto hom = [&](Element y) { return homogeneous(g, y); };
  for (Element x = 0; x < t.n; ++x)
    if (hom(x) && !m_nil_clean(t, x, m, strong, hom)) return false;
  return true;
}

/// J(R) = {x : 1 - r x is a unit for every r}.
inline std::set<Element> jacobson(const Tables& t) {
  std::set<Element> out;
  for (Element x = 0; x < t.n; ++x) {
    bool in = true;
    for (Element r = 0; r < t.n && in; ++r) in = t.unit(t.minus(t.one, t.times(r, x)));
    if (in) out.insert(x);
  }
  return out;
}

/// Every homogeneous right ideal, by testing every subset. Only for rings
/// of at most 16 elements.
inline std::vector<std::uint32_t> homogeneous_right_ideals(const nilgrade::Grading& g) {
  const Tables t(g.ring());
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (1U << t.n) - 1;
  for (std::uint32_t s = 1; s <= full; s += 2) {  // must contain 0
    bool ok = true;
    for (Element a = 0; a < t.n && ok; ++a) {
      if (!(s >> a & 1U)) continue;
      for (Element b = 0; b < t.n && ok; ++b) {
        if ((s >> b & 1U) && !(s >> t.minus(a, b) & 1U)) ok = false;
        if (!(s >> t.times(a, b) & 1U)) ok = false;
      }
    }
    if (!ok) continue;
    // Homogeneous: each member's components are members.
    for (Element a = 0; a < t.n && ok; ++a)
      if (s >> a & 1U)
        for (const auto& [d, part] : g.decompose(a))
          if (!(s >> part & 1U)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::set<Element> graded_jacobson(const nilgrade::Grading& g) {
  const Tables t(g.ring());
  const auto ideals = homogeneous_right_ideals(g);
  const std::uint32_t full = (1U << t.n) - 1;
  std::uint32_t meet = full;
  for (std::uint32_t s : ideals) {
    if (s == full) continue;
    bool maximal = true;
    for (std::uint32_t u : ideals)
      if (u != full && u != s && (u & s) == s) maximal = false;
    if (maximal) meet &= s;
  }
  std::set<Element> out;
  for (Element x = 0; x < t.n; ++x)
    if (meet >> x & 1U) out.insert(x);
  return out;
}

}  // namespace oracle
