#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nilgrade {

using Element = std::uint32_t;

/// Subset of a ring's element universe {0, ..., universe-1}, stored as a
/// bitmask. Iteration is in ascending element order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, const std::vector<Element>& elements) : ElementSet(universe) {
    for (Element e : elements) insert(e);
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

  /// Returns true when the element was not already present.
  bool insert(Element e) {
    auto& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(count_);
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i] = words_[i] & other.words_[i];
      out.count_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.count_ == b.count_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the ascending element lists; gives a
  /// deterministic ordering of families of sets.
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.to_vector() < b.to_vector(); }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace nilgrade
