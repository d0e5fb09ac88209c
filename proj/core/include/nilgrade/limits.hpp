#pragma once

#include <cstddef>

namespace nilgrade {

/// Resource caps. Exceeding one raises ResourceError instead of running
/// unbounded.
struct Limits {
  /// Largest ring any construction may build.
  std::size_t max_elements = std::size_t{1} << 20;
  /// Largest number of distinct homogeneous right ideals enumerated.
  std::size_t max_ideals = 20000;
  /// Largest ring on which quadratic-time radical computations run.
  std::size_t max_radical_elements = 4096;
  /// Largest number of triples checked exhaustively for ring axioms.
  std::size_t axiom_budget = std::size_t{1} << 24;
  /// Largest ring on which per-element checks quantify over every element
  /// (instead of only the homogeneous ones).
  std::size_t max_elementwise = 1024;
};

}  // namespace nilgrade
