#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilgrade {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable size cap was exceeded. `partial` carries how far the
/// computation got (element count, ideal count, ...) when known.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap, std::size_t limit, std::size_t partial = 0)
      : Error("resource cap '" + cap + "' exceeded (limit " + std::to_string(limit) +
              (partial ? ", reached " + std::to_string(partial) : std::string()) + ")"),
        cap_(std::move(cap)),
        limit_(limit),
        partial_(partial) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t partial_;
};

/// An algebraic law failed; `law` names it and `witness` renders the
/// offending elements.
class ValidationError : public Error {
 public:
  ValidationError(std::string law, std::string witness)
      : Error(law + ": " + witness), law_(std::move(law)), witness_(std::move(witness)) {}

  const std::string& law() const noexcept { return law_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::string witness_;
};

/// A hypothesis of an operation does not hold for the given input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::string hypothesis)
      : Error("precondition violated: " + hypothesis), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace nilgrade
