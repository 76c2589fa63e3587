#pragma once

#include <stdexcept>
#include <string>

namespace polydiff {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDivisorError : Error {
  ZeroDivisorError() : Error("division by the zero polynomial") {}
};

struct MixedRadicandError : Error {
  MixedRadicandError(unsigned a, unsigned b)
      : Error("cannot combine values from Q(sqrt(" + std::to_string(a) +
              ")) and Q(sqrt(" + std::to_string(b) + "))") {}
};

struct BadRadicandError : Error {
  explicit BadRadicandError(unsigned d)
      : Error("radicand must be a squarefree positive integer, got " +
              std::to_string(d)) {}
};

struct ClosureCapExceededError : Error {
  explicit ClosureCapExceededError(std::size_t cap)
      : Error("group closure exceeded " + std::to_string(cap) +
              " elements; generator set is wrong or non-finite") {}
};

struct UnsupportedOrderError : Error {
  explicit UnsupportedOrderError(const std::string& what) : Error(what) {}
};

struct IrrationalSeriesError : Error {
  IrrationalSeriesError()
      : Error("Molien series has irrational coefficients; "
              "group construction is inconsistent") {}
};

struct UnknownInvariantError : Error {
  explicit UnknownInvariantError(const std::string& name)
      : Error("unknown invariant: " + name) {}
};

struct UnknownModelError : Error {
  explicit UnknownModelError(const std::string& name)
      : Error("unknown model: " + name) {}
};

struct UnknownCoverError : Error {
  UnknownCoverError(const std::string& a, const std::string& b)
      : Error("no cover map catalogued for " + a + " -> " + b) {}
};

struct DegreeViolationError : Error {
  explicit DegreeViolationError(const std::string& what) : Error(what) {}
};

struct FiltrationViolationError : Error {
  explicit FiltrationViolationError(const std::string& what) : Error(what) {}
};

struct LowAcceptanceError : Error {
  explicit LowAcceptanceError(double rate)
      : Error("rejection sampling acceptance rate " + std::to_string(rate) +
              " below 1e-4; bounding box does not fit the domain") {}
};

struct ConvergenceFailureError : Error {
  explicit ConvergenceFailureError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace polydiff
