#pragma once

#include <stdexcept>
#include <string>

namespace ellgen {

/// Mathematical failure: a pole, a missing limit, a non-invertible leading term.
/// The CLI maps these to exit code 3.
class MathError : public std::runtime_error {
 public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Input that parses but violates a model invariant (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Malformed configuration text (exit code 4).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("ParseError: line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

#define ELLGEN_MATH_ERROR(Name)                                              \
  class Name : public MathError {                                            \
   public:                                                                   \
    explicit Name(const std::string& what) : MathError(#Name, what) {}       \
  };

ELLGEN_MATH_ERROR(PoleAtOne)
ELLGEN_MATH_ERROR(NonUnitLeadingTerm)
ELLGEN_MATH_ERROR(LogCanonicalPole)
ELLGEN_MATH_ERROR(ZeroArgument)
ELLGEN_MATH_ERROR(SingularIntersectionMatrix)
ELLGEN_MATH_ERROR(VeysHypothesisViolated)
ELLGEN_MATH_ERROR(TDependence)
ELLGEN_MATH_ERROR(InvalidTau)
ELLGEN_MATH_ERROR(OutOfRange)

#undef ELLGEN_MATH_ERROR

class InvalidPoint : public ValidationError {
 public:
  explicit InvalidPoint(const std::string& what) : ValidationError("InvalidPoint", what) {}
};

}  // namespace ellgen
