#pragma once

#include <stdexcept>
#include <string>

namespace homtwist {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  /// Stable machine-readable error kind (e.g. "DimensionMismatch").
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct BadRational : Error {
  explicit BadRational(const std::string& what) : Error("BadRational", what) {}
};

struct UnknownAxiom : Error {
  explicit UnknownAxiom(const std::string& what) : Error("UnknownAxiom", what) {}
};

struct NotAnEndomorphism : Error {
  explicit NotAnEndomorphism(const std::string& what) : Error("NotAnEndomorphism", what) {}
};

struct InvalidComodule : Error {
  explicit InvalidComodule(const std::string& what) : Error("InvalidComodule", what) {}
};

struct CompatibilityFailure : Error {
  explicit CompatibilityFailure(const std::string& what) : Error("CompatibilityFailure", what) {}
};

struct InvalidClassicalBundle : Error {
  explicit InvalidClassicalBundle(const std::string& what) : Error("InvalidClassicalBundle", what) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& what) : Error("NotAGroup", what) {}
};

struct GradingViolation : Error {
  explicit GradingViolation(const std::string& what) : Error("GradingViolation", what) {}
};

struct NoUnit : Error {
  explicit NoUnit(const std::string& what) : Error("NoUnit", what) {}
};

struct SearchSpaceTooLarge : Error {
  explicit SearchSpaceTooLarge(const std::string& what) : Error("SearchSpaceTooLarge", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error("SchemaError", what) {}
};

}  // namespace homtwist
