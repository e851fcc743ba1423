#pragma once

#include <stdexcept>
#include <string>

namespace kleinian {

/// Base class for domain errors. `name()` is the stable identifier the CLI
/// reports (e.g. "ConditionViolated").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message);

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A family row side condition (or the class-D gate) failed during generation.
class ConditionViolated : public Error {
 public:
  ConditionViolated(std::string row_label, std::string condition);

  const std::string& row_label() const noexcept { return row_label_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string row_label_;
  std::string condition_;
};

class InvalidRotation : public Error {
 public:
  explicit InvalidRotation(const std::string& message)
      : Error("InvalidRotation", message) {}
};

class NoCommutator : public Error {
 public:
  explicit NoCommutator(const std::string& message)
      : Error("NoCommutator", message) {}
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(char symbol);
};

class ArityError : public Error {
 public:
  explicit ArityError(const std::string& message)
      : Error("ArityError", message) {}
};

class InvalidExponent : public Error {
 public:
  explicit InvalidExponent(const std::string& message)
      : Error("InvalidExponent", message) {}
};

class MissingSlot : public Error {
 public:
  MissingSlot(const std::string& row_label, const std::string& slot);
};

class GraphError : public Error {
 public:
  explicit GraphError(const std::string& message)
      : Error("GraphError", message) {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& message)
      : Error("OutOfDomain", message) {}
};

class ExpressionError : public Error {
 public:
  explicit ExpressionError(const std::string& message)
      : Error("ExpressionError", message) {}
};

}  // namespace kleinian
