#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace betti {

/// Failure categories surfaced to callers and to the CLI error object.
enum class ErrorKind {
  InvalidArgument,   // precondition on an argument violated
  Parse,             // malformed ideal text, JSON or table
  NotEquigenerated,  // conjecture-level drivers need a single generator degree
  NotInCone,         // greedy elimination hit a non Boij-Soderberg diagram
  TemplateMismatch,  // candidate families are not affine in k
  NotCyclic,         // diagram is not that of a cyclic quotient
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::NotEquigenerated: return "not_equigenerated";
    case ErrorKind::NotInCone: return "not_in_cone";
    case ErrorKind::TemplateMismatch: return "template_mismatch";
    case ErrorKind::NotCyclic: return "not_cyclic";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace betti
