#pragma once

#include <stdexcept>
#include <string>

namespace tate {

// Every domain failure carries one of these kinds so callers (and the CLI
// exit-code mapping) can dispatch without string matching.
enum class Err {
  NotAUnit,
  GammaPole,
  DomainError,
  RingMismatch,
  WindowError,
  InvalidSubstitution,
  NotInvertible,
  LeadingNotASquare,
  NotNilpotent,
  AxiomViolation,
  LevelOverflow,
  NonPositiveEigenvalue,
  NotStrict,
  GradingMismatch,
  ParseError,
};

const char* errName(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(errName(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, Err kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace tate
