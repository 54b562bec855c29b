#pragma once
#include <stdexcept>
#include <string>

namespace uhk {

enum class Err {
  DegreeMismatch,
  NoEmbedding,
  NotInvertible,
  InsufficientPrecision,
  NegativeValuation,
  ConstraintViolated,
  ScanExhausted,
  CollisionDetected,
  OutOfBall,
  MembershipFailed,
  ClosureOverflow,
  FieldTooSmall,
  RetryLimit,
  DecompositionFailed,
  NotInK,
  NotOnLine,
  FormulaViolated,
  ContainmentViolated,
  BudgetExceeded,
  LemmaViolated,
  NotIndependent,
  IndependenceFailed,
  InjectivityFailed,
  ConfigError,
  Internal
};

const char* err_name(Err e);

// Single exception type carrying a machine-readable code. Every failed
// invariant in the engine throws this; nothing is reported with tolerances.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Err code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace uhk
