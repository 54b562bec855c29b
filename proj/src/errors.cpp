#include "uhecke/errors.hpp"

namespace uhk {

const char* err_name(Err e) {
  switch (e) {
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::NoEmbedding: return "NoEmbedding";
    case Err::NotInvertible: return "NotInvertible";
    case Err::InsufficientPrecision: return "InsufficientPrecision";
    case Err::NegativeValuation: return "NegativeValuation";
    case Err::ConstraintViolated: return "ConstraintViolated";
    case Err::ScanExhausted: return "ScanExhausted";
    case Err::CollisionDetected: return "CollisionDetected";
    case Err::OutOfBall: return "OutOfBall";
    case Err::MembershipFailed: return "MembershipFailed";
    case Err::ClosureOverflow: return "ClosureOverflow";
    case Err::FieldTooSmall: return "FieldTooSmall";
    case Err::RetryLimit: return "RetryLimit";
    case Err::DecompositionFailed: return "DecompositionFailed";
    case Err::NotInK: return "NotInK";
    case Err::NotOnLine: return "NotOnLine";
    case Err::FormulaViolated: return "FormulaViolated";
    case Err::ContainmentViolated: return "ContainmentViolated";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::LemmaViolated: return "LemmaViolated";
    case Err::NotIndependent: return "NotIndependent";
    case Err::IndependenceFailed: return "IndependenceFailed";
    case Err::InjectivityFailed: return "InjectivityFailed";
    case Err::ConfigError: return "ConfigError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace uhk
