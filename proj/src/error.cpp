#include "surfdyn/error.hpp"

namespace surfdyn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::OrderUnderflow: return "order underflow";
    case ErrorCode::SingularLinearPart: return "singular linear part";
    case ErrorCode::NonAttracting: return "non-attracting spectrum";
    case ErrorCode::NotCommuting: return "germ does not commute with the group";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::ResonanceInconsistency: return "resonance inconsistency";
    case ErrorCode::NotDivisible: return "divisibility violated";
    case ErrorCode::NotContractible: return "configuration not contractible";
    case ErrorCode::NotATree: return "graph is not a tree";
    case ErrorCode::BranchedLeg: return "branch vertex away from the center";
    case ErrorCode::MatchingViolated: return "hyperbolic matching violated";
    case ErrorCode::CycleObstruction: return "cycle of rational curves excluded";
    case ErrorCode::InconsistentDynamics: return "inconsistent dynamics data";
    case ErrorCode::BadOrbifold: return "bad orbifold";
    case ErrorCode::SncViolation: return "simple normal crossing violated";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrderUnderflow: return "OrderUnderflow";
    case ErrorCode::SingularLinearPart: return "SingularLinearPart";
    case ErrorCode::NonAttracting: return "NonAttracting";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ResonanceInconsistency: return "ResonanceInconsistency";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BranchedLeg: return "BranchedLeg";
    case ErrorCode::MatchingViolated: return "MatchingViolated";
    case ErrorCode::CycleObstruction: return "CycleObstruction";
    case ErrorCode::InconsistentDynamics: return "InconsistentDynamics";
    case ErrorCode::BadOrbifold: return "BadOrbifold";
    case ErrorCode::SncViolation: return "SncViolation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace surfdyn
