#include "ricci/error.hpp"

namespace ricci {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::BadEdgeIndex: return "BadEdgeIndex";
    case ErrorCode::StaleSnapshot: return "StaleSnapshot";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::UnreachableSupport: return "UnreachableSupport";
    case ErrorCode::LpInfeasible: return "LpInfeasible";
    case ErrorCode::LpUnbounded: return "LpUnbounded";
    case ErrorCode::LpNumericalFailure: return "LpNumericalFailure";
    case ErrorCode::NonPositiveWeightProduced: return "NonPositiveWeightProduced";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::StepOutOfTheoreticalRange: return "StepOutOfTheoreticalRange";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::CriterionUnavailable: return "CriterionUnavailable";
    case ErrorCode::MismatchedNodeSets: return "MismatchedNodeSets";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnlabeledNode: return "UnlabeledNode";
    case ErrorCode::UnknownLabelNode: return "UnknownLabelNode";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace ricci
