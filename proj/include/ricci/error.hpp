#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ricci {

enum class ErrorCode {
  NonPositiveWeight,
  SelfLoop,
  DuplicateEdge,
  UnknownNode,
  BadEdgeIndex,
  StaleSnapshot,
  IsolatedNode,
  UnreachableSupport,
  LpInfeasible,
  LpUnbounded,
  LpNumericalFailure,
  NonPositiveWeightProduced,
  InvariantViolation,
  StepOutOfTheoreticalRange,
  InvalidConfig,
  EmptyGraph,
  CriterionUnavailable,
  MismatchedNodeSets,
  EmptyEdgeSet,
  DegenerateParams,
  ParseError,
  UnlabeledNode,
  UnknownLabelNode,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ricci
