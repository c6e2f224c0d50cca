#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cotrans {

// Malformed-input conditions. Logical failures of a proof (a rule that does
// not match, a missing progress point) are reported, not thrown.
enum class Errc {
  ViolatedRootLabel,
  StarNotLeaf,
  NotPrefixClosed,
  GappedChildren,
  UnknownState,
  NotARootPath,
  BudgetExceeded,
  NoRoot,
  NotConvex,
  NotAPartition,
  UnknownNode,
  NotARoot,
  TruncatedNode,
  NotAPreProof,
  StepContractViolation,
  CompatibilityViolation,
  NotAProof,
  FormulaAbsent,
  MeasureViolation,
  SyntaxError,
  MalformedGraph,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ViolatedRootLabel: return "ViolatedRootLabel";
    case Errc::StarNotLeaf: return "StarNotLeaf";
    case Errc::NotPrefixClosed: return "NotPrefixClosed";
    case Errc::GappedChildren: return "GappedChildren";
    case Errc::UnknownState: return "UnknownState";
    case Errc::NotARootPath: return "NotARootPath";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::NotARoot: return "NotARoot";
    case Errc::TruncatedNode: return "TruncatedNode";
    case Errc::NotAPreProof: return "NotAPreProof";
    case Errc::StepContractViolation: return "StepContractViolation";
    case Errc::CompatibilityViolation: return "CompatibilityViolation";
    case Errc::NotAProof: return "NotAProof";
    case Errc::FormulaAbsent: return "FormulaAbsent";
    case Errc::MeasureViolation: return "MeasureViolation";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MalformedGraph: return "MalformedGraph";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cotrans
