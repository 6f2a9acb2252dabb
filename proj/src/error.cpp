#include "eco/error.hpp"

namespace eco {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UncoveredLabel: return "UncoveredLabel";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NegativeLabel: return "NegativeLabel";
    case ErrorKind::LabelCapExceeded: return "LabelCapExceeded";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NonCommutingOperators: return "NonCommutingOperators";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::BadValuation: return "BadValuation";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::InfeasibleSize: return "InfeasibleSize";
  }
  return "Unknown";
}

}  // namespace eco
