#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eco {

enum class ErrorKind {
  Syntax,
  UncoveredLabel,
  NegativeMultiplicity,
  NegativeLabel,
  LabelCapExceeded,
  NegativeCoefficient,
  NonCommutingOperators,
  UnknownName,
  InvalidArgument,
  DivisionByNonUnit,
  NonSquareConstantTerm,
  NonzeroInnerConstant,
  BadValuation,
  NoConvergence,
  OrderExceeded,
  InfeasibleSize,
};

std::string_view kind_name(ErrorKind kind);

/// The single exception type thrown by the library. `witness` carries the
/// offending label where one exists (uncovered label, commutator witness).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail,
        std::optional<std::int64_t> witness = std::nullopt)
      : std::runtime_error(detail), kind_(kind), witness_(witness) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> witness_;
};

}  // namespace eco
