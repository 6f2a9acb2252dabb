#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eco/label_polynomial.hpp"
#include "eco/rule_dsl.hpp"

namespace eco {

/// A rule operator: a linear map on label polynomials, given by its action
/// on the basis monomials x^k (k >= domain_min) and extended by linearity.
class RuleOperator {
 public:
  using Action = std::function<LabelPolynomial(Label)>;

  RuleOperator(Action action, Label domain_min, std::string description);

  /// Image of x^k. Throws Error{UncoveredLabel} below domain_min.
  LabelPolynomial operator()(Label k) const;

  Label domain_min() const noexcept { return domain_min_; }
  const std::string& description() const noexcept { return description_; }

 private:
  Action action_;
  Label domain_min_;
  std::string description_;
};

RuleOperator from_rule(const ProductionRule& rule, const ExpandOptions& options = {});

/// Closed-form operators:
///   factorial     x^2 D            x^k -> k x^{k+1}
///   arrangements  x^2 D - x + 1    x^k -> x^k + (k-1) x^{k+1}
///   involutions   D + x - x^{-1}   x^k -> (k-1) x^{k-1} + x^{k+1}
///   bell          x D + x - 1      x^k -> (k-1) x^k + x^{k+1}
///   catalan       x^2 T            x^k -> x^2 + ... + x^{k+1}
///   motzkin       x T + x - 1      x^k -> x + ... + x^{k-1} + x^{k+1}
///   identity, c1 (x^k -> x), c2 (x^k -> x^2)
///   L_bracket(a)  x^{a+1} D^a x^{a-1} / (a-1)!   x^n -> n C(a+n-1, a-1) x^{a+n}
/// Throws Error{UnknownName}, or Error{InvalidArgument} for bad parameters.
RuleOperator builtin(std::string_view name, const std::vector<std::int64_t>& params = {});

std::vector<std::string> builtin_operator_names();

/// Multiplication by x^s.
RuleOperator shift_operator(Label s = 1);

LabelPolynomial apply(const RuleOperator& op, const LabelPolynomial& p);

/// op^n (p)
LabelPolynomial apply_power(const RuleOperator& op, int n, const LabelPolynomial& p);

/// (L M - M L)(x^k); may carry negative coefficients.
LabelPolynomial commutator_action(const RuleOperator& l, const RuleOperator& m, Label k);

struct CommutationCheck {
  bool commutes = true;
  std::optional<Label> witness;  // smallest k with a nonzero commutator
};

/// Checks [L, M](x^k) = 0 for every k in [1, k_max].
CommutationCheck commutes_up_to(const RuleOperator& l, const RuleOperator& m, Label k_max);

/// Pincherle derivative (L x - x L)(x^k).
LabelPolynomial pincherle_action(const RuleOperator& l, Label k);

}  // namespace eco
