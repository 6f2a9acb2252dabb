#include "eco/operators.hpp"

#include <algorithm>
#include <limits>

#include "eco/error.hpp"

namespace eco {

RuleOperator::RuleOperator(Action action, Label domain_min, std::string description)
    : action_(std::move(action)), domain_min_(domain_min), description_(std::move(description)) {}

LabelPolynomial RuleOperator::operator()(Label k) const {
  if (k < domain_min_)
    throw Error(ErrorKind::UncoveredLabel,
                description_ + ": label " + std::to_string(k) + " below domain minimum " +
                    std::to_string(domain_min_),
                k);
  return action_(k);
}

RuleOperator from_rule(const ProductionRule& rule, const ExpandOptions& options) {
  Label lo = rule.symbolic ? rule.symbolic_min : std::numeric_limits<Label>::max();
  if (!rule.special.empty()) lo = std::min(lo, rule.special.begin()->first);
  if (options.identity_scaling_fallback) lo = 0;
  std::string desc = rule.name.empty() ? canonical_format(rule) : rule.name;
  return RuleOperator([rule, options](Label k) { return expand_production(rule, k, options); },
                      lo, desc);
}

namespace {

LabelPolynomial range_sum(Label lo, Label hi) {
  LabelPolynomial p;
  for (Label i = lo; i <= hi; ++i) p.add_term(i, 1);
  return p;
}

}  // namespace

std::vector<std::string> builtin_operator_names() {
  return {"factorial", "arrangements", "involutions", "bell", "catalan", "motzkin",
          "identity",  "c1",           "c2",          "L_bracket"};
}

RuleOperator builtin(std::string_view name, const std::vector<std::int64_t>& params) {
  auto no_params = [&] {
    if (!params.empty())
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " takes no parameters");
  };
  const std::string n(name);
  if (n == "L_bracket") {
    if (params.size() != 1)
      throw Error(ErrorKind::InvalidArgument, "L_bracket takes exactly one parameter a");
    const std::int64_t a = params[0];
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "L_bracket requires a >= 1");
    return RuleOperator(
        [a](Label k) { return LabelPolynomial::monomial(k + a, static_cast<long>(k) * binomial(a + k - 1, a - 1)); },
        1, "L_bracket:" + std::to_string(a));
  }
  no_params();
  if (n == "factorial")
    return RuleOperator([](Label k) { return LabelPolynomial::monomial(k + 1, static_cast<long>(k)); }, 1, n);
  if (n == "arrangements")
    return RuleOperator(
        [](Label k) {
          LabelPolynomial p = LabelPolynomial::monomial(k);
          p.add_term(k + 1, static_cast<long>(k - 1));
          return p;
        },
        1, n);
  if (n == "involutions")
    return RuleOperator(
        [](Label k) {
          LabelPolynomial p = LabelPolynomial::monomial(k + 1);
          p.add_term(k - 1, static_cast<long>(k - 1));
          return p;
        },
        1, n);
  if (n == "bell")
    return RuleOperator(
        [](Label k) {
          LabelPolynomial p = LabelPolynomial::monomial(k + 1);
          p.add_term(k, static_cast<long>(k - 1));
          return p;
        },
        1, n);
  if (n == "catalan") return RuleOperator([](Label k) { return range_sum(2, k + 1); }, 1, n);
  if (n == "motzkin")
    return RuleOperator(
        [](Label k) {
          LabelPolynomial p = range_sum(1, k - 1);
          p.add_term(k + 1, 1);
          return p;
        },
        1, n);
  if (n == "identity") return RuleOperator([](Label k) { return LabelPolynomial::monomial(k); }, 1, n);
  if (n == "c1") return RuleOperator([](Label) { return LabelPolynomial::monomial(1); }, 1, n);
  if (n == "c2") return RuleOperator([](Label) { return LabelPolynomial::monomial(2); }, 1, n);
  throw Error(ErrorKind::UnknownName, "unknown operator '" + n + "'");
}

RuleOperator shift_operator(Label s) {
  return RuleOperator([s](Label k) { return LabelPolynomial::monomial(k + s); }, 0,
                      "x^" + std::to_string(s));
}

LabelPolynomial apply(const RuleOperator& op, const LabelPolynomial& p) {
  LabelPolynomial out;
  for (const auto& [k, c] : p.terms()) out.add_scaled(op(k), c);
  return out;
}

LabelPolynomial apply_power(const RuleOperator& op, int n, const LabelPolynomial& p) {
  LabelPolynomial q = p;
  for (int i = 0; i < n; ++i) q = apply(op, q);
  return q;
}

LabelPolynomial commutator_action(const RuleOperator& l, const RuleOperator& m, Label k) {
  return apply(l, m(k)) - apply(m, l(k));
}

CommutationCheck commutes_up_to(const RuleOperator& l, const RuleOperator& m, Label k_max) {
  const Label start = std::max<Label>({1, l.domain_min(), m.domain_min()});
  for (Label k = start; k <= k_max; ++k) {
    if (!commutator_action(l, m, k).empty()) return {false, k};
  }
  return {};
}

LabelPolynomial pincherle_action(const RuleOperator& l, Label k) {
  return l(k + 1) - shift(l(k), 1);
}

}  // namespace eco
