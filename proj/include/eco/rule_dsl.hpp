#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eco/bigint.hpp"
#include "eco/label_polynomial.hpp"

namespace eco {

/// Integer polynomial in the formal variable k, e.g. k+1, k-1, 2, k*(k+1).
/// Stored normalized (ascending coefficients, no trailing zeros), so
/// structural equality is polynomial equality.
class LabelExpr {
 public:
  LabelExpr() = default;
  static LabelExpr constant(const BigInt& c);
  static LabelExpr variable();

  BigInt evaluate(const BigInt& k) const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Canonical text, highest degree first: "k*k+k", "k-1", "2".
  std::string to_string() const;

  friend LabelExpr operator+(const LabelExpr& a, const LabelExpr& b);
  friend LabelExpr operator-(const LabelExpr& a, const LabelExpr& b);
  friend LabelExpr operator*(const LabelExpr& a, const LabelExpr& b);
  friend bool operator==(const LabelExpr&, const LabelExpr&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// One factor of a production: "(e)^{m}" or the range "(lo..hi)^{m}".
struct ProductionItem {
  LabelExpr low;
  std::optional<LabelExpr> high;  // set for ranges; the range lo..hi is empty when hi < lo
  LabelExpr multiplicity = LabelExpr::constant(1);

  bool is_range() const noexcept { return high.has_value(); }
  friend bool operator==(const ProductionItem&, const ProductionItem&) = default;
};

struct Clause {
  std::vector<ProductionItem> items;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// A succession rule without its axiom. The symbolic clause covers every
/// k >= symbolic_min; special clauses shadow it at their exact label.
struct ProductionRule {
  std::optional<Clause> symbolic;
  Label symbolic_min = 1;
  std::map<Label, Clause> special;
  std::string name;

  /// Compares clauses only; the name is metadata.
  friend bool operator==(const ProductionRule& a, const ProductionRule& b) {
    return a.symbolic == b.symbolic && a.symbolic_min == b.symbolic_min &&
           a.special == b.special;
  }
};

/// Parses the rule grammar:
///   rule   := clause ((";" | newline) clause)*
///   clause := "(" ("k" | INT) ")" "->" item+
///   item   := "(" expr (".." expr)? ")" ("^" ("{" expr "}" | factor))?
///   expr   := integer polynomial in k with + - * and parentheses
/// Lines starting with "#" are comments; a "name: ..." line names the rule.
/// Throws Error{Syntax} with line/column, or Error{NegativeMultiplicity}
/// for a constant negative exponent.
ProductionRule parse_rule(std::string_view text);

struct ExpandOptions {
  /// Fall back to x^h -> h x^h on uncovered labels instead of throwing.
  bool identity_scaling_fallback = false;
};

/// Children of a node labelled `label`, as a polynomial with nonnegative
/// coefficients.
LabelPolynomial expand_production(const ProductionRule& rule, Label label,
                                  const ExpandOptions& options = {});

/// Deterministic one-line text; parse_rule(canonical_format(r)) == r.
std::string canonical_format(const ProductionRule& rule);

/// Labels k in [from, to] covered by the rule where the node does not have
/// exactly k sons. Empty for consistent rules.
std::vector<Label> consistency_violations(const ProductionRule& rule, Label from, Label to);

}  // namespace eco
