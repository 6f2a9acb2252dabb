#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eco/label_polynomial.hpp"
#include "eco/operators.hpp"

namespace eco {

/// Axiom plus (jump, operator) components. A node at level n spawns the
/// sons given by each component's operator at level n + jump.
struct MixedRule {
  Label axiom = 1;
  std::vector<std::pair<int, RuleOperator>> components;
};

/// The doubled rule (axiom) L^{+1} M^{+2}.
MixedRule doubled_rule(Label axiom, RuleOperator l, RuleOperator m);

/// Level polynomials p_0, p_1, ... of a generating tree (all entries >= 0).
struct EcoMatrix {
  std::vector<LabelPolynomial> rows;

  Sequence row_sums(Provenance provenance = Provenance::engine) const;
  /// Entries p_{n,k} of column k, one per row.
  std::vector<BigInt> column(Label k) const;
};

struct EngineLimits {
  Label max_label = 1'000'000;
  int max_levels = 100'000;
};

/// p_0 = x^axiom, p_{i+1} = op(p_i), for i < n.
EcoMatrix expand_levels(const RuleOperator& op, Label axiom, int n, const EngineLimits& limits = {});

/// f_i = p_i(1) for i = 0..n.
Sequence sequence_of(const RuleOperator& op, Label axiom, int n, const EngineLimits& limits = {});

/// p_i = 0 for i < 0, p_0 = x^axiom, p_i = sum_j op_j(p_{i - jump_j}).
EcoMatrix mixed_levels(const MixedRule& rule, int n, const EngineLimits& limits = {});

Sequence mixed_sequence(const MixedRule& rule, int n, const EngineLimits& limits = {});

/// Rectangular view of an EcoMatrix: rows n, columns first_label..last_label,
/// entries as decimal strings ("0" where a label is absent).
struct EcoTable {
  Label first_label = 0;
  Label last_label = -1;
  std::vector<std::vector<std::string>> cells;
};

EcoTable eco_matrix_export(const EcoMatrix& m);

std::string to_csv(const EcoTable& table);

}  // namespace eco
