#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "eco/label_polynomial.hpp"
#include "eco/operators.hpp"
#include "eco/tree_engine.hpp"

namespace eco {

/// The family (f_n^(b)) of sequences a production rule defines, one per axiom b.
struct FamilySequences {
  std::string rule;
  std::map<Label, Sequence> table;

  const Sequence& at(Label b) const;
};

/// Family built by direct tree expansion for axioms 1..b_max.
FamilySequences family_from_engine(const RuleOperator& op, Label b_max, int n);

/// Sequence of the doubled rule (axiom) omega^{+1} sigma^{+2}, evaluated as
///   f_n = sum_k C(n-k, k) sum_i mu_{k,i} l_{n-2k}^{(i)}
/// where mu_k are sigma's level polynomials from the axiom and l^{(i)} is
/// omega's sequence with axiom i. Verifies [omega, sigma] = 0 on labels
/// [1, label_bound] first (default axiom + 3n) and throws
/// Error{NonCommutingOperators} with the witness label otherwise.
Sequence mixed_formula(const RuleOperator& omega, const RuleOperator& sigma, Label axiom, int n,
                       std::optional<Label> label_bound = std::nullopt);

/// (b) L^{+1} 1^{+2}:  f_n = sum_k C(n-k, k) l_{n-2k}^{(b)}
Sequence identity_after(const FamilySequences& omega_family, Label axiom, int n);

/// (b) 1^{+1} M^{+2}:  f_n = sum_k C(n-k, k) m_k^{(b)}
Sequence identity_before(const FamilySequences& sigma_family, Label axiom, int n);

/// f^{(b+1)}_n = sum_{k<n} C(n-1, k) f^{(b)}_{k+1} + f^{(b+1)}_{n-1}, seeded
/// with the Bell numbers from the engine.
FamilySequences bell_family(Label b_max, int n);

/// f^{(b+1)}_n = f^{(b)}_n + sum_{i<n} f^{(2)}_i f^{(b)}_{n-1-i}, seeded with
/// axioms 1 and 2 from the engine.
FamilySequences catalan_family(Label b_max, int n);

/// f^{(b+1)}_n = f^{(b)}_n + sum_{i<n} f^{(1)}_i f^{(b)}_{n-1-i}, seeded with
/// the Motzkin numbers from the engine.
FamilySequences motzkin_family(Label b_max, int n);

/// l_n^{(b)} = n! C(n+b-1, b-1) for the factorial operator x^2 D.
BigInt factorial_family_term(std::int64_t b, std::int64_t n);

/// (b)^n Fib(n), the sequence of (b) factorial^{+1} L_bracket(2)^{+2}.
BigInt factorial_mixed_closed(std::int64_t b, std::int64_t n);

/// The single label s+2r and its node count (s)^{2r} at level r of the
/// L_bracket(2) tree with axiom s.
std::pair<Label, BigInt> mu_level_counts(Label s, std::int64_t r);

}  // namespace eco
