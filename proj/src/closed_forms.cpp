#include "eco/closed_forms.hpp"

#include <algorithm>
#include <set>

#include "eco/error.hpp"

namespace eco {

const Sequence& FamilySequences::at(Label b) const {
  auto it = table.find(b);
  if (it == table.end())
    throw Error(ErrorKind::InvalidArgument,
                "family '" + rule + "' has no sequence for axiom " + std::to_string(b));
  return it->second;
}

FamilySequences family_from_engine(const RuleOperator& op, Label b_max, int n) {
  if (b_max < 1) throw Error(ErrorKind::InvalidArgument, "b_max must be >= 1");
  FamilySequences f{op.description(), {}};
  for (Label b = 1; b <= b_max; ++b) f.table.emplace(b, sequence_of(op, b, n));
  return f;
}

Sequence mixed_formula(const RuleOperator& omega, const RuleOperator& sigma, Label axiom, int n,
                       std::optional<Label> label_bound) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const Label bound = label_bound.value_or(std::max<Label>(1, axiom + 3 * static_cast<Label>(n)));
  if (auto check = commutes_up_to(omega, sigma, bound); !check.commutes)
    throw Error(ErrorKind::NonCommutingOperators,
                omega.description() + " and " + sigma.description() +
                    " do not commute; witness label " + std::to_string(*check.witness),
                check.witness);

  const EcoMatrix mu = expand_levels(sigma, axiom, n / 2);

  // omega's sequences for every label that occurs in some mu_k
  std::set<Label> labels;
  for (const auto& row : mu.rows)
    for (const auto& [i, c] : row.terms()) labels.insert(i);
  std::map<Label, Sequence> omega_seq;
  for (Label i : labels) omega_seq.emplace(i, sequence_of(omega, i, n));

  Sequence out;
  out.provenance = Provenance::formula;
  for (int m = 0; m <= n; ++m) {
    BigInt f = 0;
    for (int k = 0; 2 * k <= m; ++k) {
      BigInt inner = 0;
      for (const auto& [i, c] : mu.rows[static_cast<std::size_t>(k)].terms())
        inner += c * omega_seq.at(i)[static_cast<std::size_t>(m - 2 * k)];
      f += binomial(m - k, k) * inner;
    }
    out.values.push_back(f);
  }
  return out;
}

Sequence identity_after(const FamilySequences& omega_family, Label axiom, int n) {
  const Sequence& l = omega_family.at(axiom);
  if (static_cast<int>(l.size()) <= n)
    throw Error(ErrorKind::InvalidArgument, "family sequence too short for n = " + std::to_string(n));
  Sequence out;
  out.provenance = Provenance::formula;
  for (int m = 0; m <= n; ++m) {
    BigInt f = 0;
    for (int k = 0; 2 * k <= m; ++k) f += binomial(m - k, k) * l[static_cast<std::size_t>(m - 2 * k)];
    out.values.push_back(f);
  }
  return out;
}

Sequence identity_before(const FamilySequences& sigma_family, Label axiom, int n) {
  const Sequence& s = sigma_family.at(axiom);
  if (static_cast<int>(s.size()) <= n / 2)
    throw Error(ErrorKind::InvalidArgument, "family sequence too short for n = " + std::to_string(n));
  Sequence out;
  out.provenance = Provenance::formula;
  for (int m = 0; m <= n; ++m) {
    BigInt f = 0;
    for (int k = 0; 2 * k <= m; ++k) f += binomial(m - k, k) * s[static_cast<std::size_t>(k)];
    out.values.push_back(f);
  }
  return out;
}

namespace {

void check_family_args(Label b_max, int n) {
  if (b_max < 1) throw Error(ErrorKind::InvalidArgument, "b_max must be >= 1");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
}

// f^{(b+1)}_n = f^{(b)}_n + sum_{i<n} g_i f^{(b)}_{n-1-i}
Sequence convolution_step(const Sequence& prev, const Sequence& g, int n) {
  Sequence next;
  next.provenance = Provenance::recursion;
  for (int m = 0; m <= n; ++m) {
    BigInt f = prev[static_cast<std::size_t>(m)];
    for (int i = 0; i < m; ++i)
      f += g[static_cast<std::size_t>(i)] * prev[static_cast<std::size_t>(m - 1 - i)];
    next.values.push_back(f);
  }
  return next;
}

}  // namespace

FamilySequences bell_family(Label b_max, int n) {
  check_family_args(b_max, n);
  FamilySequences fam{"bell", {}};
  fam.table.emplace(1, sequence_of(builtin("bell"), 1, n));
  for (Label b = 2; b <= b_max; ++b) {
    const Sequence& prev = fam.table.at(b - 1);
    Sequence next;
    next.provenance = Provenance::recursion;
    next.values.push_back(1);
    for (int m = 1; m <= n; ++m) {
      BigInt f = next.values.back();
      for (int k = 0; k <= m - 1; ++k) f += binomial(m - 1, k) * prev[static_cast<std::size_t>(k + 1)];
      next.values.push_back(f);
    }
    fam.table.emplace(b, std::move(next));
  }
  return fam;
}

FamilySequences catalan_family(Label b_max, int n) {
  check_family_args(b_max, n);
  FamilySequences fam{"catalan", {}};
  const RuleOperator op = builtin("catalan");
  fam.table.emplace(1, sequence_of(op, 1, n));
  if (b_max >= 2) fam.table.emplace(2, sequence_of(op, 2, n));
  for (Label b = 3; b <= b_max; ++b)
    fam.table.emplace(b, convolution_step(fam.table.at(b - 1), fam.table.at(2), n));
  return fam;
}

FamilySequences motzkin_family(Label b_max, int n) {
  check_family_args(b_max, n);
  FamilySequences fam{"motzkin", {}};
  fam.table.emplace(1, sequence_of(builtin("motzkin"), 1, n));
  for (Label b = 2; b <= b_max; ++b)
    fam.table.emplace(b, convolution_step(fam.table.at(b - 1), fam.table.at(1), n));
  return fam;
}

BigInt factorial_family_term(std::int64_t b, std::int64_t n) {
  if (b < 1 || n < 0) throw Error(ErrorKind::InvalidArgument, "factorial_family_term needs b >= 1, n >= 0");
  return factorial(n) * binomial(n + b - 1, b - 1);
}

BigInt factorial_mixed_closed(std::int64_t b, std::int64_t n) {
  if (b < 1 || n < 0) throw Error(ErrorKind::InvalidArgument, "factorial_mixed_closed needs b >= 1, n >= 0");
  return rising_factorial(b, n) * fibonacci_sum(n);
}

std::pair<Label, BigInt> mu_level_counts(Label s, std::int64_t r) {
  if (s < 1 || r < 0) throw Error(ErrorKind::InvalidArgument, "mu_level_counts needs s >= 1, r >= 0");
  return {s + 2 * r, rising_factorial(s, 2 * r)};
}

}  // namespace eco
