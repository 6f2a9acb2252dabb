#include "eco/tree_engine.hpp"

#include <set>
#include <sstream>

#include "eco/error.hpp"

namespace eco {

MixedRule doubled_rule(Label axiom, RuleOperator l, RuleOperator m) {
  MixedRule r;
  r.axiom = axiom;
  r.components.emplace_back(1, std::move(l));
  r.components.emplace_back(2, std::move(m));
  return r;
}

Sequence EcoMatrix::row_sums(Provenance provenance) const {
  Sequence s;
  s.provenance = provenance;
  s.values.reserve(rows.size());
  for (const auto& row : rows) s.values.push_back(eval_at_one(row));
  return s;
}

std::vector<BigInt> EcoMatrix::column(Label k) const {
  std::vector<BigInt> col;
  col.reserve(rows.size());
  for (const auto& row : rows) col.push_back(row.coefficient(k));
  return col;
}

namespace {

void check_request(Label axiom, int n, const EngineLimits& limits) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "level count must be >= 0");
  if (n > limits.max_levels)
    throw Error(ErrorKind::InvalidArgument, "level count exceeds cap " + std::to_string(limits.max_levels));
  if (axiom < 0) throw Error(ErrorKind::NegativeLabel, "axiom below 0", axiom);
}

void check_row(const LabelPolynomial& row, int level, const EngineLimits& limits) {
  if (row.empty()) return;
  if (row.max_label() > limits.max_label)
    throw Error(ErrorKind::LabelCapExceeded,
                "label " + std::to_string(row.max_label()) + " exceeds cap " +
                    std::to_string(limits.max_label) + " at level " + std::to_string(level),
                row.max_label());
  if (!row.all_nonnegative())
    throw Error(ErrorKind::NegativeCoefficient,
                "negative node count at level " + std::to_string(level));
}

LabelPolynomial apply_at_level(const RuleOperator& op, const LabelPolynomial& p, int level) {
  try {
    return apply(op, p);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " (expanding to level " + std::to_string(level) + ")",
                e.witness());
  }
}

}  // namespace

EcoMatrix expand_levels(const RuleOperator& op, Label axiom, int n, const EngineLimits& limits) {
  check_request(axiom, n, limits);
  EcoMatrix m;
  m.rows.reserve(static_cast<std::size_t>(n) + 1);
  m.rows.push_back(LabelPolynomial::monomial(axiom));
  for (int i = 1; i <= n; ++i) {
    m.rows.push_back(apply_at_level(op, m.rows.back(), i));
    check_row(m.rows.back(), i, limits);
  }
  return m;
}

Sequence sequence_of(const RuleOperator& op, Label axiom, int n, const EngineLimits& limits) {
  return expand_levels(op, axiom, n, limits).row_sums(Provenance::engine);
}

EcoMatrix mixed_levels(const MixedRule& rule, int n, const EngineLimits& limits) {
  check_request(rule.axiom, n, limits);
  std::set<int> jumps;
  for (const auto& [jump, op] : rule.components) {
    if (jump < 1) throw Error(ErrorKind::InvalidArgument, "jumps must be >= 1");
    if (!jumps.insert(jump).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate jump +" + std::to_string(jump));
  }
  EcoMatrix m;
  m.rows.reserve(static_cast<std::size_t>(n) + 1);
  m.rows.push_back(LabelPolynomial::monomial(rule.axiom));
  for (int i = 1; i <= n; ++i) {
    LabelPolynomial row;
    for (const auto& [jump, op] : rule.components) {
      if (i - jump < 0) continue;  // p_j = 0 for j < 0
      row.add_scaled(apply_at_level(op, m.rows[static_cast<std::size_t>(i - jump)], i), 1);
    }
    check_row(row, i, limits);
    m.rows.push_back(std::move(row));
  }
  return m;
}

Sequence mixed_sequence(const MixedRule& rule, int n, const EngineLimits& limits) {
  return mixed_levels(rule, n, limits).row_sums(Provenance::engine);
}

EcoTable eco_matrix_export(const EcoMatrix& m) {
  EcoTable t;
  bool any = false;
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    if (!any || row.min_label() < t.first_label) t.first_label = row.min_label();
    if (!any || row.max_label() > t.last_label) t.last_label = row.max_label();
    any = true;
  }
  for (const auto& row : m.rows) {
    std::vector<std::string> cells;
    for (Label k = t.first_label; k <= t.last_label; ++k) cells.push_back(row.coefficient(k).get_str());
    t.cells.push_back(std::move(cells));
  }
  return t;
}

std::string to_csv(const EcoTable& table) {
  std::ostringstream os;
  os << "n";
  for (Label k = table.first_label; k <= table.last_label; ++k) os << ",k=" << k;
  os << '\n';
  for (std::size_t n = 0; n < table.cells.size(); ++n) {
    os << n;
    for (const auto& c : table.cells[n]) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

}  // namespace eco
