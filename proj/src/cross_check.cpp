#include "eco/cross_check.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "eco/closed_forms.hpp"
#include "eco/error.hpp"
#include "eco/operators.hpp"
#include "eco/oracles.hpp"
#include "eco/rule_catalog.hpp"
#include "eco/series_catalog.hpp"
#include "eco/tree_engine.hpp"

namespace eco {
namespace {

std::string first_mismatch(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size())
    return "length " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i])
      return "index " + std::to_string(i) + ": " + to_string(a[i]) + " vs " + to_string(b[i]);
  }
  return {};
}

std::vector<BigInt> integer_prefix(const TruncatedSeries& s, bool egf) {
  std::vector<BigInt> out;
  const auto counts = egf ? egf_to_counts(s) : s.coefficients();
  for (const auto& c : counts) {
    if (c.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

void add(std::vector<CheckResult>& out, std::string name,
         const std::function<std::string()>& mismatch) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = mismatch();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> run_cross_checks() {
  std::vector<CheckResult> out;

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"bell", "identity"},     {"motzkin", "identity"}, {"catalan", "identity"},
      {"identity", "catalan"},  {"identity", "motzkin"}, {"identity", "bell"},
      {"factorial", "L_bracket:2"}, {"factorial", "factorial"}};
  auto op = [](const std::string& name) {
    return name == "L_bracket:2" ? builtin("L_bracket", {2}) : builtin(name);
  };

  // shipped rule files against the closed-form operators
  for (const auto& name : builtin_rule_names()) {
    add(out, "rule file = operator: " + name, [&]() -> std::string {
      const RuleOperator rule_op = from_rule(builtin_rule(name));
      const RuleOperator closed = op(name);
      for (Label k = 1; k <= 60; ++k) {
        if (rule_op(k) != closed(k)) return "label " + std::to_string(k);
      }
      return {};
    });
  }

  // main theorem: formula vs engine
  for (const auto& [o, s] : pairs) {
    for (Label b = 1; b <= 3; ++b) {
      add(out, "formula = engine: (" + std::to_string(b) + ") " + o + "^{+1} " + s + "^{+2}",
          [&]() {
            const auto engine = mixed_sequence(doubled_rule(b, op(o), op(s)), 18);
            const auto formula = mixed_formula(op(o), op(s), b, 18);
            return first_mismatch(engine.values, formula.values);
          });
    }
  }

  // family recursions vs engine
  const std::vector<std::pair<std::string, std::function<FamilySequences(Label, int)>>> families = {
      {"bell", bell_family}, {"catalan", catalan_family}, {"motzkin", motzkin_family}};
  for (const auto& [name, make] : families) {
    add(out, "recursion = engine: " + name + " family", [&]() -> std::string {
      const auto rec = make(4, 14);
      const auto eng = family_from_engine(builtin(name), 4, 14);
      for (Label b = 1; b <= 4; ++b) {
        auto m = first_mismatch(rec.at(b).values, eng.at(b).values);
        if (!m.empty()) return "b=" + std::to_string(b) + " " + m;
      }
      return {};
    });
  }

  // generating functions vs engine
  for (Label b = 1; b <= 4; ++b) {
    const std::string bs = std::to_string(b);
    add(out, "series = engine: C^" + bs, [&]() {
      return first_mismatch(integer_prefix(named_series("catalan_power", 12, b), false),
                            sequence_of(builtin("catalan"), b, 12).values);
    });
    add(out, "series = engine: M (tM+1)^" + std::to_string(b - 1), [&]() {
      return first_mismatch(integer_prefix(named_series("motzkin_family", 12, b), false),
                            sequence_of(builtin("motzkin"), b, 12).values);
    });
    add(out, "series = engine: exp(e^t + " + std::to_string(b - 1) + "t - 1)", [&]() {
      return first_mismatch(integer_prefix(named_series("bell_egf", 12, b), true),
                            sequence_of(builtin("bell"), b, 12).values);
    });
  }
  add(out, "series = engine: a128720 row sums", [] {
    return first_mismatch(integer_prefix(named_series("a128720_S", 20, 1), false),
                          mixed_sequence(doubled_rule(1, builtin("motzkin"), builtin("identity")), 20).values);
  });
  add(out, "series = engine: a090344 row sums", [] {
    return first_mismatch(integer_prefix(named_series("a090344_S", 20, 1), false),
                          mixed_sequence(doubled_rule(1, builtin("identity"), builtin("catalan")), 20).values);
  });

  // factorial closed form
  add(out, "closed form = engine: (b)^n Fib(n)", []() -> std::string {
    for (Label b = 1; b <= 3; ++b) {
      const auto engine =
          mixed_sequence(doubled_rule(b, builtin("factorial"), builtin("L_bracket", {2})), 15);
      for (int n = 0; n <= 15; ++n) {
        if (engine[static_cast<std::size_t>(n)] != factorial_mixed_closed(b, n))
          return "b=" + std::to_string(b) + " n=" + std::to_string(n);
      }
    }
    return {};
  });

  // enumeration vs engine / formula
  auto oracle_vs = [&](const std::string& family, int n_max, std::vector<BigInt> expected) {
    add(out, "enumeration = reference: " + family, [=]() {
      std::vector<BigInt> counted;
      for (int n = 0; n <= n_max; ++n) counted.push_back(oracle_family(family).counter(n));
      return first_mismatch(counted, expected);
    });
  };
  oracle_vs("lacunary_partitions", 10,
            mixed_sequence(doubled_rule(1, builtin("bell"), builtin("identity")), 10).values);
  {
    std::vector<BigInt> closed;
    for (int n = 0; n <= 8; ++n) closed.push_back(factorial_mixed_closed(1, n));
    oracle_vs("paired_coloured_permutations", 8, closed);
  }
  oracle_vs("2generalized_motzkin", 14,
            mixed_sequence(doubled_rule(1, builtin("motzkin"), builtin("identity")), 14).values);
  oracle_vs("motzkin_no_odd_h", 14,
            identity_before(catalan_family(1, 7), 1, 14).values);
  {
    // trees with e edges <-> identity_before(motzkin) at e - 2
    const auto ref = identity_before(motzkin_family(1, 6), 1, 10).values;
    std::vector<BigInt> expected = {1, 0};
    expected.insert(expected.end(), ref.begin(), ref.end());
    oracle_vs("trees_no_unit_branch", 12, expected);
  }
  return out;
}

}  // namespace eco
