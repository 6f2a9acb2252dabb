// Acceptance checks. Prints one PASS/FAIL line per criterion, followed by
// the failing sub-checks, and exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "eco/asymptotics.hpp"
#include "eco/closed_forms.hpp"
#include "eco/operators.hpp"
#include "eco/oracles.hpp"
#include "eco/series.hpp"
#include "eco/series_catalog.hpp"
#include "eco/tree_engine.hpp"
#include "reference.hpp"

using namespace eco;

namespace {

class Criterion {
 public:
  Criterion(std::string id, std::string title) : id_(std::move(id)), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }

  // Exceptions count as a failed sub-check.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": threw " + e.what());
    }
  }

  bool report() const {
    const bool ok = failures_.empty();
    std::cout << id_ << ' ' << (ok ? "PASS" : "FAIL") << "  " << title_ << " (" << count_ - failures_.size()
              << '/' << count_ << " sub-checks)\n";
    for (const auto& f : failures_) std::cout << "    failed: " << f << '\n';
    return ok;
  }

 private:
  std::string id_, title_;
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::vector<Rational> coeffs(const TruncatedSeries& s, int upto) {
  return {s.coefficients().begin(), s.coefficients().begin() + upto + 1};
}

std::vector<Rational> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RuleOperator op(const std::string& name) {
  return name == "L_bracket:2" ? builtin("L_bracket", {2}) : builtin(name);
}

// Both values rounded to nine significant digits.
bool same9(double a, double b) {
  char x[32], y[32];
  std::snprintf(x, sizeof x, "%.8e", a);
  std::snprintf(y, sizeof y, "%.8e", b);
  return std::string(x) == y;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

bool ac1() {
  Criterion c("AC1", "plain-rule sequences");
  auto seq = [&](const char* name, Label b, int n, std::vector<BigInt> want) {
    c.guard(name, [&] {
      const auto got = sequence_of(op(name), b, n).values;
      c.check(got == want, std::string(name) + " axiom " + std::to_string(b) + ": " + join(got));
    });
  };
  seq("catalan", 2, 5, ints({1, 2, 5, 14, 42, 132}));
  seq("bell", 1, 6, ints({1, 1, 2, 5, 15, 52, 203}));
  seq("motzkin", 1, 5, ints({1, 1, 2, 4, 9, 21}));
  std::vector<BigInt> facts;
  for (long n = 0; n <= 10; ++n) facts.push_back(ref::fact(n));
  seq("factorial", 1, 10, facts);
  return c.report();
}

bool ac2() {
  Criterion c("AC2", "mixed-rule sequences");
  auto mixed = [&](const char* o, const char* s, int n, std::vector<BigInt> want) {
    c.guard(std::string(o) + "/" + s, [&] {
      const auto got = mixed_sequence(doubled_rule(1, op(o), op(s)), n).values;
      c.check(got == want, std::string("(1) ") + o + "^{+1} " + s + "^{+2}: " + join(got));
    });
  };
  mixed("bell", "identity", 5, ints({1, 1, 3, 7, 22, 75}));
  mixed("identity", "bell", 8, ints({1, 1, 2, 3, 6, 11, 23, 47, 103}));
  mixed("motzkin", "identity", 6, ints({1, 1, 3, 6, 16, 40, 109}));
  return c.report();
}

bool ac3() {
  Criterion c("AC3", "mixed formula equals mixed engine, n <= 18, eight pairs, b = 1..3");
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"bell", "identity"},    {"motzkin", "identity"}, {"catalan", "identity"},
      {"identity", "catalan"}, {"identity", "motzkin"}, {"identity", "bell"},
      {"factorial", "L_bracket:2"}, {"factorial", "factorial"}};
  for (const auto& [o, s] : pairs) {
    for (Label b = 1; b <= 3; ++b) {
      const std::string what = "(" + std::to_string(b) + ") " + o + "^{+1} " + s + "^{+2}";
      c.guard(what, [&] {
        const auto f = mixed_formula(op(o), op(s), b, 18);
        const auto e = mixed_sequence(doubled_rule(b, op(o), op(s)), 18);
        c.check(f.values == e.values, what);
      });
    }
  }
  return c.report();
}

bool ac4() {
  Criterion c("AC4", "factorial closed form (b)^n Fib(n), b <= 3, n <= 15");
  const auto fib = ref::fib(15);
  for (Label b = 1; b <= 3; ++b) {
    c.guard("b=" + std::to_string(b), [&] {
      const auto e = mixed_sequence(doubled_rule(b, builtin("factorial"), builtin("L_bracket", {2})), 15);
      for (int n = 0; n <= 15; ++n) {
        const ref::Z want = ref::rising(b, n) * fib[static_cast<std::size_t>(n)];
        c.check(e[static_cast<std::size_t>(n)] == want, "b=" + std::to_string(b) + " n=" + std::to_string(n));
        if (b == 1) c.check(e[static_cast<std::size_t>(n)] == ref::fact(n) * fib[static_cast<std::size_t>(n)],
                            "n!Fib(n) at n=" + std::to_string(n));
      }
    });
  }
  return c.report();
}

bool ac5() {
  Criterion c("AC5", "stretched Riordan table rows 0-8 and its recursion, n <= 12");
  c.guard("table", [&] {
    const auto m = mixed_levels(doubled_rule(1, builtin("identity"), builtin("catalan")), 14);
    const auto table = eco_matrix_export(mixed_levels(doubled_rule(1, builtin("identity"), builtin("catalan")), 8));
    const std::vector<std::vector<long>> printed = {{1},          {1},          {1, 1},
                                                    {1, 2},       {1, 4, 1},    {1, 7, 3},
                                                    {1, 13, 8, 1}, {1, 24, 18, 4}, {1, 47, 40, 13, 1}};
    c.check(table.first_label == 1 && table.cells.size() == printed.size(), "table shape");
    for (std::size_t n = 0; n < printed.size() && n < table.cells.size(); ++n) {
      for (std::size_t k = 0; k < table.cells[n].size(); ++k) {
        const long want = k < printed[n].size() ? printed[n][k] : 0;
        c.check(table.cells[n][k] == std::to_string(want),
                "cell (" + std::to_string(n) + "," + std::to_string(k) + ") = " + table.cells[n][k]);
      }
    }
    // column k holds label k + 1
    auto at = [&](int n, int k) { return m.rows[static_cast<std::size_t>(n)].coefficient(k + 1); };
    for (int n = 1; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        BigInt tail = 0;
        for (int j = 0; k + j <= n + 1; ++j) tail += at(n - 1, k + j);
        c.check(at(n + 1, k + 1) == at(n, k + 1) + tail,
                "recursion n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  });
  return c.report();
}

bool ac6() {
  Criterion c("AC6", "A-sequences and h(t) of both Riordan analyses");
  c.guard("a128720", [&] {
    const TruncatedSeries h = named_series("a128720_h", 9);
    c.check(coeffs(h, 8) == rats({0, 1, 0, 2, 1, 7, 10, 37, 82}), "a128720 h(t)");
    const TruncatedSeries a = a_sequence_from_h(h);
    c.check(coeffs(a, 8) == rats({1, 0, 2, 1, -1, 0, 6, 5, -16}), "a128720 A(t) = y / hbar(y)");
  });
  c.guard("a090344", [&] {
    std::vector<TruncatedSeries> rows{TruncatedSeries({1, 1}, 12)};
    for (int j = 1; j <= 12; ++j) rows.push_back(TruncatedSeries::monomial(j, 1, 12));
    const TruncatedSeries a = amatrix_fixed_point(rows, 12);
    c.check(coeffs(a, 9) == rats({1, 1, 1, -1, 1, 0, -2, 4, -3, -5}), "a090344 fixed-point A(t)");
    const auto h_rat = rats({0, 1, 1, 2, 3, 6, 11, 23, 47, 102});
    c.check(coeffs(h_from_a_sequence(a), 9) == h_rat, "a090344 h(t) from h = tA(h)");
    c.check(coeffs(named_series("a090344_h", 9), 9) == h_rat, "a090344 h(t) closed form");
  });
  return c.report();
}

bool ac7() {
  Criterion c("AC7", "asymptotic estimates and relative errors");
  c.guard("a128720", [&] {
    const double est = estimate(AsymptoticCase::a128720, 60);
    const BigInt exact = exact_value(AsymptoticCase::a128720, 60);
    const double rel = relative_error(exact, est);
    c.check(same9(est, 4.949459297e28), "a128720 estimate(60) = " + sci(est) + ", printed 4.949459297e+28");
    c.check(same9(exact.get_d(), 4.960467337e28), "a128720 exact S_60 = " + to_string(exact));
    c.check(rel >= 0.0020 && rel <= 0.0024, "a128720 relative error " + sci(rel));
  });
  c.guard("a090344", [&] {
    const double est = estimate(AsymptoticCase::a090344, 50);
    const BigInt exact = exact_value(AsymptoticCase::a090344, 50);
    const double rel = relative_error(exact, est);
    c.check(same9(est, 1.075272279e18), "a090344 estimate(50) = " + sci(est));
    c.check(same9(exact.get_d(), 1.091877333e18), "a090344 exact S_50 = " + to_string(exact));
    c.check(rel >= 0.0149 && rel <= 0.0159, "a090344 relative error " + sci(rel));
  });
  return c.report();
}

bool ac8() {
  Criterion c("AC8", "enumeration oracles against engine and formulas");
  auto compare = [&](const std::string& name, int n_max, const std::function<BigInt(int)>& counter,
                     const std::vector<BigInt>& want) {
    c.guard(name, [&] {
      for (int n = 0; n <= n_max; ++n)
        c.check(counter(n) == want[static_cast<std::size_t>(n)], name + " n=" + std::to_string(n));
    });
  };
  compare("lacunary partitions", 10, count_lacunary_partitions,
          mixed_sequence(doubled_rule(1, builtin("bell"), builtin("identity")), 10).values);
  std::vector<BigInt> closed;
  for (int n = 0; n <= 8; ++n) closed.push_back(factorial_mixed_closed(1, n));
  compare("paired coloured permutations", 8, count_paired_coloured_permutations, closed);
  compare("2-generalized Motzkin", 14, count_2generalized_motzkin,
          mixed_sequence(doubled_rule(1, builtin("motzkin"), builtin("identity")), 14).values);
  compare("Motzkin without odd-height h", 14, count_motzkin_no_odd_h,
          identity_before(catalan_family(1, 7), 1, 14).values);
  return c.report();
}

bool ac9() {
  Criterion c("AC9", "property suites");
  using S = TruncatedSeries;
  auto x = [](Label k) { return LabelPolynomial::monomial(k); };

  c.guard("ballot", [&] {
    const auto m = expand_levels(builtin("catalan"), 2, 15);
    for (int n = 0; n <= 15; ++n)
      for (Label k = 2; k <= n + 2; ++k) {
        const ref::Z num = (k - 1) * ref::binom(2 * n - k + 3, n + 1);
        c.check(num % (2 * n - k + 3) == 0 &&
                    m.rows[static_cast<std::size_t>(n)].coefficient(k) == num / (2 * n - k + 3),
                "ballot n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
  });
  c.guard("pincherle", [&] {
    for (Label k = 1; k <= 60; ++k) {
      c.check(pincherle_action(builtin("bell"), k) == x(k + 1), "bell' = x at k=" + std::to_string(k));
      c.check(pincherle_action(builtin("catalan"), k) == x(2), "catalan' = c2 at k=" + std::to_string(k));
      c.check(pincherle_action(builtin("motzkin"), k) == x(1), "motzkin' = c1 at k=" + std::to_string(k));
    }
  });
  c.guard("operator identities", [&] {
    const auto X = shift_operator(1);
    const auto bell = builtin("bell");
    for (Label b = 1; b <= 4; ++b)
      for (int n = 1; n <= 12; ++n) {
        LabelPolynomial rhs = apply_power(bell, n - 1, apply(X, x(b)));
        for (int k = 0; k < n; ++k) rhs = add_scaled(rhs, apply(X, apply_power(bell, k + 1, x(b))), ref::binom(n - 1, k));
        c.check(apply_power(bell, n, apply(X, x(b))) == rhs, "bell identity n=" + std::to_string(n));
      }
    for (const auto& [name, cname] : {std::pair{"catalan", "c2"}, std::pair{"motzkin", "c1"}}) {
      const auto L = builtin(name), C = builtin(cname);
      for (Label b = 1; b <= 4; ++b)
        for (int n = 0; n <= 12; ++n) {
          LabelPolynomial rhs = apply(X, apply_power(L, n, x(b)));
          for (int i = 0; i < n; ++i) rhs = rhs + apply_power(L, i, apply(C, apply_power(L, n - 1 - i, x(b))));
          c.check(apply_power(L, n, apply(X, x(b))) == rhs, std::string(name) + " identity n=" + std::to_string(n));
        }
    }
  });
  c.guard("L_bracket commutation", [&] {
    for (std::int64_t a = 1; a <= 6; ++a)
      c.check(commutes_up_to(builtin("factorial"), builtin("L_bracket", {a}), 60).commutes,
              "x^2 D commutes with L_bracket(" + std::to_string(a) + ")");
  });
  c.guard("family recursions", [&] {
    for (const auto& [name, make] :
         {std::pair{"bell", &bell_family}, std::pair{"catalan", &catalan_family}, std::pair{"motzkin", &motzkin_family}}) {
      const auto rec = make(4, 14);
      for (Label b = 1; b <= 4; ++b)
        c.check(rec.at(b).values == sequence_of(builtin(name), b, 14).values,
                std::string(name) + " family b=" + std::to_string(b));
    }
  });
  c.guard("round trips", [&] {
    const S t = S::monomial(1, 1, 30);
    for (const char* name : {"pascal_h", "tcatalan", "a128720_h", "a090344_h"}) {
      const S h = named_series(name, 30);
      const S hbar = series_reversion(h);
      c.check(series_compose(h, hbar) == t && series_compose(hbar, h) == t, std::string("reversion ") + name);
    }
    for (const char* name : {"catalan", "motzkin", "a128720_S", "a090344_S", "fibonacci"}) {
      const S s = named_series(name, 30);
      const S r = series_sqrt(s);
      c.check(r * r == s, std::string("sqrt ") + name);
      c.check(series_sqrt(s * s) == s, std::string("sqrt of square ") + name);
    }
  });
  c.guard("generating-function corollaries", [&] {
    const S t = named_series("t", 12), one = S::constant(1, 12);
    const S after = one - t * t, before = one - t;
    const auto cat = catalan_family(3, 12), mot = motzkin_family(3, 12), bell = bell_family(3, 12);
    auto as_ints = [](const S& s) {
      std::vector<BigInt> v;
      for (const auto& q : s.coefficients()) v.push_back(q.get_den() == 1 ? q.get_num() : BigInt(-999));
      return v;
    };
    for (Label b = 1; b <= 3; ++b) {
      const std::string bs = std::to_string(b);
      const S cb = named_series("catalan_power", 12, b), mb = named_series("motzkin_family", 12, b);
      c.check(as_ints(cb) == cat.at(b).values, "C^b, b=" + bs);
      c.check(as_ints(mb) == mot.at(b).values, "M(xM+1)^{b-1}, b=" + bs);
      std::vector<BigInt> bell_counts;
      for (const auto& q : egf_to_counts(named_series("bell_egf", 12, b))) bell_counts.push_back(q.get_num());
      c.check(bell_counts == bell.at(b).values, "exp(e^x + (b-1)x - 1), b=" + bs);
      for (const auto& [label, fam, gf] : {std::tuple{"catalan", &cat, cb}, std::tuple{"motzkin", &mot, mb}}) {
        c.check(as_ints(series_compose(gf, t / after) / after) == identity_after(*fam, b, 12).values,
                std::string("identity-after substitution ") + label + " b=" + bs);
        c.check(as_ints(series_compose(gf, t * t / before) / before) == identity_before(*fam, b, 12).values,
                std::string("identity-before substitution ") + label + " b=" + bs);
      }
    }
  });
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* criterion : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9}) ok = criterion() && ok;
  std::cout << (ok ? "all acceptance criteria passed" : "some acceptance criteria failed") << '\n';
  return ok ? 0 : 1;
}
