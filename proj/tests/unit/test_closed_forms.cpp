#include <doctest.h>

#include "eco/closed_forms.hpp"
#include "eco/error.hpp"
#include "eco/operators.hpp"
#include "eco/tree_engine.hpp"
#include "reference.hpp"

using namespace eco;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RuleOperator op(const std::string& name) {
  return name == "L_bracket:2" ? builtin("L_bracket", {2}) : builtin(name);
}

}  // namespace

TEST_CASE("mixed_formula examples") {
  CHECK(mixed_formula(builtin("bell"), builtin("identity"), 1, 3)[3] == 7);
  CHECK(mixed_formula(builtin("factorial"), builtin("L_bracket", {2}), 1, 3)[3] == 18);
  CHECK(mixed_formula(builtin("identity"), builtin("catalan"), 1, 2)[2] == 2);
  CHECK(mixed_formula(builtin("bell"), builtin("identity"), 1, 5).provenance == Provenance::formula);
  try {
    (void)mixed_formula(builtin("catalan"), builtin("motzkin"), 1, 4);
    FAIL("expected NonCommutingOperators");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommutingOperators);
    CHECK(e.witness() == 1);
  }
}

TEST_CASE("formula equals engine on the commuting pairs") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"bell", "identity"},    {"motzkin", "identity"}, {"catalan", "identity"},
      {"identity", "catalan"}, {"identity", "motzkin"}, {"identity", "bell"},
      {"factorial", "L_bracket:2"}, {"factorial", "factorial"}};
  for (const auto& [o, s] : pairs) {
    for (Label b = 1; b <= 3; ++b) {
      CAPTURE(o);
      CAPTURE(s);
      CAPTURE(b);
      CHECK(same_values(mixed_formula(op(o), op(s), b, 18), mixed_sequence(doubled_rule(b, op(o), op(s)), 18)));
    }
  }
}

TEST_CASE("identity specializations") {
  const auto cat = catalan_family(2, 12), mot = motzkin_family(2, 12), bell = bell_family(2, 12);
  CHECK(identity_after(cat, 1, 4).values == ints({1, 1, 3, 7, 21}));
  CHECK(identity_after(mot, 1, 6).values == ints({1, 1, 3, 6, 16, 40, 109}));
  CHECK(identity_after(family_from_engine(builtin("identity"), 1, 4), 1, 4).values == ints({1, 1, 2, 3, 5}));
  CHECK(identity_before(cat, 1, 4).values == ints({1, 1, 2, 3, 6}));
  CHECK(identity_before(bell, 1, 8).values == ints({1, 1, 2, 3, 6, 11, 23, 47, 103}));
  CHECK(identity_before(family_from_engine(builtin("identity"), 1, 4), 1, 4).values == ints({1, 1, 2, 3, 5}));
  for (Label b = 1; b <= 2; ++b) {
    for (const auto& [name, fam] : {std::pair{"catalan", &cat}, std::pair{"motzkin", &mot}, std::pair{"bell", &bell}}) {
      CAPTURE(name);
      CHECK(same_values(identity_after(*fam, b, 12), mixed_formula(builtin(name), builtin("identity"), b, 12)));
      CHECK(same_values(identity_before(*fam, b, 12), mixed_formula(builtin("identity"), builtin(name), b, 12)));
    }
  }
}

TEST_CASE("family recursion examples") {
  CHECK(bell_family(2, 4).at(2).values == ints({1, 2, 5, 15, 52}));
  CHECK(bell_family(1, 6).at(1).values == ints({1, 1, 2, 5, 15, 52, 203}));
  CHECK(bell_family(2, 1).at(2)[1] == 2);
  CHECK(catalan_family(2, 4).at(2).values == ints({1, 2, 5, 14, 42}));
  CHECK(catalan_family(2, 2).at(2)[2] == 5);
  CHECK(catalan_family(1, 5).at(1).values == ints({1, 1, 2, 5, 14, 42}));
  CHECK(motzkin_family(2, 2).at(2).values == ints({1, 2, 4}));
  CHECK(motzkin_family(1, 5).at(1).values == ints({1, 1, 2, 4, 9, 21}));
  CHECK(motzkin_family(2, 0).at(2).values == ints({1}));
  CHECK(bell_family(3, 5).at(3).provenance == Provenance::recursion);
  CHECK_THROWS_AS((void)bell_family(2, 4).at(3), Error);
}

TEST_CASE("family recursions match the engine for b <= 4, n <= 14") {
  for (const auto& [name, make] :
       {std::pair{"bell", &bell_family}, std::pair{"catalan", &catalan_family}, std::pair{"motzkin", &motzkin_family}}) {
    const auto rec = make(4, 14);
    const auto eng = family_from_engine(builtin(name), 4, 14);
    for (Label b = 1; b <= 4; ++b) {
      CAPTURE(name);
      CAPTURE(b);
      CHECK(same_values(rec.at(b), eng.at(b)));
      CHECK(rec.at(b)[0] == 1);
    }
  }
}

TEST_CASE("factorial family term") {
  CHECK(factorial_family_term(1, 5) == 120);
  CHECK(factorial_family_term(3, 2) == 12);
  CHECK(factorial_family_term(4, 0) == 1);
  for (Label b = 1; b <= 5; ++b) {
    const auto eng = sequence_of(builtin("factorial"), b, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(factorial_family_term(b, n) == eng[static_cast<std::size_t>(n)]);
      if (n < 12) CHECK(factorial_family_term(b, n + 1) == b * factorial_family_term(b + 1, n));
    }
  }
}

TEST_CASE("factorial mixed closed form") {
  CHECK(factorial_mixed_closed(1, 5) == 960);
  CHECK(factorial_mixed_closed(1, 0) == 1);
  CHECK(factorial_mixed_closed(2, 3) == 72);
  const auto fib = ref::fib(15);
  for (Label b = 1; b <= 3; ++b) {
    const auto eng = mixed_sequence(doubled_rule(b, builtin("factorial"), builtin("L_bracket", {2})), 15);
    const auto formula = mixed_formula(builtin("factorial"), builtin("L_bracket", {2}), b, 15);
    for (int n = 0; n <= 15; ++n) {
      CAPTURE(b);
      CAPTURE(n);
      CHECK(factorial_mixed_closed(b, n) == eng[static_cast<std::size_t>(n)]);
      CHECK(factorial_mixed_closed(b, n) == formula[static_cast<std::size_t>(n)]);
      CHECK(factorial_mixed_closed(b, n) == ref::rising(b, n) * fib[static_cast<std::size_t>(n)]);
      // middle step: each summand collapses to C(n-k, k) (n+b-1)!/(b-1)!
      for (int k = 0; 2 * k <= n; ++k) {
        const ref::Z summand = ref::binom(n - k, k) * ref::rising(b, 2 * k) * ref::fact(n - 2 * k) *
                               ref::binom(n + b - 1, b + 2 * k - 1);
        CHECK(summand == ref::binom(n - k, k) * ref::fact(n + b - 1) / ref::fact(b - 1));
      }
    }
  }
}

TEST_CASE("mu level counts") {
  CHECK(mu_level_counts(1, 1) == std::pair<Label, BigInt>{3, 2});
  CHECK(mu_level_counts(1, 0) == std::pair<Label, BigInt>{1, 1});
  CHECK(mu_level_counts(2, 2) == std::pair<Label, BigInt>{6, 120});
  for (Label s = 1; s <= 4; ++s) {
    const auto m = expand_levels(builtin("L_bracket", {2}), s, 6);
    for (int r = 0; r <= 6; ++r) {
      const auto [label, count] = mu_level_counts(s, r);
      CHECK(m.rows[static_cast<std::size_t>(r)] == LabelPolynomial::monomial(label, count));
    }
  }
}

TEST_CASE("custom commutation bound") {
  // catalan/motzkin fail at label 1 whatever the bound
  CHECK_THROWS_AS((void)mixed_formula(builtin("catalan"), builtin("motzkin"), 3, 2, 3), Error);
  CHECK(mixed_formula(builtin("bell"), builtin("identity"), 1, 5, 40).values == ints({1, 1, 3, 7, 22, 75}));
}
