#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eco/bigint.hpp"

namespace eco {

/// The label (k) of a generating-tree node. Always >= 0.
using Label = std::int64_t;

/// Finite formal sum  sum_k c_k x^k  with big-integer coefficients, keyed by
/// label. Zero coefficients are never stored, so two polynomials are equal
/// iff their term maps are equal.
class LabelPolynomial {
 public:
  using Terms = std::map<Label, BigInt>;

  LabelPolynomial() = default;
  LabelPolynomial(std::initializer_list<std::pair<const Label, BigInt>> terms);

  static LabelPolynomial monomial(Label k, const BigInt& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of x^k (zero when absent).
  BigInt coefficient(Label k) const;
  Label min_label() const;
  Label max_label() const;

  /// this += c * x^k
  void add_term(Label k, const BigInt& c);
  /// this += c * q
  void add_scaled(const LabelPolynomial& q, const BigInt& c);

  bool all_nonnegative() const;

  friend bool operator==(const LabelPolynomial&, const LabelPolynomial&) = default;

 private:
  Terms terms_;
};

BigInt eval_at_one(const LabelPolynomial& p);

/// p + c*q, zero terms pruned.
LabelPolynomial add_scaled(const LabelPolynomial& p, const LabelPolynomial& q,
                           const BigInt& c);

BigInt weighted_eval(const LabelPolynomial& p,
                     const std::function<BigInt(Label)>& weight);

/// Multiplication by x^s: every label moves up by s.
LabelPolynomial shift(const LabelPolynomial& p, Label s);

LabelPolynomial operator+(const LabelPolynomial& p, const LabelPolynomial& q);
LabelPolynomial operator-(const LabelPolynomial& p, const LabelPolynomial& q);
LabelPolynomial operator*(const BigInt& c, const LabelPolynomial& p);

/// Human-readable form such as "{2:2, 3:2, 4:1}".
std::string to_string(const LabelPolynomial& p);

enum class Provenance { engine, formula, oracle, series, recursion };

std::string_view provenance_name(Provenance p);

/// f_0, f_1, ... together with the route that produced them.
struct Sequence {
  std::vector<BigInt> values;
  Provenance provenance = Provenance::engine;

  std::size_t size() const noexcept { return values.size(); }
  const BigInt& operator[](std::size_t i) const { return values[i]; }
};

/// Term-by-term equality of the values, ignoring provenance.
bool same_values(const Sequence& a, const Sequence& b);

}  // namespace eco
