#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "eco/bigint.hpp"

namespace eco {

/// c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}) with exact rational
/// coefficients. Binary operations truncate to the smaller order.
class TruncatedSeries {
 public:
  /// The zero series of order 0.
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<long> coeffs, int order);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(const Rational& c, int order);
  /// c t^power (zero if power > order).
  static TruncatedSeries monomial(int power, const Rational& c, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  int valuation() const;
  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
/// Throws Error{DivisionByNonUnit} when b has a zero constant term.
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries inverse(const TruncatedSeries& a);
TruncatedSeries power(const TruncatedSeries& a, int k);

/// Multiplication by t^k at the same order.
TruncatedSeries mul_t_power(const TruncatedSeries& a, int k);
/// Division by t^k; loses k orders. Throws Error{BadValuation} if any of
/// the first k coefficients is nonzero.
TruncatedSeries div_t_power(const TruncatedSeries& a, int k);

/// s with s*s = a and s_0 > 0. Throws Error{NonSquareConstantTerm}.
TruncatedSeries series_sqrt(const TruncatedSeries& a);

/// outer(inner(t)). Throws Error{NonzeroInnerConstant}.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse g with h(g(t)) = t. Throws Error{BadValuation}
/// unless h_0 = 0 and h_1 != 0.
TruncatedSeries series_reversion(const TruncatedSeries& h);

/// exp(a) for a with zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// Coefficient-wise conversion c_n -> n! c_n (EGF to counting sequence).
std::vector<Rational> egf_to_counts(const TruncatedSeries& egf);
TruncatedSeries counts_to_egf(const std::vector<Rational>& counts);

/// e^t f(t) for an exponential generating function f.
TruncatedSeries binomial_transform(const TruncatedSeries& egf);

/// A(y) = y / hbar(y), hbar the compositional inverse of h. Loses one order.
TruncatedSeries a_sequence_from_h(const TruncatedSeries& h);

/// Solves h = t A(h) by iteration; the result has order A.order() + 1.
TruncatedSeries h_from_a_sequence(const TruncatedSeries& a);

/// Fixed point of A = sum_j t^j A^{-j} P^{[j]}, iterated from A = P^{[0]}
/// until a full pass changes nothing up to `order`. Rows beyond the list
/// are zero. Throws Error{NoConvergence}.
TruncatedSeries amatrix_fixed_point(const std::vector<TruncatedSeries>& rows, int order);

/// Riordan array (d, h): entry (n, k) is [t^n] d h^k.
class RiordanArray {
 public:
  /// Throws Error{BadValuation} unless h_0 = 0 and d_0 != 0.
  RiordanArray(TruncatedSeries d, TruncatedSeries h);

  const TruncatedSeries& d() const noexcept { return d_; }
  const TruncatedSeries& h() const noexcept { return h_; }
  int order() const noexcept { return std::min(d_.order(), h_.order()); }

 private:
  TruncatedSeries d_;
  TruncatedSeries h_;
};

/// [t^n] d h^k. Throws Error{OrderExceeded} when n > order.
Rational riordan_entry(const RiordanArray& r, int n, int k);

/// d / (1 - h)
TruncatedSeries riordan_row_sums(const RiordanArray& r);

/// Vertically stretched array: column k shifted down by k rows, so entry
/// (n, k) is [t^{n-k}] d h^k.
Rational stretched_entry(const RiordanArray& r, int n, int k);

/// Row sums of the stretched array, d / (1 - t h).
TruncatedSeries stretched_row_sums(const RiordanArray& r);

/// Coefficients as "p/q" strings.
std::vector<std::string> to_strings(const TruncatedSeries& s);

}  // namespace eco
