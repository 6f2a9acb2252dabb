#include "eco/series.hpp"

#include "eco/error.hpp"

namespace eco {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "a series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs, int order) : coeffs_(idx(order) + 1) {
  require_order(order);
  int i = 0;
  for (long c : coeffs) {
    if (i > order) break;
    coeffs_[idx(i++)] = c;
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  require_order(order);
  return TruncatedSeries(std::vector<Rational>(idx(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  return monomial(0, c, order);
}

TruncatedSeries TruncatedSeries::monomial(int power, const Rational& c, int order) {
  TruncatedSeries s = zero(order);
  if (power >= 0 && power <= order) s[power] = c;
  return s;
}

int TruncatedSeries::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (coeffs_[idx(i)] != 0) return i;
  return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  require_order(order);
  if (order > this->order())
    throw Error(ErrorKind::OrderExceeded, "cannot extend a series of order " +
                                              std::to_string(this->order()) + " to " + std::to_string(order));
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (int i = 0; i <= r.order(); ++i) r[i] = -r[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (int i = 0; i <= r.order(); ++i) r[i] *= c;
  return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a[0] == 0) throw Error(ErrorKind::DivisionByNonUnit, "series with zero constant term is not invertible");
  const int n = a.order();
  TruncatedSeries r = TruncatedSeries::zero(n);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int i = 1; i <= m; ++i) s += a[i] * r[m - i];
    r[m] = -s * inv0;
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  return a.truncated(n) * inverse(b.truncated(n));
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series operation");
}

TruncatedSeries power(const TruncatedSeries& a, int k) {
  if (k < 0) return power(inverse(a), -k);
  TruncatedSeries r = TruncatedSeries::constant(1, a.order());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

TruncatedSeries mul_t_power(const TruncatedSeries& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "mul_t_power needs k >= 0");
  TruncatedSeries r = TruncatedSeries::zero(a.order());
  for (int i = 0; i + k <= a.order(); ++i) r[i + k] = a[i];
  return r;
}

TruncatedSeries div_t_power(const TruncatedSeries& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "div_t_power needs k >= 0");
  if (k > a.order()) throw Error(ErrorKind::OrderExceeded, "division by t^k exhausts the series order");
  for (int i = 0; i < k; ++i)
    if (a[i] != 0)
      throw Error(ErrorKind::BadValuation,
                  "division by t^" + std::to_string(k) + " of a series with nonzero t^" + std::to_string(i) + " term");
  TruncatedSeries r = TruncatedSeries::zero(a.order() - k);
  for (int i = 0; i <= r.order(); ++i) r[i] = a[i + k];
  return r;
}

TruncatedSeries series_sqrt(const TruncatedSeries& a) {
  const Rational& c0 = a[0];
  if (c0 <= 0 || !mpz_perfect_square_p(c0.get_num_mpz_t()) || !mpz_perfect_square_p(c0.get_den_mpz_t()))
    throw Error(ErrorKind::NonSquareConstantTerm,
                "constant term " + c0.get_str() + " is not the square of a positive rational");
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), c0.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), c0.get_den_mpz_t());
  const int n = a.order();
  TruncatedSeries s = TruncatedSeries::zero(n);
  s[0] = Rational(num, den);
  const Rational half_inv = 1 / (2 * s[0]);
  for (int m = 1; m <= n; ++m) {
    Rational acc = a[m];
    for (int i = 1; i < m; ++i) acc -= s[i] * s[m - i];
    s[m] = acc * half_inv;
  }
  return s;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != 0)
    throw Error(ErrorKind::NonzeroInnerConstant, "inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(n);
  // Horner: o_0 + g (o_1 + g (o_2 + ...))
  TruncatedSeries r = TruncatedSeries::constant(outer[n], n);
  for (int i = n - 1; i >= 0; --i) {
    r = r * in;
    r[0] += outer[i];
  }
  return r;
}

TruncatedSeries series_reversion(const TruncatedSeries& h) {
  if (h.order() < 1 || h[0] != 0 || h[1] == 0)
    throw Error(ErrorKind::BadValuation, "reversion needs h_0 = 0 and h_1 != 0");
  const int n = h.order();
  const Rational inv1 = 1 / h[1];
  TruncatedSeries g = TruncatedSeries::monomial(1, inv1, n);
  // The t^m coefficient of h(g) depends on g_m only through h_1 g_m.
  for (int m = 2; m <= n; ++m) {
    const TruncatedSeries hg = series_compose(h.truncated(m), g.truncated(m));
    g[m] = -hg[m] * inv1;
  }
  return g;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (a[0] != 0) throw Error(ErrorKind::NonzeroInnerConstant, "exp needs a zero constant term");
  const int n = a.order();
  TruncatedSeries e = TruncatedSeries::zero(n);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 1; k <= m; ++k) s += Rational(k) * a[k] * e[m - k];
    e[m] = s / m;
  }
  return e;
}

std::vector<Rational> egf_to_counts(const TruncatedSeries& egf) {
  std::vector<Rational> out;
  for (int i = 0; i <= egf.order(); ++i) out.push_back(egf[i] * Rational(factorial(i)));
  return out;
}

TruncatedSeries counts_to_egf(const std::vector<Rational>& counts) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < counts.size(); ++i)
    c.push_back(counts[i] / Rational(factorial(static_cast<std::int64_t>(i))));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_transform(const TruncatedSeries& egf) {
  return series_exp(TruncatedSeries::monomial(1, 1, egf.order())) * egf;
}

TruncatedSeries a_sequence_from_h(const TruncatedSeries& h) {
  if (h.valuation() != 1) throw Error(ErrorKind::BadValuation, "A-sequence needs h of valuation exactly 1");
  return inverse(div_t_power(series_reversion(h), 1));
}

TruncatedSeries h_from_a_sequence(const TruncatedSeries& a) {
  const int n = a.order() + 1;
  TruncatedSeries h = TruncatedSeries::zero(n);
  for (int pass = 0; pass <= n; ++pass) {
    // A(h) only needs h to order n - 1 since it is multiplied by t
    TruncatedSeries ah = series_compose(a, h.truncated(n - 1));
    TruncatedSeries next = TruncatedSeries::zero(n);
    for (int i = 0; i < n; ++i) next[i + 1] = ah[i];
    if (next == h) return h;
    h = next;
  }
  return h;
}

TruncatedSeries amatrix_fixed_point(const std::vector<TruncatedSeries>& rows, int order) {
  require_order(order);
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "A-matrix needs at least row 0");
  TruncatedSeries a = rows[0].truncated(order);
  for (int pass = 0; pass <= order + 2; ++pass) {
    const TruncatedSeries inv = inverse(a);
    TruncatedSeries next = rows[0].truncated(order);
    TruncatedSeries inv_pow = TruncatedSeries::constant(1, order);
    for (std::size_t j = 1; j < rows.size() && static_cast<int>(j) <= order; ++j) {
      inv_pow = inv_pow * inv;
      next = next + mul_t_power(inv_pow * rows[j].truncated(order), static_cast<int>(j));
    }
    if (next == a) return a;
    a = std::move(next);
  }
  throw Error(ErrorKind::NoConvergence, "A-matrix fixed point did not stabilize");
}

RiordanArray::RiordanArray(TruncatedSeries d, TruncatedSeries h) : d_(std::move(d)), h_(std::move(h)) {
  if (h_[0] != 0) throw Error(ErrorKind::BadValuation, "Riordan h must have zero constant term");
  if (d_[0] == 0) throw Error(ErrorKind::BadValuation, "Riordan d must have nonzero constant term");
}

Rational riordan_entry(const RiordanArray& r, int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "riordan_entry needs n, k >= 0");
  if (n > r.order())
    throw Error(ErrorKind::OrderExceeded,
                "row " + std::to_string(n) + " beyond series order " + std::to_string(r.order()));
  if (k > n) return 0;
  const int ord = r.order();
  return (r.d().truncated(ord) * power(r.h().truncated(ord), k))[n];
}

TruncatedSeries riordan_row_sums(const RiordanArray& r) {
  const int ord = r.order();
  return r.d().truncated(ord) / (TruncatedSeries::constant(1, ord) - r.h().truncated(ord));
}

Rational stretched_entry(const RiordanArray& r, int n, int k) {
  if (k < 0 || n < 0) throw Error(ErrorKind::InvalidArgument, "stretched_entry needs n, k >= 0");
  if (n - k < 0) return 0;
  return riordan_entry(r, n - k, k);
}

TruncatedSeries stretched_row_sums(const RiordanArray& r) {
  const int ord = r.order();
  return r.d().truncated(ord) / (TruncatedSeries::constant(1, ord) - mul_t_power(r.h().truncated(ord), 1));
}

std::vector<std::string> to_strings(const TruncatedSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace eco
