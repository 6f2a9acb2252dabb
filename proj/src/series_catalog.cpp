#include "eco/series_catalog.hpp"

#include "eco/error.hpp"

namespace eco {

namespace {

using S = TruncatedSeries;

S poly(std::initializer_list<long> c, int order) { return S(c, order); }

S one(int n) { return S::constant(1, n); }

// (1 - sqrt(1 - 4t)) / (2t)
S catalan(int n) {
  S s = series_sqrt(poly({1, -4}, n + 1));
  return Rational(1, 2) * div_t_power(one(n + 1) - s, 1);
}

// (1 - t - sqrt(1 - 2t - 3t^2)) / (2t^2)
S motzkin(int n) {
  S s = series_sqrt(poly({1, -2, -3}, n + 2));
  return Rational(1, 2) * div_t_power(poly({1, -1}, n + 2) - s, 2);
}

// (1/2)(1 - sqrt((1 - 3t - t^2) / (1 + t - t^2)))
S h_a128720(int n) {
  S ratio = poly({1, -3, -1}, n) / poly({1, 1, -1}, n);
  return Rational(1, 2) * (one(n) - series_sqrt(ratio));
}

// 1 - sqrt((1 - t - 4t^2) / (1 - t))
S radical_a090344(int n) {
  S ratio = poly({1, -1, -4}, n) / poly({1, -1}, n);
  return one(n) - series_sqrt(ratio);
}

const std::vector<NamedSeriesInfo> kCatalog = {
    {"one", "1", false, false},
    {"t", "t", false, false},
    {"geometric", "1/(1-t)", false, false},
    {"pascal_h", "t/(1-t)", false, false},
    {"fibonacci", "1/(1-t-t^2)", false, false},
    {"catalan", "C(t) = (1 - sqrt(1-4t))/(2t)", false, false},
    {"tcatalan", "t C(t)", false, false},
    {"catalan_power", "C(t)^b", false, true},
    {"motzkin", "M(t) = (1 - t - sqrt(1-2t-3t^2))/(2t^2)", false, false},
    {"motzkin_family", "M(t) (t M(t) + 1)^(b-1)", false, true},
    {"exp", "e^t (EGF of 1, 1, 1, ...)", true, false},
    {"bell_egf", "exp(e^t + (b-1)t - 1)", true, true},
    {"a128720_A", "(1 - t + t^2 + sqrt(1 - 2t + 7t^2 - 10t^3 + 5t^4)) / (2(1-t))", false, false},
    {"a128720_h", "(1/2)(1 - sqrt((1-3t-t^2)/(1+t-t^2)))", false, false},
    {"a128720_d", "h(t)/t", false, false},
    {"a128720_S", "d(t)/(1 - h(t))", false, false},
    {"a090344_A", "(1 + t + t^2 + sqrt(1 + 2t + 3t^2 - 2t^3 + t^4)) / 2", false, false},
    {"a090344_h", "(1/(2t))(1 - sqrt((1-t-4t^2)/(1-t)))", false, false},
    {"a090344_d", "1/(1-t)", false, false},
    {"a090344_S", "(1/(2t^2))(1 - sqrt((1-t-4t^2)/(1-t)))", false, false},
};

}  // namespace

const std::vector<NamedSeriesInfo>& named_series_catalog() { return kCatalog; }

const NamedSeriesInfo& named_series_info(std::string_view name) {
  for (const auto& info : kCatalog)
    if (info.name == name) return info;
  throw Error(ErrorKind::UnknownName, "unknown series '" + std::string(name) + "'");
}

TruncatedSeries named_series(std::string_view name, int n, std::int64_t b) {
  const NamedSeriesInfo& info = named_series_info(name);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
  if (info.takes_b && b < 1) throw Error(ErrorKind::InvalidArgument, "parameter b must be >= 1");

  const std::string_view id = info.name;
  if (id == "one") return one(n);
  if (id == "t") return S::monomial(1, 1, n);
  if (id == "geometric") return one(n) / poly({1, -1}, n);
  if (id == "pascal_h") return S::monomial(1, 1, n) / poly({1, -1}, n);
  if (id == "fibonacci") return one(n) / poly({1, -1, -1}, n);
  if (id == "catalan") return catalan(n);
  if (id == "tcatalan") return mul_t_power(catalan(n), 1);
  if (id == "catalan_power") return power(catalan(n), static_cast<int>(b));
  if (id == "motzkin") return motzkin(n);
  if (id == "motzkin_family") {
    S m = motzkin(n);
    return m * power(mul_t_power(m, 1) + one(n), static_cast<int>(b - 1));
  }
  if (id == "exp") return series_exp(S::monomial(1, 1, n));
  if (id == "bell_egf") {
    S inner = series_exp(S::monomial(1, 1, n)) - one(n) + S::monomial(1, Rational(b - 1), n);
    return series_exp(inner);
  }
  if (id == "a128720_A") {
    S root = series_sqrt(poly({1, -2, 7, -10, 5}, n));
    return (poly({1, -1, 1}, n) + root) / poly({2, -2}, n);
  }
  if (id == "a128720_h") return h_a128720(n);
  if (id == "a128720_d") return div_t_power(h_a128720(n + 1), 1);
  if (id == "a128720_S") {
    S h = h_a128720(n + 1);
    return div_t_power(h, 1) / (one(n) - h.truncated(n));
  }
  if (id == "a090344_A") {
    S root = series_sqrt(poly({1, 2, 3, -2, 1}, n));
    return Rational(1, 2) * (poly({1, 1, 1}, n) + root);
  }
  if (id == "a090344_h") return Rational(1, 2) * div_t_power(radical_a090344(n + 1), 1);
  if (id == "a090344_d") return one(n) / poly({1, -1}, n);
  if (id == "a090344_S") return Rational(1, 2) * div_t_power(radical_a090344(n + 2), 2);
  throw Error(ErrorKind::UnknownName, "unknown series '" + std::string(name) + "'");
}

}  // namespace eco
