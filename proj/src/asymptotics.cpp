#include "eco/asymptotics.hpp"

#include <cmath>
#include <string>

#include "eco/error.hpp"
#include "eco/operators.hpp"
#include "eco/tree_engine.hpp"

namespace eco {

AsymptoticCase parse_asymptotic_case(std::string_view name) {
  if (name == "a128720") return AsymptoticCase::a128720;
  if (name == "a090344") return AsymptoticCase::a090344;
  throw Error(ErrorKind::UnknownName, "unknown asymptotic case '" + std::string(name) + "'");
}

std::string_view case_name(AsymptoticCase c) {
  return c == AsymptoticCase::a128720 ? "a128720" : "a090344";
}

AsymptoticConstants constants(AsymptoticCase c) {
  if (c == AsymptoticCase::a128720) {
    const double s13 = std::sqrt(13.0);
    return {std::sqrt(22.0 * s13 - 78.0), (s13 - 3.0) / 2.0};
  }
  const double s17 = std::sqrt(17.0);
  const double r1 = (-1.0 - s17) / 8.0;
  const double r2 = (s17 - 1.0) / 8.0;
  return {std::sqrt((1.0 - r2 / r1) / (1.0 - r2)), r2};
}

double estimate(AsymptoticCase c, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const auto [k, rho] = constants(c);
  const double m = n + 2.0;
  const double log_central = std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0);
  const double log_value = std::log(k / 2.0) - m * std::log(rho) - m * std::log(4.0) -
                           std::log(2.0 * n + 3.0) + log_central;
  return std::exp(log_value);
}

BigInt exact_value(AsymptoticCase c, int n) {
  const MixedRule rule = c == AsymptoticCase::a128720
                             ? doubled_rule(1, builtin("motzkin"), builtin("identity"))
                             : doubled_rule(1, builtin("identity"), builtin("catalan"));
  return mixed_sequence(rule, n).values[static_cast<std::size_t>(n)];
}

double relative_error(const BigInt& exact, double estimate) {
  if (exact <= 0) throw Error(ErrorKind::InvalidArgument, "relative_error needs exact > 0");
  // mpf keeps the subtraction exact enough before rounding to double
  mpf_class e(exact, 256);
  mpf_class diff = abs(e - mpf_class(estimate, 256));
  mpf_class rel = diff / e;
  return rel.get_d();
}

}  // namespace eco
