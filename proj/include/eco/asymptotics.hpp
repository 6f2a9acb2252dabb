#pragma once

#include <string_view>

#include "eco/bigint.hpp"

namespace eco {

/// The two singularity-analysis estimates:
///   S_n ~ (K/2) rho^{-(n+2)} C(2n+4, n+2) / (4^{n+2} (2n+3))
/// a128720: row sums of (1) motzkin^{+1} 1^{+2}, rho = (sqrt 13 - 3)/2,
///          K = sqrt(22 sqrt 13 - 78).
/// a090344: row sums of (1) 1^{+1} catalan^{+2}, rho = r2, the positive
///          root of 1 - t - 4t^2, K = sqrt((1 - r2/r1)/(1 - r2)).
enum class AsymptoticCase { a128720, a090344 };

AsymptoticCase parse_asymptotic_case(std::string_view name);
std::string_view case_name(AsymptoticCase c);

struct AsymptoticConstants {
  double k;
  double singularity;
};

AsymptoticConstants constants(AsymptoticCase c);

/// Evaluated in log space, so it stays finite for large n.
double estimate(AsymptoticCase c, int n);

/// The exact S_n from the mixed tree engine.
BigInt exact_value(AsymptoticCase c, int n);

/// |exact - estimate| / exact, exact > 0.
double relative_error(const BigInt& exact, double estimate);

}  // namespace eco
