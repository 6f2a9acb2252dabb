#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eco {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const Rational& v) { return v.get_str(10); }

/// C(n, k) for n ≥ 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// Rising factorial (x)^y = x(x+1)...(x+y-1); empty product is 1.
BigInt rising_factorial(std::int64_t x, std::int64_t y);

/// Falling factorial (x)_y = x(x-1)...(x-y+1); empty product is 1.
BigInt falling_factorial(std::int64_t x, std::int64_t y);

/// Fib(n) := sum_k C(n-k, k), so Fib = 1, 1, 2, 3, 5, 8, ...
BigInt fibonacci_sum(std::int64_t n);

/// Narrows to int64, throwing InvalidArgument when out of range.
std::int64_t to_int64(const BigInt& v, const char* what);

}  // namespace eco
