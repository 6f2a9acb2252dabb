#include "eco/bigint.hpp"

#include "eco/error.hpp"

namespace eco {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial: negative n");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt rising_factorial(std::int64_t x, std::int64_t y) {
  if (y < 0) throw Error(ErrorKind::InvalidArgument, "rising_factorial: negative length");
  BigInt r = 1;
  for (std::int64_t i = 0; i < y; ++i) r *= static_cast<long>(x + i);
  return r;
}

BigInt falling_factorial(std::int64_t x, std::int64_t y) {
  if (y < 0) throw Error(ErrorKind::InvalidArgument, "falling_factorial: negative length");
  BigInt r = 1;
  for (std::int64_t i = 0; i < y; ++i) r *= static_cast<long>(x - i);
  return r;
}

BigInt fibonacci_sum(std::int64_t n) {
  BigInt s = 0;
  for (std::int64_t k = 0; 2 * k <= n; ++k) s += binomial(n - k, k);
  return s;
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " out of range: " + v.get_str());
  return v.get_si();
}

}  // namespace eco
