#pragma once

// Test-only reference computations. None of these call into the library code
// paths they are used to check.

#include "teich/rational.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using teich::Integer;
using teich::Rat;

/// p-adic log of an integer principal unit by summing the rational series
/// directly and reducing the (p-integral) partial sum mod p^N.
inline Integer padic_log_by_rationals(const Integer& u, long p, int N) {
  const Rat x(u - 1);
  Rat sum = 0;
  Rat xk = 1;
  for (long k = 1; k < 8 * N + 40; ++k) {
    xk *= x;
    Rat term = xk / k;
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
  Integer inv;
  Integer den = sum.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Integer r = (sum.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

/// Direct complex evaluation of the truncated signed series in base Q = s^2 at
/// u = s^j zeta_ell^k.
inline std::complex<double> theta_numeric(long j, long k, long ell, long N, double s) {
  const double pi = 3.14159265358979323846;
  const std::complex<double> zeta = std::polar(1.0, 2.0 * pi / static_cast<double>(ell));
  const std::complex<double> u = std::pow(s, static_cast<double>(j)) * std::pow(zeta, static_cast<double>(k));
  std::complex<double> total = 0;
  for (long n = -N; n <= N; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    total += sign * std::pow(s, static_cast<double>(n * (n + 1))) * std::pow(u, static_cast<double>(2 * n + 1));
  }
  return total;
}

/// Random exponent k/d with 1 <= k <= 40 and d from a small pool that mixes
/// p-power and non-p-power denominators.
inline Rat random_positive_exponent(std::mt19937_64& rng) {
  static const long dens[] = {1, 2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 81};
  std::uniform_int_distribution<long> kd(1, 40);
  std::uniform_int_distribution<std::size_t> di(0, std::size(dens) - 1);
  return teich::make_rat(kd(rng), dens[di(rng)]);
}

}  // namespace oracle
