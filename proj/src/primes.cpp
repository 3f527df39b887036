#include "teich/primes.hpp"

#include "teich/errors.hpp"

#include <string>

namespace teich {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

void require_odd_prime(long ell) {
  if (ell % 2 == 0) throw DomainError("ell = " + std::to_string(ell) + " is even");
  if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
}

void require_auxiliary_prime(long ell, long p) {
  require_odd_prime(ell);
  if (ell == p) throw DomainError("ell must differ from the residue characteristic p");
}

}  // namespace teich
