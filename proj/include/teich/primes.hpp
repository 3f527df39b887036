#pragma once

#include <vector>

namespace teich {

bool is_prime(long n);

std::vector<long> primes_in(long lo, long hi);

// (ell - 1) / 2 for an odd prime ell.
inline long ell_star(long ell) { return (ell - 1) / 2; }

// Throws DomainError unless ell is an odd prime.
void require_odd_prime(long ell);

// Throws DomainError unless ell is an odd prime different from p.
void require_auxiliary_prime(long ell, long p);

}  // namespace teich
