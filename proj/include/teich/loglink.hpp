#pragma once

#include "teich/rational.hpp"

#include <map>

namespace teich {

/// Principal unit u in (Z/p^N)^*, u = 1 mod p (mod 4 when p = 2).
class PadicUnit {
 public:
  PadicUnit(long p, int precision, const Integer& value);

  long prime() const noexcept { return p_; }
  int precision() const noexcept { return N_; }
  const Integer& value() const noexcept { return value_; }
  Integer modulus() const;

  friend PadicUnit operator*(const PadicUnit& a, const PadicUnit& b);
  friend bool operator==(const PadicUnit&, const PadicUnit&) = default;

 private:
  long p_;
  int N_;
  Integer value_;  // representative in [0, p^N)
};

PadicUnit pow(const PadicUnit& u, unsigned long k);

/// Guaranteed valuation of u - 1: 1 for odd p, 2 for p = 2.
int principal_unit_valuation(long p);

/// Least precision at which log lands in a nonzero quotient p^v Z / p^N.
int minimum_log_precision(long p);

/// p-adic logarithm sum_{k>=1} (-1)^(k+1) (u-1)^k / k mod p^N. Each term is
/// formed at precision N + v_p(k) before dividing out p^(v_p(k)), and the sum
/// stops at the first k with k v(u-1) - floor(log_p k) >= N, after which no
/// term reaches p^N. Throws PrecisionError when N is below
/// minimum_log_precision(p).
Integer padic_log(const PadicUnit& u);

/// v_p(p) across the canonical fiber: v_n = v0 p^n on a window of indices.
/// One step down in n is one phi^-1 step, where |p| grows.
struct LogLinkChain {
  long p;
  Rat v0;
  std::map<long, Rat> entries;

  bool ratios_exact() const;
  /// |p|_{K_{n-1}} > |p|_{K_n}, i.e. v_{n-1} < v_n, for all adjacent entries.
  bool norms_grow_downward() const;
};

LogLinkChain chain_build(long p, const Rat& v0, long lo, long hi);

struct EpsilonStep {
  long m;
  bool trivial;  // eps >= 1, where m = 0 always works
};

/// Least m >= 0 with 1/p^m < eps, so |p|_{K_{n-m}} > |p|_{K_n}^eps.
EpsilonStep m_of_epsilon(long p, const Rat& eps);

/// p-power exponent separating the Kummer embeddings at y_{n1} and y_{n2}.
long kummer_shift(long n1, long n2);

}  // namespace teich
