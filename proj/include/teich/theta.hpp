#pragma once

#include "teich/cyclo.hpp"
#include "teich/rational.hpp"

#include <utility>
#include <vector>

namespace teich {

/// Signed: sum_n (-1)^n q^(n(n+1)/2) u^(2n+1), the series satisfying the
/// inversion and quasi-periodicity laws. Unsigned drops the (-1)^n factor and
/// exists only as a negative control.
enum class SignConvention { Signed, Unsigned };

/// One term of q^(-1/8) sum_n q^((n+1/2)^2/2) u^(2n+1). The prefactor is folded
/// in, so q_exponent = n(n+1)/2 is an integer.
struct ThetaTerm {
  long n;
  int sign;
  long q_exponent;
  long u_exponent;

  friend bool operator==(const ThetaTerm&, const ThetaTerm&) = default;
};

ThetaTerm theta_term(long n, SignConvention convention = SignConvention::Signed);

struct ThetaSeriesTrunc {
  long N;
  SignConvention convention;
  std::vector<ThetaTerm> terms;  // n = -N..N in increasing order

  const ThetaTerm& at(long n) const { return terms.at(static_cast<std::size_t>(n + N)); }
  bool in_window(long n) const { return n >= -N && n <= N; }
};

ThetaSeriesTrunc theta_terms(long N, SignConvention convention = SignConvention::Signed);

struct InversionReport {
  bool pass = false;
  long terms_checked = 0;
  // (n, -n-1) with both indices inside the window.
  std::vector<std::pair<long, long>> pairs;
  // n = N, whose partner -N-1 lies outside the window; checked against the
  // term formula instead.
  bool boundary_consistent = false;
  // Paired terms cancel at u = 1.
  bool theta_at_one_vanishes = false;
};

InversionReport check_inversion_antisymmetry(long N, SignConvention convention = SignConvention::Signed);

struct QuasiPeriodicityReport {
  bool pass = false;
  long j = 0;
  long overlap_size = 0;
  Rat q_shift;  // -j^2/2, in units of q
  long u_shift = 0;  // -2j
  int sign_factor = 1;  // (-1)^j
  std::vector<long> mismatches;
};

/// theta(q^(j/2) u) = (-1)^j q^(-j^2/2) u^(-2j) theta(u) on the window
/// [-N+|j|, N-|j|], term by term via n -> n + j. Throws WindowError if |j| > N.
QuasiPeriodicityReport check_quasi_periodicity(long j, long N,
                                               SignConvention convention = SignConvention::Signed);

/// xi_j = (-1)^j q^(j^2/2ell) zeta_ell^(2j); the reciprocal is the ratio
/// theta(q^(j/2ell) zeta_ell) / theta(zeta_ell).
struct ThetaValue {
  long j;
  long ell;
  int sign;
  Rat q_exponent;      // in units of v(q)
  long zeta_exponent;  // exponent of zeta_ell, in [0, ell)

  ThetaValue reciprocal() const;
  friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
};

/// Obtained from the quasi-periodicity law in the base parameter q^(1/ell) at
/// u = zeta_ell. Requires 1 <= j <= (ell-1)/2.
ThetaValue theta_value(long j, long ell);

/// Truncated theta series in the base parameter Q = q^(1/ell) = s^2 evaluated
/// at u = s^j zeta_ell^k, where s = q^(1/2ell):
///   sum_{|n|<=N} (-1)^n s^(n(n+1) + j(2n+1)) zeta_ell^(k(2n+1)).
QLaurent eval_theta_laurent(long j, long k, long ell, long N,
                            SignConvention convention = SignConvention::Signed);

/// Smallest s-exponent contributed by any index outside [-N, N] in
/// eval_theta_laurent(j, ., ., N). Coefficients strictly below it are exact.
long truncation_exponent_bound(long j, long N);

struct ThetaValueConsistency {
  bool pass = false;
  long compared_below = 0;       // exponent bound for the exact comparison
  long lowest_shift = 0;         // lowest exponent of shifted minus unshifted
  long expected_lowest_shift = 0;  // -q_exponent * 2 ell
};

/// Checks theta(s^j zeta^k) = (-1)^j s^(-j^2) zeta^(-2jk) theta(zeta^k) on all
/// exactly known coefficients and the lowest-exponent contract against
/// theta_value(j, ell). Requires k not divisible by ell and j <= N.
ThetaValueConsistency check_theta_value_consistency(long j, long k, long ell, long N);

}  // namespace teich
