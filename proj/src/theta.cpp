#include "teich/theta.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace teich {

namespace {

int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

long mod(long a, long m) { return ((a % m) + m) % m; }

// Exponent of s in the term n of the evaluation at u = s^j.
long eval_exponent(long n, long j) { return n * (n + 1) + j * (2 * n + 1); }

}  // namespace

ThetaTerm theta_term(long n, SignConvention convention) {
  const int sign = convention == SignConvention::Signed ? parity_sign(n) : 1;
  return ThetaTerm{n, sign, n * (n + 1) / 2, 2 * n + 1};
}

ThetaSeriesTrunc theta_terms(long N, SignConvention convention) {
  if (N < 0) throw DomainError("truncation radius must be nonnegative");
  ThetaSeriesTrunc series{N, convention, {}};
  series.terms.reserve(static_cast<std::size_t>(2 * N + 1));
  for (long n = -N; n <= N; ++n) series.terms.push_back(theta_term(n, convention));
  return series;
}

InversionReport check_inversion_antisymmetry(long N, SignConvention convention) {
  if (N < 1) throw WindowError("inversion check needs N >= 1");
  const ThetaSeriesTrunc series = theta_terms(N, convention);
  InversionReport report;
  bool all_match = true;

  // u -> u^-1 then negate maps term n to (-sign, q, -u); it must coincide
  // with the term at m = -n-1.
  auto image_matches = [](const ThetaTerm& t, const ThetaTerm& partner) {
    return partner.sign == -t.sign && partner.q_exponent == t.q_exponent &&
           partner.u_exponent == -t.u_exponent;
  };

  for (const ThetaTerm& t : series.terms) {
    const long m = -t.n - 1;
    ++report.terms_checked;
    if (series.in_window(m)) {
      all_match = all_match && image_matches(t, series.at(m));
      if (t.n >= 0) report.pairs.emplace_back(t.n, m);
    } else {
      report.boundary_consistent = image_matches(t, theta_term(m, convention));
      all_match = all_match && report.boundary_consistent;
    }
  }

  bool cancels = true;
  for (const auto& [n, m] : report.pairs) {
    cancels = cancels && (series.at(n).sign + series.at(m).sign == 0) &&
              series.at(n).q_exponent == series.at(m).q_exponent;
  }
  const ThetaTerm& tail = series.at(N);
  const ThetaTerm outside = theta_term(-N - 1, convention);
  cancels = cancels && tail.sign + outside.sign == 0 && tail.q_exponent == outside.q_exponent;
  report.theta_at_one_vanishes = cancels;

  report.pass = all_match && report.pairs.size() == static_cast<std::size_t>(N) && cancels;
  return report;
}

QuasiPeriodicityReport check_quasi_periodicity(long j, long N, SignConvention convention) {
  if (std::labs(j) > N) {
    throw WindowError("|j| = " + std::to_string(std::labs(j)) + " exceeds truncation N = " +
                      std::to_string(N));
  }
  const ThetaSeriesTrunc series = theta_terms(N, convention);
  QuasiPeriodicityReport report;
  report.j = j;
  report.q_shift = make_rat(-j * j, 2);
  report.u_shift = -2 * j;
  report.sign_factor = parity_sign(j);

  // Work in half-units of q so that q^(j/2) shifts stay integral.
  const long lo = -N + std::labs(j);
  const long hi = N - std::labs(j);
  for (long n = lo; n <= hi; ++n) {
    const ThetaTerm& t = series.at(n);
    const long lhs_half_q = 2 * t.q_exponent + j * t.u_exponent;
    const ThetaTerm& r = series.at(n + j);
    const int rhs_sign = report.sign_factor * r.sign;
    const long rhs_half_q = 2 * r.q_exponent - j * j;
    const long rhs_u = r.u_exponent + report.u_shift;
    if (t.sign != rhs_sign || lhs_half_q != rhs_half_q || t.u_exponent != rhs_u) {
      report.mismatches.push_back(n);
    }
    ++report.overlap_size;
  }
  report.pass = report.mismatches.empty();
  return report;
}

ThetaValue ThetaValue::reciprocal() const {
  return ThetaValue{j, ell, sign, Rat(-q_exponent), mod(-zeta_exponent, ell)};
}

ThetaValue theta_value(long j, long ell) {
  require_odd_prime(ell);
  if (j < 1 || j > ell_star(ell)) {
    throw DomainError("theta value index j = " + std::to_string(j) + " outside 1.." +
                      std::to_string(ell_star(ell)));
  }
  // Quasi-periodicity in base Q = q^(1/ell) with u = zeta_ell:
  //   theta(Q^(j/2) zeta) / theta(zeta) = (-1)^j Q^(-j^2/2) zeta^(-2j),
  // which is 1/xi_j. Invert to get xi_j.
  const ThetaValue inverse{j, ell, parity_sign(j), make_rat(-j * j, 2 * ell), mod(-2 * j, ell)};
  return inverse.reciprocal();
}

QLaurent eval_theta_laurent(long j, long k, long ell, long N, SignConvention convention) {
  if (N < 0) throw DomainError("truncation radius must be nonnegative");
  QLaurent out(ell);
  for (long n = -N; n <= N; ++n) {
    const ThetaTerm t = theta_term(n, convention);
    CycloElt c = CycloElt::zeta_power(ell, k * t.u_exponent);
    if (t.sign < 0) c = -c;
    out.add_term(eval_exponent(n, j), c);
  }
  return out;
}

long truncation_exponent_bound(long j, long N) {
  // n(n+1) + j(2n+1) is a convex parabola in n; outside [-N, N] its minimum
  // sits at one of the two nearest excluded indices.
  return std::min(eval_exponent(N + 1, j), eval_exponent(-N - 1, j));
}

ThetaValueConsistency check_theta_value_consistency(long j, long k, long ell, long N) {
  require_odd_prime(ell);
  if (mod(k, ell) == 0) throw DomainError("theta(zeta^k) vanishes identically for ell | k");
  if (std::labs(j) > N) throw WindowError("shift j exceeds truncation N");

  const ThetaValue xi = theta_value(j, ell);
  const QLaurent shifted = eval_theta_laurent(j, k, ell, N);
  const QLaurent base = eval_theta_laurent(0, k, ell, N);
  const QLaurent predicted = base.scaled(parity_sign(j), -j * j, -2 * j * k);

  ThetaValueConsistency out;
  out.compared_below = std::min(truncation_exponent_bound(j, N), truncation_exponent_bound(0, N) - j * j);
  const bool coefficients_agree =
      shifted.truncated_below(out.compared_below) == predicted.truncated_below(out.compared_below);

  const auto lo_shift = shifted.lowest_exponent();
  const auto lo_base = base.lowest_exponent();
  const bool lows_known = lo_shift && lo_base && *lo_shift < out.compared_below &&
                          *lo_base < truncation_exponent_bound(0, N);
  if (lo_shift && lo_base) out.lowest_shift = *lo_shift - *lo_base;
  const Rat expected = -xi.q_exponent * 2 * ell;
  out.expected_lowest_shift = expected.get_num().get_si();
  out.pass = coefficients_agree && lows_known && out.lowest_shift == out.expected_lowest_shift;
  return out;
}

}  // namespace teich
