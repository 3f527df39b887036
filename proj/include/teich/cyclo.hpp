#pragma once

#include "teich/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace teich {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(long n);

/// Element of Z[zeta_{2 ell}] = Z[x] / Phi_{2 ell}(x), ell an odd prime.
/// Stored as the reduced coefficient vector of length phi(2 ell) = ell - 1.
class CycloElt {
 public:
  explicit CycloElt(long ell);

  static CycloElt constant(long ell, long c);
  /// zeta_{2 ell}^k for any integer k.
  static CycloElt zeta2l_power(long ell, long k);
  /// zeta_ell^k = zeta_{2 ell}^(2k).
  static CycloElt zeta_power(long ell, long k) { return zeta2l_power(ell, 2 * k); }

  long ell() const noexcept { return ell_; }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  bool is_zero() const;

  CycloElt& operator+=(const CycloElt& o);
  CycloElt& operator-=(const CycloElt& o);
  friend CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
  friend CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  CycloElt operator-() const;
  friend bool operator==(const CycloElt&, const CycloElt&) = default;

 private:
  long ell_;
  std::vector<Integer> c_;
};

/// Laurent polynomial in s = q^(1/2 ell) with cyclotomic coefficients.
class QLaurent {
 public:
  using Terms = std::map<long, CycloElt>;

  explicit QLaurent(long ell) : ell_(ell) {}

  long ell() const noexcept { return ell_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<long> lowest_exponent() const;
  /// Coefficient of s^e (zero when absent).
  CycloElt coeff(long e) const;

  QLaurent& add_term(long s_exponent, const CycloElt& c);
  QLaurent& operator+=(const QLaurent& o);

  /// Multiplies by sign * s^shift * zeta_ell^zeta_exponent.
  QLaurent scaled(int sign, long shift, long zeta_exponent) const;

  /// Keeps only terms with s-exponent strictly below the bound.
  QLaurent truncated_below(long bound) const;

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

 private:
  long ell_;
  Terms terms_;
};

}  // namespace teich
