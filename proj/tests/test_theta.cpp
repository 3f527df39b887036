#include "oracles.hpp"
#include "teich/errors.hpp"
#include "teich/theta.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace teich;

TEST_CASE("theta_terms N=1 by hand") {
  const auto s = theta_terms(1);
  REQUIRE(s.terms.size() == 3);
  CHECK(s.terms[0] == ThetaTerm{-1, -1, 0, -1});
  CHECK(s.terms[1] == ThetaTerm{0, 1, 0, 1});
  CHECK(s.terms[2] == ThetaTerm{1, -1, 1, 3});
  const auto zero = theta_terms(0);
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms[0] == ThetaTerm{0, 1, 0, 1});
}

TEST_CASE("term descriptors match the half-integer square form") {
  const auto s = theta_terms(20);
  long prev_u = -1000;
  for (const ThetaTerm& t : s.terms) {
    const Rat half = make_rat(2 * t.n + 1, 2);
    CHECK(Rat(t.q_exponent) == Rat(half * half / 2 - make_rat(1, 8)));
    CHECK(t.u_exponent % 2 != 0);
    CHECK(t.u_exponent > prev_u);
    prev_u = t.u_exponent;
  }
  for (long m = 0; m < 20; ++m) CHECK(s.at(-m - 1).q_exponent == s.at(m).q_exponent);
}

TEST_CASE("inversion antisymmetry") {
  const auto r5 = check_inversion_antisymmetry(5);
  CHECK(r5.pass);
  CHECK(r5.terms_checked == 11);
  CHECK(r5.pairs.size() == 5);
  CHECK(r5.boundary_consistent);
  CHECK(r5.theta_at_one_vanishes);
  CHECK(check_inversion_antisymmetry(1).pass);
  const auto bad = check_inversion_antisymmetry(5, SignConvention::Unsigned);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.theta_at_one_vanishes);
}

TEST_CASE("quasi-periodicity") {
  CHECK(check_quasi_periodicity(0, 3).pass);
  const auto j1 = check_quasi_periodicity(1, 4);
  CHECK(j1.pass);
  CHECK(j1.overlap_size == 7);
  const auto j2 = check_quasi_periodicity(2, 6);
  CHECK(j2.pass);
  CHECK(j2.q_shift == Rat(-2));
  CHECK(j2.u_shift == -4);
  CHECK(check_quasi_periodicity(-3, 6).pass);
  CHECK_THROWS_AS(check_quasi_periodicity(5, 4), WindowError);
  CHECK_FALSE(check_quasi_periodicity(1, 4, SignConvention::Unsigned).pass);
  CHECK(check_quasi_periodicity(2, 4, SignConvention::Unsigned).pass);  // even shifts carry no sign
}

TEST_CASE("theta values") {
  const auto x1 = theta_value(1, 5);
  CHECK(x1.sign == -1);
  CHECK(x1.q_exponent == make_rat(1, 10));
  CHECK(x1.zeta_exponent == 2);
  const auto x2 = theta_value(2, 5);
  CHECK(x2.sign == 1);
  CHECK(x2.q_exponent == make_rat(2, 5));
  CHECK(x2.zeta_exponent == 4);
  const auto inv = x1.reciprocal();
  CHECK(inv.q_exponent == make_rat(-1, 10));
  CHECK(inv.zeta_exponent == 3);
  CHECK(inv.reciprocal() == x1);
  for (long ell : {5L, 7L, 11L, 13L}) {
    for (long j = 1; j <= (ell - 1) / 2; ++j) {
      CHECK(theta_value(j, ell).q_exponent == theta_value(1, ell).q_exponent * (j * j));
      CHECK(theta_value(j, ell).q_exponent > 0);
    }
  }
  CHECK_THROWS_AS(theta_value(3, 5), DomainError);
  CHECK_THROWS_AS(theta_value(0, 5), DomainError);
}

TEST_CASE("eval_theta_laurent at u = 1 leaves only the truncation tail") {
  for (long N = 1; N <= 6; ++N) {
    const QLaurent f = eval_theta_laurent(0, 0, 5, N);
    // theta(1) pairs n with -n-1; the unpaired n = N is cancelled by n = -N-1.
    QLaurent tail(5);
    tail.add_term(N * (N + 1), CycloElt::constant(5, N % 2 == 0 ? 1 : -1));
    CHECK(f == tail);
    QLaurent partner(5);
    partner.add_term(N * (N + 1), CycloElt::constant(5, N % 2 == 0 ? -1 : 1));
    CHECK((QLaurent(f) += partner).is_zero());
  }
}

TEST_CASE("theta vanishes at q^(j/2) below the truncation bound") {
  for (long j = -3; j <= 3; ++j) {
    const QLaurent f = eval_theta_laurent(j, 0, 7, 8);
    const long bound = truncation_exponent_bound(j, 8);
    CHECK(f.lowest_exponent().value_or(bound) >= bound);
  }
}

TEST_CASE("theta(zeta_5) is nonzero") {
  const QLaurent f = eval_theta_laurent(0, 1, 5, 3);
  REQUIRE(f.lowest_exponent().has_value());
  CHECK(*f.lowest_exponent() == 0);
  CHECK(f.coeff(0) == CycloElt::zeta_power(5, 1) - CycloElt::zeta_power(5, -1));
}

TEST_CASE("lowest term of theta(s zeta) / theta(zeta) matches xi_1") {
  const QLaurent shifted = eval_theta_laurent(1, 1, 5, 3);
  const QLaurent base = eval_theta_laurent(0, 1, 5, 3);
  const long diff = *shifted.lowest_exponent() - *base.lowest_exponent();
  CHECK(diff == -1);
  const auto xi = theta_value(1, 5).reciprocal();
  CHECK(Rat(diff) == xi.q_exponent * 10);
  // -s^-1 zeta^-2 (zeta - zeta^-1) = -zeta^-1 + zeta^-3
  CHECK(shifted.coeff(-1) == CycloElt::zeta_power(5, -3) - CycloElt::zeta_power(5, -1));
  CHECK(shifted.coeff(-1) == base.coeff(0) * -CycloElt::zeta_power(5, -2));
}

TEST_CASE("theta value consistency across ell, j, k") {
  for (long ell : {5L, 7L, 11L}) {
    for (long j = 1; j <= (ell - 1) / 2; ++j) {
      for (long k = 1; k < ell; ++k) {
        const auto c = check_theta_value_consistency(j, k, ell, 12);
        CHECK(c.pass);
        CHECK(c.lowest_shift == -j * j);
      }
    }
  }
  CHECK_THROWS_AS(check_theta_value_consistency(1, 5, 5, 4), DomainError);
}

TEST_CASE("numeric oracle agrees with the exact Laurent evaluation") {
  const double pi = 3.14159265358979323846;
  const double s = 0.37;
  for (long ell : {5L, 7L}) {
    const std::complex<double> zeta2l = std::polar(1.0, pi / static_cast<double>(ell));
    for (long j = -2; j <= 2; ++j) {
      for (long k = 0; k < 3; ++k) {
        const QLaurent f = eval_theta_laurent(j, k, ell, 4);
        std::complex<double> value = 0;
        for (const auto& [e, c] : f.terms()) {
          std::complex<double> cv = 0;
          for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            cv += c.coeffs()[i].get_d() * std::pow(zeta2l, static_cast<double>(i));
          }
          value += cv * std::pow(s, static_cast<double>(e));
        }
        const auto expected = oracle::theta_numeric(j, k, ell, 4, s);
        CHECK(std::abs(value - expected) < 1e-9 * (1.0 + std::abs(expected)));
      }
    }
  }
}
