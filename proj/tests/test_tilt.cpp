#include "oracles.hpp"
#include "teich/errors.hpp"
#include "teich/tilt.hpp"

#include <doctest.h>

#include <random>

using namespace teich;

namespace {
TiltElement mono(long p, long num, long den, long c = 1) { return TiltElement::monomial(p, make_rat(num, den), c); }
}  // namespace

TEST_CASE("tilt_val of monomials and zero") {
  CHECK(tilt_val(mono(2, 1, 4)) == TiltVal(make_rat(1, 4)));
  CHECK(tilt_val(TiltElement::zero(2)).is_infinite());
  // t^(1/l*^2) with ell = 5, l* = 2.
  CHECK(tilt_val(mono(2, 1, 4)).value() == make_rat(1, 4));
  CHECK(tilt_val(TiltElement::from_terms(3, {{make_rat(2, 3), 1}, {make_rat(1, 9), 2}})) == TiltVal(make_rat(1, 9)));
}

TEST_CASE("coefficients live in F_p and zero terms vanish") {
  const auto x = TiltElement::from_terms(3, {{Rat(1), 2}, {Rat(1), 1}});
  CHECK(x.is_zero());
  CHECK(mono(5, 1, 1, 7).terms().begin()->second == 2);
  CHECK(mono(5, 1, 1, -1).terms().begin()->second == 4);
  CHECK_THROWS_AS(mono(2, -1, 2), DomainError);
  CHECK_THROWS_AS(TiltElement(4), DomainError);
}

TEST_CASE("tilt_mul examples") {
  CHECK(mono(2, 1, 2) * mono(2, 1, 2) == mono(2, 1, 1));
  // (1+t)^2 = 1 + t^2 over F_2: hand expansion 1 + 2t + t^2.
  const auto one_plus_t = TiltElement::from_terms(2, {{Rat(0), 1}, {Rat(1), 1}});
  CHECK(one_plus_t * one_plus_t == TiltElement::from_terms(2, {{Rat(0), 1}, {Rat(2), 1}}));
  CHECK((mono(3, 1, 1) * TiltElement::zero(3)).is_zero());
  CHECK_THROWS_AS(mono(2, 1, 1) * mono(3, 1, 1), ConfigError);
}

TEST_CASE("tilt_frobenius examples") {
  CHECK(tilt_frobenius(mono(2, 1, 2), 1) == mono(2, 1, 1));
  CHECK(tilt_frobenius(mono(3, 1, 1), -1) == mono(3, 1, 3));
  CHECK(tilt_val(tilt_frobenius(mono(3, 5, 9), 1)).value() == make_rat(5, 3));
  // In characteristic p, phi(x) = x^p for prime-field coefficients.
  const auto x = TiltElement::from_terms(3, {{make_rat(1, 3), 2}, {Rat(2), 1}});
  CHECK(tilt_frobenius(x, 1) == tilt_pow(x, 3));
}

TEST_CASE("untilt_val_compare is a total order on Q u {+inf}") {
  CHECK(untilt_val_compare(make_rat(1, 4), Rat(1)) == std::strong_ordering::less);
  CHECK(untilt_val_compare(TiltVal::infinity(), make_rat(1000, 1)) == std::strong_ordering::greater);
  CHECK(untilt_val_compare(TiltVal::infinity(), TiltVal::infinity()) == std::strong_ordering::equal);
  const Rat v = make_rat(3, 7);
  for (long j = 1; j < 6; ++j) {
    CHECK(untilt_val_compare(Rat(v * (j * j)), Rat(v * ((j + 1) * (j + 1)))) == std::strong_ordering::less);
  }
}

TEST_CASE("property: valuation is additive, Frobenius round-trips and scales") {
  std::mt19937_64 rng(42);
  const long primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  std::uniform_int_distribution<long> nterms(1, 4);
  std::uniform_int_distribution<long> coeff(1, 100);
  std::uniform_int_distribution<long> shift(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const long p = primes[pick(rng)];
    auto random_element = [&] {
      TiltElement x(p);
      const long k = nterms(rng);
      for (long i = 0; i < k; ++i) x.add_term(oracle::random_positive_exponent(rng), coeff(rng));
      return x;
    };
    const TiltElement x = random_element();
    const TiltElement y = random_element();
    if (x.is_zero() || y.is_zero()) continue;
    // F_p[t^Q] is a domain: leading terms never cancel.
    CHECK(tilt_val(x * y) == tilt_val(x) + tilt_val(y));
    const long n = shift(rng);
    CHECK(tilt_frobenius(tilt_frobenius(x, n), -n) == x);
    CHECK(tilt_val(tilt_frobenius(x, n)).value() == tilt_val(x).value() * pow(Rat(p), n));
  }
}
