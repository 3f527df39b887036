#include "teich/errors.hpp"
#include "teich/primes.hpp"
#include "teich/rational.hpp"

#include <doctest.h>

using namespace teich;

TEST_CASE("rationals are canonical and render as num/den") {
  CHECK(to_string(make_rat(6, 8)) == "3/4");
  CHECK(to_string(make_rat(3, -6)) == "-1/2");
  CHECK(to_string(Rat(7)) == "7/1");
  CHECK(make_rat(2, 4) == make_rat(1, 2));
}

TEST_CASE("parse_rat accepts only exact forms") {
  CHECK(parse_rat("3/2") == make_rat(3, 2));
  CHECK(parse_rat("-10/4") == make_rat(-5, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK_THROWS_AS(parse_rat("0.5"), ConfigError);
  CHECK_THROWS_AS(parse_rat("1e3"), ConfigError);
  CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ConfigError);
  CHECK_THROWS_AS(parse_rat(""), ConfigError);
  CHECK_THROWS_AS(parse_rat(" 1/2"), ConfigError);
}

TEST_CASE("render/parse round trip") {
  for (long n = -30; n <= 30; ++n) {
    for (long d = 1; d <= 12; ++d) {
      const Rat r = make_rat(n, d);
      CHECK(parse_rat(to_string(r)) == r);
    }
  }
}

TEST_CASE("integer powers of rationals") {
  CHECK(pow(make_rat(2, 3), 3) == make_rat(8, 27));
  CHECK(pow(Rat(2), -3) == make_rat(1, 8));
  CHECK(pow(make_rat(5, 7), 0) == Rat(1));
  CHECK_THROWS_AS(pow(Rat(0), -1), DomainError);
}

TEST_CASE("prime helpers") {
  CHECK(primes_in(1, 30) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(ell_star(5) == 2);
  CHECK(ell_star(97) == 48);
  CHECK_THROWS_AS(require_odd_prime(9), DomainError);
  CHECK_THROWS_AS(require_odd_prime(2), DomainError);
  CHECK_THROWS_AS(require_auxiliary_prime(5, 5), DomainError);
  CHECK_NOTHROW(require_auxiliary_prime(5, 2));
}
