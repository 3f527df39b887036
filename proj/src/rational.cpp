#include "teich/rational.hpp"

#include "teich/errors.hpp"

#include <cctype>

namespace teich {

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ConfigError("not an exact rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rat(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ConfigError("not an exact rational: '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_integer(num), d);
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rat(num, den);
}

}  // namespace teich
