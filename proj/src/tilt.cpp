#include "teich/tilt.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <string>

namespace teich {

namespace {

TiltElement::Coeff reduce(long c, long p) {
  long r = c % p;
  if (r < 0) r += p;
  return static_cast<TiltElement::Coeff>(r);
}

void require_same_prime(const TiltElement& x, const TiltElement& y) {
  if (x.prime() != y.prime()) {
    throw ConfigError("tilt elements over different primes: " + std::to_string(x.prime()) +
                      " vs " + std::to_string(y.prime()));
  }
}

}  // namespace

TiltElement::TiltElement(long p) : p_(p) {
  if (!is_prime(p)) throw DomainError("tilt prime " + std::to_string(p) + " is not prime");
}

TiltElement TiltElement::monomial(long p, const Rat& exponent, long coeff) {
  TiltElement x(p);
  x.add_term(exponent, coeff);
  return x;
}

TiltElement TiltElement::from_terms(long p, const std::vector<std::pair<Rat, long>>& terms) {
  TiltElement x(p);
  for (const auto& [e, c] : terms) x.add_term(e, c);
  return x;
}

TiltElement& TiltElement::add_term(const Rat& exponent, long coeff) {
  if (exponent < 0) throw DomainError("negative exponent " + to_string(exponent) + " outside O_F");
  const Coeff c = reduce(coeff, p_);
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = static_cast<Coeff>((it->second + c) % static_cast<Coeff>(p_));
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

const Rat& TiltVal::value() const {
  if (!value_) throw DomainError("valuation of zero is +infinity");
  return *value_;
}

TiltVal operator+(const TiltVal& a, const TiltVal& b) {
  if (a.is_infinite() || b.is_infinite()) return TiltVal::infinity();
  return TiltVal(Rat(*a.value_ + *b.value_));
}

std::strong_ordering operator<=>(const TiltVal& a, const TiltVal& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return cmp(*a.value_, *b.value_) <=> 0;
}

TiltVal tilt_val(const TiltElement& x) {
  if (x.is_zero()) return TiltVal::infinity();
  return x.terms().begin()->first;
}

TiltElement tilt_mul(const TiltElement& x, const TiltElement& y) {
  require_same_prime(x, y);
  TiltElement out(x.prime());
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      const long c = static_cast<long>((static_cast<unsigned long long>(cx) * cy) %
                                       static_cast<unsigned long long>(x.prime()));
      out.add_term(Rat(ex + ey), c);
    }
  }
  return out;
}

TiltElement tilt_add(const TiltElement& x, const TiltElement& y) {
  require_same_prime(x, y);
  TiltElement out = x;
  for (const auto& [e, c] : y.terms()) out.add_term(e, static_cast<long>(c));
  return out;
}

TiltElement tilt_pow(const TiltElement& x, unsigned long k) {
  TiltElement result = TiltElement::one(x.prime());
  TiltElement base = x;
  while (k > 0) {
    if (k & 1UL) result = tilt_mul(result, base);
    k >>= 1;
    if (k > 0) base = tilt_mul(base, base);
  }
  return result;
}

TiltElement tilt_frobenius(const TiltElement& x, long n) {
  const Rat scale = pow(Rat(x.prime()), n);
  TiltElement out(x.prime());
  for (const auto& [e, c] : x.terms()) out.add_term(Rat(e * scale), static_cast<long>(c));
  return out;
}

std::strong_ordering untilt_val_compare(const TiltVal& vx, const TiltVal& vy) {
  return vx <=> vy;
}

}  // namespace teich
