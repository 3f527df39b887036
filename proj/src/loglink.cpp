#include "teich/loglink.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <string>

namespace teich {

namespace {

Integer power_of(long p, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
  return out;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

long valuation_of(long k, long p) {
  long v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

long floor_log(long k, long p) {
  long e = 0;
  for (long q = p; q <= k; q *= p) ++e;
  return e;
}

}  // namespace

PadicUnit::PadicUnit(long p, int precision, const Integer& value) : p_(p), N_(precision) {
  if (!is_prime(p)) throw DomainError("p-adic unit over non-prime " + std::to_string(p));
  if (precision < 1) throw DomainError("precision must be positive");
  value_ = mod_positive(value, modulus());
  const int v = std::min(principal_unit_valuation(p), N_);
  if (mod_positive(value_ - 1, power_of(p, static_cast<unsigned long>(v))) != 0) {
    throw DomainError("not a principal unit: " + value.get_str() + " mod " + std::to_string(p));
  }
}

Integer PadicUnit::modulus() const { return power_of(p_, static_cast<unsigned long>(N_)); }

PadicUnit operator*(const PadicUnit& a, const PadicUnit& b) {
  if (a.p_ != b.p_ || a.N_ != b.N_) throw ConfigError("p-adic units with different p or precision");
  return PadicUnit(a.p_, a.N_, Integer(a.value_ * b.value_));
}

PadicUnit pow(const PadicUnit& u, unsigned long k) {
  Integer out;
  const Integer m = u.modulus();
  mpz_powm_ui(out.get_mpz_t(), u.value().get_mpz_t(), k, m.get_mpz_t());
  return PadicUnit(u.prime(), u.precision(), out);
}

int principal_unit_valuation(long p) { return p == 2 ? 2 : 1; }

int minimum_log_precision(long p) { return principal_unit_valuation(p) + 1; }

Integer padic_log(const PadicUnit& u) {
  const long p = u.prime();
  const int N = u.precision();
  if (N < minimum_log_precision(p)) {
    throw PrecisionError("precision " + std::to_string(N) + " too small for log at p = " + std::to_string(p) +
                             "; need N >= " + std::to_string(minimum_log_precision(p)),
                         minimum_log_precision(p));
  }
  const long vx = principal_unit_valuation(p);
  const Integer mod_N = u.modulus();
  const Integer x = u.value() - 1;

  Integer acc = 0;
  for (long k = 1; k * vx - floor_log(k, p) < N; ++k) {
    const long vk = valuation_of(k, p);
    const Integer work_mod = power_of(p, static_cast<unsigned long>(N + vk));
    Integer xk;
    mpz_powm_ui(xk.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k), work_mod.get_mpz_t());
    const Integer pk = power_of(p, static_cast<unsigned long>(vk));
    Integer numerator = xk / pk;  // exact: v(x^k) >= k > v_p(k)
    Integer unit_part = k / pk;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit_part.get_mpz_t(), mod_N.get_mpz_t());
    Integer term = mod_positive(Integer(numerator * inv), mod_N);
    if (k % 2 == 0) term = -term;
    acc += term;
  }
  return mod_positive(acc, mod_N);
}

bool LogLinkChain::ratios_exact() const {
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const auto next = std::next(it);
    if (next == entries.end()) break;
    if (next->first != it->first + 1 || next->second != it->second * p) return false;
  }
  return true;
}

bool LogLinkChain::norms_grow_downward() const {
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const auto next = std::next(it);
    if (next == entries.end()) break;
    if (!(it->second < next->second)) return false;
  }
  return true;
}

LogLinkChain chain_build(long p, const Rat& v0, long lo, long hi) {
  if (!is_prime(p)) throw DomainError("chain over non-prime " + std::to_string(p));
  if (v0 <= 0) throw DomainError("v(p) must be positive");
  if (lo > hi) throw DomainError("empty chain window");
  LogLinkChain chain{p, v0, {}};
  for (long n = lo; n <= hi; ++n) chain.entries.emplace(n, v0 * pow(Rat(p), n));
  return chain;
}

EpsilonStep m_of_epsilon(long p, const Rat& eps) {
  if (!is_prime(p)) throw DomainError("m(eps) over non-prime " + std::to_string(p));
  if (eps <= 0) throw DomainError("eps must be positive");
  if (eps >= 1) return {0, true};
  long m = 0;
  Rat bound = 1;
  while (!(bound < eps)) {
    bound /= p;
    ++m;
  }
  return {m, false};
}

long kummer_shift(long n1, long n2) { return n2 - n1; }

}  // namespace teich
