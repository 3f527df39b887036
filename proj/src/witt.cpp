#include "teich/witt.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <string>

namespace teich {

WittExpr WittExpr::term(const TiltElement& x, long i) {
  WittExpr w(x.prime());
  if (!x.is_zero()) w.slots_.emplace(i, x);
  return w;
}

WittExpr& WittExpr::with_slot(long i, const TiltElement& x) {
  if (x.prime() != p_) throw ConfigError("slot element over a different prime");
  if (x.is_zero()) return *this;
  if (!slots_.emplace(i, x).second) {
    throw DomainError("slot " + std::to_string(i) + " already occupied in presentation");
  }
  return *this;
}

WittExpr teichmuller(const TiltElement& x) { return WittExpr::term(x, 0); }

WittExpr operator*(const WittExpr& a, const WittExpr& b) {
  if (a.prime() != b.prime()) throw ConfigError("Witt expressions over different primes");
  if (a.is_zero() || b.is_zero()) return WittExpr(a.prime());
  if (!a.is_single_term() || !b.is_single_term()) {
    throw DomainError("product of multi-term presentations needs Witt carries");
  }
  const auto& [i, x] = *a.slots().begin();
  const auto& [k, y] = *b.slots().begin();
  return WittExpr::term(tilt_mul(x, y), i + k);
}

RhoWeight RhoWeight::weight(const Rat& r) {
  if (r <= 0) throw DomainError("rho weight must be positive, got " + to_string(r));
  RhoWeight w;
  w.unit_ = false;
  w.r_ = r;
  return w;
}

TiltVal gauss_log_norm(const WittExpr& w, const RhoWeight& rho) {
  TiltVal best = TiltVal::infinity();
  for (const auto& [i, x] : w.slots()) {
    const TiltVal v = tilt_val(x) + TiltVal(Rat(rho.slot_weight() * i));
    if (v < best) best = v;
  }
  return best;
}

bool in_b_plus(const WittExpr& w) {
  return gauss_log_norm(w, RhoWeight::unit()) >= TiltVal(Rat(0));
}

PrimitiveDeg1::PrimitiveDeg1(TiltElement a) : a_(std::move(a)) {
  const TiltVal v = tilt_val(a_);
  if (v.is_infinite()) throw DomainError("a = 0 is not in m_F - {0}");
  if (v.value() <= 0) throw DomainError("a is a unit, not in m_F - {0}");
  v_p_ = v.value();
}

std::vector<PrimitiveDeg1> primitive_pow_family(const TiltElement& a, long ell) {
  require_auxiliary_prime(ell, a.prime());
  const PrimitiveDeg1 first(a);
  std::vector<PrimitiveDeg1> family;
  family.reserve(static_cast<std::size_t>(ell_star(ell)));
  family.push_back(first);
  for (long j = 2; j <= ell_star(ell); ++j) {
    family.emplace_back(tilt_pow(a, static_cast<unsigned long>(j * j)));
  }
  return family;
}

PrimitiveDeg1 primitive_frobenius(const PrimitiveDeg1& w, long n) {
  return PrimitiveDeg1(tilt_frobenius(w.a(), n));
}

TiltVal eta_val(const PrimitiveDeg1& prim, const TiltElement& x) {
  if (x.prime() != prim.prime()) throw ConfigError("element and prime ideal over different primes");
  const TiltVal v = tilt_val(x);
  if (v.is_infinite()) return v;
  return Rat(v.value() / prim.v_p());
}

TiltVal coset_valuation_upper_bound(const TeichmullerCoset& coset, const RhoWeight& rho) {
  if (!coset.generator.is_teichmuller()) {
    throw DomainError("coset generator must be a single Teichmuller term");
  }
  return gauss_log_norm(coset.generator, rho);
}

}  // namespace teich
