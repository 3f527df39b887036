#include "teich/ansatz.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

namespace teich {

AnsatzPoint::AnsatzPoint(TiltElement a, long ell)
    : a_(std::move(a)), ell_(ell), members_(primitive_pow_family(a_, ell)) {}

AnsatzPoint make_ansatz(const TiltElement& a, long ell) { return AnsatzPoint(a, ell); }

bool is_member(std::span<const PrimitiveDeg1> tuple) {
  if (tuple.empty()) throw DomainError("membership test needs a nonempty tuple");
  const TiltElement& a = tuple.front().a();
  for (std::size_t idx = 1; idx < tuple.size(); ++idx) {
    if (tuple[idx].prime() != a.prime()) return false;
    const unsigned long j = idx + 1;
    if (!(tuple[idx].a() == tilt_pow(a, j * j))) return false;
  }
  return true;
}

std::vector<AnsatzPoint> frobenius_orbit(const AnsatzPoint& pt, long lo, long hi) {
  std::vector<AnsatzPoint> orbit;
  for (long n = lo; n <= hi; ++n) orbit.push_back(make_ansatz(tilt_frobenius(pt.a(), n), pt.ell()));
  return orbit;
}

std::vector<Rat> valuation_profile(const AnsatzPoint& pt) {
  std::vector<Rat> profile;
  profile.reserve(pt.members().size());
  for (const PrimitiveDeg1& m : pt.members()) profile.push_back(m.v_p());
  return profile;
}

CoefficientSubstitution::CoefficientSubstitution(long p, std::vector<long> images)
    : p_(p), images_(std::move(images)) {
  if (!is_prime(p)) throw DomainError("substitution prime is not prime");
  if (images_.size() != static_cast<std::size_t>(p)) {
    throw DomainError("substitution must list an image for every element of F_p");
  }
  for (long& c : images_) c = ((c % p) + p) % p;
}

CoefficientSubstitution CoefficientSubstitution::identity(long p) {
  std::vector<long> id(static_cast<std::size_t>(p));
  for (long c = 0; c < p; ++c) id[static_cast<std::size_t>(c)] = c;
  return CoefficientSubstitution(p, std::move(id));
}

TiltElement CoefficientSubstitution::apply(const TiltElement& x) const {
  if (x.prime() != p_) throw ConfigError("substitution over a different prime");
  TiltElement out(p_);
  for (const auto& [e, c] : x.terms()) {
    const long image = images_[c];
    if (image == 0) throw DomainError("substitution kills a monomial: not valuation-preserving");
    out.add_term(e, image);
  }
  return out;
}

bool scale_invariance_check(const AnsatzPoint& pt, const CoefficientSubstitution& sigma) {
  const AnsatzPoint image = make_ansatz(sigma.apply(pt.a()), pt.ell());
  return is_member(image.members()) && valuation_profile(image) == valuation_profile(pt);
}

HolomorphoidRecord::HolomorphoidRecord(std::string label, long j_, Rat v_K_p_, Rat tate_param_val_)
    : curve_label(std::move(label)), j(j_), v_K_p(std::move(v_K_p_)), tate_param_val(std::move(tate_param_val_)) {
  if (tate_param_val <= 0) throw DomainError("Tate parameter must satisfy |q| < 1");
}

std::vector<HolomorphoidRecord> holomorphoid_records(const AnsatzPoint& pt, const std::string& curve_label,
                                                     const Rat& v_q) {
  std::vector<HolomorphoidRecord> out;
  const auto profile = valuation_profile(pt);
  for (std::size_t idx = 0; idx < profile.size(); ++idx) {
    out.emplace_back(curve_label, static_cast<long>(idx + 1), profile[idx], v_q);
  }
  return out;
}

}  // namespace teich
