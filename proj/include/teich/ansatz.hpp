#pragma once

#include "teich/rational.hpp"
#include "teich/tilt.hpp"
#include "teich/witt.hpp"

#include <span>
#include <string>
#include <vector>

namespace teich {

/// A point ([a] - p, [a^4] - p, ..., [a^(l*^2)] - p) of the primitive ansatz.
class AnsatzPoint {
 public:
  AnsatzPoint(TiltElement a, long ell);

  const TiltElement& a() const noexcept { return a_; }
  long ell() const noexcept { return ell_; }
  long prime() const noexcept { return a_.prime(); }
  const std::vector<PrimitiveDeg1>& members() const noexcept { return members_; }

 private:
  TiltElement a_;
  long ell_;
  std::vector<PrimitiveDeg1> members_;
};

AnsatzPoint make_ansatz(const TiltElement& a, long ell);

/// True iff members[j-1].a = members[0].a^(j^2) for every j. A singleton is
/// always a member: any degree-one prime is the first slot of some point.
bool is_member(std::span<const PrimitiveDeg1> tuple);

/// make_ansatz(phi^n(a), ell) for n = lo..hi.
std::vector<AnsatzPoint> frobenius_orbit(const AnsatzPoint& pt, long lo, long hi);

/// (v_{K_j}(p))_j = (j^2 v_F(a))_j in tilt units.
std::vector<Rat> valuation_profile(const AnsatzPoint& pt);

/// Exponent-preserving substitution c t^e -> sigma(c) t^e on coefficients.
/// This stands in for the Galois action, which has no faithful model over
/// prime-field coefficients; only valuation-level consequences are tested.
class CoefficientSubstitution {
 public:
  /// images[c] is the image of c in F_p; images.size() must equal p.
  CoefficientSubstitution(long p, std::vector<long> images);

  static CoefficientSubstitution identity(long p);

  long prime() const noexcept { return p_; }
  /// Throws DomainError when a nonzero coefficient maps to zero, which would
  /// change the valuation of a monomial.
  TiltElement apply(const TiltElement& x) const;

 private:
  long p_;
  std::vector<long> images_;
};

/// Membership and valuation profile unchanged after substituting in the
/// generator a.
bool scale_invariance_check(const AnsatzPoint& pt, const CoefficientSubstitution& sigma);

/// Valuation-level shadow of an arithmetic holomorphic structure lying over
/// one slot of an ansatz point. No fundamental-group data.
struct HolomorphoidRecord {
  std::string curve_label;
  long j;
  Rat v_K_p;           // tilt units
  Rat tate_param_val;  // p-normalized units, > 0

  HolomorphoidRecord(std::string label, long j, Rat v_K_p, Rat tate_param_val);
};

/// One record per slot. q lies in the base field, so its p-normalized
/// valuation is the same in every untilt.
std::vector<HolomorphoidRecord> holomorphoid_records(const AnsatzPoint& pt, const std::string& curve_label,
                                                     const Rat& v_q);

}  // namespace teich
