#pragma once

#include "teich/rational.hpp"
#include "teich/tilt.hpp"

#include <map>
#include <vector>

namespace teich {

/// A presentation sum_i [x_i] p^i with nonzero x_i. Negative i model elements
/// of B with bounded denominators. No carry arithmetic: this is a presentation,
/// not a normal form, and only Teichmuller-monomial products are supported.
class WittExpr {
 public:
  using Slots = std::map<long, TiltElement>;

  explicit WittExpr(long p) : p_(p) {}

  /// [x] p^i.
  static WittExpr term(const TiltElement& x, long i);

  long prime() const noexcept { return p_; }
  const Slots& slots() const noexcept { return slots_; }
  bool is_zero() const noexcept { return slots_.empty(); }
  bool is_single_term() const noexcept { return slots_.size() == 1; }
  bool is_teichmuller() const noexcept { return is_zero() || (is_single_term() && slots_.begin()->first == 0); }

  /// Puts x into slot i of the presentation. Throws if the slot is taken.
  WittExpr& with_slot(long i, const TiltElement& x);

  friend bool operator==(const WittExpr&, const WittExpr&) = default;

 private:
  long p_;
  Slots slots_;
};

WittExpr teichmuller(const TiltElement& x);

/// ([x] p^i) * ([y] p^k) = [xy] p^(i+k). Multi-term operands need carry
/// arithmetic and are rejected with DomainError.
WittExpr operator*(const WittExpr& a, const WittExpr& b);

/// rho = |t|_F^r. The unit weight stands for the rho -> 1 limit, the |.|_1 norm.
class RhoWeight {
 public:
  static RhoWeight unit() { return RhoWeight(); }
  static RhoWeight weight(const Rat& r);

  bool is_unit() const noexcept { return unit_; }
  // Weight applied to the p-power index: r, or 0 for the unit norm.
  const Rat& slot_weight() const noexcept { return r_; }

 private:
  RhoWeight() = default;
  bool unit_ = true;
  Rat r_ = 0;
};

/// Additive form of the Gauss norm: min_i (v_F(x_i) + i r). The norm itself is
/// rho^(value) in units where |t|_F = rho; +inf (norm 0) for the zero
/// expression. Exact for a single Teichmuller term, an upper bound on the
/// valuation of the denoted element for multi-slot presentations.
TiltVal gauss_log_norm(const WittExpr& w, const RhoWeight& rho);

/// |w|_1 <= 1.
bool in_b_plus(const WittExpr& w);

/// Generator [a] - p of a degree-one prime, a in m_F \ {0}.
class PrimitiveDeg1 {
 public:
  explicit PrimitiveDeg1(TiltElement a);

  const TiltElement& a() const noexcept { return a_; }
  long prime() const noexcept { return a_.prime(); }
  // v_F(a) = v_K(p) in tilt units for the untilt cut out by this element.
  const Rat& v_p() const noexcept { return v_p_; }

  friend bool operator==(const PrimitiveDeg1& x, const PrimitiveDeg1& y) { return x.a_ == y.a_; }

 private:
  TiltElement a_;
  Rat v_p_;
};

/// ([a^(j^2)] - p) for j = 1..(ell-1)/2.
std::vector<PrimitiveDeg1> primitive_pow_family(const TiltElement& a, long ell);

/// phi^n([a] - p) = [phi^n(a)] - p.
PrimitiveDeg1 primitive_frobenius(const PrimitiveDeg1& w, long n);

/// v_K(eta_K([x])) in p-normalized units: v_F(x) / v_F(a). +inf for x = 0.
TiltVal eta_val(const PrimitiveDeg1& prim, const TiltElement& x);

/// The coset [x] + T_y of lifts of an untilt value. Only the Teichmuller
/// representative is known; the torsor part is not modelled.
struct TeichmullerCoset {
  WittExpr generator;
};

/// One-sided bound: sup_tau |[x] + tau|_rho >= |[x]|_rho, i.e. the best
/// valuation over the coset is at most the returned value.
TiltVal coset_valuation_upper_bound(const TeichmullerCoset& coset, const RhoWeight& rho);

}  // namespace teich
