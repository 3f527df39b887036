#pragma once

#include "teich/ansatz.hpp"
#include "teich/rational.hpp"
#include "teich/witt.hpp"

#include <vector>

namespace teich {

/// Teichmuller lifts [x_j] of the theta value xi_1 through eta_{K_j}, one per
/// slot of an ansatz point, recorded by their tilt valuations e_j.
/// Invariant: e_j = j^2 e_1 > 0.
class PilotTuple {
 public:
  PilotTuple(AnsatzPoint ansatz, Rat xi_val_K1, std::vector<Rat> lifts);

  const AnsatzPoint& ansatz() const noexcept { return ansatz_; }
  const Rat& xi_val_K1() const noexcept { return xi_val_K1_; }
  const std::vector<Rat>& lifts() const noexcept { return lifts_; }

  /// The Teichmuller element [t^(e_j)] for slot j (1-based).
  WittExpr lift(long j) const;

  bool scaling_holds() const;

 private:
  AnsatzPoint ansatz_;
  Rat xi_val_K1_;
  std::vector<Rat> lifts_;
};

/// xi_val is v(xi_1) in p-normalized units; e_1 = xi_val * v_{K_1}(p).
PilotTuple build_pilot(const AnsatzPoint& pt, const Rat& xi_val);

/// sum_j e_j, the valuation form of sum_j log|[x_j]|_rho. Cross-checked
/// against the closed form l*(l*+1)(2l*+1)/6 * e_1; throws Error on mismatch.
Rat sum_log_norms(const PilotTuple& pilot, const RhoWeight& rho);

Rat square_sum(long n);

/// Finite Frobenius-closed sample of the theta set: one pilot tuple for every
/// generator and every iterate n in [-depth, depth].
struct ThetaSetSample {
  std::vector<AnsatzPoint> generators;
  long frobenius_depth = 0;
  std::vector<PilotTuple> tuples;

  bool closure_holds() const;
  /// Every lift lies in B^+, i.e. e_j >= 0 (|[x_j]|_1 <= 1).
  bool b_plus_cap_holds() const;
};

ThetaSetSample theta_set_sample(const std::vector<AnsatzPoint>& gens, const Rat& xi_val, long depth);

/// Valuation form of the size functional: the sup over tuples of products of
/// norms is the min over tuples of valuation sums (norm base in (0,1)).
Rat size_estimate(const ThetaSetSample& sample, const RhoWeight& rho);

/// Exact comparison of the witness sum against the bound exponent, both in
/// units of v(q) scaled by v_q. Valuation form: pass iff lhs < rhs strictly,
/// which is the norm inequality in the lower-bound direction.
struct BoundReport {
  long ell = 0;
  Rat v_q;
  Rat lhs_log;  // (1/12)(1 + 1/l*) v_q
  Rat rhs_log;  // (l*/2ell) v_q = (1/4)(1 - 1/ell) v_q
  Rat margin;   // rhs - lhs
  bool pass = false;

  // Derivation chain, each step recomputed independently.
  Rat square_sum;         // sum_{j<=l*} j^2
  Rat direct_sum;         // sum_j (j^2/l*^2)(1/2ell) v_q, term by term
  Rat closed_form;        // l*(l*+1)(2l*+1)/(6 l*^2) (1/2ell) v_q
  Rat rhs_quarter_form;   // (1/4)(1 - 1/ell) v_q
  bool derivation_consistent = false;
  bool equality = false;
};

BoundReport main_bound_check(long ell, const Rat& v_q);

/// Least odd prime for which main_bound_check passes, by sweeping.
long threshold_ell();

/// Same threshold from the sign of rhs - lhs = v_q (2ell-1)(ell-3) / (12 ell (ell-1)):
/// the least odd prime above the larger root.
long threshold_ell_from_factorization();

/// Sign-exact value of (rhs - lhs) / v_q from the factorized form.
Rat bound_margin_factorized(long ell);

/// Whether |Theta|_B <= c |q^(1/2ell)|^(l*) with c < 1 contradicts the lower
/// bound. Throws BoundNotEstablished if the bound fails for (ell, v_q).
bool corollary_c_check(long ell, const Rat& v_q, const Rat& c);

}  // namespace teich
