#include "teich/pilot.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <algorithm>

namespace teich {

PilotTuple::PilotTuple(AnsatzPoint ansatz, Rat xi_val_K1, std::vector<Rat> lifts)
    : ansatz_(std::move(ansatz)), xi_val_K1_(std::move(xi_val_K1)), lifts_(std::move(lifts)) {
  if (lifts_.size() != ansatz_.members().size()) throw DomainError("one lift per ansatz slot");
  if (!scaling_holds()) throw DomainError("pilot lifts violate e_j = j^2 e_1 > 0");
}

WittExpr PilotTuple::lift(long j) const {
  return teichmuller(TiltElement::monomial(ansatz_.prime(), lifts_.at(static_cast<std::size_t>(j - 1))));
}

bool PilotTuple::scaling_holds() const {
  if (lifts_.empty() || lifts_.front() <= 0) return false;
  for (std::size_t idx = 0; idx < lifts_.size(); ++idx) {
    const long j = static_cast<long>(idx + 1);
    if (lifts_[idx] != lifts_.front() * (j * j)) return false;
  }
  return true;
}

PilotTuple build_pilot(const AnsatzPoint& pt, const Rat& xi_val) {
  if (xi_val <= 0) throw DomainError("theta value must lie in the maximal ideal (v > 0)");
  const auto profile = valuation_profile(pt);
  const Rat e1 = xi_val * profile.front();
  std::vector<Rat> lifts;
  lifts.reserve(profile.size());
  for (std::size_t idx = 0; idx < profile.size(); ++idx) {
    const long j = static_cast<long>(idx + 1);
    lifts.emplace_back(e1 * (j * j));
  }
  return PilotTuple(pt, xi_val, std::move(lifts));
}

Rat square_sum(long n) { return make_rat(n * (n + 1) * (2 * n + 1), 6); }

Rat sum_log_norms(const PilotTuple& pilot, const RhoWeight& rho) {
  Rat total = 0;
  const long slots = static_cast<long>(pilot.lifts().size());
  for (long j = 1; j <= slots; ++j) total += gauss_log_norm(pilot.lift(j), rho).value();
  const Rat closed = square_sum(slots) * pilot.lifts().front();
  if (total != closed) throw Error("pilot sum disagrees with the square-sum closed form");
  return total;
}

bool ThetaSetSample::closure_holds() const {
  // Each tuple's Frobenius neighbours must be present unless the tuple sits on
  // the depth boundary.
  const std::size_t width = static_cast<std::size_t>(2 * frobenius_depth + 1);
  if (tuples.size() != generators.size() * width) return false;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (long n = -frobenius_depth; n <= frobenius_depth; ++n) {
      const PilotTuple& t = tuples[g * width + static_cast<std::size_t>(n + frobenius_depth)];
      const TiltElement expected = tilt_frobenius(generators[g].a(), n);
      if (!(t.ansatz().a() == expected) || !is_member(t.ansatz().members())) return false;
      if (n < frobenius_depth) {
        const PilotTuple& next = tuples[g * width + static_cast<std::size_t>(n + frobenius_depth + 1)];
        if (!(tilt_frobenius(t.ansatz().a(), 1) == next.ansatz().a())) return false;
      }
    }
  }
  return std::all_of(tuples.begin(), tuples.end(), [](const PilotTuple& t) { return t.scaling_holds(); });
}

bool ThetaSetSample::b_plus_cap_holds() const {
  for (const PilotTuple& t : tuples) {
    for (long j = 1; j <= static_cast<long>(t.lifts().size()); ++j) {
      if (!in_b_plus(t.lift(j))) return false;
    }
  }
  return true;
}

ThetaSetSample theta_set_sample(const std::vector<AnsatzPoint>& gens, const Rat& xi_val, long depth) {
  if (depth < 0) throw DomainError("Frobenius depth must be nonnegative");
  ThetaSetSample sample;
  sample.generators = gens;
  sample.frobenius_depth = depth;
  for (const AnsatzPoint& g : gens) {
    for (const AnsatzPoint& pt : frobenius_orbit(g, -depth, depth)) {
      sample.tuples.push_back(build_pilot(pt, xi_val));
    }
  }
  if (!sample.closure_holds()) throw Error("theta set sample failed its closure check");
  return sample;
}

Rat size_estimate(const ThetaSetSample& sample, const RhoWeight& rho) {
  if (sample.tuples.empty()) throw DomainError("size of an empty sample");
  Rat best = sum_log_norms(sample.tuples.front(), rho);
  for (const PilotTuple& t : sample.tuples) best = std::min(best, sum_log_norms(t, rho));
  return best;
}

BoundReport main_bound_check(long ell, const Rat& v_q) {
  require_odd_prime(ell);
  if (v_q <= 0) throw DomainError("Tate parameter valuation must be positive (|q| < 1)");
  const long ls = ell_star(ell);
  BoundReport r;
  r.ell = ell;
  r.v_q = v_q;

  Rat sq = 0;
  for (long j = 1; j <= ls; ++j) sq += j * j;
  r.square_sum = sq;

  const Rat xi = make_rat(1, 2 * ell) * v_q;  // v(xi_1) = v(q^(1/2ell)) in the C_p gauge
  r.direct_sum = 0;
  for (long j = 1; j <= ls; ++j) r.direct_sum += make_rat(j * j, ls * ls) * xi;
  r.closed_form = make_rat(ls * (ls + 1) * (2 * ls + 1), 6 * ls * ls) * xi;
  r.lhs_log = make_rat(1, 12) * (1 + make_rat(1, ls)) * v_q;

  r.rhs_log = make_rat(ls, 2 * ell) * v_q;
  r.rhs_quarter_form = make_rat(1, 4) * (1 - make_rat(1, ell)) * v_q;
  r.margin = r.rhs_log - r.lhs_log;

  r.derivation_consistent = r.square_sum == square_sum(ls) && r.direct_sum == r.closed_form &&
                            r.closed_form == r.lhs_log && r.rhs_quarter_form == r.rhs_log;
  r.equality = r.lhs_log == r.rhs_log;
  r.pass = r.derivation_consistent && r.lhs_log < r.rhs_log;
  return r;
}

long threshold_ell() {
  for (long ell = 3;; ell += 2) {
    if (is_prime(ell) && main_bound_check(ell, Rat(1)).pass) return ell;
  }
}

Rat bound_margin_factorized(long ell) {
  return make_rat((2 * ell - 1) * (ell - 3), 12 * ell * (ell - 1));
}

long threshold_ell_from_factorization() {
  // Roots of 2ell^2 - 7ell + 3 are 1/2 and 3; positivity needs ell > 3.
  const long larger_root = 3;
  long ell = larger_root + 1;
  while (ell % 2 == 0 || !is_prime(ell)) ++ell;
  return ell;
}

bool corollary_c_check(long ell, const Rat& v_q, const Rat& c) {
  if (c <= 0) throw DomainError("constant c must be positive");
  if (!main_bound_check(ell, v_q).pass) {
    throw BoundNotEstablished("bound not established for ell = " + std::to_string(ell));
  }
  return c < 1;
}

}  // namespace teich
