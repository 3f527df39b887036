#include "teich/cli/suites.hpp"

#include "teich/ansatz.hpp"
#include "teich/errors.hpp"
#include "teich/loglink.hpp"
#include "teich/pilot.hpp"
#include "teich/primes.hpp"
#include "teich/theta.hpp"
#include "teich/witt.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

namespace teich::cli {

namespace {

Rat R(long v) { return Rat(v); }

RhoWeight rho_of(const RunConfig& cfg) {
  return cfg.rho_weight ? RhoWeight::weight(*cfg.rho_weight) : RhoWeight::unit();
}

// a = t^(1/l*^2): the last slot of the ansatz is then the canonical untilt
// with v(p) = 1.
AnsatzPoint witness_ansatz(long p, long ell) {
  const long ls = ell_star(ell);
  return make_ansatz(TiltElement::monomial(p, make_rat(1, ls * ls)), ell);
}

}  // namespace

Report run_verify_theta(const RunConfig& cfg) {
  const long N = cfg.theta_truncation;
  const long ls = ell_star(cfg.ell);
  if (N < ls) {
    throw WindowError("theta_truncation N = " + std::to_string(N) + " is below l* = " + std::to_string(ls));
  }
  Report rep{"verify-theta", {}, {}};

  const auto inv = check_inversion_antisymmetry(N, cfg.theta_sign);
  rep.add("inversion antisymmetry", "theta:inversion", inv.pass)
      .with("N", R(N))
      .with("terms", R(inv.terms_checked))
      .with("pairs", R(static_cast<long>(inv.pairs.size())))
      .with("boundary_consistent", R(inv.boundary_consistent));
  rep.add("theta(1) = 0 by pairing", "theta:zero-at-one", inv.theta_at_one_vanishes);

  for (long j = 1; j <= std::min(ls, N); ++j) {
    const auto qp = check_quasi_periodicity(j, N, cfg.theta_sign);
    rep.add("quasi-periodicity j=" + std::to_string(j), "theta:quasi-periodicity", qp.pass)
        .with("overlap", R(qp.overlap_size))
        .with("q_shift", qp.q_shift)
        .with("u_shift", R(qp.u_shift))
        .with("mismatches", R(static_cast<long>(qp.mismatches.size())));
  }

  const ThetaValue xi1 = theta_value(1, cfg.ell);
  for (long j = 1; j <= ls; ++j) {
    const ThetaValue xi = theta_value(j, cfg.ell);
    const auto cons = check_theta_value_consistency(j, 1, cfg.ell, N);
    const bool scaling = xi.q_exponent == xi1.q_exponent * (j * j) && xi.q_exponent > 0;
    rep.add("theta value xi_" + std::to_string(j), "theta:values", scaling && cons.pass)
        .with("sign", R(xi.sign))
        .with("q_exponent", xi.q_exponent)
        .with("zeta_exponent", R(xi.zeta_exponent))
        .with("lowest_shift", R(cons.lowest_shift))
        .with("expected_lowest_shift", R(cons.expected_lowest_shift));
  }

  if (cfg.theta_sign == SignConvention::Signed) {
    const bool unsigned_fails = !check_inversion_antisymmetry(N, SignConvention::Unsigned).pass;
    rep.add("unsigned series violates inversion (negative control)", "theta:sign-convention", unsigned_fails);
  }
  return rep;
}

Report run_bound(const RunConfig& cfg) {
  Report rep{"bound", {}, {}};
  const BoundReport b = main_bound_check(cfg.ell, cfg.v_q);
  const long ls = ell_star(cfg.ell);

  rep.add("square sum", "pilot:square-sum", b.square_sum == square_sum(ls))
      .with("l_star", R(ls))
      .with("square_sum", b.square_sum);
  rep.add("direct sum equals closed form", "pilot:closed-form", b.direct_sum == b.closed_form)
      .with("direct_sum", b.direct_sum)
      .with("closed_form", b.closed_form);
  rep.add("closed form simplifies to (1/12)(1+1/l*) v_q", "pilot:simplification", b.closed_form == b.lhs_log)
      .with("lhs_log", b.lhs_log);
  rep.add("bound exponent (1/4)(1-1/ell) = l*/(2 ell)", "pilot:bound-exponent", b.rhs_quarter_form == b.rhs_log)
      .with("rhs_log", b.rhs_log);
  rep.add("strict inequality lhs < rhs", "pilot:main-bound", b.pass, b.equality ? "equality" : "")
      .with("ell", R(cfg.ell))
      .with("v_q", b.v_q)
      .with("lhs_log", b.lhs_log)
      .with("rhs_log", b.rhs_log)
      .with("margin", b.margin);

  if (b.pass) {
    const bool contradiction = corollary_c_check(cfg.ell, cfg.v_q, cfg.corollary_c);
    rep.add("corollary: c < 1 contradicts the lower bound", "pilot:corollary", contradiction == (cfg.corollary_c < 1))
        .with("c", cfg.corollary_c)
        .with("contradiction", R(contradiction));
  } else {
    rep.add("corollary: c < 1 contradicts the lower bound", "pilot:corollary", false, "bound not established");
  }

  // Witness point: the pilot tuple over t^(1/l*^2) realises the closed form.
  if (cfg.ell != cfg.p) {
    const AnsatzPoint pt = witness_ansatz(cfg.p, cfg.ell);
    const Rat xi_val = make_rat(1, 2 * cfg.ell) * cfg.v_q;
    const PilotTuple pilot = build_pilot(pt, xi_val);
    const RhoWeight rho = rho_of(cfg);
    const Rat sum = sum_log_norms(pilot, rho);
    rep.add("witness pilot sum equals lhs", "pilot:witness", sum == b.lhs_log && pilot.scaling_holds())
        .with("e_1", pilot.lifts().front())
        .with("sum", sum);

    const ThetaSetSample sample = theta_set_sample({pt}, xi_val, cfg.frobenius_depth);
    const Rat size = size_estimate(sample, rho);
    rep.add("sample size estimate bounded by witness", "pilot:size", size <= sum)
        .with("depth", R(cfg.frobenius_depth))
        .with("tuples", R(static_cast<long>(sample.tuples.size())))
        .with("size_log", size);
    rep.add("B+ cap on sampled lifts", "pilot:b-plus-cap", sample.b_plus_cap_holds());
  }
  return rep;
}

Report run_sweep_ell(const RunConfig& cfg) {
  Report rep{"sweep-ell", {}, {}};
  for (long ell : primes_in(cfg.ell_sweep.first, cfg.ell_sweep.second)) {
    if (ell == 2) continue;
    const BoundReport b = main_bound_check(ell, cfg.v_q);
    const Rat factorized = bound_margin_factorized(ell) * cfg.v_q;
    const bool predicted = factorized > 0;
    rep.add("ell=" + std::to_string(ell), "pilot:main-bound", b.pass == predicted && b.margin == factorized,
            b.pass ? "" : (b.equality ? "bound fails: equality" : "bound fails"))
        .with("holds", R(b.pass))
        .with("margin", b.margin);
  }
  const long swept = threshold_ell();
  const long rooted = threshold_ell_from_factorization();
  rep.add("threshold ell", "pilot:threshold", swept == rooted)
      .with("sweep", R(swept))
      .with("factorization", R(rooted));
  return rep;
}

Report run_ansatz(const RunConfig& cfg) {
  Report rep{"ansatz", {}, {}};
  const AnsatzPoint pt = witness_ansatz(cfg.p, cfg.ell);
  const auto profile = valuation_profile(pt);

  bool scaling = true;
  for (std::size_t idx = 0; idx < profile.size(); ++idx) {
    const long j = static_cast<long>(idx + 1);
    scaling = scaling && profile[idx] == profile.front() * (j * j);
  }
  auto& prof = rep.add("valuation profile j^2 scaling", "ansatz:valuation-scaling",
                       scaling && profile.back() == 1);
  for (std::size_t idx = 0; idx < profile.size(); ++idx) prof.with("v_K" + std::to_string(idx + 1) + "(p)", profile[idx]);

  rep.add("witness point is a member", "ansatz:membership", is_member(pt.members()));

  bool untilt_ok = true;
  for (std::size_t idx = 0; idx < pt.members().size(); ++idx) {
    const auto& m = pt.members()[idx];
    untilt_ok = untilt_ok && eta_val(m, m.a()) == TiltVal(Rat(1));
  }
  rep.add("eta_K([a_j]) has the valuation of p", "witt:untilt-valuation", untilt_ok);

  const long d = cfg.frobenius_depth;
  const auto orbit = frobenius_orbit(pt, -d, d);
  bool orbit_ok = orbit.size() == static_cast<std::size_t>(2 * d + 1);
  for (long n = -d; n <= d; ++n) {
    const AnsatzPoint& q = orbit[static_cast<std::size_t>(n + d)];
    const auto qp = valuation_profile(q);
    orbit_ok = orbit_ok && is_member(q.members());
    for (std::size_t idx = 0; idx < qp.size(); ++idx) orbit_ok = orbit_ok && qp[idx] == profile[idx] * pow(Rat(cfg.p), n);
  }
  rep.add("Frobenius orbit stays in the ansatz", "ansatz:frobenius-stability", orbit_ok)
      .with("depth", R(d))
      .with("points", R(static_cast<long>(orbit.size())));

  std::vector<PrimitiveDeg1> tampered = pt.members();
  const unsigned long last = tampered.size();
  if (last >= 2) {
    tampered.back() = PrimitiveDeg1(tilt_pow(pt.a(), last * last + 1));
  } else {
    tampered.emplace_back(tilt_pow(pt.a(), 5));
  }
  rep.add("tampered tuple rejected (negative control)", "ansatz:membership", !is_member(tampered));

  std::vector<long> images(static_cast<std::size_t>(cfg.p));
  const long mult = cfg.p > 2 ? 2 : 1;
  for (long c = 0; c < cfg.p; ++c) images[static_cast<std::size_t>(c)] = (mult * c) % cfg.p;
  const CoefficientSubstitution sigma(cfg.p, images);
  rep.add("membership and profile invariant under coefficient substitution", "ansatz:substitution-invariance",
          scale_invariance_check(pt, sigma), "valuation-level stand-in for the Galois action");

  const auto records = holomorphoid_records(pt, "tate-curve", cfg.v_q);
  rep.add("holomorphoid records", "ansatz:holomorphoid", records.size() == profile.size())
      .with("records", R(static_cast<long>(records.size())))
      .with("tate_param_val", records.front().tate_param_val);
  return rep;
}

Report run_loglink(const RunConfig& cfg) {
  Report rep{"loglink", {}, {}};
  const long p = cfg.p;

  const LogLinkChain chain = chain_build(p, Rat(1), cfg.chain_window.first, cfg.chain_window.second);
  auto& rec = rep.add("chain ratios exactly p", "loglink:chain", chain.ratios_exact() && chain.norms_grow_downward());
  rec.with("rows", R(static_cast<long>(chain.entries.size())));
  for (const auto& [n, v] : chain.entries) rec.with("v_" + std::to_string(n), v);

  for (const Rat& eps : cfg.epsilon_grid) {
    const EpsilonStep step = m_of_epsilon(p, eps);
    const Rat at_m = pow(Rat(p), -step.m);
    const bool minimal = step.m == 0 || !(pow(Rat(p), -(step.m - 1)) < eps);
    rep.add("m(eps) for eps=" + to_string(eps), "loglink:m-epsilon", step.trivial || (at_m < eps && minimal),
            step.trivial ? "eps >= 1: trivially m = 0" : "")
        .with("eps", eps)
        .with("m", R(step.m));
  }

  const int N = cfg.padic_precision;
  if (N < minimum_log_precision(p)) {
    throw PrecisionError("padic_precision " + std::to_string(N) + " too small at p = " + std::to_string(p) +
                             "; need at least " + std::to_string(minimum_log_precision(p)),
                         minimum_log_precision(p));
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(cfg.seed));
  const long v = principal_unit_valuation(p);
  Integer pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
  Integer range;
  mpz_ui_pow_ui(range.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N - v));
  auto random_unit = [&] { return PadicUnit(p, N, Integer(1 + pv * rng.get_z_range(range))); };

  long hom_fail = 0;
  long frob_fail = 0;
  for (long trial = 0; trial < cfg.property_trials; ++trial) {
    const PadicUnit u = random_unit();
    const PadicUnit w = random_unit();
    const Integer mod = u.modulus();
    Integer lhs = padic_log(u * w);
    Integer rhs = (padic_log(u) + padic_log(w)) % mod;
    if (lhs != rhs) ++hom_fail;
    Integer lp = padic_log(pow(u, static_cast<unsigned long>(p)));
    Integer rp = (p * padic_log(u)) % mod;
    if (lp != rp) ++frob_fail;
  }
  rep.add("log(uw) = log(u) + log(w)", "loglink:log-homomorphism", hom_fail == 0)
      .with("trials", R(cfg.property_trials))
      .with("precision", R(N))
      .with("failures", R(hom_fail));
  rep.add("log(u^p) = p log(u)", "loglink:log-shell", frob_fail == 0)
      .with("trials", R(cfg.property_trials))
      .with("failures", R(frob_fail));

  const long a = cfg.chain_window.first;
  const long c = cfg.chain_window.second;
  const long b = (a + c) / 2;
  rep.add("Kummer shifts telescope", "loglink:kummer-shift",
          kummer_shift(a, b) + kummer_shift(b, c) == kummer_shift(a, c) && kummer_shift(c - 1, c) == 1)
      .with("shift", R(kummer_shift(a, c)));
  return rep;
}

std::vector<Report> run_command(std::string_view command, const RunConfig& cfg, bool timing) {
  using Runner = std::function<Report(const RunConfig&)>;
  std::vector<Runner> runners;
  if (command == "verify-theta") {
    runners = {run_verify_theta};
  } else if (command == "bound") {
    runners = {run_bound};
  } else if (command == "sweep-ell") {
    runners = {run_sweep_ell};
  } else if (command == "ansatz") {
    runners = {run_ansatz};
  } else if (command == "loglink") {
    runners = {run_loglink};
  } else if (command == "all") {
    runners = {run_verify_theta, run_bound, run_sweep_ell, run_ansatz, run_loglink};
  } else {
    throw ConfigError("unknown command '" + std::string(command) + "'");
  }
  std::vector<Report> out;
  for (const Runner& run : runners) {
    const auto start = std::chrono::steady_clock::now();
    Report r = run(cfg);
    if (timing) {
      r.wall_time_us = static_cast<long>(
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
    }
    out.push_back(std::move(r));
  }
  return out;
}

int exit_code(const std::vector<Report>& suites) {
  return std::all_of(suites.begin(), suites.end(), [](const Report& r) { return r.passed(); }) ? 0 : 1;
}

}  // namespace teich::cli
