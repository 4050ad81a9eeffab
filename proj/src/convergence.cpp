#include "hkts/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkts/detail/rng.hpp"

namespace hkts {

namespace {

bool strictly_less(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  for (int i = 0; i < x.dim(); ++i)
    if (!(x[i] < y[i])) return false;
  return true;
}

double snap_to_scale(const TimeScale& ts, double t) {
  if (ts.contains(t)) return t;
  double best = ts.min();
  double best_d = std::fabs(t - best);
  for (const auto& c : ts.components()) {
    for (double cand : {c.lo, c.hi}) {
      const double d = std::fabs(t - cand);
      if (d < best_d) {
        best = cand;
        best_d = d;
      }
    }
  }
  return best;
}

/// Tightest sampled regulator value (componentwise minimum over phis).
LatticeElement tightest_bound(const Regulator& reg, const std::vector<EvalMap>& phis) {
  if (phis.empty()) throw std::invalid_argument("need at least one eval map");
  LatticeElement b = regulator_eval(reg, phis.front());
  for (size_t i = 1; i < phis.size(); ++i) b = meet(b, regulator_eval(reg, phis[i]));
  return b;
}

}  // namespace

std::vector<double> sample_scale_points(const TsInterval& interval, uint64_t seed,
                                        int count) {
  std::vector<double> pts{interval.a, interval.b};
  detail::SplitMix64 rng(detail::mix_stream(seed, 0x706f696e7473ULL, 7));
  double u = rng.next_double();
  constexpr double kGolden = 0.6180339887498949;
  for (int i = 0; i < count; ++i) {
    u += kGolden;
    u -= std::floor(u);
    const double cand = interval.a + u * (interval.b - interval.a);
    const double snapped = snap_to_scale(interval.scale, cand);
    if (snapped >= interval.a && snapped <= interval.b) pts.push_back(snapped);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<EvalMap> sample_eval_maps(uint64_t seed, int rows, int random_count) {
  std::vector<EvalMap> phis;
  for (int n = 1; n <= 8; ++n) phis.push_back(EvalMap::constant(n));
  detail::SplitMix64 rng(detail::mix_stream(seed, 0x706869ULL, 3));
  for (int k = 0; k < random_count; ++k) {
    EvalMap m;
    for (int i = 0; i < rows; ++i)
      m.values.push_back(1 + static_cast<int>(rng.next() % 8));
    m.tail_value = 1 + static_cast<int>(rng.next() % 8);
    phis.push_back(std::move(m));
  }
  return phis;
}

WcrsWitness wcrs_witness(const FunctionSequence& seq, const Regulator& reg,
                         const std::vector<double>& points,
                         const std::vector<EvalMap>& phis, int n_max) {
  WcrsWitness w;
  w.regulator = reg;
  w.phi_samples = phis;
  const LatticeElement bound = tightest_bound(reg, phis);

  std::vector<int> last_violation(points.size(), 0);
  for (int n = 1; n <= n_max; ++n) {
    const Integrand fn = seq.gen(n);
    for (size_t k = 0; k < points.size(); ++k) {
      const double t = points[k];
      const LatticeElement d = abs(fn.eval(t) - seq.limit.eval(t));
      if (!strictly_less(d, bound)) last_violation[k] = n;
    }
  }
  w.found = true;
  for (size_t k = 0; k < points.size(); ++k) {
    if (last_violation[k] >= n_max) {
      w.found = false;
      w.offending_t = points[k];
    }
    w.p_table.emplace_back(points[k], last_violation[k] + 1);
  }
  return w;
}

UniformIntegrabilityReport uniform_integrability_check(const FunctionSequence& seq,
                                                       const TsInterval& interval,
                                                       const Regulator& reg,
                                                       const UniformIntegrabilityConfig& cfg) {
  UniformIntegrabilityReport rep;
  rep.bound = tightest_bound(reg, cfg.phis);

  std::vector<Integrand> fns;
  std::vector<LatticeElement> values;
  for (int n : cfg.n_set) {
    fns.push_back(seq.gen(n));
    values.push_back(hk_integrate(fns.back(), interval, cfg.engine_tol, cfg.hk).value);
  }

  for (int level = 0; level < cfg.gauge_levels && rep.common_level < 0; ++level) {
    const double radius = cfg.hk.initial_scale * std::pow(2.0, -level);
    const DeltaGauge gauge = DeltaGauge::constant(interval, radius, radius);
    bool all_ok = true;
    std::vector<std::pair<int, LatticeElement>> residuals;
    for (size_t k = 0; k < fns.size(); ++k) {
      LatticeElement worst = LatticeElement::zeros(seq.dim);
      for (int j = 0; j < cfg.partitions_per_level; ++j) {
        const TaggedPartition p = random_fine_partition(
            interval, gauge,
            detail::mix_stream(cfg.hk.seed, static_cast<uint64_t>(level) * 131 + k,
                               static_cast<uint64_t>(j)));
        worst = join(worst, abs(riemann_sum(fns[k], p) - values[k]));
      }
      residuals.emplace_back(cfg.n_set[k], worst);
      if (!leq(worst, rep.bound)) all_ok = false;
    }
    rep.max_residual = std::move(residuals);
    if (all_ok) rep.common_level = level;
  }
  rep.ok = rep.common_level >= 0;
  return rep;
}

UctReport uct_experiment(const FunctionSequence& seq, const TsInterval& interval,
                         const UctConfig& cfg) {
  UctReport rep;
  rep.n_schedule = cfg.n_schedule;

  // Sample set: coarse partition tags plus quasi-random scale points.
  std::vector<double> points = sample_scale_points(interval, cfg.hk.seed);
  {
    const DeltaGauge coarse =
        DeltaGauge::constant(interval, cfg.hk.initial_scale, cfg.hk.initial_scale);
    for (const auto& it : cousin_partition(interval, coarse).items)
      points.push_back(it.tag);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  const std::vector<EvalMap> phis = sample_eval_maps(cfg.hk.seed);

  const WcrsWitness witness = wcrs_witness(seq, cfg.reg, points, phis, cfg.n_max);
  rep.wcrs_ok = witness.found;

  // Per-phi witness thresholds so the fitted bounds eps_n shrink with n.
  std::vector<LatticeElement> phi_bounds;
  std::vector<int> phi_pmax(phis.size(), cfg.n_max + 1);
  for (const auto& phi : phis) phi_bounds.push_back(regulator_eval(cfg.reg, phi));
  {
    std::vector<std::vector<int>> last_violation(phis.size(),
                                                 std::vector<int>(points.size(), 0));
    for (int n = 1; n <= cfg.n_max; ++n) {
      const Integrand fn = seq.gen(n);
      for (size_t k = 0; k < points.size(); ++k) {
        const LatticeElement d = abs(fn.eval(points[k]) - seq.limit.eval(points[k]));
        for (size_t q = 0; q < phis.size(); ++q)
          if (!strictly_less(d, phi_bounds[q])) last_violation[q][k] = n;
      }
    }
    for (size_t q = 0; q < phis.size(); ++q) {
      int pmax = 1;
      bool ok = true;
      for (size_t k = 0; k < points.size(); ++k) {
        if (last_violation[q][k] >= cfg.n_max) ok = false;
        pmax = std::max(pmax, last_violation[q][k] + 1);
      }
      phi_pmax[q] = ok ? pmax : cfg.n_max + 1;
    }
  }

  UniformIntegrabilityConfig ui;
  ui.n_set = cfg.n_schedule;
  // Engine values must be resolved well below the regulator bound, or the
  // sampled residuals would be dominated by engine error.
  ui.engine_tol = meet(cfg.tol, 0.25 * tightest_bound(cfg.reg, phis));
  ui.gauge_levels = 12;
  ui.phis = phis;
  ui.hk = cfg.hk;
  rep.uniform_ok = uniform_integrability_check(seq, interval, cfg.reg, ui).ok;

  const IntegralResult limit_res = hk_integrate(seq.limit, interval, cfg.tol, cfg.hk);
  rep.limit_value = limit_res.value;

  const double width = interval.length();
  LatticeElement loosest = phi_bounds.front();
  for (const auto& b : phi_bounds) loosest = join(loosest, b);

  LatticeElement last_gap = LatticeElement::zeros(seq.dim);
  LatticeElement last_spread = LatticeElement::zeros(seq.dim);
  for (size_t i = 0; i < cfg.n_schedule.size(); ++i) {
    const int n = cfg.n_schedule[i];
    const IntegralResult rn = hk_integrate(seq.gen(n), interval, cfg.tol, cfg.hk);
    const LatticeElement gap = abs(rn.value - limit_res.value);
    // Tightest sampled phi already valid at this n.
    LatticeElement eps = width * loosest;
    for (size_t q = 0; q < phis.size(); ++q)
      if (phi_pmax[q] <= n) eps = meet(eps, width * phi_bounds[q]);
    eps = eps + rn.spread + limit_res.spread;
    rep.gaps.push_back(gap);
    rep.eps.push_back(eps);
    rep.gap_ok.push_back(leq(gap, eps));
    last_gap = gap;
    last_spread = rn.spread;
  }
  rep.final_ok = leq(last_gap, last_spread + limit_res.spread + cfg.tol);
  rep.ok = rep.wcrs_ok && rep.uniform_ok && rep.final_ok &&
           std::all_of(rep.gap_ok.begin(), rep.gap_ok.end(), [](bool b) { return b; });
  return rep;
}

MctReport mct_experiment(const FunctionSequence& seq, const TsInterval& interval,
                         const MctConfig& cfg) {
  if (cfg.n_schedule.empty()) throw std::invalid_argument("mct: empty schedule");
  MctReport rep;
  const std::vector<double> points = sample_scale_points(interval, cfg.hk.seed, 32);

  // Monotonicity and bound spot checks.
  rep.monotone_ok = true;
  rep.bounds_ok = true;
  for (size_t i = 0; i + 1 < cfg.n_schedule.size() && rep.monotone_ok; ++i) {
    const Integrand fa = seq.gen(cfg.n_schedule[i]);
    const Integrand fb = seq.gen(cfg.n_schedule[i + 1]);
    for (double t : points) {
      if (!leq(fa.eval(t), fb.eval(t))) {
        rep.monotone_ok = false;
        rep.monotone_violation_t = t;
        rep.monotone_violation_n = cfg.n_schedule[i];
        break;
      }
    }
  }
  {
    const Integrand f1 = seq.gen(1);
    for (double t : points) {
      if (!leq(cfg.lower_bound, f1.eval(t)) || !leq(seq.limit.eval(t), cfg.upper_bound)) {
        rep.bounds_ok = false;
        break;
      }
    }
  }

  const double width = interval.length();
  rep.crude_bound = width * (cfg.upper_bound - cfg.lower_bound);

  std::vector<IntegralResult> results;
  std::vector<Regulator> fitted;
  for (int n : cfg.n_schedule) {
    results.push_back(hk_integrate(seq.gen(n), interval, cfg.tol, cfg.hk));
    rep.values.push_back(results.back().value);
    if (fitted.size() < 32) fitted.push_back(results.back().fitted_regulator);
  }

  rep.nondecreasing_ok = true;
  for (size_t i = 0; i + 1 < results.size(); ++i) {
    const LatticeElement slack = results[i].spread + results[i + 1].spread;
    if (!leq(results[i].value, results[i + 1].value + slack)) rep.nondecreasing_ok = false;
  }
  rep.bounded_ok = true;
  const LatticeElement upper = width * cfg.upper_bound;
  for (const auto& r : results)
    if (!leq(r.value, upper + r.spread + cfg.tol)) rep.bounded_ok = false;

  const IntegralResult limit_res = hk_integrate(seq.limit, interval, cfg.tol, cfg.hk);
  rep.limit_gap = abs(results.back().value - limit_res.value);
  rep.limit_ok =
      leq(rep.limit_gap, cfg.tol + results.back().spread + limit_res.spread);

  // Crude residual bound |S - I| <= x on sampled partitions.
  const DeltaGauge coarse =
      DeltaGauge::constant(interval, cfg.hk.initial_scale, cfg.hk.initial_scale);
  for (size_t k = 0; k < cfg.n_schedule.size(); ++k) {
    const Integrand fn = seq.gen(cfg.n_schedule[k]);
    for (int j = 0; j < 4; ++j) {
      const TaggedPartition p = random_fine_partition(
          interval, coarse, detail::mix_stream(cfg.hk.seed, 0x6d6374ULL + k, static_cast<uint64_t>(j)));
      const LatticeElement residual = abs(riemann_sum(fn, p) - results[k].value);
      ++rep.residual_samples;
      if (!leq(residual, rep.crude_bound)) ++rep.residual_violations;
    }
  }

  // Fremlin domination over the per-n fitted regulators.
  rep.fremlin_ok = true;
  for (const auto& phi : sample_eval_maps(cfg.hk.seed, 4, 4))
    if (!fremlin_check(fitted, rep.crude_bound, phi)) rep.fremlin_ok = false;

  rep.ok = rep.monotone_ok && rep.bounds_ok && rep.nondecreasing_ok && rep.bounded_ok &&
           rep.limit_ok && rep.residual_violations == 0 && rep.fremlin_ok;
  return rep;
}

}  // namespace hkts
