// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// Criterion 13 re-runs the whole battery with the same seed and requires the
// serialized reports to be byte-identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hkts/catalog.hpp"
#include "hkts/convergence.hpp"
#include "hkts/detail/rng.hpp"
#include "hkts/gauge.hpp"
#include "hkts/integrator.hpp"
#include "hkts/riesz.hpp"
#include "hkts/serialize.hpp"
#include "hkts/verify.hpp"
#include "support.hpp"

using namespace hkts;
using nlohmann::json;

namespace {

constexpr uint64_t kSeed = 2024;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::string report;  // serialized results, compared byte-for-byte in criterion 13
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. f == 1 on 50 random scales: value b-a, spread 0 at level 0 (<= 1e-12 in floating point).
Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  detail::SplitMix64 rng(kSeed);
  const auto one = Integrand::scalar([](double) { return 1.0; });
  HkConfig cfg;
  cfg.samples_per_level = 3;
  json rep = json::array();
  bool pass = true;
  for (int k = 0; k < 50; ++k) {
    const TsInterval iv = testsupport::full_span(testsupport::random_scale(rng));
    cfg.seed = detail::mix_stream(kSeed, 1, static_cast<uint64_t>(k));
    const auto res = hk_integrate(one, iv, LatticeElement::scalar(1e-12), cfg);
    pass = pass && res.converged && res.levels_used == 1 &&
           std::fabs(res.value[0] - iv.length()) <= 1e-12;
    rep.push_back(to_json(res));
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "50 scales, " << dt << " s";
  return {pass && dt < 2.0, d.str(), rep.dump()};
}

// 2. T = [0,1], f(t) = t -> 0.5 within 1e-6, <= 25 levels, < 1 s.
Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = catalog::problem("t-on-unit");
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 4;
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-6), cfg);
  const double dt = seconds_since(t0);
  const double err = std::fabs(res.value[0] - 0.5);
  std::ostringstream d;
  d << "err " << err << ", " << res.levels_used << " levels, " << dt << " s";
  return {res.converged && err <= 1e-6 && res.levels_used <= 25 && dt < 1.0, d.str(),
          to_json(res).dump()};
}

// 3. Forced sums on uniform(0,5,1): exactly 30 at level 0.
Outcome criterion3() {
  const auto& p = catalog::problem("t2-on-grid");
  HkConfig cfg;
  cfg.seed = kSeed;
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-12), cfg);
  const double err = std::fabs(res.value[0] - 30.0);
  std::ostringstream d;
  d << "value " << res.value[0] << ", spread " << res.spread[0];
  return {res.converged && res.levels_used == 1 && err <= 1e-12 && is_zero(res.spread),
          d.str(), to_json(res).dump()};
}

// 4. Hybrid scale, f(t) = t over [0,3] -> 4.25 within 1e-6, < 2 s.
Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = catalog::problem("t-on-hybrid");
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 4;
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-6), cfg);
  const double oracle_gap = std::fabs(oracle_integrate(p.f, p.interval)[0] - 4.25);
  const double dt = seconds_since(t0);
  const double err = std::fabs(res.value[0] - 4.25);
  std::ostringstream d;
  d << "err " << err << ", oracle gap " << oracle_gap << ", " << dt << " s";
  return {res.converged && err <= 1e-6 && oracle_gap <= 1e-9 && dt < 2.0, d.str(),
          to_json(res).dump()};
}

// Catalog problem pairs sharing a scale, for linearity draws.
const std::vector<std::pair<const char*, const char*>>& linearity_pool() {
  static const std::vector<std::pair<const char*, const char*>> pool = {
      {"t-on-unit", "t2-on-unit"},   {"t-on-unit", "sin-on-unit"},
      {"t2-on-unit", "sin-on-unit"}, {"t2-on-unit", "t-on-unit"},
      {"sin-on-unit", "t-on-unit"},  {"t-on-hybrid", "one-on-hybrid"},
      {"one-on-hybrid", "t-on-hybrid"}, {"t2-on-grid", "t2-on-grid"},
      {"t-on-qscale", "t-on-qscale"},
  };
  return pool;
}

// 5. Linearity: 20 random (f, g, alpha, beta); defect <= sum of three spreads + 1e-9.
Outcome criterion5() {
  detail::SplitMix64 rng(detail::mix_stream(kSeed, 5, 0));
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 4;
  const LatticeElement tol = LatticeElement::scalar(1e-6);
  json rep = json::array();
  bool pass = true;
  const auto& pool = linearity_pool();
  for (int k = 0; k < 20; ++k) {
    const auto& [na, nb] = pool[rng.next() % pool.size()];
    const auto& pa = catalog::problem(na);
    const auto& pb = catalog::problem(nb);
    const double alpha = -2.0 + 4.0 * rng.next_double();
    const double beta = -2.0 + 4.0 * rng.next_double();
    const auto lr = check_linearity(pa.f, pb.f, alpha, beta, pa.interval, tol, cfg);
    const LatticeElement bound =
        lr.f.spread + lr.g.spread + lr.combined.spread + LatticeElement::scalar(1e-9);
    pass = pass && leq(lr.defect, bound);
    rep.push_back({{"pair", std::string(na) + "+" + nb},
                   {"alpha", alpha},
                   {"beta", beta},
                   {"defect", to_json(lr.defect)},
                   {"bound", to_json(bound)}});
  }
  return {pass, "20 cases", rep.dump()};
}

// 6. Additivity: 20 random splits (left-scattered c included); defect bound as
//    in criterion 5; 200/200 stitched partitions carry c (or rho(c) with right c).
Outcome criterion6() {
  detail::SplitMix64 rng(detail::mix_stream(kSeed, 6, 0));
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 4;
  const LatticeElement tol = LatticeElement::scalar(1e-6);

  struct Split {
    const char* problem;
    double c;
  };
  std::vector<Split> splits = {{"t-on-hybrid", 1.5}, {"t-on-hybrid", 2.0}};  // scattered c
  const char* names[] = {"t-on-unit", "t2-on-unit", "sin-on-unit", "t-on-hybrid",
                         "t2-on-grid"};
  while (splits.size() < 20) {
    const char* name = names[rng.next() % 5];
    const auto& p = catalog::problem(name);
    const double cand = p.interval.a +
                        (p.interval.b - p.interval.a) * (0.1 + 0.8 * rng.next_double());
    // snap to the scale: nearest component endpoint when the draw fell in a gap
    double c = cand;
    if (!p.interval.scale.contains(c)) {
      double best = p.interval.scale.min(), bd = 1e300;
      for (const auto& comp : p.interval.scale.components())
        for (double e : {comp.lo, comp.hi})
          if (std::fabs(e - cand) < bd) bd = std::fabs(e - cand), best = e;
      c = best;
    } else if (name == std::string("t2-on-grid")) {
      c = std::floor(cand);  // grid points only
    }
    if (!(p.interval.a < c && c < p.interval.b)) continue;
    splits.push_back({name, c});
  }

  json rep = json::array();
  bool pass = true;
  size_t stitched_hits = 0, stitched_total = 0;
  for (const auto& sp : splits) {
    const auto& p = catalog::problem(sp.problem);
    const auto sr = split_integrate(p.f, p.interval, sp.c, tol, cfg);
    const LatticeElement bound = sr.whole.spread + sr.left.spread + sr.right.spread +
                                 LatticeElement::scalar(1e-9);
    pass = pass && leq(sr.defect, bound) && sr.stitched_split_ok;

    // 10 extra stitched-gauge samples per split: 200 total.
    const TsInterval left_iv(p.interval.scale, p.interval.a, sp.c);
    const TsInterval right_iv(p.interval.scale, sp.c, p.interval.b);
    const DeltaGauge stitched =
        stitch_gauges(DeltaGauge::constant(left_iv, 0.25, 0.25),
                      DeltaGauge::constant(right_iv, 0.25, 0.25));
    const double rho_c = p.interval.scale.rho(sp.c);
    for (int s = 0; s < 10; ++s) {
      const TaggedPartition part = random_fine_partition(
          p.interval, stitched, detail::mix_stream(kSeed, 0x616363ULL, stitched_total));
      ++stitched_total;
      bool hit = false;
      for (const auto& it : part.items)
        hit = hit || it.tag == sp.c || (it.tag == rho_c && it.right == sp.c);
      if (hit && is_fine(part, stitched) && is_full(part, p.interval)) ++stitched_hits;
    }
    rep.push_back({{"problem", sp.problem},
                   {"c", sp.c},
                   {"defect", to_json(sr.defect)},
                   {"bound", to_json(bound)}});
  }
  std::ostringstream d;
  d << "stitched " << stitched_hits << "/" << stitched_total;
  rep.push_back({{"stitched_hits", stitched_hits}});
  return {pass && stitched_hits == 200 && stitched_total == 200, d.str(), rep.dump()};
}

// 7. Saks-Henstock: 100 random partial selections, residual <= fitted bound at
//    phi == 1, zero violations.
Outcome criterion7() {
  detail::SplitMix64 rng(detail::mix_stream(kSeed, 7, 0));
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 4;
  const LatticeElement tol = LatticeElement::scalar(1e-3);
  json rep = json::array();
  size_t violations = 0;
  const char* names[] = {"t-on-unit", "t-on-hybrid", "t2-on-grid", "sin-on-unit"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& p = catalog::problem(names[trial % 4]);
    const auto full = hk_integrate(p.f, p.interval, tol, cfg);
    const double radius = cfg.initial_scale * std::pow(2.0, -(full.levels_used - 1));
    const TaggedPartition whole =
        cousin_partition(p.interval, DeltaGauge::constant(p.interval, radius, radius));
    TaggedPartition partial;
    for (const auto& it : whole.items)
      if (rng.next_bool()) partial.items.push_back(it);
    const LatticeElement residual = saks_henstock_residual(p.f, p.interval, partial, tol, cfg);
    const LatticeElement bound = regulator_eval(full.fitted_regulator, EvalMap::constant(1));
    if (!leq(residual, bound)) ++violations;
    rep.push_back({{"residual", to_json(residual)}, {"bound", to_json(bound)}});
  }
  std::ostringstream d;
  d << violations << "/100 violations";
  return {violations == 0, d.str(), rep.dump()};
}

// 8. Cousin partitioner: 1000 random (scale, gauge) pairs -> full + fine, < 5 s.
Outcome criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  detail::SplitMix64 rng(detail::mix_stream(kSeed, 8, 0));
  size_t ok = 0;
  json rep = json::array();
  for (int k = 0; k < 1000; ++k) {
    const TsInterval iv = testsupport::full_span(testsupport::random_scale(rng));
    const double dl = 0.005 + 0.5 * rng.next_double();
    const double dr = 0.005 + 0.5 * rng.next_double();
    const DeltaGauge g = DeltaGauge::constant(iv, dl, dr);
    const TaggedPartition p = cousin_partition(iv, g);
    if (is_fine(p, g) && is_full(p, iv)) ++ok;
    rep.push_back(p.size());
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/1000 full+fine, " << dt << " s";
  return {ok == 1000 && dt < 5.0, d.str(), rep.dump()};
}

// 9. Riesz/regulator suite: exhaustive combination domination, Fremlin on 1000
//    random samples, sigma-distributivity proxy.
Outcome criterion9() {
  const auto results = verify::run("riesz", kSeed);
  bool pass = true;
  json rep = json::array();
  for (const auto& s : results)
    for (const auto& c : s.cases) {
      pass = pass && c.pass;
      rep.push_back({{"case", c.name}, {"pass", c.pass}});
    }
  return {pass, "3 checks", rep.dump()};
}

// 10. UCT on the hybrid scale: |I(f_n) - 4.25| <= 4.25/n + 2*spread for
//     n in {1,...,1024}; engine accuracy at n = 1024 within 1e-4 of the exact
//     integral 4.25 (1 - 1/n).
Outcome criterion10() {
  const TimeScale hybrid = catalog::scale("hybrid");
  const TsInterval iv(hybrid, 0.0, 3.0);
  const auto seq = catalog::sequence("linear-shrink", hybrid);
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 3;
  const LatticeElement tol = LatticeElement::scalar(1e-5);
  json rep = json::array();
  bool pass = true;
  double final_gap = 0.0;
  for (int n = 1; n <= 1024; n *= 2) {
    const auto res = hk_integrate(seq.gen(n), iv, tol, cfg);
    const double gap = std::fabs(res.value[0] - 4.25);
    const double bound = 4.25 / n + 2.0 * res.spread[0];
    pass = pass && res.converged && gap <= bound;
    if (n == 1024) final_gap = std::fabs(res.value[0] - 4.25 * (1.0 - 1.0 / n));
    rep.push_back({{"n", n}, {"result", to_json(res)}});
  }
  std::ostringstream d;
  d << "final gap " << final_gap;
  return {pass && final_gap <= 1e-4, d.str(), rep.dump()};
}

// 11. MCT on [0,1]: integrals nondecreasing within 2*spread; limit gap at
//     n = 2^20 <= 1e-6; crude-bound residuals x = (b-a)(L-l) in 100% of samples.
Outcome criterion11() {
  const TimeScale unit = catalog::scale("unit-interval");
  const TsInterval iv(unit, 0.0, 1.0);
  const auto seq = catalog::sequence("linear-shrink", unit);
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 3;
  json rep = json::array();

  // nondecreasing leg at a modest tolerance
  const LatticeElement tol = LatticeElement::scalar(1e-6);
  std::vector<IntegralResult> rs;
  bool pass = true;
  for (int n = 1; n <= 32; n *= 2) {
    rs.push_back(hk_integrate(seq.gen(n), iv, tol, cfg));
    pass = pass && rs.back().converged;
    rep.push_back({{"n", n}, {"result", to_json(rs.back())}});
  }
  for (size_t i = 0; i + 1 < rs.size(); ++i) {
    const LatticeElement slack = 2.0 * (rs[i].spread + rs[i + 1].spread);
    if (!leq(rs[i].value, rs[i + 1].value + slack)) pass = false;
  }

  // limit gap at n = 2^20 with a tight tolerance
  const LatticeElement tight = LatticeElement::scalar(2.5e-7);
  const int n_big = 1 << 20;
  const auto big = hk_integrate(seq.gen(n_big), iv, tight, cfg);
  const auto lim = hk_integrate(seq.limit, iv, tight, cfg);
  const double gap = std::fabs(big.value[0] - lim.value[0]);
  pass = pass && big.converged && lim.converged && gap <= 1e-6;
  rep.push_back({{"n", n_big}, {"result", to_json(big)}});
  rep.push_back({{"limit", to_json(lim)}});

  // crude bound x = (b-a)(L-l) = 1 on sampled partitions
  const LatticeElement x = LatticeElement::scalar(1.0);
  const DeltaGauge coarse = DeltaGauge::constant(iv, cfg.initial_scale, cfg.initial_scale);
  size_t samples = 0, violations = 0;
  for (size_t k = 0; k < rs.size(); ++k) {
    const Integrand fn = seq.gen(1 << k);
    for (int j = 0; j < 10; ++j) {
      const TaggedPartition p = random_fine_partition(
          iv, coarse, detail::mix_stream(kSeed, 0x6d6374ULL, samples));
      ++samples;
      if (!leq(abs(riemann_sum(fn, p) - rs[k].value), x)) ++violations;
    }
  }
  rep.push_back({{"residual_samples", samples}, {"residual_violations", violations}});
  std::ostringstream d;
  d << "limit gap " << gap << ", residuals " << (samples - violations) << "/" << samples;
  return {pass && violations == 0, d.str(), rep.dump()};
}

// 12. HK showcase: the oscillatory derivative on [0,1]. Within 1e-2 of sin(1)
//     OR an honest converged = false; silent wrong answers fail. Cap 60 s.
Outcome criterion12() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = catalog::problem("oscillatory-showcase");
  HkConfig cfg;
  cfg.seed = kSeed;
  cfg.samples_per_level = 3;
  cfg.max_levels = 18;
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-2), cfg);
  const double dt = seconds_since(t0);
  const double err = std::fabs(res.value[0] - std::sin(1.0));
  const bool honest = res.converged ? err <= 1e-2 : true;
  std::ostringstream d;
  d << (res.converged ? "converged, err " : "honest non-convergence, spread ")
    << (res.converged ? err : res.spread[0]) << ", " << dt << " s";
  return {honest && dt < 60.0, d.str(), to_json(res).dump()};
}

using CriterionFn = std::function<Outcome()>;

struct Criterion {
  const char* name;
  CriterionFn fn;
};

const std::vector<Criterion>& battery() {
  static const std::vector<Criterion> cs = {
      {"constant integrand exactness", criterion1},
      {"continuum oracle t on [0,1]", criterion2},
      {"forced-sum oracle t^2 on grid", criterion3},
      {"hybrid oracle t on [0,3]", criterion4},
      {"linearity", criterion5},
      {"additivity with stitched gauges", criterion6},
      {"saks-henstock partial residuals", criterion7},
      {"cousin partitioner", criterion8},
      {"riesz regulator suite", criterion9},
      {"uniform convergence (UCT)", criterion10},
      {"monotone convergence (MCT)", criterion11},
      {"oscillatory showcase", criterion12},
  };
  return cs;
}

}  // namespace

int main() {
  std::vector<Outcome> first;
  bool all = true;
  const auto& cs = battery();
  for (size_t i = 0; i < cs.size(); ++i) {
    const Outcome o = cs[i].fn();
    std::printf("[%s] criterion %2zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                cs[i].name, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
    first.push_back(o);
  }

  // 13. Determinism: identical seeds, byte-identical reports.
  bool identical = true;
  for (size_t i = 0; i < cs.size(); ++i) {
    const Outcome o = cs[i].fn();
    if (o.report != first[i].report) identical = false;
  }
  std::printf("[%s] criterion 13: determinism (%zu reports byte-compared)\n",
              identical ? "PASS" : "FAIL", cs.size());
  all = all && identical;
  return all ? 0 : 1;
}
