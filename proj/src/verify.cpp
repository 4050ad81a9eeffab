#include "hkts/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hkts/catalog.hpp"
#include "hkts/convergence.hpp"
#include "hkts/detail/rng.hpp"
#include "hkts/integrator.hpp"
#include "hkts/riesz.hpp"

namespace hkts::verify {

namespace {

std::string describe(const LatticeElement& x) {
  std::ostringstream os;
  os.precision(10);
  os << "[";
  for (int i = 0; i < x.dim(); ++i) os << (i ? "," : "") << x[i];
  os << "]";
  return os.str();
}

SuiteResult riesz_suite(uint64_t seed) {
  SuiteResult s{"riesz", {}, true};

  // Combination domination, exhaustive over 4-row index maps with entries 1..6.
  {
    bool ok = true;
    const auto regs = catalog::regulators();
    for (const auto& ra : regs) {
      for (const auto& rb : regs) {
        if (ra.dim() != rb.dim()) continue;
        const Regulator c = regulator_combine({ra, rb});
        EvalMap phi;
        phi.values = {1, 1, 1, 1};
        for (phi.values[0] = 1; phi.values[0] <= 6 && ok; ++phi.values[0])
          for (phi.values[1] = 1; phi.values[1] <= 6 && ok; ++phi.values[1])
            for (phi.values[2] = 1; phi.values[2] <= 6 && ok; ++phi.values[2])
              for (phi.values[3] = 1; phi.values[3] <= 6 && ok; ++phi.values[3]) {
                phi.tail_value = 6;
                const LatticeElement lhs =
                    regulator_eval(ra, phi) + regulator_eval(rb, phi);
                if (!leq(lhs, regulator_eval(c, phi))) ok = false;
              }
      }
    }
    s.cases.push_back({"combination-domination-exhaustive", ok, ""});
  }

  // Fremlin inequality on random (family, x, phi) samples.
  {
    detail::SplitMix64 rng(detail::mix_stream(seed, 0x667265ULL, 1));
    size_t violations = 0;
    const int samples = 1000;
    for (int k = 0; k < samples; ++k) {
      const int family_size = 1 + static_cast<int>(rng.next() % 6);
      std::vector<Regulator> family;
      for (int n = 0; n < family_size; ++n) {
        const int rows = 1 + static_cast<int>(rng.next() % 4);
        std::vector<LatticeElement> us;
        for (int i = 0; i < rows; ++i)
          us.push_back(LatticeElement::scalar(rng.next_double() * 2.0));
        family.push_back(Regulator(std::move(us), 0.5));
      }
      const LatticeElement x = LatticeElement::scalar(rng.next_double() * 3.0);
      EvalMap phi;
      for (int i = 0; i < 4; ++i)
        phi.values.push_back(1 + static_cast<int>(rng.next() % 6));
      phi.tail_value = 1 + static_cast<int>(rng.next() % 6);
      if (!fremlin_check(family, x, phi)) ++violations;
    }
    std::ostringstream detail;
    detail << violations << "/" << samples << " violations";
    s.cases.push_back({"fremlin-random-samples", violations == 0, detail.str()});
  }

  // Sigma-distributivity proxy decreases and vanishes at depth 60.
  {
    bool ok = true;
    for (const auto& r : catalog::regulators()) {
      const auto rep = sigma_distributivity_check(r, 60);
      if (!rep.decreasing) ok = false;
      const double mass = max_norm(r.row_mass());
      if (!(max_norm(rep.infimum_proxy) <= 1e-15 * std::max(mass, 1.0))) ok = false;
    }
    s.cases.push_back({"sigma-distributivity-proxy", ok, ""});
  }

  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult linearity_suite(uint64_t seed) {
  SuiteResult s{"linearity", {}, true};
  HkConfig cfg;
  cfg.seed = seed;
  const LatticeElement tol = LatticeElement::scalar(1e-3);
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"t-on-unit", "t2-on-unit"},
      {"t-on-hybrid", "one-on-hybrid"},
      {"t2-on-grid", "t2-on-grid"},
      {"sin-on-unit", "t-on-unit"},
  };
  detail::SplitMix64 rng(detail::mix_stream(seed, 0x6c696eULL, 1));
  for (const auto& [fa, fb] : pairs) {
    const auto& pa = catalog::problem(fa);
    const auto& pb = catalog::problem(fb);
    const double alpha = -2.0 + 4.0 * rng.next_double();
    const double beta = -2.0 + 4.0 * rng.next_double();
    const auto rep = check_linearity(pa.f, pb.f, alpha, beta, pa.interval, tol, cfg);
    s.cases.push_back({fa + "+" + fb, rep.ok, "defect " + describe(rep.defect)});
  }
  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult additivity_suite(uint64_t seed) {
  SuiteResult s{"additivity", {}, true};
  HkConfig cfg;
  cfg.seed = seed;
  const LatticeElement tol = LatticeElement::scalar(1e-3);
  const std::vector<std::pair<std::string, double>> cases = {
      {"t-on-hybrid", 1.5},  // left-scattered split point
      {"t-on-hybrid", 0.5},
      {"t-on-unit", 0.25},
      {"t2-on-grid", 2.0},
  };
  for (const auto& [name, c] : cases) {
    const auto& p = catalog::problem(name);
    const auto rep = split_integrate(p.f, p.interval, c, tol, cfg);
    std::ostringstream detail;
    detail << "c=" << c << " defect " << describe(rep.defect)
           << (rep.stitched_split_ok ? "" : " (stitched tag check failed)");
    s.cases.push_back({name, rep.ok && rep.stitched_split_ok, detail.str()});
  }
  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult saks_henstock_suite(uint64_t seed) {
  SuiteResult s{"saks-henstock", {}, true};
  HkConfig cfg;
  cfg.seed = seed;
  const LatticeElement tol = LatticeElement::scalar(1e-3);
  for (const std::string& name : {"t-on-unit", "t-on-hybrid", "t2-on-grid"}) {
    const auto& p = catalog::problem(name);
    const IntegralResult full = hk_integrate(p.f, p.interval, tol, cfg);
    const int level = full.levels_used - 1;
    const double radius = cfg.initial_scale * std::pow(2.0, -level);
    const DeltaGauge gauge = DeltaGauge::constant(p.interval, radius, radius);
    const TaggedPartition whole = cousin_partition(p.interval, gauge);

    // Random sub-selection of the converged full partition.
    detail::SplitMix64 rng(detail::mix_stream(seed, 0x73616bULL, 2));
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      TaggedPartition partial;
      for (const auto& it : whole.items)
        if (rng.next_bool()) partial.items.push_back(it);
      const LatticeElement residual =
          saks_henstock_residual(p.f, p.interval, partial, tol, cfg);
      const LatticeElement bound =
          regulator_eval(full.fitted_regulator, EvalMap::constant(1));
      if (!leq(residual, bound)) ok = false;
    }
    s.cases.push_back({name, ok, ""});
  }
  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult uct_suite(uint64_t seed) {
  SuiteResult s{"uct", {}, true};
  const TimeScale hybrid = catalog::scale("hybrid");
  const TsInterval iv(hybrid, 0.0, 3.0);
  UctConfig cfg;
  cfg.n_schedule = {1, 2, 4, 8, 16, 64, 256};
  cfg.reg = Regulator({LatticeElement::scalar(4.0)}, 0.5);
  cfg.n_max = 2000;
  cfg.tol = LatticeElement::scalar(0.05);
  cfg.hk.seed = seed;
  const auto rep = uct_experiment(catalog::sequence("linear-shrink", hybrid), iv, cfg);
  s.cases.push_back({"linear-shrink-on-hybrid", rep.ok, ""});
  {
    UctConfig ccfg = cfg;
    ccfg.tol = LatticeElement::scalar(1e-6);
    const auto crep =
        uct_experiment(catalog::sequence("constant", hybrid), iv, ccfg);
    s.cases.push_back({"constant-on-hybrid", crep.ok, ""});
  }
  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult mct_suite(uint64_t seed) {
  SuiteResult s{"mct", {}, true};
  const TimeScale unit = catalog::scale("unit-interval");
  const TsInterval iv(unit, 0.0, 1.0);
  MctConfig cfg;
  cfg.lower_bound = LatticeElement::scalar(0.0);
  cfg.upper_bound = LatticeElement::scalar(1.0);
  cfg.n_schedule = {1, 2, 4, 8, 16, 32};
  cfg.tol = LatticeElement::scalar(0.05);
  cfg.hk.seed = seed;
  const auto rep = mct_experiment(catalog::sequence("linear-shrink", unit), iv, cfg);
  s.cases.push_back({"linear-shrink-on-unit", rep.ok, ""});
  for (const auto& c : s.cases) s.pass = s.pass && c.pass;
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"riesz", "linearity", "additivity", "saks-henstock", "uct", "mct"};
}

std::vector<SuiteResult> run(const std::string& suite, uint64_t seed) {
  if (suite == "all") {
    std::vector<SuiteResult> all;
    for (const auto& name : suite_names()) {
      auto rs = run(name, seed);
      all.insert(all.end(), rs.begin(), rs.end());
    }
    return all;
  }
  if (suite == "riesz") return {riesz_suite(seed)};
  if (suite == "linearity") return {linearity_suite(seed)};
  if (suite == "additivity") return {additivity_suite(seed)};
  if (suite == "saks-henstock") return {saks_henstock_suite(seed)};
  if (suite == "uct") return {uct_suite(seed)};
  if (suite == "mct") return {mct_suite(seed)};
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace hkts::verify
