#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hkts/catalog.hpp"
#include "hkts/detail/rng.hpp"
#include "hkts/integrator.hpp"
#include "support.hpp"

using namespace hkts;

TEST_CASE("riemann_sum telescopes for constants") {
  const TsInterval iv(catalog::scale("hybrid"), 0.0, 3.0);
  const DeltaGauge g = DeltaGauge::constant(iv, 0.07, 0.07);
  const TaggedPartition p = cousin_partition(iv, g);
  const auto f = Integrand::scalar([](double) { return 2.0; });
  CHECK(std::fabs(riemann_sum(f, p)[0] - 6.0) <= 1e-12);
}

TEST_CASE("riemann_sum on an explicit partition") {
  TaggedPartition p;
  p.items = {{0.0, 0.5, 0.25}, {0.5, 1.0, 1.0}};
  const auto f = Integrand::scalar([](double t) { return t; });
  CHECK(riemann_sum(f, p)[0] == 0.25 * 0.5 + 1.0 * 0.5);
}

TEST_CASE("continuum integral of t") {
  const auto& p = catalog::problem("t-on-unit");
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-6));
  CHECK(res.converged);
  CHECK(res.levels_used <= 25);
  CHECK(std::fabs(res.value[0] - 0.5) <= 1e-6);
  CHECK(leq(res.spread, LatticeElement::scalar(1e-6)));
  // fitted regulator's first bound dominates the spread
  CHECK(leq(res.spread, regulator_eval(res.fitted_regulator, EvalMap::constant(1))));
}

TEST_CASE("forced sums on a pure grid are exact at level 0") {
  const auto& p = catalog::problem("t2-on-grid");
  HkConfig cfg;
  cfg.initial_scale = 0.25;  // below the graininess: every fine partition is forced
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-12), cfg);
  CHECK(res.converged);
  CHECK(res.levels_used == 1);
  CHECK(res.value[0] == 30.0);
  CHECK(is_zero(res.spread));
}

TEST_CASE("hybrid scale mixes continuum and jump parts") {
  const auto& p = catalog::problem("t-on-hybrid");
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-6));
  CHECK(res.converged);
  CHECK(std::fabs(res.value[0] - 4.25) <= 1e-6);
}

TEST_CASE("oracle matches closed forms") {
  for (const auto& p : catalog::problems()) {
    if (!p.oracle_eligible || !p.closed_form) continue;
    const LatticeElement v = oracle_integrate(p.f, p.interval);
    CHECK_MESSAGE(max_norm(v - *p.closed_form) <= 1e-8, p.name);
  }
}

TEST_CASE("vector integrands decompose componentwise") {
  const auto& vec = catalog::problem("vec-t-one-on-unit");
  HkConfig cfg;
  cfg.seed = 5;
  const auto res = hk_integrate(vec.f, vec.interval, LatticeElement::constant(2, 1e-6), cfg);
  REQUIRE(res.converged);
  CHECK(std::fabs(res.value[0] - 0.5) <= 1e-6);
  CHECK(std::fabs(res.value[1] - 1.0) <= 1e-6);
}

TEST_CASE("linearity holds within the sampled spreads") {
  detail::SplitMix64 rng(21);
  const auto& pa = catalog::problem("t-on-unit");
  const auto& pb = catalog::problem("t2-on-unit");
  for (int k = 0; k < 5; ++k) {
    const double alpha = -2.0 + 4.0 * rng.next_double();
    const double beta = -2.0 + 4.0 * rng.next_double();
    const auto rep = check_linearity(pa.f, pb.f, alpha, beta, pa.interval,
                                     LatticeElement::scalar(1e-4));
    CHECK(rep.ok);
    CHECK(leq(rep.defect, rep.bound));
  }
}

TEST_CASE("additivity across a split point") {
  const auto& p = catalog::problem("t-on-hybrid");
  for (double c : {1.0, 1.5, 2.5}) {
    const auto rep = split_integrate(p.f, p.interval, c, LatticeElement::scalar(1e-4));
    CHECK_MESSAGE(rep.ok, "c=" << c);
    CHECK_MESSAGE(rep.stitched_split_ok, "c=" << c);
  }
  CHECK_THROWS(split_integrate(p.f, p.interval, 1.75, LatticeElement::scalar(1e-4)));
}

TEST_CASE("saks-henstock residual of a partial selection") {
  const auto& p = catalog::problem("t-on-unit");
  const LatticeElement tol = LatticeElement::scalar(1e-4);
  const auto full = hk_integrate(p.f, p.interval, tol);
  REQUIRE(full.converged);
  const double radius = 0.25 * std::pow(2.0, -(full.levels_used - 1));
  const DeltaGauge g = DeltaGauge::constant(p.interval, radius, radius);
  TaggedPartition partial;
  const TaggedPartition whole = cousin_partition(p.interval, g);
  for (size_t i = 0; i < whole.items.size(); i += 2) partial.items.push_back(whole.items[i]);
  const LatticeElement residual = saks_henstock_residual(p.f, p.interval, partial, tol);
  const LatticeElement bound = regulator_eval(full.fitted_regulator, EvalMap::constant(1));
  CHECK(leq(residual, bound));
}

TEST_CASE("non-convergence is reported honestly") {
  const auto& p = catalog::problem("oscillatory-showcase");
  HkConfig cfg;
  cfg.max_levels = 4;  // far too few for this integrand
  cfg.samples_per_level = 2;
  const auto res = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-10), cfg);
  CHECK(!res.converged);
  CHECK(res.levels_used >= 1);  // best-spread level, not necessarily the last
  CHECK(!leq(res.spread, LatticeElement::scalar(1e-10)));
}

TEST_CASE("constant integrands collapse at level 0 on random scales") {
  detail::SplitMix64 rng(31);
  const auto one = Integrand::scalar([](double) { return 1.0; });
  HkConfig cfg;
  cfg.samples_per_level = 3;
  for (int k = 0; k < 25; ++k) {
    const TsInterval iv = testsupport::full_span(testsupport::random_scale(rng));
    cfg.seed = rng.next();
    const auto res = hk_integrate(one, iv, LatticeElement::scalar(1e-12), cfg);
    CHECK(res.converged);
    CHECK(res.levels_used == 1);
    CHECK(std::fabs(res.value[0] - iv.length()) <= 1e-12);
  }
}

TEST_CASE("determinism: same seed, same result") {
  const auto& p = catalog::problem("sin-on-unit");
  HkConfig cfg;
  cfg.seed = 1234;
  const auto r1 = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-7), cfg);
  const auto r2 = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-7), cfg);
  CHECK(r1.value == r2.value);
  CHECK(r1.spread == r2.spread);
  CHECK(r1.partitions_evaluated == r2.partitions_evaluated);
  cfg.seed = 4321;
  const auto r3 = hk_integrate(p.f, p.interval, LatticeElement::scalar(1e-7), cfg);
  CHECK(std::fabs(r3.value[0] - r1.value[0]) <= 2e-7);  // same answer, different samples
}
