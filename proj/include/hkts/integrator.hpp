#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hkts/gauge.hpp"
#include "hkts/riesz.hpp"
#include "hkts/timescale.hpp"

namespace hkts {

/// Pure lattice-valued function on a time scale.
struct Integrand {
  int dim = 1;
  std::function<LatticeElement(double)> eval;

  static Integrand scalar(std::function<double(double)> f) {
    return {1, [f = std::move(f)](double t) { return LatticeElement::scalar(f(t)); }};
  }
};

struct HkConfig {
  uint64_t seed = 0;
  int samples_per_level = 8;  // random partitions per level, plus the sweep one
  int max_levels = 40;
  double initial_scale = 0.25;  // constant gauge radius at level 0
  int threads = 0;              // 0 = respect HK_TS_THREADS, else serial
};

struct IntegralResult {
  LatticeElement value;
  LatticeElement spread;  // sup - inf of the sampled sums at the final level
  int levels_used = 0;
  long partitions_evaluated = 0;
  bool converged = false;
  // Single row 2*(spread v one-sided tag bias), base 1/2: the phi == 1 value
  // bounds what any fine partition at the final gauge was observed to do.
  Regulator fitted_regulator;
};

/// S(f, D) = sum of f(tag) * (right - left), compensated summation per
/// component.
LatticeElement riemann_sum(const Integrand& f, const TaggedPartition& p);

/// Gauge-refinement engine: halve a constant gauge per level, sample
/// partitions, and stop once the spread of the sampled sums (the empirical
/// Cauchy criterion) falls under tol componentwise. Non-convergence after
/// max_levels is an honest result, not an error.
IntegralResult hk_integrate(const Integrand& f, const TsInterval& interval,
                            const LatticeElement& tol, const HkConfig& cfg = {});

/// Independent ground truth for integrands that are piecewise-smooth on the
/// continuum segments: jump terms f(t)*mu(t) at scattered points plus
/// adaptive quadrature over each segment.
LatticeElement oracle_integrate(const Integrand& f, const TsInterval& interval,
                                double quad_tol = 1e-10);

struct LinearityReport {
  IntegralResult f, g, combined;
  LatticeElement defect;  // |I(af+bg) - a I(f) - b I(g)|
  LatticeElement bound;   // sum of the three spreads plus tol
  bool ok = false;
};

LinearityReport check_linearity(const Integrand& f, const Integrand& g, double alpha,
                                double beta, const TsInterval& interval,
                                const LatticeElement& tol, const HkConfig& cfg = {});

struct SplitReport {
  IntegralResult whole, left, right;
  LatticeElement defect;  // |I(a,b) - I(a,c) - I(c,b)|
  LatticeElement bound;
  bool ok = false;
  bool stitched_split_ok = false;  // stitched-gauge partitions hit c (or rho(c))
  size_t stitched_samples = 0;
};

SplitReport split_integrate(const Integrand& f, const TsInterval& interval, double c,
                            const LatticeElement& tol, const HkConfig& cfg = {});

/// |S(f, partial) - sum of the subinterval integrals|, each subinterval
/// integrated at tol / item count.
LatticeElement saks_henstock_residual(const Integrand& f, const TsInterval& interval,
                                      const TaggedPartition& partial,
                                      const LatticeElement& tol,
                                      const HkConfig& cfg = {});

}  // namespace hkts
