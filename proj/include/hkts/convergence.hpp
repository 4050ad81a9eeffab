#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hkts/integrator.hpp"
#include "hkts/riesz.hpp"

namespace hkts {

/// A function sequence f_n with its pointwise limit, all sharing one space.
struct FunctionSequence {
  int dim = 1;
  std::function<Integrand(int)> gen;  // n >= 1
  Integrand limit;
};

/// Default sample sets for the finitely-checked convergence definitions:
/// 64 quasi-random scale points plus the interval endpoints, and the
/// constant index maps 1..8 plus 8 random ones.
std::vector<double> sample_scale_points(const TsInterval& interval, uint64_t seed,
                                        int count = 64);
std::vector<EvalMap> sample_eval_maps(uint64_t seed, int rows = 4, int random_count = 8);

struct WcrsWitness {
  Regulator regulator;
  std::vector<std::pair<double, int>> p_table;  // point -> minimal p
  std::vector<EvalMap> phi_samples;
  bool found = false;
  double offending_t = 0.0;  // set when not found
};

/// Per point, the minimal p such that |f_n(t) - f(t)| stays strictly under
/// the regulator bound for every sampled phi and every n in [p, n_max].
WcrsWitness wcrs_witness(const FunctionSequence& seq, const Regulator& reg,
                         const std::vector<double>& points,
                         const std::vector<EvalMap>& phis, int n_max);

struct UniformIntegrabilityConfig {
  std::vector<int> n_set;
  int gauge_levels = 8;
  int partitions_per_level = 4;
  LatticeElement engine_tol;
  std::vector<EvalMap> phis;
  HkConfig hk;
};

struct UniformIntegrabilityReport {
  int common_level = -1;  // -1: no level worked for every n simultaneously
  LatticeElement bound;   // tightest sampled regulator value
  std::vector<std::pair<int, LatticeElement>> max_residual;  // per n, at common/last level
  bool ok = false;
};

/// Checks the single-gauge demand of uniform integrability: one gauge level
/// whose sampled partition residuals |S(f_n,D) - I(f_n)| stay under the
/// regulator bound for every n at once.
UniformIntegrabilityReport uniform_integrability_check(const FunctionSequence& seq,
                                                       const TsInterval& interval,
                                                       const Regulator& reg,
                                                       const UniformIntegrabilityConfig& cfg);

struct UctConfig {
  std::vector<int> n_schedule;
  Regulator reg;
  int n_max = 10000;
  LatticeElement tol;
  HkConfig hk;
};

struct UctReport {
  bool wcrs_ok = false;
  bool uniform_ok = false;
  std::vector<int> n_schedule;
  std::vector<LatticeElement> gaps;    // |I(f_n) - I(f)| per scheduled n
  std::vector<LatticeElement> eps;     // fitted bound per scheduled n
  std::vector<bool> gap_ok;
  LatticeElement limit_value;
  bool final_ok = false;
  bool ok = false;
};

/// Uniform convergence experiment: witness + uniform integrability, then
/// lim I(f_n) = I(f) with per-n gaps dominated by the fitted bounds.
UctReport uct_experiment(const FunctionSequence& seq, const TsInterval& interval,
                         const UctConfig& cfg);

struct MctConfig {
  LatticeElement lower_bound;  // l <= f_1
  LatticeElement upper_bound;  // f <= L
  std::vector<int> n_schedule;
  LatticeElement tol;
  HkConfig hk;
};

struct MctReport {
  bool monotone_ok = false;
  double monotone_violation_t = 0.0;
  int monotone_violation_n = 0;
  bool bounds_ok = false;
  std::vector<LatticeElement> values;  // I(f_n) per scheduled n
  bool nondecreasing_ok = false;
  bool bounded_ok = false;   // I(f_n) <= (b-a) L + spreads
  LatticeElement limit_gap;  // |I(f_{n_max}) - I(f)|
  bool limit_ok = false;
  LatticeElement crude_bound;  // x = (b-a)(L-l)
  size_t residual_samples = 0;
  size_t residual_violations = 0;  // |S - I| exceeding x
  bool fremlin_ok = false;         // combined fitted regulators dominate under x
  bool ok = false;
};

/// Monotone convergence experiment with the proof's crude residual bound
/// x = (b-a)(L-l) and the combined-regulator domination check.
MctReport mct_experiment(const FunctionSequence& seq, const TsInterval& interval,
                         const MctConfig& cfg);

}  // namespace hkts
