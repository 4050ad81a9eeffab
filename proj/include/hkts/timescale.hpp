#pragma once

#include <string>
#include <vector>

namespace hkts {

/// A maximal piece of a time scale: a closed interval (lo < hi) or a single
/// point (lo == hi).
struct Component {
  double lo = 0.0;
  double hi = 0.0;
  bool is_point() const { return lo == hi; }
};

/// Finitely representable time scale: a sorted union of pairwise disjoint
/// closed intervals and isolated points. Components that touch are merged
/// at construction so the jump operators are unambiguous.
class TimeScale {
 public:
  explicit TimeScale(std::vector<Component> components);

  static TimeScale interval(double lo, double hi);
  static TimeScale uniform_grid(double start, double stop, double step);
  static TimeScale geometric(double q, double s, int k_max);  // {0} u {s*q^k}
  static TimeScale cantor(int depth);                         // on [0,1]

  const std::vector<Component>& components() const { return comps_; }
  double min() const { return comps_.front().lo; }
  double max() const { return comps_.back().hi; }

  bool contains(double t) const;

  /// Forward jump: inf{s in T : s > t}, with sigma(max) = max.
  double sigma(double t) const;
  /// Backward jump: sup{s in T : s < t}, with rho(min) = min.
  double rho(double t) const;
  double mu(double t) const { return sigma(t) - t; }
  double eta(double t) const { return t - rho(t); }

  bool operator==(const TimeScale& o) const;

 private:
  int component_index(double t) const;  // -1 when t is not in the scale
  std::vector<Component> comps_;
};

struct PointClass {
  bool right_scattered = false;
  bool left_scattered = false;
};

PointClass classify(const TimeScale& ts, double t);

/// Closed interval [a,b]_T with a, b in T and a < b.
struct TsInterval {
  TsInterval(TimeScale scale, double a, double b);
  TimeScale scale;
  double a;
  double b;
  double length() const { return b - a; }
};

/// Decomposition of [a,b]_T into its maximal continuum segments and
/// scattered points, in ascending order (points are degenerate components).
std::vector<Component> points_in(const TsInterval& interval);

}  // namespace hkts
