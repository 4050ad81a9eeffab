#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hkts/timescale.hpp"

namespace hkts {

/// Delta-gauge (delta_L, delta_R) on [a,b]_T. The right radius is clamped to
/// at least the forward graininess, so delta_R(xi) >= mu(xi) holds by
/// construction.
class DeltaGauge {
 public:
  using RadiusFn = std::function<double(double)>;

  DeltaGauge(TsInterval domain, RadiusFn delta_l, RadiusFn delta_r);

  static DeltaGauge constant(TsInterval domain, double dl, double dr);
  /// One (dl, dr) pair per time-scale component, in component order.
  static DeltaGauge per_component(TsInterval domain, std::vector<double> dl,
                                  std::vector<double> dr);

  double delta_l(double xi) const { return dl_(xi); }
  double delta_r(double xi) const {
    const double raw = dr_(xi);
    const double mu = domain_.scale.mu(xi);
    return raw > mu ? raw : mu;
  }
  double delta_r_raw(double xi) const { return dr_(xi); }

  const TsInterval& domain() const { return domain_; }

 private:
  TsInterval domain_;
  RadiusFn dl_;
  RadiusFn dr_;
};

struct TaggedInterval {
  double left = 0.0;
  double right = 0.0;
  double tag = 0.0;
};

struct TaggedPartition {
  std::vector<TaggedInterval> items;
  bool empty() const { return items.empty(); }
  size_t size() const { return items.size(); }
};

/// True when the subintervals chain from a to b without gaps in T
/// (consecutive endpoints shared, or separated only by a scale gap).
bool is_full(const TaggedPartition& p, const TsInterval& interval);

/// The delta-fineness predicate with the right-endpoint convention at
/// right-scattered tags: xi - dL(xi) < left <= xi <= right and
/// (right < xi + dR(xi) or right == sigma(xi)).
bool is_fine(const TaggedPartition& p, const DeltaGauge& g);

/// Per-item fineness, exposed for diagnostics.
bool is_fine_item(const TaggedInterval& it, const DeltaGauge& g);

struct PartitionOptions {
  double safety = 0.5;           // fraction of the gauge radius per step
  uint64_t max_items = 1 << 26;  // runaway guard; exceeded => invalid gauge
};

/// Deterministic constructive partitioner: left-to-right sweep, scattered
/// points jump to sigma(t), dense points advance by safety*delta_R (tagged at
/// the midpoint when the gauge admits it) with a right-tag rescue so gauges
/// that vanish toward an interior anchor (as the additivity stitch does)
/// still terminate.
TaggedPartition cousin_partition(const TsInterval& interval, const DeltaGauge& g,
                                 const PartitionOptions& opt = {});

/// Randomized variant: per-step uniform step fraction in (0, safety] and a
/// random left/mid/right tag choice re-validated against the fineness
/// predicate.
TaggedPartition random_fine_partition(const TsInterval& interval, const DeltaGauge& g,
                                      uint64_t seed, const PartitionOptions& opt = {});

/// Pointwise minimum of two gauges on the same domain.
DeltaGauge gauge_min(const DeltaGauge& g1, const DeltaGauge& g2);

/// The additivity proof's stitched gauge: g1 on [a,c], g2 on [c,b] combine to
/// a gauge on [a,b] forcing every fine partition to carry c as a tag, or
/// rho(c) as a tag with right endpoint c.
DeltaGauge stitch_gauges(const DeltaGauge& g1, const DeltaGauge& g2);

}  // namespace hkts
