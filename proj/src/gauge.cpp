#include "hkts/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkts/detail/rng.hpp"

namespace hkts {

namespace {

const Component& component_of(const TimeScale& ts, double t) {
  const auto& comps = ts.components();
  auto it = std::upper_bound(comps.begin(), comps.end(), t,
                             [](double v, const Component& c) { return v < c.lo; });
  if (it == comps.begin()) throw std::invalid_argument("point not in time scale");
  const Component& c = *(it - 1);
  if (t > c.hi) throw std::invalid_argument("point not in time scale");
  return c;
}

[[noreturn]] void invalid_gauge(const char* what) {
  throw std::domain_error(std::string("invalid gauge: ") + what);
}

/// One sweep step from t: scattered points jump to sigma(t); dense points
/// take the longer of a step of frac*delta_R(t) (tagged at the midpoint when
/// the gauge admits it, which keeps the sweep's Riemann sums from carrying a
/// one-sided bias) and a right-tagged reach (the largest z with
/// z - frac*delta_L(z) <= t, found by bisection; the rescue that carries the
/// sweep through gauges pinched toward an interior point).
TaggedInterval step_once(const TsInterval& interval, const DeltaGauge& g, double t,
                         double frac) {
  const TimeScale& ts = interval.scale;
  const double st = ts.sigma(t);
  if (st > t) return {t, std::min(st, interval.b), t};

  const Component& c = component_of(ts, t);
  const double lim = std::min(c.hi, interval.b);
  const double dr = g.delta_r(t);
  if (!(dr > 0.0)) invalid_gauge("delta_R vanishes at an interior right-dense point");
  const double r_left = std::min(t + frac * dr, lim);

  auto reach_ok = [&](double z) { return z - frac * g.delta_l(z) <= t; };
  double r_right = t;
  if (reach_ok(lim)) {
    r_right = lim;
  } else {
    double lo = t, hi = lim;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (reach_ok(mid) ? lo : hi) = mid;
    }
    r_right = lo;
  }

  if (r_right > r_left && g.delta_l(r_right) > 0.0) return {t, r_right, r_right};
  if (!(r_left > t)) invalid_gauge("no progress at a right-dense point");
  const double mid = 0.5 * (t + r_left);
  TaggedInterval item{t, r_left, mid};
  if (!is_fine_item(item, g)) item.tag = t;
  return item;
}

}  // namespace

DeltaGauge::DeltaGauge(TsInterval domain, RadiusFn delta_l, RadiusFn delta_r)
    : domain_(std::move(domain)), dl_(std::move(delta_l)), dr_(std::move(delta_r)) {
  if (!dl_ || !dr_) throw std::invalid_argument("gauge needs both radius functions");
}

DeltaGauge DeltaGauge::constant(TsInterval domain, double dl, double dr) {
  if (!(dl >= 0.0) || !(dr >= 0.0)) throw std::invalid_argument("negative gauge radius");
  return DeltaGauge(std::move(domain), [dl](double) { return dl; },
                    [dr](double) { return dr; });
}

DeltaGauge DeltaGauge::per_component(TsInterval domain, std::vector<double> dl,
                                     std::vector<double> dr) {
  const auto& comps = domain.scale.components();
  if (dl.size() != comps.size() || dr.size() != comps.size())
    throw std::invalid_argument("per-component gauge: one radius pair per component");
  TimeScale scale = domain.scale;
  auto pick = [scale](std::vector<double> v) {
    return [scale, v = std::move(v)](double t) {
      const auto& cs = scale.components();
      auto it = std::upper_bound(cs.begin(), cs.end(), t,
                                 [](double x, const Component& c) { return x < c.lo; });
      const size_t idx = it == cs.begin() ? 0 : static_cast<size_t>(it - cs.begin()) - 1;
      return v[idx];
    };
  };
  return DeltaGauge(std::move(domain), pick(std::move(dl)), pick(std::move(dr)));
}

bool is_fine_item(const TaggedInterval& it, const DeltaGauge& g) {
  const double xi = it.tag;
  if (!(it.left <= xi && xi <= it.right && it.left < it.right)) return false;
  if (!(xi - g.delta_l(xi) < it.left)) return false;
  if (it.right < xi + g.delta_r(xi)) return true;
  return it.right == g.domain().scale.sigma(xi);
}

bool is_fine(const TaggedPartition& p, const DeltaGauge& g) {
  for (const auto& it : p.items)
    if (!is_fine_item(it, g)) return false;
  return true;
}

bool is_full(const TaggedPartition& p, const TsInterval& interval) {
  if (p.items.empty()) return false;
  if (p.items.front().left != interval.a) return false;
  if (p.items.back().right != interval.b) return false;
  for (size_t i = 0; i + 1 < p.items.size(); ++i) {
    const double r = p.items[i].right;
    const double l = p.items[i + 1].left;
    if (r == l) continue;
    if (r < l && interval.scale.sigma(r) == l) continue;  // pure gap of the scale
    return false;
  }
  return true;
}

TaggedPartition cousin_partition(const TsInterval& interval, const DeltaGauge& g,
                                 const PartitionOptions& opt) {
  TaggedPartition p;
  double t = interval.a;
  while (t < interval.b) {
    if (p.items.size() >= opt.max_items) invalid_gauge("partition exceeds item budget");
    p.items.push_back(step_once(interval, g, t, opt.safety));
    t = p.items.back().right;
  }
  return p;
}

TaggedPartition random_fine_partition(const TsInterval& interval, const DeltaGauge& g,
                                      uint64_t seed, const PartitionOptions& opt) {
  detail::SplitMix64 rng(detail::mix_stream(seed, 0x7061727469ULL, 1));
  TaggedPartition p;
  double t = interval.a;
  while (t < interval.b) {
    if (p.items.size() >= opt.max_items) invalid_gauge("partition exceeds item budget");
    const double frac = opt.safety * (1.0 - rng.next_double());  // in (0, safety]
    TaggedInterval it = step_once(interval, g, t, frac);
    const uint64_t pick = rng.next() % 3;  // left / keep / right tag
    if (pick != 1) {
      TaggedInterval moved{it.left, it.right, pick == 0 ? it.left : it.right};
      if (is_fine_item(moved, g)) it = moved;
    }
    if (!is_fine_item(it, g)) it.tag = it.left;
    p.items.push_back(it);
    t = it.right;
  }
  return p;
}

DeltaGauge gauge_min(const DeltaGauge& g1, const DeltaGauge& g2) {
  if (!(g1.domain().scale == g2.domain().scale) || g1.domain().a != g2.domain().a ||
      g1.domain().b != g2.domain().b)
    throw std::invalid_argument("gauge_min: domain mismatch");
  return DeltaGauge(
      g1.domain(),
      [g1, g2](double xi) { return std::min(g1.delta_l(xi), g2.delta_l(xi)); },
      [g1, g2](double xi) { return std::min(g1.delta_r(xi), g2.delta_r(xi)); });
}

DeltaGauge stitch_gauges(const DeltaGauge& g1, const DeltaGauge& g2) {
  if (!(g1.domain().scale == g2.domain().scale))
    throw std::invalid_argument("stitch_gauges: scale mismatch");
  const double a = g1.domain().a;
  const double c = g1.domain().b;
  const double b = g2.domain().b;
  if (g2.domain().a != c || !(a < c && c < b))
    throw std::invalid_argument("stitch_gauges: domains must meet at an interior c");
  TimeScale scale = g1.domain().scale;
  const double eta_c = scale.eta(c);

  auto dl = [g1, g2, c, eta_c](double xi) {
    if (xi < c) return g1.delta_l(xi);
    if (xi == c) {
      const double v = g1.delta_l(xi);
      return eta_c > 0.0 ? std::min(v, eta_c / 2.0) : v;
    }
    return std::min(g2.delta_l(xi), (xi - c) / 2.0);
  };
  auto dr = [g1, g2, c](double xi) {
    if (xi < c) {
      const double mu = g1.domain().scale.mu(xi);
      return std::min(g1.delta_r(xi), std::max(mu, (c - xi) / 2.0));
    }
    return g2.delta_r(xi);
  };
  return DeltaGauge(TsInterval(std::move(scale), a, b), dl, dr);
}

}  // namespace hkts
