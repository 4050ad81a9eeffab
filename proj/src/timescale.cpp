#include "hkts/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hkts {

TimeScale::TimeScale(std::vector<Component> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("time scale must be nonempty");
  for (const auto& c : comps_) {
    if (!(c.lo <= c.hi) || !std::isfinite(c.lo) || !std::isfinite(c.hi))
      throw std::invalid_argument("bad time scale component");
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const Component& a, const Component& b) { return a.lo < b.lo; });
  std::vector<Component> merged;
  merged.push_back(comps_.front());
  for (size_t i = 1; i < comps_.size(); ++i) {
    Component& last = merged.back();
    const Component& c = comps_[i];
    if (c.lo <= last.hi) {
      last.hi = std::max(last.hi, c.hi);  // touching or overlapping: merge
    } else {
      merged.push_back(c);
    }
  }
  comps_ = std::move(merged);
}

TimeScale TimeScale::interval(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
  return TimeScale({{lo, hi}});
}

TimeScale TimeScale::uniform_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("uniform grid needs step > 0");
  if (!(start < stop)) throw std::invalid_argument("uniform grid needs start < stop");
  std::vector<Component> comps;
  for (int k = 0;; ++k) {
    const double t = start + k * step;
    if (t > stop + step * 1e-9) break;
    comps.push_back({t, t});
  }
  return TimeScale(std::move(comps));
}

TimeScale TimeScale::geometric(double q, double s, int k_max) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q-scale needs q in (0,1)");
  if (!(s > 0.0) || k_max < 0) throw std::invalid_argument("bad q-scale spec");
  std::vector<Component> comps{{0.0, 0.0}};
  for (int k = 0; k <= k_max; ++k) {
    const double t = s * std::pow(q, k);
    comps.push_back({t, t});
  }
  return TimeScale(std::move(comps));
}

namespace {
void cantor_rec(double lo, double hi, int depth, std::vector<Component>& out) {
  if (depth == 0) {
    out.push_back({lo, hi});
    return;
  }
  const double third = (hi - lo) / 3.0;
  cantor_rec(lo, lo + third, depth - 1, out);
  cantor_rec(hi - third, hi, depth - 1, out);
}
}  // namespace

TimeScale TimeScale::cantor(int depth) {
  if (depth < 0) throw std::invalid_argument("cantor depth must be >= 0");
  std::vector<Component> comps;
  cantor_rec(0.0, 1.0, depth, comps);
  return TimeScale(std::move(comps));
}

int TimeScale::component_index(double t) const {
  // Last component with lo <= t; exact comparisons, endpoints are stored exactly.
  auto it = std::upper_bound(comps_.begin(), comps_.end(), t,
                             [](double v, const Component& c) { return v < c.lo; });
  if (it == comps_.begin()) return -1;
  const int idx = static_cast<int>(it - comps_.begin()) - 1;
  return t <= comps_[static_cast<size_t>(idx)].hi ? idx : -1;
}

bool TimeScale::contains(double t) const { return component_index(t) >= 0; }

double TimeScale::sigma(double t) const {
  const int idx = component_index(t);
  if (idx < 0) throw std::invalid_argument("sigma: point not in time scale");
  const Component& c = comps_[static_cast<size_t>(idx)];
  if (t < c.hi) return t;  // right-dense interior
  if (static_cast<size_t>(idx) + 1 < comps_.size())
    return comps_[static_cast<size_t>(idx) + 1].lo;
  return t;  // sigma(max) = max
}

double TimeScale::rho(double t) const {
  const int idx = component_index(t);
  if (idx < 0) throw std::invalid_argument("rho: point not in time scale");
  const Component& c = comps_[static_cast<size_t>(idx)];
  if (t > c.lo) return t;  // left-dense interior
  if (idx > 0) return comps_[static_cast<size_t>(idx) - 1].hi;
  return t;  // rho(min) = min
}

bool TimeScale::operator==(const TimeScale& o) const {
  if (comps_.size() != o.comps_.size()) return false;
  for (size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].lo != o.comps_[i].lo || comps_[i].hi != o.comps_[i].hi) return false;
  return true;
}

PointClass classify(const TimeScale& ts, double t) {
  return {ts.sigma(t) > t, ts.rho(t) < t};
}

TsInterval::TsInterval(TimeScale scale_, double a_, double b_)
    : scale(std::move(scale_)), a(a_), b(b_) {
  if (!scale.contains(a) || !scale.contains(b))
    throw std::invalid_argument("interval endpoints must belong to the time scale");
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
}

std::vector<Component> points_in(const TsInterval& interval) {
  std::vector<Component> out;
  for (const auto& c : interval.scale.components()) {
    const double lo = std::max(c.lo, interval.a);
    const double hi = std::min(c.hi, interval.b);
    if (lo <= hi) out.push_back({lo, hi});
  }
  return out;
}

}  // namespace hkts
