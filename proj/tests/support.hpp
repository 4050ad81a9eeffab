#pragma once

// Shared generators for the test binaries.

#include <vector>

#include "hkts/detail/rng.hpp"
#include "hkts/timescale.hpp"

namespace hkts::testsupport {

/// Random finitely-represented time scale: 1..6 components mixing intervals
/// and isolated points, separated by positive gaps.
inline TimeScale random_scale(detail::SplitMix64& rng) {
  std::vector<Component> comps;
  const int n = 1 + static_cast<int>(rng.next() % 6);
  double cursor = -2.0 + 4.0 * rng.next_double();
  for (int i = 0; i < n; ++i) {
    if (rng.next_bool()) {
      const double len = 0.1 + 2.0 * rng.next_double();
      comps.push_back({cursor, cursor + len});
      cursor += len;
    } else {
      comps.push_back({cursor, cursor});
    }
    cursor += 0.05 + rng.next_double();  // positive gap
  }
  return TimeScale(std::move(comps));
}

/// Interval spanning the whole scale; scales from random_scale always have
/// min < max when they contain an interval, so extend degenerate ones.
inline TsInterval full_span(const TimeScale& ts) {
  if (ts.min() < ts.max()) return TsInterval(ts, ts.min(), ts.max());
  // single isolated point: widen with a sibling point
  TimeScale wide({{ts.min(), ts.min()}, {ts.min() + 1.0, ts.min() + 1.0}});
  return TsInterval(wide, wide.min(), wide.max());
}

}  // namespace hkts::testsupport
