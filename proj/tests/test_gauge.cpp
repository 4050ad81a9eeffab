#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hkts/catalog.hpp"
#include "hkts/detail/rng.hpp"
#include "hkts/gauge.hpp"
#include "support.hpp"

using namespace hkts;

TEST_CASE("right radius is clamped to the graininess") {
  const TsInterval iv(catalog::scale("hybrid"), 0.0, 3.0);
  const DeltaGauge g = DeltaGauge::constant(iv, 0.01, 0.01);
  CHECK(g.delta_r(0.5) == 0.01);
  CHECK(g.delta_r(1.0) == 0.5);   // mu(1.0) = 0.5 wins
  CHECK(g.delta_r(1.5) == 0.5);
  CHECK(g.delta_r_raw(1.0) == 0.01);
  CHECK(g.delta_l(1.0) == 0.01);  // left radius is not clamped
}

TEST_CASE("cousin partition is fine and full on the catalog scales") {
  for (const auto& name : catalog::scale_names()) {
    const TimeScale ts = catalog::scale(name);
    const TsInterval iv(ts, ts.min(), ts.max());
    for (double r : {0.5, 0.1, 0.02}) {
      const DeltaGauge g = DeltaGauge::constant(iv, r, r);
      const TaggedPartition p = cousin_partition(iv, g);
      CHECK(is_fine(p, g));
      CHECK(is_full(p, iv));
      // items chain left to right
      CHECK(p.items.front().left == iv.a);
      CHECK(p.items.back().right == iv.b);
      for (const auto& it : p.items) {
        CHECK(it.left < it.right);
        CHECK(it.left <= it.tag);
        CHECK(it.tag <= it.right);
        CHECK(ts.contains(it.tag));
      }
    }
  }
}

TEST_CASE("random partitions are fine and full on random scales") {
  detail::SplitMix64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const TsInterval iv = testsupport::full_span(testsupport::random_scale(rng));
    const double r = 0.01 + 0.5 * rng.next_double();
    const DeltaGauge g = DeltaGauge::constant(iv, r, r);
    const TaggedPartition p = random_fine_partition(iv, g, rng.next());
    CHECK(is_fine(p, g));
    CHECK(is_full(p, iv));
  }
}

TEST_CASE("fineness predicate rejects bad items") {
  const TsInterval iv(TimeScale::interval(0.0, 1.0), 0.0, 1.0);
  const DeltaGauge g = DeltaGauge::constant(iv, 0.1, 0.1);
  CHECK(is_fine_item({0.4, 0.45, 0.42}, g));
  CHECK(!is_fine_item({0.2, 0.45, 0.42}, g));  // left too far from tag
  CHECK(!is_fine_item({0.4, 0.6, 0.42}, g));   // right outside and not sigma(tag)
  CHECK(!is_fine_item({0.4, 0.45, 0.5}, g));   // tag outside the item
}

TEST_CASE("sigma escape at right-scattered tags") {
  const TsInterval iv(catalog::scale("hybrid"), 0.0, 3.0);
  const DeltaGauge g = DeltaGauge::constant(iv, 0.05, 0.05);
  // [0.98, 1.5] with tag 1 ends exactly at sigma(1); the clamp admits it.
  CHECK(is_fine_item({0.98, 1.5, 1.0}, g));
  CHECK(!is_fine_item({0.98, 1.6, 1.0}, g));  // past sigma(1), outside the clamp
}

TEST_CASE("gauge_min partitions are fine for both gauges") {
  detail::SplitMix64 rng(13);
  for (int k = 0; k < 50; ++k) {
    const TsInterval iv = testsupport::full_span(testsupport::random_scale(rng));
    const DeltaGauge g1 = DeltaGauge::constant(iv, 0.05 + 0.3 * rng.next_double(),
                                               0.05 + 0.3 * rng.next_double());
    const DeltaGauge g2 = DeltaGauge::constant(iv, 0.05 + 0.3 * rng.next_double(),
                                               0.05 + 0.3 * rng.next_double());
    const DeltaGauge gm = gauge_min(g1, g2);
    const TaggedPartition p = cousin_partition(iv, gm);
    CHECK(is_fine(p, gm));
    CHECK(is_fine(p, g1));  // refinement monotonicity
    CHECK(is_fine(p, g2));
    CHECK(is_full(p, iv));
  }
}

TEST_CASE("stitched gauge forces the split point as a tag") {
  struct Case {
    const char* scale;
    double a, b, c;
  };
  const Case cases[] = {
      {"hybrid", 0.0, 3.0, 1.5},  // left-scattered split point
      {"hybrid", 0.0, 3.0, 0.5},
      {"unit-interval", 0.0, 1.0, 0.25},
      {"grid-0-5", 0.0, 5.0, 2.0},
  };
  detail::SplitMix64 rng(17);
  for (const auto& cs : cases) {
    const TimeScale ts = catalog::scale(cs.scale);
    const TsInterval whole(ts, cs.a, cs.b);
    const TsInterval left(ts, cs.a, cs.c);
    const TsInterval right(ts, cs.c, cs.b);
    const DeltaGauge g1 = DeltaGauge::constant(left, 0.2, 0.2);
    const DeltaGauge g2 = DeltaGauge::constant(right, 0.2, 0.2);
    const DeltaGauge stitched = stitch_gauges(g1, g2);
    for (int k = 0; k < 25; ++k) {
      const TaggedPartition p = k == 0 ? cousin_partition(whole, stitched)
                                       : random_fine_partition(whole, stitched, rng.next());
      REQUIRE(is_fine(p, stitched));
      REQUIRE(is_full(p, whole));
      bool hit = false;
      const double rho_c = ts.rho(cs.c);
      for (const auto& it : p.items)
        hit = hit || it.tag == cs.c || (it.tag == rho_c && it.right == cs.c);
      CHECK(hit);
    }
  }
}

TEST_CASE("per-component gauge") {
  const TsInterval iv(catalog::scale("hybrid"), 0.0, 3.0);
  const DeltaGauge g = DeltaGauge::per_component(iv, {0.1, 0.2, 0.3}, {0.1, 0.2, 0.3});
  CHECK(g.delta_l(0.5) == 0.1);
  CHECK(g.delta_l(1.5) == 0.2);
  CHECK(g.delta_l(2.5) == 0.3);
  const TaggedPartition p = cousin_partition(iv, g);
  CHECK(is_fine(p, g));
  CHECK(is_full(p, iv));
}

TEST_CASE("invalid gauges are rejected") {
  const TsInterval iv(TimeScale::interval(0.0, 1.0), 0.0, 1.0);
  CHECK_THROWS(DeltaGauge::constant(iv, -0.1, 0.1));
  CHECK_THROWS(DeltaGauge::per_component(iv, {0.1}, {0.1, 0.2}));  // count mismatch
  // delta_R that vanishes on a continuum cannot admit any fine partition.
  const DeltaGauge dead = DeltaGauge::constant(iv, 0.1, 0.0);
  CHECK_THROWS_AS(cousin_partition(iv, dead), std::domain_error);
}
