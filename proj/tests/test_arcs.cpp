#include "flop/arcs.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace flop;

namespace {

const SceneConfig kCfg;

PLArc arc(std::initializer_list<std::pair<Q, Q>> pts) {
  PLArc a;
  for (auto [x, y] : pts) a.pts.push_back({x, y});
  return a;
}

// Straight from a = -3 to b = -2 above the axis.
PLArc straight() { return arc({{-3, 0}, {Q(-5, 2), Q(1, 4)}, {-2, 0}}); }

// From a down and around the origin, crossing the positive axis upward, then down to b.
PLArc around_origin() { return arc({{-3, 0}, {-3, -1}, {1, -1}, {1, 1}, {-2, 1}, {-2, 0}}); }

}  // namespace

TEST(Arcs, SceneValidation) {
  EXPECT_NO_THROW(kCfg.validate());
  SceneConfig bad;
  bad.R1 = 3;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = SceneConfig{};
  bad.a = -1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Arcs, InvariantExamples) {
  EXPECT_EQ(invariants(straight(), kCfg), (ArcInvariants{0, 0, true}));
  EXPECT_EQ(invariants(around_origin(), kCfg), (ArcInvariants{1, 0, true}));
  // dips below, comes up through (a, b), goes over b and back down through (b, 0)
  auto p = arc({{-3, 0}, {Q(-5, 2), -1}, {Q(-5, 2), 1}, {-1, 1}, {-1, -1}, {-2, -1}, {-2, 0}});
  EXPECT_EQ(invariants(p, kCfg), (ArcInvariants{0, 1, true}));
  EXPECT_EQ(crossing_word(straight(), kCfg), "");
}

TEST(Arcs, RefinementAndReversal) {
  for (const auto& a : {straight(), around_origin(), catalog_arc("S", 2)}) {
    auto inv = invariants(a, kCfg);
    EXPECT_EQ(invariants(refine(a, 3), kCfg), inv);
    EXPECT_EQ(crossing_word(refine(a, 2), kCfg), crossing_word(a, kCfg));
    auto r = invariants(reversed(a), kCfg);
    EXPECT_EQ(r.ray, -inv.ray);
    EXPECT_EQ(r.seg, inv.seg);
    EXPECT_NE(r.starts_at_a, inv.starts_at_a);
    auto c = invariants(conjugate(a), kCfg);
    EXPECT_EQ(c.ray, -inv.ray);
    EXPECT_EQ(c.seg, inv.seg);
  }
}

TEST(Arcs, DegenerateArcsThrow) {
  EXPECT_THROW(invariants(arc({{-3, 0}, {0, 0}, {-2, 0}}), kCfg), std::invalid_argument);
  EXPECT_THROW(invariants(arc({{-3, 0}, {Q(-5, 2), 1}, {-1, 0}, {-1, -1}, {-2, 0}}), kCfg), DegenerateArc);
  EXPECT_THROW(validate_arc(arc({{-3, 0}, {-1, 1}}), kCfg), std::invalid_argument);
  // the fourth segment cuts back through the second
  auto bow = arc({{-3, 0}, {-3, 1}, {-1, 1}, {-1, -1}, {-2, 2}, {-2, 0}});
  EXPECT_THROW(validate_arc(bow, kCfg), std::invalid_argument);
}

TEST(Arcs, CatalogSpirals) {
  for (int k = -3; k <= 4; ++k) {
    auto s = catalog_arc("S", k);
    EXPECT_NO_THROW(validate_arc(s, kCfg)) << k;
    auto inv = invariants(s, kCfg);
    EXPECT_EQ(inv.ray, k);
    EXPECT_EQ(inv.seg, std::max(std::abs(k) - 1, 0));
    EXPECT_TRUE(inv.starts_at_a);
    EXPECT_FALSE(invariants(catalog_arc("S'", std::clamp(k, -3, 3)), kCfg).starts_at_a);
  }
  EXPECT_THROW(catalog_arc("S", 7), std::invalid_argument);
  EXPECT_THROW(catalog_arc("T", 0), std::invalid_argument);
}

TEST(Arcs, FlopFixesTheOutsideAndSwapsEndpoints) {
  auto s = catalog_arc("S", 1);
  auto f = flop_map(s, kCfg);
  EXPECT_EQ(f.pts.front(), (Pt{kCfg.b, 0}));
  EXPECT_EQ(f.pts.back(), (Pt{kCfg.a, 0}));
  // points far from c0 do not move
  auto far = around_origin();
  auto g = flop_map(far, kCfg);
  for (const Pt& p : {far.pts[2], far.pts[3]}) EXPECT_NE(std::find(g.pts.begin(), g.pts.end(), p), g.pts.end());
}

TEST(Arcs, FlopMatchesPrimedSpiralsOnInvariants) {
  for (int k = -2; k <= 3; ++k)
    EXPECT_EQ(invariants(flop_map(catalog_arc("S", k), kCfg), kCfg), invariants(catalog_arc("S'", -k), kCfg)) << k;
}

// The flopped spiral is isotopic to the primed one only for k = 0 and k = 1.
TEST(Arcs, FlopIsotopyOnlyForSmallK) {
  for (int k = -2; k <= 3; ++k) {
    bool same = crossing_word(flop_map(catalog_arc("S", k), kCfg), kCfg) == crossing_word(catalog_arc("S'", -k), kCfg);
    EXPECT_EQ(same, k == 0 || k == 1) << k;
  }
}

// S_0 stays inside the twisting annulus, so only the winding spirals move.
TEST(Arcs, TwistProperties) {
  for (int k : {-1, 1, 2}) {
    auto s = catalog_arc("S", k);
    auto w = crossing_word(s, kCfg);
    auto t = dehn_twist_map(s, kCfg);
    EXPECT_NE(crossing_word(t, kCfg), w) << k;
    EXPECT_EQ(crossing_word(dehn_twist_map(t, kCfg, true), kCfg), w) << k;
    auto ff = flop_map(flop_map(s, kCfg), kCfg);
    EXPECT_EQ(crossing_word(ff, kCfg), crossing_word(dehn_twist_map(s, kCfg, true), kCfg)) << k;
  }
  auto s0 = catalog_arc("S", 0);
  EXPECT_EQ(crossing_word(dehn_twist_map(s0, kCfg), kCfg), crossing_word(s0, kCfg));
}

TEST(Arcs, PhaseOrder) {
  EXPECT_EQ(phase_order(0, 3), PhaseOrder::Greater);
  EXPECT_EQ(phase_order(1, -2), PhaseOrder::Less);
  EXPECT_EQ(phase_order(2, 5), PhaseOrder::Greater);
  EXPECT_EQ(phase_order(-1, -4), PhaseOrder::Less);
  EXPECT_EQ(phase_order(3, -3), PhaseOrder::Unspecified);
  EXPECT_THROW(phase_order(2, 2), std::invalid_argument);
  // strict partial order: asymmetric and transitive where defined
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) {
      if (i == j) continue;
      auto o = phase_order(i, j), r = phase_order(j, i);
      if (o == PhaseOrder::Greater) EXPECT_EQ(r, PhaseOrder::Less);
      if (o == PhaseOrder::Unspecified) EXPECT_EQ(r, PhaseOrder::Unspecified);
      for (int k = -5; k <= 5; ++k) {
        if (k == i || k == j) continue;
        if (o == PhaseOrder::Greater && phase_order(j, k) == PhaseOrder::Greater)
          EXPECT_EQ(phase_order(i, k), PhaseOrder::Greater) << i << j << k;
      }
    }
}
