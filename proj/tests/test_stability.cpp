#include "flop/fpscan.hpp"
#include "flop/stability.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flop;

namespace {

const StabilityParams kBefore{CQ(-1, 2), CQ(1, 1)};
const StabilityParams kAfter{CQ(1, 1), CQ(-1, 2)};

// Independent oracle for phase comparison: atan2 in double, fine away from ties.
double phase(const CQ& z) { return std::atan2(z.im.get_d(), z.re.get_d()); }

bool verdict_witness_ok(const Representation& r, const StabilityVerdict& v, const StabilityParams& p) {
  return v.witness && is_subrep(r, *v.witness) && phase_lt(central_charge(r, p), central_charge(v.witness->dims(), p));
}

}  // namespace

TEST(Stability, Chambers) {
  EXPECT_EQ(chamber(kBefore), Chamber::Zeta0Greater);
  EXPECT_EQ(chamber(kAfter), Chamber::Zeta1Greater);
  EXPECT_EQ(chamber({CQ(0, 1), CQ(0, 2)}), Chamber::Wall);
  EXPECT_TRUE(on_wall({CQ(1, 1), CQ(2, 2)}));
  EXPECT_THROW(validate({CQ(1, 0), CQ(0, 1)}), std::invalid_argument);
  EXPECT_THROW(validate({CQ(0, 1), CQ(1, -1)}), std::invalid_argument);
  EXPECT_NO_THROW(validate({CQ(-1, 0), CQ(0, 1)}));
}

TEST(Stability, PhaseAgreesWithFloatingPoint) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    CQ u(d(rng), d(rng)), v(d(rng), d(rng));
    if (!admissible(u) || !admissible(v)) continue;
    double pu = phase(u), pv = phase(v);
    if (std::abs(pu - pv) < 1e-9) continue;
    EXPECT_EQ(phase_lt(u, v), pu < pv);
    ++compared;
  }
  EXPECT_GT(compared, 500);
  EXPECT_FALSE(phase_lt(CQ(1, 1), CQ(2, 2)));
  EXPECT_TRUE(phase_lt(CQ(1, 1), CQ(-1, 0)));
  EXPECT_THROW(phase_lt(CQ(0, 0), CQ(1, 1)), std::invalid_argument);
}

TEST(Stability, CentralChargeIsAdditive) {
  EXPECT_EQ(central_charge(DimVec{2, 3}, kBefore), CQ(1, 7));
  EXPECT_EQ(central_charge(v_plus(3), kBefore), central_charge(DimVec{2, 3}, kBefore));
}

TEST(Stability, CatalogVerdicts) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(is_stable(v_plus(m), kBefore).kind, VerdictKind::Stable) << m;
    EXPECT_EQ(is_stable(v_minus(m - 1), kBefore).kind, VerdictKind::Stable) << m;
  }
  for (auto [a, b] : {std::pair{1, 1}, {1, 0}, {0, 1}, {3, -2}}) {
    auto r = point(a, b);
    EXPECT_EQ(is_stable(r, kBefore).kind, VerdictKind::Stable);
    auto v = is_stable(r, kAfter);
    ASSERT_EQ(v.kind, VerdictKind::Unstable);
    EXPECT_TRUE(verdict_witness_ok(r, v, kAfter));
    EXPECT_EQ(v.witness->dims(), DimVec(0, 1));
  }
  // the flopped points are the stable ones after the flop
  EXPECT_EQ(is_stable(point_flopped(1, 1), kAfter).kind, VerdictKind::Stable);
  EXPECT_EQ(is_stable(point_flopped(1, 1), kBefore).kind, VerdictKind::Unstable);
}

TEST(Stability, DecomposableIsNeverStable) {
  Representation r(1, 1);  // S0 + S1, no arrows
  auto v = is_stable(r, kBefore);
  EXPECT_NE(v.kind, VerdictKind::Stable);
  EXPECT_TRUE(verdict_witness_ok(r, v, kBefore));
}

TEST(Stability, RescalingInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(1, 9);
  for (auto r : {v_plus(2), v_plus(3), v_minus(2), point(1, 2)})
    for (const auto* p : {&kBefore, &kAfter})
      for (Arrow a : {Arrow::x, Arrow::z}) {
        Q s = frac(c(rng) * (rng() % 2 ? 1 : -1), c(rng));
        EXPECT_EQ(is_stable(rescale(r, a, s), *p).kind, is_stable(r, *p).kind);
      }
}

TEST(Stability, GeneratedSubrepIsClosed) {
  auto r = v_plus(3);
  Vec e(3);
  e[0] = 1;
  auto s = generated_subrep(r, {}, {e});
  EXPECT_TRUE(is_subrep(r, s));
  for (const auto& c : candidate_subreps(r)) {
    EXPECT_TRUE(is_subrep(r, c));
    EXPECT_GT(c.dims().first + c.dims().second, 0);
    EXPECT_LT(c.dims().first + c.dims().second, r.total());
  }
}

// A point module has one subrep per proper dimension vector (0,1) and none of type (1,0).
TEST(FpScan, PointSubrepCounts) {
  auto got = subrep_scan_Fp(point(1, 1), 3);
  std::map<DimVec, long> want{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(got, want);
  // in S0 + S1 both simples are subreps
  auto split = subrep_scan_Fp(Representation(1, 1), 2);
  EXPECT_EQ(split.at({1, 0}), 1);
  EXPECT_EQ(split.at({0, 1}), 1);
  EXPECT_THROW(subrep_scan_Fp(point(1, 1), 4), std::invalid_argument);
}

// Up to total dimension 3 the stable classes over F2 are the simples, the points
// (one for each point of P^1(F2)) and V+(2), V-(1) with their scalings.
TEST(FpScan, SmallScan) {
  auto got = stable_dimvector_scan(kBefore, 3);
  std::map<DimVec, long> want{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 3}, {{1, 2}, 6}, {{2, 1}, 6}};
  EXPECT_EQ(got, want);
  EXPECT_THROW(stable_dimvector_scan({CQ(0, 1), CQ(0, 2)}, 3), std::invalid_argument);
  EXPECT_THROW(stable_dimvector_scan(kBefore, 6), std::invalid_argument);
}
