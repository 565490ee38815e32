#include "flop/cohomology.hpp"
#include "flop/homalg.hpp"

#include <gtest/gtest.h>

using namespace flop;

namespace {

void expect_single(const FreeComplex& c, const Representation& want, int N = 6) {
  auto h = free_complex_cohomology(c, N);
  ASSERT_EQ(h.size(), 1u) << c.label;
  ASSERT_EQ(h.count(0), 1u) << c.label;
  EXPECT_EQ(h.at(0).d0, want.d0) << c.label;
  EXPECT_EQ(h.at(0).d1, want.d1) << c.label;
  EXPECT_TRUE(iso_check(h.at(0), want)) << c.label;
}

}  // namespace

TEST(Cohomology, VertexBranes) {
  expect_single(table_L0(), simple(Vertex::v0));
  expect_single(table_L1(), simple(Vertex::v1));
}

// The holonomy ratio rho gives the point with x : z = rho : 1.
TEST(Cohomology, CompactBraneIsAPoint) {
  for (Q rho : {Q(2), Q(3), Q(-1, 2)}) expect_single(table_Lc(rho), point(rho, 1));
  auto h = free_complex_cohomology(table_Lc(2), 6);
  EXPECT_FALSE(iso_check(h.at(0), point(1, 2)));
}

TEST(Cohomology, SphereTables) {
  for (int m = 2; m <= 4; ++m) expect_single(table_Sm(m), v_plus(m));
}

TEST(Cohomology, StableInTruncation) {
  for (int N : {6, 7, 8}) {
    auto h = complex_cohomology_at(table_Lc(2), N);
    ASSERT_EQ(h.size(), 1u) << N;
    EXPECT_TRUE(iso_check(h.at(0), point(2, 1))) << N;
  }
}

TEST(Cohomology, InternalShiftsStartAtZero) {
  auto s = internal_shifts(table_L0());
  ASSERT_EQ(s.size(), table_L0().gens.size());
  EXPECT_EQ(*std::min_element(s.begin(), s.end()), 0);
}
