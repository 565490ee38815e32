#include "flop/homalg.hpp"

#include <gtest/gtest.h>

using namespace flop;

namespace {

const StabilityParams kBefore{CQ(-1, 2), CQ(1, 1)};
const StabilityParams kAfter{CQ(1, 1), CQ(-1, 2)};

ExtensionDatum arrow_datum(const Q& mx, const Q& mz) {
  ExtensionDatum xi;
  xi.xi[static_cast<std::size_t>(Arrow::x)] = Mat(1, 1);
  xi.xi[static_cast<std::size_t>(Arrow::z)] = Mat(1, 1);
  xi.xi[static_cast<std::size_t>(Arrow::y)] = Mat(0, 0);
  xi.xi[static_cast<std::size_t>(Arrow::w)] = Mat(0, 0);
  xi.xi[static_cast<std::size_t>(Arrow::x)](0, 0) = mx;
  xi.xi[static_cast<std::size_t>(Arrow::z)](0, 0) = mz;
  return xi;
}

std::vector<Representation> modules() {
  return {simple(Vertex::v0), simple(Vertex::v1), point(1, 1), point(1, -1), point_flopped(2, 1),
          v_plus(2),          v_plus(3),          v_minus(1),  v_minus(2),   v_plus_dagger(2)};
}

}  // namespace

TEST(Hom, SmallDimensions) {
  EXPECT_EQ(hom(simple(Vertex::v0), simple(Vertex::v0)).size(), 1u);
  EXPECT_EQ(hom(simple(Vertex::v0), simple(Vertex::v1)).size(), 0u);
  EXPECT_EQ(hom(point(1, 1), point(2, 2)).size(), 1u);
  EXPECT_EQ(hom(point(1, 1), point(1, 2)).size(), 0u);
  EXPECT_EQ(hom(point(1, 1), simple(Vertex::v0)).size(), 1u);
  EXPECT_EQ(hom(simple(Vertex::v1), point(1, 1)).size(), 1u);
  EXPECT_EQ(hom(simple(Vertex::v0), point(1, 1)).size(), 0u);
  for (const auto& r : modules())
    for (const auto& f : hom(r, r)) EXPECT_TRUE(is_module_map(r, r, f));
}

TEST(Ext1, BetweenSimples) {
  auto e = ext1(simple(Vertex::v0), simple(Vertex::v1));
  EXPECT_EQ(e.dim, 2);  // one class per arrow v0 -> v1
  EXPECT_EQ(ext1(simple(Vertex::v0), simple(Vertex::v0)).dim, 0);
  EXPECT_EQ(ext1(point(1, -1), v_plus(2)).dim, 1);
  for (const auto& b : e.basis) {
    EXPECT_TRUE(is_cocycle(simple(Vertex::v0), simple(Vertex::v1), b));
    EXPECT_FALSE(is_coboundary(simple(Vertex::v0), simple(Vertex::v1), b));
  }
}

TEST(Ext1, ExtensionOfSimplesIsAPoint) {
  auto e = build_extension(simple(Vertex::v0), simple(Vertex::v1), arrow_datum(1, 1));
  EXPECT_TRUE(verify_ses(simple(Vertex::v1), e, simple(Vertex::v0)));
  EXPECT_TRUE(iso_check(e.total, point(1, 1)));
  auto f = build_extension(simple(Vertex::v0), simple(Vertex::v1), arrow_datum(3, -1));
  EXPECT_TRUE(iso_check(f.total, point(3, -1)));
  EXPECT_FALSE(iso_check(f.total, point(1, 1)));
}

TEST(Ext1, NonCocycleIsRejected) {
  // y carries v1 -> v0 data, which a map from S0 to S1 cannot have
  ExtensionDatum bad = arrow_datum(1, 0);
  bad.xi[static_cast<std::size_t>(Arrow::y)] = Mat(1, 1);
  EXPECT_THROW(build_extension(simple(Vertex::v0), simple(Vertex::v1), bad), std::invalid_argument);
}

TEST(Iso, Examples) {
  EXPECT_TRUE(iso_check(point(1, 1), point(5, 5)));
  EXPECT_FALSE(iso_check(point(1, 1), point(1, 2)));
  EXPECT_FALSE(iso_check(v_plus(2), v_minus(1)));
  for (const auto& r : modules()) EXPECT_TRUE(iso_check(r, r, 3));
}

TEST(Spheres, ConePipelineMatchesCatalog) {
  for (int k = -3; k <= 4; ++k) {
    auto s = psi_sphere(k);
    EXPECT_TRUE(iso_check(s.rep, catalog_sphere(k))) << k;
    if (k >= 2) {
      EXPECT_EQ(s.rep.d0, k - 1);
      EXPECT_EQ(s.rep.d1, k);
    }
  }
  EXPECT_THROW(psi_sphere(9), std::invalid_argument);
}

// Oracles: Ext^0 and Ext^1 from hom and ext1, Ext^3 from Serre duality, and a
// vanishing Euler form since the form of a 3-Calabi-Yau algebra is antisymmetric.
TEST(ExtDims, MatchIndependentOracles) {
  for (Vertex v : {Vertex::v0, Vertex::v1})
    for (const auto& m : modules()) {
      auto e = ext_dims(v, m);
      EXPECT_EQ(e.dims[0], static_cast<int>(hom(simple(v), m).size()));
      EXPECT_EQ(e.dims[1], ext1(simple(v), m).dim);
      EXPECT_EQ(e.dims[3], static_cast<int>(hom(m, simple(v)).size()));
      EXPECT_EQ(e.euler(), 0);
    }
  auto a = ext_dims(Vertex::v0, simple(Vertex::v0));
  EXPECT_EQ(a.dims, (std::array<int, 4>{1, 0, 0, 1}));
  auto b = ext_dims(Vertex::v0, simple(Vertex::v1));
  EXPECT_EQ(b.dims, (std::array<int, 4>{0, 2, 2, 0}));
}

TEST(ExtDims, RejectsBadInput) {
  Representation r(1, 1);
  for (Arrow a : {Arrow::x, Arrow::y, Arrow::z, Arrow::w}) r.arrow(a)(0, 0) = 1;
  EXPECT_THROW(ext_dims(Vertex::v0, r), std::invalid_argument);
  EXPECT_THROW(ext_dims_at(Vertex::v0, simple(Vertex::v0), 3), std::invalid_argument);
}

TEST(FlopK, Values) {
  EXPECT_EQ(flop_K({1, 0}), DimVec(-1, 0));
  EXPECT_EQ(flop_K({0, 1}), DimVec(2, 1));
  EXPECT_EQ(flop_K({1, 1}), DimVec(1, 1));
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) EXPECT_EQ(flop_K(flop_K({a, b})), DimVec(a, b));
}

TEST(FlopK, PointIsDestabilized) {
  auto rep = flop_point_analysis(point(1, 1), kAfter);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Unstable);
  ASSERT_TRUE(rep.verdict.witness.has_value());
  EXPECT_EQ(rep.verdict.witness->dims(), DimVec(0, 1));
  EXPECT_TRUE(rep.witness_phase_exceeds);
  EXPECT_EQ(rep.k_class, DimVec(1, 1));
  EXPECT_TRUE(verify_ses(rep.sub, rep.triangle, rep.quotient));
  EXPECT_THROW(flop_point_analysis(point(1, 1), kBefore), std::invalid_argument);
}
