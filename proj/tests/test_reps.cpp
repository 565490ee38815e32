#include "flop/reps.hpp"

#include <gtest/gtest.h>

using namespace flop;

namespace {

std::vector<std::pair<std::string, Representation>> catalog() {
  std::vector<std::pair<std::string, Representation>> out{{"S0", simple(Vertex::v0)},
                                                          {"S1", simple(Vertex::v1)},
                                                          {"point(1:1)", point(1, 1)},
                                                          {"point(2:-3)", point(2, -3)},
                                                          {"point(0:1)", point(0, 1)},
                                                          {"flopped(1:2)", point_flopped(1, 2)}};
  for (int m = 1; m <= 5; ++m) {
    out.push_back({"V+" + std::to_string(m), v_plus(m)});
    out.push_back({"V+dag" + std::to_string(m), v_plus_dagger(m)});
  }
  for (int n = 0; n <= 4; ++n) {
    out.push_back({"V-" + std::to_string(n), v_minus(n)});
    out.push_back({"V-dag" + std::to_string(n), v_minus_dagger(n)});
  }
  return out;
}

}  // namespace

TEST(Reps, CatalogSatisfiesRelationsAndIsNilpotent) {
  for (const auto& [name, r] : catalog()) {
    EXPECT_NO_THROW(r.validate_shapes()) << name;
    auto ck = check_rep(r);
    EXPECT_TRUE(ck.relations_ok) << name;
    EXPECT_TRUE(ck.nilpotent) << name;
  }
}

TEST(Reps, Dimensions) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(v_plus(m).d0, m - 1);
    EXPECT_EQ(v_plus(m).d1, m);
  }
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(v_minus(n).d0, n + 1);
    EXPECT_EQ(v_minus(n).d1, n);
  }
  EXPECT_EQ(point(1, 1).d0, 1);
  EXPECT_EQ(point(1, 1).d1, 1);
}

TEST(Reps, DaggerUsesTheOtherArrows) {
  auto r = v_plus_dagger(3);
  EXPECT_TRUE(r.x.is_zero());
  EXPECT_TRUE(r.z.is_zero());
  auto s = v_plus(3);
  EXPECT_TRUE(s.y.is_zero());
  EXPECT_TRUE(s.w.is_zero());
}

TEST(Reps, PathMatrixComposesRightToLeft) {
  auto r = point(2, 3);
  r.y = Mat(1, 1);
  // x then y is "yx", a loop at v0; it is zero here since y is.
  EXPECT_TRUE(r.path_matrix("yx").is_zero());
  EXPECT_EQ(r.path_matrix("x")(0, 0), Q(2));
  EXPECT_EQ(r.path_matrix("z")(0, 0), Q(3));
  EXPECT_THROW(r.path_matrix("xz"), std::invalid_argument);
}

// An arbitrary 1x1 rep with all four arrows nonzero satisfies the relations (everything
// commutes) but is not nilpotent.
TEST(Reps, RelationsWithoutNilpotency) {
  Representation r(1, 1);
  for (Arrow a : {Arrow::x, Arrow::y, Arrow::z, Arrow::w}) r.arrow(a)(0, 0) = 1;
  EXPECT_TRUE(relations_hold(r));
  EXPECT_FALSE(is_nilpotent(r));
}

TEST(Reps, RelationsCanFail) {
  Representation r(2, 1);
  r.x(0, 0) = 1;
  r.y(0, 0) = 1;
  r.z(0, 1) = 1;
  r.w(1, 0) = 1;
  EXPECT_FALSE(relations_hold(r));
}

TEST(Reps, RescalePreservesRelations) {
  for (const auto& [name, r] : catalog()) {
    auto s = rescale(r, Arrow::x, Q(-7, 2));
    EXPECT_TRUE(relations_hold(s)) << name;
    EXPECT_EQ(rescale(s, Arrow::x, Q(-2, 7)), r) << name;
  }
  EXPECT_THROW(rescale(point(1, 1), Arrow::z, 0), std::invalid_argument);
}

TEST(Reps, BadInputThrows) {
  EXPECT_THROW(v_plus(0), std::invalid_argument);
  EXPECT_THROW(v_minus(-1), std::invalid_argument);
  EXPECT_THROW(point(0, 0), std::invalid_argument);
  EXPECT_THROW(make_catalog_rep("banana"), std::invalid_argument);
  Representation r(1, 1);
  r.x = Mat(2, 2);
  EXPECT_THROW(r.validate_shapes(), std::invalid_argument);
}
