#include "flop/quiver.hpp"
#include "flop/truncated.hpp"

#include <gtest/gtest.h>

using namespace flop;

TEST(Quiver, ArrowEndpoints) {
  EXPECT_EQ(source(Arrow::x), Vertex::v0);
  EXPECT_EQ(target(Arrow::x), Vertex::v1);
  EXPECT_EQ(source(Arrow::y), Vertex::v1);
  EXPECT_EQ(target(Arrow::w), Vertex::v0);
}

TEST(Quiver, WordsReadRightToLeft) {
  EXPECT_TRUE(composable("yx"));
  EXPECT_FALSE(composable("xz"));
  Path p = make_path("xyz");
  EXPECT_EQ(p.source(), Vertex::v0);
  EXPECT_EQ(p.target(), Vertex::v1);
  EXPECT_THROW(make_path("xx"), std::invalid_argument);
}

TEST(Quiver, CyclicDerivativeOfSingleWord) {
  Potential phi{{{1, "xyzw"}}};
  EXPECT_EQ(cyclic_derivative(phi, Arrow::x), parse_element("yzw"));
}

TEST(Quiver, RelationsAreTheCyclicDerivatives) {
  auto rels = relations();
  ASSERT_EQ(rels.size(), 4u);
  EXPECT_EQ(rels[0], parse_element("yzw - wzy"));
  EXPECT_EQ(rels[1], parse_element("zwx - xwz"));
  EXPECT_EQ(rels[2], parse_element("wxy - yxw"));
  EXPECT_EQ(rels[3], parse_element("xyz - zyx"));
  Potential phi = conifold_potential();
  const Arrow arrows[] = {Arrow::x, Arrow::y, Arrow::z, Arrow::w};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(rels[static_cast<std::size_t>(i)], cyclic_derivative(phi, arrows[i]));
}

TEST(Quiver, ParseRejectsGarbage) {
  EXPECT_THROW(parse_element("xq"), std::invalid_argument);
  EXPECT_THROW(parse_element("xz"), std::invalid_argument);
}

TEST(Quiver, ProductIsConcatenation) {
  auto a = parse_element("x"), b = parse_element("y");
  EXPECT_EQ(a * b, parse_element("xy"));
  EXPECT_TRUE((a * a).is_zero());
}

// The corner rings of the Jacobi algebra are the Segre rings of the conifold: the paths
// v0 -> v0 of length 2k span the bidegree (k, k) part of C[a1, a2] (x) C[b1, b2], so
// (k+1)^2, and v0 -> v1 of length 2k+1 gives (k+1)(k+2).
TEST(Truncated, HilbertFunctionMatchesSegreCount) {
  TruncatedAlgebra A(9);
  for (int len = 0; len <= 9; ++len) {
    std::size_t k = static_cast<std::size_t>(len / 2);
    std::size_t expected = len % 2 == 0 ? (k + 1) * (k + 1) : (k + 1) * (k + 2);
    EXPECT_EQ(A.dim(Vertex::v0, len), expected) << "length " << len;
    EXPECT_EQ(A.dim(Vertex::v1, len), expected) << "length " << len;
  }
  EXPECT_EQ(A.dim(Vertex::v0, Vertex::v0, 4), 9u);
}

TEST(Truncated, CutoffDoesNotChangeLowerComponents) {
  TruncatedAlgebra A(5), B(8);
  for (int len = 0; len <= 5; ++len) EXPECT_EQ(A.dim(Vertex::v0, len), B.dim(Vertex::v0, len));
}

TEST(Truncated, RelationsReduceToZero) {
  TruncatedAlgebra A(6);
  for (const auto& r : relations()) {
    Vec v = A.reduce(r);
    for (const auto& c : v) EXPECT_EQ(sgn(c), 0);
  }
  // yzw and wzy agree in the quotient
  Vec a = A.reduce(parse_element("yzw")), b = A.reduce(parse_element("wzy"));
  EXPECT_EQ(a, b);
}

TEST(Truncated, RejectsBadCutoff) {
  EXPECT_THROW(TruncatedAlgebra(-1), std::out_of_range);
  EXPECT_THROW(TruncatedAlgebra(TruncatedAlgebra::kMaxCutoff + 1), std::out_of_range);
}
