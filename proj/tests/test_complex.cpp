#include "flop/complex.hpp"

#include <gtest/gtest.h>

using namespace flop;

namespace {

std::vector<FreeComplex> all_tables() {
  std::vector<FreeComplex> out{table_L0(), table_L1(), table_Lc(2), table_Lc(Q(-1, 3))};
  for (int m = 2; m <= 6; ++m) out.push_back(table_Sm(m));
  return out;
}

}  // namespace

TEST(Complex, DSquaredLandsInTheIdeal) {
  for (const auto& t : all_tables()) {
    auto r = d_squared_ideal_check(t, 8);
    EXPECT_TRUE(r.ok) << t.label << ": " << r.message;
  }
}

// With the entry exactly as printed, d^2 leaves the relation ideal.
TEST(Complex, LiteralZyEntryBreaksDSquared) {
  FreeComplex c = table_Lc(2);
  c.set("b00", "b10", parse_element("zy"));
  auto r = d_squared_ideal_check(c, 8);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.failing_entries.empty());
}

TEST(Complex, SignFlipBreaksDSquared) {
  FreeComplex c = table_L0();
  c.set("Zbar", "pt_L0", parse_element("-z"));
  EXPECT_FALSE(d_squared_ideal_check(c, 8).ok);
}

TEST(Complex, DSquaredIsNotIdenticallyZero) {
  // d^2 vanishes only modulo relations for L0: the composite is a cyclic derivative.
  auto sq = d_squared(table_L0());
  bool nonzero = false;
  for (const auto& [k, e] : sq) nonzero = nonzero || !e.is_zero();
  EXPECT_TRUE(nonzero);
}

TEST(Complex, DegreesRiseByOne) {
  for (const auto& t : all_tables())
    for (const auto& [k, e] : t.d) {
      if (e.is_zero()) continue;
      EXPECT_EQ(t.gens[k.second].degree, t.gens[k.first].degree + 1) << t.label;
    }
}

TEST(Complex, ValidateRejectsBadEntries) {
  FreeComplex c = table_L0();
  // wrong endpoints: an entry from Y (at v1) to Xbar (at v1) must be a loop at v1
  c.d[{c.index_of("Y"), c.index_of("Xbar")}] = parse_element("x");
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(table_L0().index_of("nope"), std::invalid_argument);
  EXPECT_THROW(table_Lc(0), std::invalid_argument);
  EXPECT_THROW(table_Sm(1), std::invalid_argument);
  EXPECT_THROW(table_Sm(7), std::invalid_argument);
  EXPECT_THROW(m1b_table("T"), std::invalid_argument);
}

TEST(Complex, SignEquivalence) {
  FreeComplex a = table_L0(), b = table_L0();
  // negating one generator negates its row and column
  std::size_t g = b.index_of("W");
  for (auto& [k, e] : b.d)
    if (k.first == g || k.second == g) e = -e;
  EXPECT_TRUE(equal_up_to_generator_signs(a, b));
  b.set("Y", "Zbar", parse_element("2*xw"));
  EXPECT_FALSE(equal_up_to_generator_signs(a, b));
}
