#include "io.hpp"

#include <gtest/gtest.h>

using namespace flop;
using flopctl::BadInput;
using flopctl::json;

TEST(Io, RepresentationRoundTrip) {
  for (const auto& r : {v_plus(3), v_minus(2), point(Q(1, 3), -2), simple(Vertex::v1)}) {
    json j = flopctl::to_json(r);
    EXPECT_EQ(flopctl::rep_from_json(json::parse(j.dump())), r);
  }
}

TEST(Io, ArcRoundTrip) {
  PLArc a = catalog_arc("S", 2);
  PLArc b = flopctl::arc_from_json(json::parse(flopctl::to_json(a).dump()));
  EXPECT_EQ(a.pts, b.pts);
}

TEST(Io, RationalForms) {
  EXPECT_EQ(flopctl::rational_from_json(json("-3/6")), Q(-1, 2));
  EXPECT_EQ(flopctl::rational_from_json(json(4)), Q(4));
  EXPECT_THROW(flopctl::rational_from_json(json(0.5)), BadInput);
  EXPECT_THROW(flopctl::rational_from_json(json("1/0")), BadInput);
}

TEST(Io, BadRepresentations) {
  EXPECT_THROW(flopctl::rep_from_json(json::parse(R"({"x": []})")), BadInput);
  EXPECT_THROW(flopctl::rep_from_json(json::parse(R"({"dims": [1, -1]})")), BadInput);
  // x should be 1 x 1
  EXPECT_THROW(flopctl::rep_from_json(json::parse(R"({"dims": [1, 1], "x": [[1, 2]], "y": [[0]], "z": [[0]], "w": [[0]]})")),
               BadInput);
  EXPECT_THROW(flopctl::rep_from_json(json::parse(R"({"dims": [1, 1], "x": [[1]], "y": [[0]], "z": [[0]]})")), BadInput);
}

TEST(Io, InlineSpecs) {
  EXPECT_EQ(flopctl::rep_from_spec("vplus:3"), v_plus(3));
  EXPECT_EQ(flopctl::rep_from_spec("point:2,-1/2"), point(2, Q(-1, 2)));
  EXPECT_EQ(flopctl::rep_from_spec("sphere:-1"), v_minus(1));
  EXPECT_EQ(flopctl::rep_from_spec("simple:v0"), simple(Vertex::v0));
  EXPECT_THROW(flopctl::rep_from_spec("vplus:x"), BadInput);
  EXPECT_THROW(flopctl::rep_from_spec("simple:v2"), BadInput);
  EXPECT_THROW(flopctl::rep_from_spec("point:0,0"), BadInput);
  EXPECT_THROW(flopctl::rep_from_spec("/nonexistent/file.json"), BadInput);
}

TEST(Io, ParsePairs) {
  EXPECT_EQ(flopctl::parse_complex("-1,2"), CQ(-1, 2));
  EXPECT_EQ(flopctl::parse_dimvec("2,3"), DimVec(2, 3));
  EXPECT_THROW(flopctl::parse_dimvec("2"), BadInput);
  EXPECT_THROW(flopctl::parse_dimvec("2,x"), BadInput);
  EXPECT_THROW(flopctl::parse_complex("1,2,3"), BadInput);
}
