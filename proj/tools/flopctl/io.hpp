#pragma once

#include "flop/arcs.hpp"
#include "flop/homalg.hpp"
#include "flop/quiver.hpp"
#include "flop/reps.hpp"
#include "flop/stability.hpp"

#include <json.hpp>

#include <string>

namespace flopctl {

using json = nlohmann::ordered_json;

// Raised for malformed user input; maps to exit code 2.
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rationals travel as "p/q" strings, complex numbers as ["p/q", "p/q"].
json to_json(const flop::Q& q);
json to_json(const flop::CQ& z);
json to_json(const flop::FreePathElement& e);
json to_json(const flop::Mat& m, std::size_t rows, std::size_t cols);
json to_json(const flop::Representation& r);
json to_json(const flop::PLArc& arc);
json to_json(const flop::SubRep& s);
json to_json(const flop::StabilityVerdict& v);
json to_json(const flop::ExtDims& e);

flop::Q rational_from_json(const json& j);
flop::Representation rep_from_json(const json& j);
flop::PLArc arc_from_json(const json& j);

json read_json_file(const std::string& path);

// "RE,IM" with rational parts.
flop::CQ parse_complex(const std::string& s);
// "A,B" integers.
flop::DimVec parse_dimvec(const std::string& s);
// "A,B" rationals.
std::pair<flop::Q, flop::Q> parse_pair(const std::string& s);

// A representation named inline or stored in a file:
//   simple:v0  point:1,2  point_flopped:1,1  vplus:3  vminus:2  vplus_dagger:2  vminus_dagger:1
//   sphere:K (catalog V+ or V-)   or a path to a JSON file.
flop::Representation rep_from_spec(const std::string& spec);

}  // namespace flopctl
