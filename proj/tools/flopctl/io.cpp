#include "io.hpp"

#include "flop/rational.hpp"

#include <fstream>
#include <sstream>

namespace flopctl {

using namespace flop;

json to_json(const Q& q) { return flop::to_string(q); }

json to_json(const CQ& z) { return json::array({to_json(z.re), to_json(z.im)}); }

json to_json(const FreePathElement& e) {
  json terms = json::array();
  for (const auto& [p, c] : e.terms()) {
    json t{{"coeff", to_json(c)}, {"word", p.word}};
    if (p.word.empty()) t["vertex"] = vertex_name(p.src);
    terms.push_back(std::move(t));
  }
  return json{{"text", e.to_string()}, {"terms", std::move(terms)}};
}

json to_json(const Mat& m, std::size_t rows, std::size_t cols) {
  json out = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < cols; ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Representation& r) {
  const auto d0 = static_cast<std::size_t>(r.d0), d1 = static_cast<std::size_t>(r.d1);
  return json{{"dims", {r.d0, r.d1}},
              {"x", to_json(r.x, d1, d0)},
              {"y", to_json(r.y, d0, d1)},
              {"z", to_json(r.z, d1, d0)},
              {"w", to_json(r.w, d0, d1)}};
}

json to_json(const PLArc& arc) {
  json pts = json::array();
  for (const auto& p : arc.pts) pts.push_back({to_json(p.x), to_json(p.y)});
  return json{{"points", std::move(pts)}};
}

json to_json(const SubRep& s) { return json{{"dims", {s.dims().first, s.dims().second}}}; }

json to_json(const StabilityVerdict& v) {
  json out{{"verdict", verdict_name(v.kind)}};
  if (!v.primes.empty()) out["primes"] = v.primes;
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (!v.flagged.empty()) {
    json f = json::array();
    for (auto [a, b] : v.flagged) f.push_back({a, b});
    out["flagged"] = std::move(f);
  }
  return out;
}

json to_json(const ExtDims& e) {
  return json{{"dims", e.dims}, {"total", e.total()}, {"euler", e.euler()}};
}

Q rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  throw BadInput("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace {

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols, const char* name) {
  if (!j.is_array() || j.size() != rows) throw BadInput(std::string("matrix ") + name + " must have " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw BadInput(std::string("matrix ") + name + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw BadInput("not an integer: '" + s + "'");
}

Q parse_q(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

}  // namespace

Representation rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims")) throw BadInput("representation JSON needs a \"dims\" field");
  const auto& d = j.at("dims");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer() || d[0].get<int>() < 0 ||
      d[1].get<int>() < 0)
    throw BadInput("\"dims\" must be two non-negative integers");
  const int d0 = d[0].get<int>(), d1 = d[1].get<int>();
  Representation r(d0, d1);
  const auto u0 = static_cast<std::size_t>(d0), u1 = static_cast<std::size_t>(d1);
  auto field = [&](const char* name) -> const json& {
    if (!j.contains(name)) throw BadInput(std::string("representation JSON lacks \"") + name + "\"");
    return j.at(name);
  };
  r.x = mat_from_json(field("x"), u1, u0, "x");
  r.z = mat_from_json(field("z"), u1, u0, "z");
  r.y = mat_from_json(field("y"), u0, u1, "y");
  r.w = mat_from_json(field("w"), u0, u1, "w");
  return r;
}

PLArc arc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw BadInput("arc JSON needs a \"points\" array");
  PLArc arc;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw BadInput("each arc point must be [x, y]");
    arc.pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return arc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

CQ parse_complex(const std::string& s) {
  auto [re, im] = parse_pair(s);
  return {re, im};
}

DimVec parse_dimvec(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw BadInput("expected D0,D1 but got '" + s + "'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

std::pair<Q, Q> parse_pair(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw BadInput("expected A,B but got '" + s + "'");
  return {parse_q(parts[0]), parse_q(parts[1])};
}

Representation rep_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return rep_from_json(read_json_file(spec));
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  try {
    if (kind == "simple") {
      if (arg == "v0" || arg == "0") return simple(Vertex::v0);
      if (arg == "v1" || arg == "1") return simple(Vertex::v1);
      throw BadInput("simple needs v0 or v1");
    }
    if (kind == "point" || kind == "point_flopped") {
      auto [a, b] = parse_pair(arg);
      return make_catalog_rep(kind, a, b);
    }
    if (kind == "sphere") return catalog_sphere(parse_int(arg));
    return make_catalog_rep(kind, parse_int(arg));
  } catch (const BadInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

}  // namespace flopctl
