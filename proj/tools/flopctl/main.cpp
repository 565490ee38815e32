// flopctl: command line front end for the flop core library.
#include "io.hpp"

#include "flop/ainfty.hpp"
#include "flop/arcs.hpp"
#include "flop/cohomology.hpp"
#include "flop/complex.hpp"
#include "flop/fpscan.hpp"
#include "flop/homalg.hpp"
#include "flop/truncated.hpp"
#include "flop/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace flop;
using flopctl::BadInput;
using flopctl::json;
using flopctl::to_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 0;
  std::string config_path;
  // defaults, possibly replaced by the config file
  StabilityParams stab{CQ(-1, 2), CQ(1, 1)};
  int N = 6;
  SceneConfig scene;
};

void load_config(Globals& g) {
  if (g.config_path.empty()) return;
  json j = flopctl::read_json_file(g.config_path);
  auto cq = [](const json& v) {
    if (v.is_string()) return flopctl::parse_complex(v.get<std::string>());
    if (v.is_array() && v.size() == 2) return CQ(flopctl::rational_from_json(v[0]), flopctl::rational_from_json(v[1]));
    throw BadInput("complex values in the config are \"re,im\" or [re, im]");
  };
  if (j.contains("z0")) g.stab.z0 = cq(j["z0"]);
  if (j.contains("z1")) g.stab.z1 = cq(j["z1"]);
  if (j.contains("N")) g.N = j["N"].get<int>();
  if (j.contains("scene")) {
    const json& s = j["scene"];
    for (auto [key, field] : {std::pair{"a", &g.scene.a}, {"b", &g.scene.b}, {"R1", &g.scene.R1}, {"R2", &g.scene.R2},
                              {"eps", &g.scene.eps}})
      if (s.contains(key)) *field = flopctl::rational_from_json(s[key]);
  }
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string dims_text(const Representation& r) {
  return "(" + std::to_string(r.d0) + "," + std::to_string(r.d1) + ")";
}

std::string rep_text(const Representation& r) {
  std::string out = "dims " + dims_text(r) + "\n";
  const char names[4] = {'x', 'y', 'z', 'w'};
  for (int a = 0; a < 4; ++a) {
    const Mat& m = r.arrow(static_cast<Arrow>(a));
    out += std::string("  ") + names[a] + ":";
    if (m.empty()) out += " 0";
    for (std::size_t i = 0; i < m.rows() && !m.empty(); ++i) {
      out += " [";
      for (std::size_t k = 0; k < m.cols(); ++k) out += (k ? " " : "") + flop::to_string(m(i, k));
      out += "]";
    }
    out += "\n";
  }
  return out;
}

int cmd_relations(const Globals& g) {
  json j = json::array();
  std::string text;
  const char arrows[4] = {'x', 'y', 'z', 'w'};
  auto rels = relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    j.push_back({{"arrow", std::string(1, arrows[i])}, {"relation", to_json(rels[i])}});
    text += std::string("d") + arrows[i] + " Phi = " + rels[i].to_string() + "\n";
  }
  emit(g, j, text);
  return kExitOk;
}

int cmd_mc(const Globals& g) {
  auto mc = mc_expand(AInftyTable::conifold());
  json j = json::array();
  std::string text;
  for (const auto& [gen, e] : mc) {
    j.push_back({{"generator", gen_name(gen)}, {"coefficient", to_json(e)}});
    text += gen_name(gen) + ": " + e.to_string() + "\n";
  }
  emit(g, j, text);
  return kExitOk;
}

int cmd_ainfty_check(const Globals& g, int arity) {
  auto rep = stasheff_check(AInftyTable::conifold(), arity);
  json j{{"ok", rep.ok}, {"arity", arity}, {"tuples", rep.tuples_checked}, {"message", rep.message}};
  emit(g, j, (rep.ok ? "ok: " : "FAILED: ") + rep.message + " (" + std::to_string(rep.tuples_checked) + " tuples)\n");
  return rep.ok ? kExitOk : kExitCheckFailed;
}

int cmd_truncate(const Globals& g, int n) {
  TruncatedAlgebra A(n);
  json comps = json::array();
  std::string text = "length   v0->v0 v0->v1 v1->v1 v1->v0\n";
  for (int len = 0; len <= n; ++len) {
    std::size_t d00 = A.dim(Vertex::v0, Vertex::v0, len), d01 = A.dim(Vertex::v0, Vertex::v1, len);
    std::size_t d11 = A.dim(Vertex::v1, Vertex::v1, len), d10 = A.dim(Vertex::v1, Vertex::v0, len);
    comps.push_back({{"length", len}, {"v0_v0", d00}, {"v0_v1", d01}, {"v1_v1", d11}, {"v1_v0", d10}});
    char line[80];
    std::snprintf(line, sizeof line, "%6d %8zu %6zu %6zu %6zu\n", len, d00, d01, d11, d10);
    text += line;
  }
  text += "total " + std::to_string(A.total_dim()) + "\n";
  emit(g, json{{"N", n}, {"components", comps}, {"total", A.total_dim()}}, text);
  return kExitOk;
}

int cmd_rep_make(const Globals& g, const std::string& spec, const std::string& out) {
  Representation r = flopctl::rep_from_spec(spec);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw BadInput("cannot write " + out);
    f << to_json(r).dump(2) << '\n';
  }
  emit(g, to_json(r), rep_text(r));
  return kExitOk;
}

int cmd_rep_check(const Globals& g, const std::string& spec) {
  Representation r = flopctl::rep_from_spec(spec);
  auto ck = check_rep(r);
  json j{{"dims", {r.d0, r.d1}}, {"relations", ck.relations_ok}, {"nilpotent", ck.nilpotent}};
  emit(g, j,
       "dims " + dims_text(r) + "\nrelations " + (ck.relations_ok ? "hold" : "FAIL") + "\nnilpotent " +
           (ck.nilpotent ? "yes" : "NO") + "\n");
  return ck.relations_ok && ck.nilpotent ? kExitOk : kExitCheckFailed;
}

int cmd_stable(const Globals& g, const std::string& spec) {
  validate(g.stab);
  Representation r = flopctl::rep_from_spec(spec);
  auto ck = check_rep(r);
  if (!ck.relations_ok || !ck.nilpotent) throw BadInput("representation must satisfy the relations and be nilpotent");
  auto v = is_stable(r, g.stab);
  json j = to_json(v);
  j["chamber"] = chamber_name(chamber(g.stab));
  emit(g, j, chamber_name(chamber(g.stab)) + ": " + v.describe() + "\n");
  return kExitOk;
}

int cmd_scan(const Globals& g, int bound) {
  validate(g.stab);
  auto res = stable_dimvector_scan(g.stab, bound);
  json j = json::array();
  std::string text = "stable dimension vectors over F2 (count of stable modules)\n";
  for (const auto& [d, n] : res) {
    j.push_back({{"dims", {d.first, d.second}}, {"count", n}});
    text += "  (" + std::to_string(d.first) + "," + std::to_string(d.second) + "): " + std::to_string(n) + "\n";
  }
  emit(g, json{{"bound", bound}, {"chamber", chamber_name(chamber(g.stab))}, {"stable", j}}, text);
  return kExitOk;
}

int cmd_psi(const Globals& g, const std::string& object) {
  auto colon = object.find(':');
  if (colon == std::string::npos) throw BadInput("object must be sphere:K, cone:MX,MZ or table:NAME");
  const std::string kind = object.substr(0, colon), arg = object.substr(colon + 1);
  if (kind == "sphere") {
    int k;
    try {
      k = std::stoi(arg);
    } catch (const std::exception&) {
      throw BadInput("sphere index must be an integer");
    }
    auto s = psi_sphere(k, g.seed);
    std::string text = rep_text(s.rep);
    for (const auto& st : s.steps) text += "  " + st + "\n";
    emit(g, json{{"object", object}, {"representation", to_json(s.rep)}, {"steps", s.steps}}, text);
    return kExitOk;
  }
  if (kind == "cone") {
    // Cone(L0 -> L1) along mx a_x + mz a_z is the extension of S(v0) by S(v1).
    auto [mx, mz] = flopctl::parse_pair(arg);
    if (sgn(mx) == 0 && sgn(mz) == 0) throw BadInput("cone needs a nonzero morphism");
    ExtensionDatum xi;
    for (Arrow a : {Arrow::x, Arrow::y, Arrow::z, Arrow::w}) {
      bool forward = a == Arrow::x || a == Arrow::z;
      xi.xi[static_cast<std::size_t>(a)] = forward ? Mat(1, 1) : Mat(0, 0);
    }
    xi.xi[static_cast<std::size_t>(Arrow::x)](0, 0) = mx;
    xi.xi[static_cast<std::size_t>(Arrow::z)](0, 0) = mz;
    auto e = build_extension(simple(Vertex::v0), simple(Vertex::v1), xi);
    bool ok = verify_ses(simple(Vertex::v1), e, simple(Vertex::v0));
    emit(g, json{{"object", object}, {"representation", to_json(e.total)}, {"exact", ok}}, rep_text(e.total));
    return ok ? kExitOk : kExitCheckFailed;
  }
  if (kind == "table") {
    std::string name = arg;
    Q param = 1;
    if (auto c2 = arg.find(':'); c2 != std::string::npos) {
      name = arg.substr(0, c2);
      try {
        param = parse_rational(arg.substr(c2 + 1));
      } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
      }
    }
    auto h = free_complex_cohomology(m1b_table(name, param), g.N, g.seed);
    json j = json::array();
    std::string text;
    for (const auto& [deg, r] : h) {
      j.push_back({{"degree", deg}, {"representation", to_json(r)}});
      text += "H^" + std::to_string(deg) + ": " + rep_text(r);
    }
    if (h.empty()) text = "acyclic\n";
    emit(g, json{{"object", object}, {"N", g.N}, {"cohomology", j}}, text);
    return kExitOk;
  }
  throw BadInput("unknown object kind: " + kind);
}

int cmd_ext(const Globals& g, const std::string& from, const std::string& to) {
  Vertex v;
  if (from == "v0" || from == "simple:v0")
    v = Vertex::v0;
  else if (from == "v1" || from == "simple:v1")
    v = Vertex::v1;
  else
    throw BadInput("--from must be v0 or v1 (a vertex simple)");
  Representation m = flopctl::rep_from_spec(to);
  auto e = ext_dims(v, m, g.N);
  emit(g, to_json(e),
       "Ext^0..3 = " + std::to_string(e.dims[0]) + " " + std::to_string(e.dims[1]) + " " + std::to_string(e.dims[2]) +
           " " + std::to_string(e.dims[3]) + "  total " + std::to_string(e.total()) + "  euler " +
           std::to_string(e.euler()) + "\n");
  return kExitOk;
}

int cmd_flop(const Globals& g, const std::string& dimvec, const std::string& pt) {
  if (dimvec.empty() == pt.empty()) throw BadInput("flop takes exactly one of --dimvec or --point");
  if (!dimvec.empty()) {
    DimVec d = flopctl::parse_dimvec(dimvec);
    DimVec e = flop_K(d);
    emit(g, json{{"in", {d.first, d.second}}, {"out", {e.first, e.second}}},
         "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ") -> (" + std::to_string(e.first) + "," +
             std::to_string(e.second) + ")\n");
    return kExitOk;
  }
  auto [mx, mz] = flopctl::parse_pair(pt);
  auto rep = flop_point_analysis(point(mx, mz), g.stab);
  json j = to_json(rep.verdict);
  j["k_class"] = {rep.k_class.first, rep.k_class.second};
  j["witness_phase_exceeds"] = rep.witness_phase_exceeds;
  j["triangle"] = "S(v1) -> point -> S(v0)";
  emit(g, j,
       "triangle S(v1) -> point -> S(v0)\nflopped class (" + std::to_string(rep.k_class.first) + "," +
           std::to_string(rep.k_class.second) + ")\n" + rep.verdict.describe() + "\n");
  return kExitOk;
}

PLArc arc_from_catalog(const std::string& name, const SceneConfig& cfg) {
  // S_K or S'_K
  std::string label, index;
  if (name.rfind("S'_", 0) == 0) {
    label = "S'";
    index = name.substr(3);
  } else if (name.rfind("S_", 0) == 0) {
    label = "S";
    index = name.substr(2);
  } else {
    throw BadInput("catalog arcs are S_K or S'_K");
  }
  int k;
  try {
    std::size_t used = 0;
    k = std::stoi(index, &used);
    if (used != index.size()) throw std::invalid_argument(index);
  } catch (const std::exception&) {
    throw BadInput("bad arc index in " + name);
  }
  return catalog_arc(label, k, cfg);
}

int cmd_arc(const Globals& g, const std::string& op, const std::string& file, const std::string& cat,
            const std::string& out) {
  if (file.empty() == cat.empty()) throw BadInput("arc takes exactly one of --arc or --catalog");
  g.scene.validate();
  PLArc arc = file.empty() ? arc_from_catalog(cat, g.scene) : flopctl::arc_from_json(flopctl::read_json_file(file));
  PLArc result;
  if (op == "invariants")
    result = arc;
  else if (op == "flop")
    result = flop_map(arc, g.scene);
  else if (op == "twist")
    result = dehn_twist_map(arc, g.scene, false);
  else if (op == "inverse-twist")
    result = dehn_twist_map(arc, g.scene, true);
  else
    throw BadInput("--op must be invariants, flop, twist or inverse-twist");
  auto inv = invariants(result, g.scene);
  std::string word = crossing_word(result, g.scene);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw BadInput("cannot write " + out);
    f << to_json(result).dump(2) << '\n';
  }
  json j{{"op", op},
         {"vertices", result.pts.size()},
         {"ray_crossings", inv.ray},
         {"seg_crossings", inv.seg},
         {"starts_at", inv.starts_at_a ? "a" : "b"},
         {"crossing_word", word}};
  emit(g, j, op + ": " + inv.to_string() + "  word " + (word.empty() ? "-" : word) + "  (" +
                 std::to_string(result.pts.size()) + " vertices)\n");
  return kExitOk;
}

int cmd_verify_all(const Globals& g, bool skip_scan, const std::vector<int>& only) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.skip_scan = skip_scan;
  std::vector<CriterionResult> results;
  if (only.empty()) {
    results = run_all(opt);
  } else {
    for (int id : only) {
      if (id < 1 || id > kCriteria) throw BadInput("criterion ids are 1.." + std::to_string(kCriteria));
      results.push_back(run_criterion(id, opt));
    }
  }
  bool all = true;
  json j = json::array();
  std::string text;
  for (const auto& r : results) {
    all = all && r.pass();
    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"budget_s", r.budget}, {"detail", r.detail}});
    text += format_line(r) + "\n";
  }
  emit(g, j, text);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the conifold quiver, its stability chambers and the flop"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Print JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for randomized isomorphism checks")->capture_default_str();
  app.add_option("--config", g.config_path, "JSON file with defaults for z0, z1, N and scene");

  std::string z0, z1;
  auto add_charges = [&](CLI::App* c) {
    c->add_option("--z0", z0, "Central charge of S(v0) as RE,IM");
    c->add_option("--z1", z1, "Central charge of S(v1) as RE,IM");
  };
  std::optional<int> n_override;

  auto* relations_cmd = app.add_subcommand("relations", "Cyclic derivatives of the potential");
  auto* mc_cmd = app.add_subcommand("mc", "Maurer-Cartan expansion of the A-infinity table");
  int arity = 6;
  auto* ainfty_cmd = app.add_subcommand("ainfty-check", "Stasheff identities on all composable tuples");
  ainfty_cmd->add_option("--arity", arity, "Largest tuple length")->capture_default_str()->check(CLI::Range(1, 8));
  int trunc_n = 6;
  auto* trunc_cmd = app.add_subcommand("truncate", "Dimensions of the length-truncated Jacobi algebra");
  trunc_cmd->add_option("--n", trunc_n, "Truncation length")->required()->check(CLI::Range(0, 12));

  auto* rep_cmd = app.add_subcommand("rep", "Build or check representations");
  rep_cmd->require_subcommand(1);
  std::string rep_kind, rep_out, rep_file;
  auto* rep_make = rep_cmd->add_subcommand("make", "Catalog representation");
  rep_make->add_option("--kind", rep_kind, "simple:v0, point:MX,MZ, vplus:M, vminus:N, ...")->required();
  rep_make->add_option("--out", rep_out, "Also write the JSON to this file");
  auto* rep_check = rep_cmd->add_subcommand("check", "Relations and nilpotency");
  auto* rc_kind = rep_check->add_option("--kind", rep_kind, "Inline representation");
  rep_check->add_option("--rep", rep_file, "Representation JSON file")->excludes(rc_kind);

  std::string stable_rep;
  auto* stable_cmd = app.add_subcommand("stable", "Stability verdict for one representation");
  stable_cmd->add_option("--rep", stable_rep, "JSON file or inline spec such as vplus:2")->required();
  add_charges(stable_cmd);

  int bound = 5;
  auto* scan_cmd = app.add_subcommand("scan", "Stable dimension vectors by exhaustive F2 enumeration");
  scan_cmd->add_option("--bound", bound, "Largest d0 + d1")->capture_default_str()->check(CLI::Range(1, kScanMaxBound));
  add_charges(scan_cmd);

  std::string psi_object;
  auto* psi_cmd = app.add_subcommand("psi", "Module image of a sphere, a cone or an m1b table");
  psi_cmd->add_option("--object", psi_object, "sphere:K, cone:MX,MZ or table:NAME[:PARAM]")->required();
  psi_cmd->add_option("--n", n_override, "Truncation for table cohomology");

  std::string ext_from, ext_to;
  auto* ext_cmd = app.add_subcommand("ext", "Ext^i(S_v, M) for i = 0..3");
  ext_cmd->add_option("--from", ext_from, "v0 or v1")->required();
  ext_cmd->add_option("--to", ext_to, "JSON file or inline spec")->required();
  ext_cmd->add_option("--n", n_override, "Truncation length");

  std::string flop_dim, flop_point;
  auto* flop_cmd = app.add_subcommand("flop", "Flop on K-classes or on a point module");
  flop_cmd->add_option("--dimvec", flop_dim, "D0,D1");
  flop_cmd->add_option("--point", flop_point, "MX,MZ");
  add_charges(flop_cmd);

  std::string arc_op = "invariants", arc_file, arc_cat, arc_out;
  auto* arc_cmd = app.add_subcommand("arc", "Crossing invariants, flop and Dehn twist of planar arcs");
  arc_cmd->add_option("--op", arc_op, "invariants, flop, twist or inverse-twist")->capture_default_str();
  arc_cmd->add_option("--arc", arc_file, "Arc JSON file");
  arc_cmd->add_option("--catalog", arc_cat, "S_K or S'_K");
  arc_cmd->add_option("--out", arc_out, "Write the resulting arc JSON here");

  bool skip_scan = false;
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the acceptance criteria");
  verify_cmd->add_flag("--skip-scan", skip_scan, "Skip the exhaustive chamber scan");
  verify_cmd->add_option("--only", only, "Run just these criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    load_config(g);
    if (!z0.empty()) g.stab.z0 = flopctl::parse_complex(z0);
    if (!z1.empty()) g.stab.z1 = flopctl::parse_complex(z1);
    if (n_override) g.N = *n_override;

    if (relations_cmd->parsed()) return cmd_relations(g);
    if (mc_cmd->parsed()) return cmd_mc(g);
    if (ainfty_cmd->parsed()) return cmd_ainfty_check(g, arity);
    if (trunc_cmd->parsed()) return cmd_truncate(g, trunc_n);
    if (rep_make->parsed()) return cmd_rep_make(g, rep_kind, rep_out);
    if (rep_check->parsed()) {
      if (rep_kind.empty() && rep_file.empty()) throw BadInput("rep check needs --kind or --rep");
      return cmd_rep_check(g, rep_file.empty() ? rep_kind : rep_file);
    }
    if (stable_cmd->parsed()) return cmd_stable(g, stable_rep);
    if (scan_cmd->parsed()) return cmd_scan(g, bound);
    if (psi_cmd->parsed()) return cmd_psi(g, psi_object);
    if (ext_cmd->parsed()) return cmd_ext(g, ext_from, ext_to);
    if (flop_cmd->parsed()) return cmd_flop(g, flop_dim, flop_point);
    if (arc_cmd->parsed()) return cmd_arc(g, arc_op, arc_file, arc_cat, arc_out);
    if (verify_cmd->parsed()) return cmd_verify_all(g, skip_scan, only);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitBadInput;
}
