// polar5: command-line front end for the polar data library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "polar/catalog.hpp"
#include "polar/cycle4.hpp"
#include "polar/enumerate.hpp"
#include "polar/forest5.hpp"
#include "polar/json_io.hpp"
#include "polar/polygon5.hpp"

namespace {

using polar::json_io::Json;
using polar::json_io::Kind;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string kind;
  std::vector<std::string> sum_inputs;
  bool fixed = false;
  bool regular = false;
  std::vector<std::string> at;
  std::string circle;
  std::vector<std::string> complement;
  std::string bounds;
  std::size_t sides = 0;
  bool summary = false;
  std::string group;
  int dimension = 0;
  std::string nonneg;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Document {
  Json json;
  Kind kind;
};

Document load(const std::string& path, const std::string& kind_override) {
  Json j = Json::parse(read_all(path));
  std::string name = kind_override;
  if (name.empty()) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw UsageError("input has no \"kind\"; pass --kind");
    }
    name = j["kind"].get<std::string>();
  }
  const auto kind = polar::json_io::parse_kind(name);
  if (!kind) throw UsageError("unknown kind \"" + name + "\"");
  return {std::move(j), *kind};
}

std::vector<polar::Int> parse_ints(const std::string& s, std::size_t count, const char* what) {
  std::vector<polar::Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + ": " + s);
    }
  }
  if (out.size() != count) {
    throw UsageError(std::string(what) + " needs " + std::to_string(count) + " integers");
  }
  return out;
}

polar::Vec3 parse_vec3(const std::string& s, const char* what) {
  const auto v = parse_ints(s, 3, what);
  return {v[0], v[1], v[2]};
}

polar::forest5::EdgeRef parse_edge(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto v = parse_ints(s, 1, "edge");
    return {0, static_cast<std::size_t>(v[0])};
  }
  const auto c = parse_ints(s.substr(0, colon), 1, "edge component");
  const auto e = parse_ints(s.substr(colon + 1), 1, "edge index");
  if (c[0] < 0 || e[0] < 0) throw UsageError("negative edge reference " + s);
  return {static_cast<std::size_t>(c[0]), static_cast<std::size_t>(e[0])};
}

std::size_t parse_vertex(const std::string& s) {
  const auto v = parse_ints(s, 1, "vertex");
  if (v[0] < 0) throw UsageError("negative vertex " + s);
  return static_cast<std::size_t>(v[0]);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void line(const Json& j) { stream() << j.dump() << '\n'; }

 private:
  std::ofstream file_;
};

int cmd_validate(const Options& o, Output& out) {
  const Document d = load(o.input, o.kind);
  polar::Violations v;
  switch (d.kind) {
    case Kind::T2Forest: v = polar::forest5::validate(polar::json_io::forest_from_json(d.json)); break;
    case Kind::T3Forest: v = polar::forest5::validate(polar::json_io::forest3_from_json(d.json)); break;
    case Kind::SO3Polygon: v = polar::polygon5::validate(polar::json_io::word_from_json(d.json)); break;
    case Kind::T2Cycle: v = polar::cycle4::validate(polar::json_io::cycle_from_json(d.json)); break;
    case Kind::T3Cycle: {
      const auto c = polar::json_io::cycle3_from_json(d.json);
      if (c.slopes.size() < 2) v.push_back({"cycle", "length < 2"});
      for (std::size_t i = 0; i < c.slopes.size(); ++i) {
        if (!polar::lattice::is_primitive(c.slopes[i])) {
          v.push_back({"slope " + std::to_string(i), "not primitive"});
        }
      }
      break;
    }
    case Kind::S1Chamber: {
      const auto c = polar::json_io::chamber_from_json(d.json);
      if (c.boundary_components < 1) v.push_back({"boundary_components", "must be at least 1"});
      if (!c.simply_connected) v.push_back({"simply_connected", "chamber must be simply connected"});
      if (c.b2 < 0) v.push_back({"b2", "must be non-negative"});
      break;
    }
  }
  if (v.empty()) {
    out.line(Json{{"ok", true}});
    return kOk;
  }
  out.line(Json{{"ok", false}, {"violations", polar::json_io::to_json(v)}});
  return kInvalid;
}

int cmd_invariants(const Options& o, Output& out) {
  const Document d = load(o.input, o.kind);
  switch (d.kind) {
    case Kind::T2Forest: out.line(polar::json_io::invariants(polar::json_io::forest_from_json(d.json))); break;
    case Kind::SO3Polygon: out.line(polar::json_io::invariants(polar::json_io::word_from_json(d.json))); break;
    case Kind::T2Cycle: out.line(polar::json_io::invariants(polar::json_io::cycle_from_json(d.json))); break;
    case Kind::S1Chamber: out.line(polar::json_io::invariants(polar::json_io::chamber_from_json(d.json))); break;
    case Kind::T3Forest:
    case Kind::T3Cycle:
      throw UsageError("no invariants for " + std::string(polar::json_io::to_string(d.kind)) +
                       "; project it with `quotient` first");
  }
  return kOk;
}

int cmd_canonicalize(const Options& o, Output& out) {
  const Document d = load(o.input, o.kind);
  switch (d.kind) {
    case Kind::T2Forest:
      out.line(polar::json_io::to_json(polar::forest5::canonicalize(polar::json_io::forest_from_json(d.json))));
      break;
    case Kind::SO3Polygon:
      out.line(polar::json_io::to_json(polar::polygon5::canonicalize(polar::json_io::word_from_json(d.json))));
      break;
    case Kind::T2Cycle:
      out.line(polar::json_io::to_json(polar::cycle4::canonicalize(polar::json_io::cycle_from_json(d.json))));
      break;
    default:
      throw UsageError("canonicalize does not apply to " +
                       std::string(polar::json_io::to_string(d.kind)));
  }
  return kOk;
}

int cmd_sum(const Options& o, Output& out) {
  if (o.fixed == o.regular) throw UsageError("pass exactly one of --fixed and --regular");
  if (o.sum_inputs.size() != 2) throw UsageError("sum needs two inputs");
  const Document a = load(o.sum_inputs[0], o.kind);
  const Document b = load(o.sum_inputs[1], o.kind);
  if (a.kind != b.kind) throw UsageError("inputs have different kinds");
  std::vector<std::string> at = o.at;
  if (at.empty()) at = {"0", "0"};
  if (at.size() != 2) throw UsageError("--at needs two surgery sites");

  if (o.regular) {
    if (a.kind != Kind::T2Forest) throw UsageError("--regular applies to t2_forest_dim5 only");
    out.line(polar::json_io::to_json(polar::forest5::regular_orbit_sum(
        polar::json_io::forest_from_json(a.json), polar::json_io::forest_from_json(b.json))));
    return kOk;
  }
  switch (a.kind) {
    case Kind::T2Forest:
      out.line(polar::json_io::to_json(polar::forest5::fixed_point_sum(
          polar::json_io::forest_from_json(a.json), parse_edge(at[0]),
          polar::json_io::forest_from_json(b.json), parse_edge(at[1]))));
      break;
    case Kind::SO3Polygon:
      out.line(polar::json_io::to_json(polar::polygon5::fixed_point_sum(
          polar::json_io::word_from_json(a.json), parse_vertex(at[0]),
          polar::json_io::word_from_json(b.json), parse_vertex(at[1]))));
      break;
    case Kind::T2Cycle:
      out.line(polar::json_io::to_json(polar::cycle4::fixed_point_sum(
          polar::json_io::cycle_from_json(a.json), parse_vertex(at[0]),
          polar::json_io::cycle_from_json(b.json), parse_vertex(at[1]))));
      break;
    default:
      throw UsageError("--fixed does not apply to " + std::string(polar::json_io::to_string(a.kind)));
  }
  return kOk;
}

int cmd_quotient(const Options& o, Output& out) {
  if (o.circle.empty()) throw UsageError("quotient needs --circle a,b,c");
  const polar::Vec3 w = parse_vec3(o.circle, "circle");
  if (!o.complement.empty() && o.complement.size() != 2) {
    throw UsageError("--complement needs two vectors");
  }
  const Document d = load(o.input, o.kind);
  switch (d.kind) {
    case Kind::T3Forest: {
      const auto f = polar::json_io::forest3_from_json(d.json);
      if (o.complement.empty()) {
        out.line(polar::json_io::to_json(polar::forest5::quotient(f, w)));
      } else {
        out.line(polar::json_io::to_json(polar::forest5::quotient(
            f, w, parse_vec3(o.complement[0], "complement"), parse_vec3(o.complement[1], "complement"))));
      }
      break;
    }
    case Kind::T3Cycle:
      if (!o.complement.empty()) throw UsageError("--complement applies to t3_forest only");
      out.line(polar::json_io::to_json(polar::cycle4::quotient(polar::json_io::cycle3_from_json(d.json), w)));
      break;
    default:
      throw UsageError("quotient needs t3_forest or t3_cycle input");
  }
  return kOk;
}

int cmd_enumerate(const Options& o, Output& out) {
  const auto kind = polar::json_io::parse_kind(o.kind);
  if (!kind) throw UsageError("enumerate needs --kind t2_forest_dim5 or so3_polygon_dim5");
  if (*kind == Kind::T2Forest) {
    if (o.bounds.empty()) throw UsageError("enumerate needs --bounds E,c,h");
    const auto b = parse_ints(o.bounds, 3, "bounds");
    if (b[0] < 0 || b[1] < 0 || b[2] < 0) throw UsageError("bounds must be non-negative");
    polar::enumerate::ForestBounds bounds{static_cast<std::size_t>(b[0]),
                                          static_cast<std::size_t>(b[1]), b[2]};
    const auto table = polar::enumerate::enumerate_t2_forests(bounds);
    if (o.summary) {
      auto& s = out.stream();
      s << "T2 forests with at most " << b[0] << " edges, " << b[1] << " components, height "
        << b[2] << ": " << table.rows.size() << " classes\n";
      for (const auto& r : table.rows) {
        s << "  E=" << r.edges << " c=" << r.components << "  "
          << (r.pi1.trivial() ? r.type.to_string() : "pi1=" + r.pi1.to_string())
          << "  |Pi|=" << r.polar_group_order
          << (r.orientable_section ? "  orientable" : "  non-orientable")
          << (r.nonneg.value_or(false) ? "  nonneg" : "") << "  "
          << polar::json_io::to_json(r.data)["components"].dump() << '\n';
      }
      return kOk;
    }
    out.line(Json{{"meta",
                   Json{{"kind", "t2_forest_dim5"},
                        {"max_edges", b[0]},
                        {"max_components", b[1]},
                        {"max_height", b[2]},
                        {"height", "largest absolute slope entry in the canonical form"},
                        {"rows", table.rows.size()}}}});
    for (const auto& r : table.rows) out.line(polar::json_io::to_json(r));
    return kOk;
  }
  if (*kind == Kind::SO3Polygon) {
    if (o.sides < 2) throw UsageError("enumerate needs --sides n with n >= 2");
    const auto rows = polar::enumerate::enumerate_so3(o.sides);
    if (o.summary) {
      auto& s = out.stream();
      s << "SO(3) polygons with " << o.sides << " sides: " << rows.size() << " classes\n";
      for (const auto& r : rows) {
        s << "  " << polar::polygon5::format(r.word) << "  " << r.type.to_string()
          << "  genus " << r.genus << "  chi_orb " << polar::json_io::format_rational(r.chi_orb)
          << (r.nonneg ? "  nonneg" : "") << '\n';
      }
      return kOk;
    }
    out.line(Json{{"meta", Json{{"kind", "so3_polygon_dim5"}, {"sides", o.sides}, {"rows", rows.size()}}}});
    for (const auto& r : rows) out.line(polar::json_io::to_json(r));
    return kOk;
  }
  throw UsageError("enumerate does not apply to " + o.kind);
}

int cmd_catalog(const Options& o, Output& out) {
  polar::catalog::Query q;
  if (!o.group.empty()) q.group = o.group;
  if (o.dimension != 0) q.dimension = o.dimension;
  if (o.nonneg == "true") {
    q.nonneg = true;
  } else if (o.nonneg == "false") {
    q.nonneg = false;
  } else if (!o.nonneg.empty()) {
    throw UsageError("--nonneg takes true or false");
  }
  Json a = Json::array();
  for (const auto& e : polar::catalog::query(q)) a.push_back(polar::json_io::to_json(e));
  out.line(a);
  return kOk;
}

int cmd_nonneg(const Options& o, Output& out) {
  const Document d = load(o.input, o.kind);
  bool ok = false;
  switch (d.kind) {
    case Kind::T2Forest:
      ok = polar::forest5::nonneg_curvature_admissible(polar::json_io::forest_from_json(d.json));
      break;
    case Kind::SO3Polygon:
      ok = polar::polygon5::nonneg_curvature_admissible(polar::json_io::word_from_json(d.json));
      break;
    default:
      throw UsageError("nonneg-check applies to t2_forest_dim5 and so3_polygon_dim5");
  }
  out.line(Json{{"nonneg", ok}});
  return kOk;
}

void print_error(const std::string& code, const std::string& message) {
  std::cout << Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter polar data: validation, invariants, surgeries and classification tables"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "input file, - for standard input")->capture_default_str();
    sub->add_option("--output", o.output, "output file, - for standard output")->capture_default_str();
    sub->add_option("--kind", o.kind, "override the \"kind\" field of the input");
  };

  auto* validate = app.add_subcommand("validate", "check the data invariants");
  add_io(validate);
  auto* invariants = app.add_subcommand("invariants", "print the invariant record");
  add_io(invariants);
  auto* canonicalize = app.add_subcommand("canonicalize", "print the canonical representative");
  add_io(canonicalize);

  auto* sum = app.add_subcommand("sum", "fixed-point or regular-orbit sum of two inputs");
  sum->add_option("inputs", o.sum_inputs, "two input files")->expected(2)->required();
  sum->add_option("--output", o.output, "output file, - for standard output");
  sum->add_option("--kind", o.kind, "override the \"kind\" field of the inputs");
  sum->add_flag("--fixed", o.fixed, "fixed-point sum");
  sum->add_flag("--regular", o.regular, "regular orbit sum (forests)");
  sum->add_option("--at", o.at, "surgery sites: edges c:e for forests, vertex indices otherwise")
      ->expected(2);

  auto* quotient = app.add_subcommand("quotient", "project T3 data along a circle");
  add_io(quotient);
  quotient->add_option("--circle", o.circle, "circle a,b,c")->required();
  quotient->add_option("--complement", o.complement, "two vectors completing the circle to a basis")
      ->expected(2);

  auto* enumerate = app.add_subcommand("enumerate", "classification table");
  enumerate->add_option("--kind", o.kind, "t2_forest_dim5 or so3_polygon_dim5")->required();
  enumerate->add_option("--bounds", o.bounds, "E,c,h: max edges, components, slope height");
  enumerate->add_option("--sides", o.sides, "polygon side count");
  enumerate->add_flag("--summary", o.summary, "human-readable table instead of JSON lines");
  enumerate->add_option("--output", o.output, "output file, - for standard output");

  auto* cat = app.add_subcommand("catalog", "query the classification catalog");
  cat->add_option("--group", o.group, "group name, e.g. SO(3)");
  cat->add_option("--dimension", o.dimension, "manifold dimension");
  cat->add_option("--nonneg", o.nonneg, "true or false");
  cat->add_option("--output", o.output, "output file, - for standard output");

  auto* nonneg = app.add_subcommand("nonneg-check", "non-negative curvature predicate");
  add_io(nonneg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output out(o.output);
    if (validate->parsed()) return cmd_validate(o, out);
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (canonicalize->parsed()) return cmd_canonicalize(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (cat->parsed()) return cmd_catalog(o, out);
    if (nonneg->parsed()) return cmd_nonneg(o, out);
  } catch (const UsageError& e) {
    std::cerr << "polar5: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::parse_error& e) {
    print_error("MalformedJson", e.what());
    return kInvalid;
  } catch (const polar::Error& e) {
    print_error(std::string(polar::to_string(e.code())), e.what());
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    print_error("InvalidData", e.what());
    return kInvalid;
  }
  return kUsage;
}
