#include "polar/json_io.hpp"

#include <string>

namespace polar::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidData, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<Int>();
}

template <std::size_t N>
std::array<Int, N> vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) {
    bad(where + ": expected an array of " + std::to_string(N) + " integers");
  }
  std::array<Int, N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i] = integer(j[i], where);
  return v;
}

template <typename V>
forest5::BasicForest<V> basic_forest_from_json(const Json& j) {
  const Json& comps = field(j, "components");
  if (!comps.is_array()) bad("\"components\" must be an array");
  forest5::BasicForest<V> f;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string where = "component " + std::to_string(c);
    forest5::BasicTree<V> t;
    const Json& slopes = field(comps[c], "slopes");
    if (!slopes.is_array()) bad(where + ": \"slopes\" must be an array");
    for (const auto& s : slopes) t.slopes.push_back(vec_from_json<std::tuple_size_v<V>>(s, where));
    if (comps[c].contains("edges")) {
      const Json& edges = comps[c]["edges"];
      if (!edges.is_array()) bad(where + ": \"edges\" must be an array");
      for (const auto& e : edges) {
        const auto p = vec_from_json<2>(e, where + " edge");
        if (p[0] < 0 || p[1] < 0) bad(where + ": negative vertex index");
        t.edges.push_back({static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1])});
      }
    }
    f.components.push_back(std::move(t));
  }
  return f;
}

template <typename V>
Json slopes_json(const std::vector<V>& slopes) {
  Json a = Json::array();
  for (const auto& s : slopes) a.push_back(s);
  return a;
}

Json optional_json(const auto& o) { return o ? Json(*o) : Json(nullptr); }

}  // namespace

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::T2Forest: return "t2_forest_dim5";
    case Kind::SO3Polygon: return "so3_polygon_dim5";
    case Kind::T2Cycle: return "t2_cycle_dim4";
    case Kind::T3Forest: return "t3_forest";
    case Kind::T3Cycle: return "t3_cycle";
    case Kind::S1Chamber: return "s1_chamber_dim5";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::T2Forest, Kind::SO3Polygon, Kind::T2Cycle, Kind::T3Forest, Kind::T3Cycle,
                 Kind::S1Chamber}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

forest5::ForestData forest_from_json(const Json& j) { return basic_forest_from_json<Vec2>(j); }

forest5::ForestData3 forest3_from_json(const Json& j) { return basic_forest_from_json<Vec3>(j); }

polygon5::PolygonWord word_from_json(const Json& j) {
  const Json& word = field(j, "word");
  if (!word.is_array()) bad("\"word\" must be an array");
  polygon5::PolygonWord w;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word[i].is_string()) bad("word position " + std::to_string(i) + ": expected a string");
    const auto l = polygon5::parse_letter(word[i].get<std::string>());
    if (!l) bad("word position " + std::to_string(i) + ": unknown letter " + word[i].dump());
    w.push_back(*l);
  }
  return w;
}

cycle4::CycleData cycle_from_json(const Json& j) {
  const Json& slopes = field(j, "slopes");
  if (!slopes.is_array()) bad("\"slopes\" must be an array");
  cycle4::CycleData c;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    c.slopes.push_back(vec_from_json<2>(slopes[i], "slope " + std::to_string(i)));
  }
  return c;
}

cycle4::CycleData3 cycle3_from_json(const Json& j) {
  const Json& slopes = field(j, "slopes");
  if (!slopes.is_array()) bad("\"slopes\" must be an array");
  cycle4::CycleData3 c;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    c.slopes.push_back(vec_from_json<3>(slopes[i], "slope " + std::to_string(i)));
  }
  return c;
}

catalog::CircleChamberData chamber_from_json(const Json& j) {
  catalog::CircleChamberData d;
  d.b2 = integer(field(j, "b2"), "b2");
  const Json& spin = field(j, "spin");
  if (!spin.is_boolean()) bad("\"spin\" must be a boolean");
  d.spin = spin.get<bool>();
  d.boundary_components = integer(field(j, "boundary_components"), "boundary_components");
  if (j.contains("simply_connected")) {
    if (!j["simply_connected"].is_boolean()) bad("\"simply_connected\" must be a boolean");
    d.simply_connected = j["simply_connected"].get<bool>();
  }
  return d;
}

Vec3 vec3_from_json(const Json& j) { return vec_from_json<3>(j, "circle"); }

Json to_json(const forest5::ForestData& f) {
  Json comps = Json::array();
  for (const auto& t : f.components) {
    Json edges = Json::array();
    for (const auto& e : t.edges) edges.push_back(e);
    comps.push_back(Json{{"slopes", slopes_json(t.slopes)}, {"edges", std::move(edges)}});
  }
  return Json{{"kind", to_string(Kind::T2Forest)}, {"components", std::move(comps)}};
}

Json to_json(const polygon5::PolygonWord& w) {
  Json word = Json::array();
  for (auto l : w) word.push_back(polygon5::to_string(l));
  return Json{{"kind", to_string(Kind::SO3Polygon)}, {"word", std::move(word)}};
}

Json to_json(const cycle4::CycleData& c) {
  return Json{{"kind", to_string(Kind::T2Cycle)}, {"slopes", slopes_json(c.slopes)}};
}

Json to_json(const Violations& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(Json{{"at", x.at}, {"message", x.message}});
  return a;
}

Json to_json(const forest5::SectionDescriptor& d) {
  Json summands = Json::array();
  for (auto s : d.summands) summands.push_back(forest5::to_string(s));
  Json joins = Json::array();
  for (const auto& j : d.joins) joins.push_back(Json{{"n1", j.n1}, {"n2", j.n2}, {"m", j.m}});
  return Json{{"expression", d.to_string()},
              {"summands", std::move(summands)},
              {"extra_zero_surgeries", d.extra_zero_surgeries},
              {"orientable", d.orientable},
              {"nonorientable_surgery", d.nonorientable_surgery},
              {"joins", std::move(joins)}};
}

Json to_json(const forest5::PolarGroupZ2& g) {
  Json gens = Json::array();
  for (unsigned r : g.generators) gens.push_back(Json::array({r & 1u, (r >> 1) & 1u}));
  return Json{{"order", g.order}, {"generators", std::move(gens)}};
}

Json to_json(const catalog::CatalogEntry& e) {
  return Json{{"id", e.id},
              {"group", e.group},
              {"dimension", e.dimension},
              {"cohomogeneity", e.cohomogeneity},
              {"manifold", e.manifold},
              {"chamber", e.chamber},
              {"principal_isotropy", e.principal_isotropy},
              {"polar_group", e.polar_group},
              {"nonneg_admissible", optional_json(e.nonneg_admissible)},
              {"source", e.source},
              {"note", e.note}};
}

Json to_json(const enumerate::ForestRow& r) {
  return Json{{"edges", r.edges},
              {"components", r.components},
              {"pi1", r.pi1.to_string()},
              {"h2_rank", optional_json(r.h2_rank)},
              {"spin", optional_json(r.spin)},
              {"type", r.type.to_string()},
              {"polar_group_order", r.polar_group_order},
              {"orientable_section", r.orientable_section},
              {"nonneg", optional_json(r.nonneg)},
              {"data", to_json(r.data)}};
}

std::string format_rational(const boost::rational<Int>& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json to_json(const enumerate::PolygonRow& r) {
  return Json{{"type", r.type.to_string()},
              {"genus", r.genus},
              {"chi_orb", format_rational(r.chi_orb)},
              {"nonneg", r.nonneg},
              {"data", to_json(r.word)}};
}

Json to_json(const polygon5::Decomposition& d) {
  Json trace = Json::array();
  for (const auto& del : d.trace) {
    trace.push_back(Json{{"word", polygon5::format(del.before)}, {"erase", del.position}});
  }
  return Json{{"type", d.type.to_string()}, {"trace", std::move(trace)}};
}

Json invariants(const forest5::ForestData& f) {
  const auto pi1 = forest5::fundamental_group(f);
  const bool sc = pi1.trivial();
  Json j;
  j["pi1"] = pi1.to_string();
  j["h2_rank"] = sc ? Json(forest5::h2_rank(f)) : Json(nullptr);
  j["spin"] = sc ? Json(forest5::is_spin(f)) : Json(nullptr);
  j["type"] = forest5::diffeo_type(f).to_string();
  j["orientable_section"] = forest5::section_orientable(f);
  j["polar_group"] = to_json(forest5::polar_group(f));
  j["section"] = to_json(forest5::section_descriptor(f));
  j["nonneg"] = sc ? Json(forest5::nonneg_curvature_admissible(f)) : Json(nullptr);
  j["canonical"] = to_json(forest5::canonicalize(f));
  return j;
}

Json invariants(const polygon5::PolygonWord& w) {
  const auto d = polygon5::decompose(w);
  Json j;
  j["type"] = d.type.to_string();
  j["sides"] = w.size();
  j["genus"] = polygon5::section_genus(w);
  j["chi_orb"] = format_rational(polygon5::orbifold_euler(w));
  j["nonneg"] = polygon5::nonneg_curvature_admissible(w);
  j["decomposition"] = to_json(d);
  j["canonical"] = to_json(polygon5::canonicalize(w));
  return j;
}

Json invariants(const cycle4::CycleData& c) {
  Json j;
  j["b2"] = cycle4::b2(c);
  j["spin"] = cycle4::is_spin(c);
  j["basic"] = cycle4::recognize_basic(c).to_string();
  j["canonical"] = to_json(cycle4::canonicalize(c));
  return j;
}

Json invariants(const catalog::CircleChamberData& d) {
  const auto t = catalog::circle_action_type(d);
  Json j;
  j["type"] = t.to_string();
  j["h2_rank"] = t.h2_rank();
  j["spin"] = d.spin;
  return j;
}

}  // namespace polar::json_io
