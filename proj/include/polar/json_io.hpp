#pragma once

// JSON encodings of the data kinds and of the invariant records.

#include <optional>
#include <string_view>

#include <json.hpp>

#include "polar/catalog.hpp"
#include "polar/cycle4.hpp"
#include "polar/enumerate.hpp"
#include "polar/forest5.hpp"
#include "polar/polygon5.hpp"

namespace polar::json_io {

using Json = nlohmann::ordered_json;

enum class Kind { T2Forest, SO3Polygon, T2Cycle, T3Forest, T3Cycle, S1Chamber };

/// "t2_forest_dim5", "so3_polygon_dim5", "t2_cycle_dim4", "t3_forest",
/// "t3_cycle", "s1_chamber_dim5"
std::string_view to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view s);

// Decoders throw Error{InvalidData} on a shape mismatch.
forest5::ForestData forest_from_json(const Json& j);
forest5::ForestData3 forest3_from_json(const Json& j);
polygon5::PolygonWord word_from_json(const Json& j);
cycle4::CycleData cycle_from_json(const Json& j);
cycle4::CycleData3 cycle3_from_json(const Json& j);
catalog::CircleChamberData chamber_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);

Json to_json(const forest5::ForestData& f);
Json to_json(const polygon5::PolygonWord& w);
Json to_json(const cycle4::CycleData& c);
Json to_json(const Violations& v);
Json to_json(const forest5::SectionDescriptor& d);
Json to_json(const forest5::PolarGroupZ2& g);
Json to_json(const catalog::CatalogEntry& e);
Json to_json(const enumerate::ForestRow& r);
Json to_json(const enumerate::PolygonRow& r);
Json to_json(const polygon5::Decomposition& d);
std::string format_rational(const boost::rational<Int>& q);

/// Full invariant records, as printed by `polar5 invariants`.
Json invariants(const forest5::ForestData& f);
Json invariants(const polygon5::PolygonWord& w);
Json invariants(const cycle4::CycleData& c);
Json invariants(const catalog::CircleChamberData& d);

}  // namespace polar::json_io
