#include "polar/catalog.hpp"

#include <json.hpp>

namespace polar::catalog {

namespace detail {
extern const std::string_view kCatalogJson;
}

namespace {

const nlohmann::json& document() {
  static const nlohmann::json doc = nlohmann::json::parse(detail::kCatalogJson);
  return doc;
}

CatalogEntry from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.group = j.at("group").get<std::string>();
  e.dimension = j.at("dimension").get<int>();
  e.cohomogeneity = j.at("cohomogeneity").get<int>();
  e.manifold = j.at("manifold").get<std::string>();
  e.chamber = j.at("chamber").get<std::string>();
  e.principal_isotropy = j.at("principal_isotropy").get<std::string>();
  e.polar_group = j.at("polar_group").get<std::string>();
  if (!j.at("nonneg_admissible").is_null()) e.nonneg_admissible = j["nonneg_admissible"].get<bool>();
  e.source = j.at("source").get<std::string>();
  e.note = j.value("note", "");
  return e;
}

}  // namespace

std::string_view resource() { return detail::kCatalogJson; }

int version() { return document().at("version").get<int>(); }

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> out;
    for (const auto& j : document().at("entries")) out.push_back(from_json(j));
    return out;
  }();
  return all;
}

std::vector<CatalogEntry> query(const Query& q) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries()) {
    if (q.group && e.group != *q.group) continue;
    if (q.dimension && e.dimension != *q.dimension) continue;
    if (q.nonneg && e.nonneg_admissible != q.nonneg) continue;
    out.push_back(e);
  }
  return out;
}

DiffeoType5 circle_action_type(const CircleChamberData& d) {
  if (d.boundary_components < 1) {
    throw Error(ErrorCode::InvalidChamber,
                "chamber without boundary reconstructs a non-simply-connected product");
  }
  if (!d.simply_connected) {
    throw Error(ErrorCode::InvalidChamber, "chamber is not simply connected");
  }
  if (d.b2 < 0) throw Error(ErrorCode::InvalidChamber, "negative b2");
  if (d.b2 == 0 && !d.spin) {
    throw Error(ErrorCode::InvalidChamber, "a chamber with b2 = 0 is spin");
  }
  const Int rank = lattice::checked_sub(lattice::checked_add(d.b2, d.boundary_components), 1);
  return DiffeoType5::from_rank_and_spin(rank, d.spin);
}

}  // namespace polar::catalog
