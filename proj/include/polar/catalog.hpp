#pragma once

// The classification tables as data, plus the closed form for polar circle
// actions of cohomogeneity n-1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polar/manifold.hpp"

namespace polar::catalog {

struct CatalogEntry {
  std::string id;
  std::string group;
  int dimension = 0;
  int cohomogeneity = 0;
  std::string manifold;
  std::string chamber;
  std::string principal_isotropy;
  std::string polar_group;
  std::optional<bool> nonneg_admissible;  // unset where no curvature result applies
  std::string source;
  std::string note;
};

struct Query {
  std::optional<std::string> group = std::nullopt;
  std::optional<int> dimension = std::nullopt;
  std::optional<bool> nonneg = std::nullopt;
};

/// The embedded JSON resource.
std::string_view resource();
int version();
const std::vector<CatalogEntry>& entries();
std::vector<CatalogEntry> query(const Query& q);

struct CircleChamberData {
  Int b2 = 0;                     // rank of H_2 of the chamber N
  bool spin = true;               // of N
  Int boundary_components = 1;    // p
  bool simply_connected = true;   // of N
};

/// rank H_2(M) = b2 + p - 1, and M is spin iff N is. Throws
/// Error{InvalidChamber} for p < 1 or a non-simply-connected chamber.
DiffeoType5 circle_action_type(const CircleChamberData& d);

}  // namespace polar::catalog
