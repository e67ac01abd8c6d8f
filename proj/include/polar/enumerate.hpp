#pragma once

// Bounded exhaustive enumeration of equivalence classes.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "polar/forest5.hpp"
#include "polar/polygon5.hpp"

namespace polar::enumerate {

/// All bounds are maxima. Height is the largest absolute entry of a slope
/// in the canonical form.
struct ForestBounds {
  std::size_t max_edges = 0;
  std::size_t max_components = 1;
  Int max_height = 1;
};

struct ForestRow {
  forest5::ForestData data;  // canonical
  std::size_t edges = 0;
  std::size_t components = 0;
  lattice::AbelianGroupShape pi1;
  std::optional<Int> h2_rank;      // simply connected rows only
  std::optional<bool> spin;        // simply connected rows only
  DiffeoType5 type;
  int polar_group_order = 0;
  bool orientable_section = false;
  std::optional<bool> nonneg;      // simply connected rows only
};

struct ForestTable {
  ForestBounds bounds;
  std::vector<ForestRow> rows;  // sorted by (edges, components, data)
};

/// `workers` = 0 uses the hardware concurrency. The table does not depend
/// on the worker count.
ForestTable enumerate_t2_forests(const ForestBounds& bounds, unsigned workers = 0);

/// Invariants of a single forest in table form (input need not be canonical).
ForestRow describe(const forest5::ForestData& f);

/// Unlabeled trees with the given number of edges, one per isomorphism
/// class, as parent arrays (vertex 0 is the root, parent[i] < i).
std::vector<std::vector<std::size_t>> tree_shapes(std::size_t edges);

/// Lexicographic order on forests, used for table sorting.
bool forest_less(const forest5::ForestData& a, const forest5::ForestData& b);

struct PolygonRow {
  polygon5::PolygonWord word;  // canonical
  polygon5::SO3Type type;
  Int genus = 0;
  boost::rational<Int> chi_orb;
  bool nonneg = false;
};

std::vector<PolygonRow> enumerate_so3(std::size_t n);

}  // namespace polar::enumerate
