#pragma once

// SO(3) Coxeter polar data on 5-manifolds: the chamber is a polygon whose
// sides carry one of the three coordinate block embeddings of O(2) in SO(3).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "polar/errors.hpp"
#include "polar/lattice.hpp"

namespace polar::polygon5 {

enum class Letter : std::uint8_t { E12 = 0, E13 = 1, E23 = 2 };

std::string_view to_string(Letter l);
/// Accepts "12", "13", "23" and "E12", "E13", "E23".
std::optional<Letter> parse_letter(std::string_view s);

/// Cyclic word. Vertex i sits between sides i and i+1 (mod n).
using PolygonWord = std::vector<Letter>;

std::string format(const PolygonWord& w);

Violations validate(const PolygonWord& w);

/// Lexicographically least word under rotation, reflection and the six
/// letter permutations.
PolygonWord canonicalize(const PolygonWord& w);

/// Every class of valid words with n sides, canonical and sorted.
std::vector<PolygonWord> enumerate(std::size_t n);

struct SO3Type {
  enum class Kind { Sphere5, SumB, SumW };
  Kind kind = Kind::Sphere5;
  Int count = 0;  // k in #_k B, l in #_l W

  /// "S5", "B", "#2B", "W", "#3W"
  std::string to_string() const;

  friend bool operator==(const SO3Type&, const SO3Type&) = default;
};

struct Deletion {
  PolygonWord before;
  std::size_t position;  // index of the erased side in `before`
};

struct Decomposition {
  SO3Type type;
  std::vector<Deletion> trace;
};

/// Sides whose erasure is admissible: the side and its two neighbours are
/// pairwise distinct, and its letter occurs elsewhere.
std::vector<std::size_t> admissible_deletions(const PolygonWord& w);

/// Picks one of the admissible positions.
using DeletionChooser =
    std::function<std::size_t(const PolygonWord&, const std::vector<std::size_t>&)>;

Decomposition decompose(const PolygonWord& w);
Decomposition decompose(const PolygonWord& w, const DeletionChooser& choose);

boost::rational<Int> orbifold_euler(const PolygonWord& w);
Int section_genus(const PolygonWord& w);

/// Cuts both polygons at the given vertices and joins them. The letter pairs
/// flanking the two vertices must agree as sets.
PolygonWord fixed_point_sum(const PolygonWord& w1, std::size_t v1, const PolygonWord& w2,
                            std::size_t v2);

bool nonneg_curvature_admissible(const PolygonWord& w);

}  // namespace polar::polygon5
