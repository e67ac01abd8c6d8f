#pragma once

// T^2 Coxeter polar data on simply connected 4-manifolds: the orbit space is
// a polygon and its sides carry circle slopes, cyclically adjacent ones
// spanning Z^2.

#include <cstddef>
#include <string>
#include <vector>

#include "polar/errors.hpp"
#include "polar/lattice.hpp"

namespace polar::cycle4 {

struct CycleData {
  std::vector<Vec2> slopes;  // vertex i sits between slopes i and i+1

  friend bool operator==(const CycleData&, const CycleData&) = default;
};

struct CycleData3 {
  std::vector<Vec3> slopes;
};

Violations validate(const CycleData& c);

/// Least representative under GL(2,Z), per-slope sign, rotation and
/// reflection.
CycleData canonicalize(const CycleData& c);

Int b2(const CycleData& c);
bool is_spin(const CycleData& c);

struct BasicType {
  enum class Kind { S4, CP2_or_conjugate, S2xS2, CP2_sum_minus_CP2, Composite };
  Kind kind = Kind::S4;
  std::size_t sides = 0;

  std::string to_string() const;

  friend bool operator==(const BasicType&, const BasicType&) = default;
};

BasicType recognize_basic(const CycleData& c);

/// Splices the two polygons at the given vertices. The slope pairs flanking
/// the vertices must agree as unordered sign classes.
CycleData fixed_point_sum(const CycleData& c1, std::size_t v1, const CycleData& c2,
                          std::size_t v2);

/// Image of T^3 data under T^3 -> T^3 / S^1_w (default complement).
CycleData quotient(const CycleData3& c, const Vec3& w);

}  // namespace polar::cycle4
