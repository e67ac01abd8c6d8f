#pragma once

// Exact integer linear algebra on Z^2 and Z^3.
//
// Circle subgroups of a torus are written as primitive integer vectors
// ("slopes"), defined up to a global sign. Everything here is exact: all
// arithmetic is on 64-bit integers with overflow checks, and an overflow is
// reported as Error{Overflow} rather than wrapping.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/errors.hpp"

namespace polar {

using Int = std::int64_t;
using Vec2 = std::array<Int, 2>;
using Vec3 = std::array<Int, 3>;

}  // namespace polar

namespace polar::lattice {

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Floor division for a possibly negative numerator; `b` must be non-zero.
Int floor_div(Int a, Int b);

struct ExtendedGcd {
  Int gcd;  // always >= 0
  Int x;    // a*x + b*y == gcd
  Int y;
};
ExtendedGcd extended_gcd(Int a, Int b);

Int det(const Vec2& u, const Vec2& v);
Int det(const Vec3& a, const Vec3& b, const Vec3& c);

/// True iff `v` is non-zero and the gcd of its entries is 1.
bool is_primitive(std::span<const Int> v);

/// Representative of {v, -v} whose first non-zero entry is positive.
template <std::size_t N>
std::array<Int, N> canonical_sign(std::array<Int, N> v) {
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : v) y = checked_sub(0, y);
    }
    break;
  }
  return v;
}

template <std::size_t N>
bool same_class(const std::array<Int, N>& a, const std::array<Int, N>& b) {
  return canonical_sign(a) == canonical_sign(b);
}

template <std::size_t N>
Int height(const std::array<Int, N>& v) {
  Int h = 0;
  for (Int x : v) h = std::max(h, x < 0 ? checked_sub(0, x) : x);
  return h;
}

/// Reduction of a vector modulo 2, packed as a bit mask (bit i = entry i).
unsigned mod2(const Vec2& v);

/// A primitive vector taken up to sign, stored in canonical-sign form.
template <std::size_t N>
class BasicSlope {
 public:
  using Vector = std::array<Int, N>;

  /// Throws Error{NotPrimitive} for zero or non-primitive input.
  explicit BasicSlope(const Vector& v) : v_(canonical_sign(v)) {
    if (!is_primitive(v)) {
      throw Error(ErrorCode::NotPrimitive, "slope " + format(v) + " is not primitive");
    }
  }

  static std::optional<BasicSlope> from(const Vector& v) {
    if (!is_primitive(v)) return std::nullopt;
    return BasicSlope(v);
  }

  const Vector& vec() const noexcept { return v_; }
  Int operator[](std::size_t i) const { return v_[i]; }
  Int height() const { return lattice::height(v_); }

  static std::string format(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }
  std::string to_string() const { return format(v_); }

  friend auto operator<=>(const BasicSlope&, const BasicSlope&) = default;

 private:
  Vector v_;
};

using Slope = BasicSlope<2>;
using Slope3 = BasicSlope<3>;

/// Invariant-factor decomposition of a finitely generated abelian group.
/// Factors satisfy d1 | d2 | ...; a factor 0 stands for Z and sorts last;
/// factors equal to 1 are omitted, so the trivial group has no factors.
struct AbelianGroupShape {
  std::vector<Int> invariant_factors;

  bool trivial() const noexcept { return invariant_factors.empty(); }
  int free_rank() const noexcept;
  /// "trivial", "Z", "Z6", "Z x Z2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroupShape&, const AbelianGroupShape&) = default;
};

/// A 2x2 integer matrix of determinant +1 or -1, acting on column vectors.
class UnimodularMap {
 public:
  UnimodularMap() = default;
  /// Row-major entries [[a, b], [c, d]]. Throws Error{InvalidData} unless
  /// ad - bc is +1 or -1.
  UnimodularMap(Int a, Int b, Int c, Int d);

  static UnimodularMap identity() { return {}; }
  static UnimodularMap swap() { return {0, 1, 1, 0}; }
  /// (x, y) -> (x + t y, y)
  static UnimodularMap shear(Int t) { return {1, t, 0, 1}; }
  static UnimodularMap diag(Int s0, Int s1) { return {s0, 0, 0, s1}; }

  Vec2 apply(const Vec2& v) const;
  Vec2 operator()(const Vec2& v) const { return apply(v); }

  UnimodularMap operator*(const UnimodularMap& rhs) const;
  UnimodularMap inverse() const;
  Int det() const;
  const std::array<Int, 4>& entries() const noexcept { return m_; }
  std::string to_string() const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  std::array<Int, 4> m_{1, 0, 0, 1};
};

/// True iff |det(u, v)| == 1, i.e. the two circles meet trivially.
bool adjacency_ok(const Vec2& u, const Vec2& v);

/// Z^2 modulo the sublattice spanned by `vs`.
AbelianGroupShape smith_quotient(std::span<const Vec2> vs);

/// The map sending u to (1,0) and v to (0,1). Throws Error{NotAdjacent}
/// unless |det(u, v)| == 1.
UnimodularMap normalize_pair(const Vec2& u, const Vec2& v);

/// Some map sending the primitive vector u to (1,0).
UnimodularMap map_to_e1(const Vec2& u);

/// The finite, equivariant set of frames used by the canonical forms.
///
/// Let d be the least |det| over non-parallel pairs of the given slopes. The
/// result is every map g (up to an overall sign) with g u = ±(1,0) and
/// g w = (x, d), 0 <= x < d, for some ordered pair (u, w) realizing d.
/// When all slopes are parallel, a single map sending them to (1,0).
/// For any unimodular h, frames(h·S) = frames(S)·h^{-1} as sets of actions,
/// so minimizing any h-invariant key over the frames yields a canonical form.
std::vector<UnimodularMap> canonical_frames(std::span<const Vec2> slopes);

/// A 3x3 integer basis of Z^3, stored as its three columns.
using Basis3 = std::array<Vec3, 3>;

/// Completes the primitive vector w to a basis (w, c1, c2) of Z^3. The
/// complement comes from the unimodular row reduction taking w to its
/// Hermite normal form (1,0,0): it is the last two columns of the inverse.
Basis3 complete_basis(const Vec3& w);

/// Coordinates of v in Z^3/<w> w.r.t. the default complement. Linear in v.
Vec2 project_coordinates(const Vec3& w, const Vec3& v);
/// Same with an explicit complement; (w, c1, c2) must be a basis of Z^3.
Vec2 project_coordinates(const Vec3& w, const Vec3& v, const Vec3& c1, const Vec3& c2);

/// Image of the circle v in T^3 / S^1_w as a slope of T^2.
/// Throws ParallelInput if v lies in <w>, and NotPrimitive if the image is
/// not primitive (the two circles then intersect non-trivially).
Slope project_along(const Vec3& w, const Vec3& v);
Slope project_along(const Vec3& w, const Vec3& v, const Vec3& c1, const Vec3& c2);

}  // namespace polar::lattice
