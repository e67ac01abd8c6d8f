#include "polar/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polar::lattice {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + op);
}

std::uint64_t magnitude(Int x) {
  return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

using Matrix3 = std::array<std::array<Int, 3>, 3>;  // row-major

Vec3 mul(const Matrix3& m, const Vec3& v) {
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc = checked_add(acc, checked_mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

// Inverse of the matrix whose columns are `basis`; requires det = ±1.
Matrix3 inverse_of_columns(const Basis3& basis) {
  const Int d = det(basis[0], basis[1], basis[2]);
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::InvalidData,
                "complement does not complete the circle to a basis of Z^3 (det " +
                    std::to_string(d) + ")");
  }
  // Row i of the inverse is the cross product of the other two columns,
  // divided by the determinant.
  auto cross = [](const Vec3& a, const Vec3& b) {
    return Vec3{checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
                checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
                checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
  };
  Matrix3 inv{};
  const std::array<Vec3, 3> rows{cross(basis[1], basis[2]), cross(basis[2], basis[0]),
                                 cross(basis[0], basis[1])};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) inv[i][j] = checked_mul(rows[i][j], d);
  }
  return inv;
}

Slope to_projected_slope(const Vec3& w, const Vec3& v, const Vec2& image) {
  if (image == Vec2{0, 0}) {
    throw Error(ErrorCode::ParallelInput, "circle " + Slope3::format(v) +
                                              " lies in the quotient circle " + Slope3::format(w));
  }
  if (!is_primitive(image)) {
    throw Error(ErrorCode::NotPrimitive,
                "image " + Slope::format(image) + " of " + Slope3::format(v) +
                    " is not primitive: the circle meets " + Slope3::format(w));
  }
  return Slope(image);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked_sub(0, old_r), checked_sub(0, old_s), checked_sub(0, old_t)};
  return {old_r, old_s, old_t};
}

Int det(const Vec2& u, const Vec2& v) {
  return checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]));
}

Int det(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Columns a, b, c.
  const Int m0 = checked_sub(checked_mul(b[1], c[2]), checked_mul(b[2], c[1]));
  const Int m1 = checked_sub(checked_mul(b[0], c[2]), checked_mul(b[2], c[0]));
  const Int m2 = checked_sub(checked_mul(b[0], c[1]), checked_mul(b[1], c[0]));
  return checked_add(checked_sub(checked_mul(a[0], m0), checked_mul(a[1], m1)),
                     checked_mul(a[2], m2));
}

bool is_primitive(std::span<const Int> v) {
  std::uint64_t g = 0;
  for (Int x : v) g = std::gcd(g, magnitude(x));
  return g == 1;
}

unsigned mod2(const Vec2& v) {
  return static_cast<unsigned>(v[0] & 1) | (static_cast<unsigned>(v[1] & 1) << 1);
}

int AbelianGroupShape::free_rank() const noexcept {
  return static_cast<int>(std::count(invariant_factors.begin(), invariant_factors.end(), Int{0}));
}

std::string AbelianGroupShape::to_string() const {
  if (trivial()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += " x ";
    s += invariant_factors[i] == 0 ? "Z" : "Z" + std::to_string(invariant_factors[i]);
  }
  return s;
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d) : m_{a, b, c, d} {
  const Int dt = det();
  if (dt != 1 && dt != -1) {
    throw Error(ErrorCode::InvalidData, "matrix " + to_string() + " is not unimodular");
  }
}

Int UnimodularMap::det() const {
  return checked_sub(checked_mul(m_[0], m_[3]), checked_mul(m_[1], m_[2]));
}

Vec2 UnimodularMap::apply(const Vec2& v) const {
  return {checked_add(checked_mul(m_[0], v[0]), checked_mul(m_[1], v[1])),
          checked_add(checked_mul(m_[2], v[0]), checked_mul(m_[3], v[1]))};
}

UnimodularMap UnimodularMap::operator*(const UnimodularMap& r) const {
  const auto& a = m_;
  const auto& b = r.m_;
  return {checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[2])),
          checked_add(checked_mul(a[0], b[1]), checked_mul(a[1], b[3])),
          checked_add(checked_mul(a[2], b[0]), checked_mul(a[3], b[2])),
          checked_add(checked_mul(a[2], b[1]), checked_mul(a[3], b[3]))};
}

UnimodularMap UnimodularMap::inverse() const {
  const Int d = det();  // ±1, so dividing by d is multiplying by d
  return {checked_mul(m_[3], d), checked_mul(-m_[1], d), checked_mul(-m_[2], d),
          checked_mul(m_[0], d)};
}

std::string UnimodularMap::to_string() const {
  std::ostringstream os;
  os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
  return os.str();
}

bool adjacency_ok(const Vec2& u, const Vec2& v) {
  const Int d = det(u, v);
  return d == 1 || d == -1;
}

AbelianGroupShape smith_quotient(std::span<const Vec2> vs) {
  // For a 2 x k matrix the invariant factors are d1 = gcd of the entries and
  // d1*d2 = gcd of the 2x2 minors.
  Int d1 = 0;
  for (const Vec2& v : vs) d1 = std::gcd(d1, std::gcd(v[0], v[1]));
  Int minors = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) minors = std::gcd(minors, det(vs[i], vs[j]));
  }
  std::vector<Int> diagonal;
  if (d1 == 0) {
    diagonal = {0, 0};
  } else if (minors == 0) {
    diagonal = {d1, 0};
  } else {
    diagonal = {d1, minors / d1};
  }
  AbelianGroupShape shape;
  for (Int d : diagonal) {
    if (d != 1) shape.invariant_factors.push_back(d);
  }
  return shape;
}

UnimodularMap normalize_pair(const Vec2& u, const Vec2& v) {
  const Int d = det(u, v);
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::NotAdjacent, "slopes " + Slope::format(u) + " and " + Slope::format(v) +
                                            " have determinant " + std::to_string(d));
  }
  // Inverse of the matrix with columns u, v.
  return UnimodularMap(u[0], v[0], u[1], v[1]).inverse();
}

UnimodularMap map_to_e1(const Vec2& u) {
  if (!is_primitive(u)) {
    throw Error(ErrorCode::NotPrimitive, "slope " + Slope::format(u) + " is not primitive");
  }
  // x*u0 + y*u1 = 1, so the rows (x, y) and (-u1, u0) form the map.
  const auto [g, x, y] = extended_gcd(u[0], u[1]);
  (void)g;
  return {x, y, -u[1], u[0]};
}

std::vector<UnimodularMap> canonical_frames(std::span<const Vec2> slopes) {
  std::vector<UnimodularMap> frames;
  if (slopes.empty()) return frames;

  Int least = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      Int d = det(slopes[i], slopes[j]);
      if (d < 0) d = checked_sub(0, d);
      if (d != 0 && (least == 0 || d < least)) least = d;
    }
  }
  if (least == 0) {
    frames.push_back(map_to_e1(slopes.front()));
    return frames;
  }

  auto add = [&frames](UnimodularMap g) {
    // g and -g act identically on slopes; keep one representative.
    const auto& e = g.entries();
    const Int lead = e[0] != 0 ? e[0] : e[1];
    if (lead < 0) g = UnimodularMap::diag(-1, -1) * g;
    if (std::find(frames.begin(), frames.end(), g) == frames.end()) frames.push_back(g);
  };

  static const std::array<UnimodularMap, 4> signs{
      UnimodularMap::diag(1, 1), UnimodularMap::diag(-1, 1), UnimodularMap::diag(1, -1),
      UnimodularMap::diag(-1, -1)};
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const UnimodularMap base = map_to_e1(slopes[i]);
    for (std::size_t j = 0; j < slopes.size(); ++j) {
      if (i == j) continue;
      const Int d = det(slopes[i], slopes[j]);
      if (d != least && d != -least) continue;
      for (const auto& s : signs) {
        const UnimodularMap g = s * base;
        const Vec2 w = g(slopes[j]);
        if (w[1] <= 0) continue;
        add(UnimodularMap::shear(-floor_div(w[0], w[1])) * g);
      }
    }
  }
  return frames;
}

Basis3 complete_basis(const Vec3& w) {
  if (!is_primitive(w)) {
    throw Error(ErrorCode::NotPrimitive, "circle " + Slope3::format(w) + " is not primitive");
  }
  // Row-reduce w to (1,0,0) with unimodular row operations, tracking the
  // transform V (so V w = e1). The basis is the columns of V^{-1}.
  Matrix3 v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 x = w;
  for (std::size_t i = 1; i < 3; ++i) {
    if (x[i] == 0) continue;
    const auto [g, p, q] = extended_gcd(x[0], x[i]);
    const Int a = x[0] / g;
    const Int b = x[i] / g;
    // [[p, q], [-b, a]] has determinant p a + q b = 1.
    const auto row0 = v[0];
    const auto rowi = v[i];
    for (std::size_t j = 0; j < 3; ++j) {
      v[0][j] = checked_add(checked_mul(p, row0[j]), checked_mul(q, rowi[j]));
      v[i][j] = checked_add(checked_mul(-b, row0[j]), checked_mul(a, rowi[j]));
    }
    x[0] = g;
    x[i] = 0;
  }
  if (x[0] < 0) {
    for (Int& e : v[0]) e = -e;
  }
  // Columns of V^{-1}: V is unimodular, so the inverse is its adjugate
  // times det V; reuse inverse_of_columns on the transpose.
  const Basis3 transposed{Vec3{v[0][0], v[1][0], v[2][0]}, Vec3{v[0][1], v[1][1], v[2][1]},
                          Vec3{v[0][2], v[1][2], v[2][2]}};
  const Matrix3 inv = inverse_of_columns(transposed);  // = (V^T)^{-1} = (V^{-1})^T
  return {Vec3{inv[0][0], inv[1][0], inv[2][0]}, Vec3{inv[0][1], inv[1][1], inv[2][1]},
          Vec3{inv[0][2], inv[1][2], inv[2][2]}};
}

Vec2 project_coordinates(const Vec3& w, const Vec3& v) {
  const Basis3 basis = complete_basis(w);
  return project_coordinates(w, v, basis[1], basis[2]);
}

Vec2 project_coordinates(const Vec3& w, const Vec3& v, const Vec3& c1, const Vec3& c2) {
  const Vec3 coords = mul(inverse_of_columns({w, c1, c2}), v);
  return {coords[1], coords[2]};
}

Slope project_along(const Vec3& w, const Vec3& v) {
  return to_projected_slope(w, v, project_coordinates(w, v));
}

Slope project_along(const Vec3& w, const Vec3& v, const Vec3& c1, const Vec3& c2) {
  return to_projected_slope(w, v, project_coordinates(w, v, c1, c2));
}

}  // namespace polar::lattice
