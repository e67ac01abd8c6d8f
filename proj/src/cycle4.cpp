#include "polar/cycle4.hpp"

#include <algorithm>
#include <optional>

#include "polar/detail/splice.hpp"

namespace polar::cycle4 {

namespace {

using lattice::canonical_sign;

void require_valid(const CycleData& c) {
  const Violations v = validate(c);
  if (!v.empty()) throw Error(ErrorCode::InvalidData, v.front().at + ": " + v.front().message);
}

const Vec2& at(const CycleData& c, std::size_t i) { return c.slopes[i % c.slopes.size()]; }

}  // namespace

Violations validate(const CycleData& c) {
  Violations out;
  const std::size_t n = c.slopes.size();
  if (n < 2) {
    out.push_back({"cycle", "length < 2"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!lattice::is_primitive(c.slopes[i])) {
      out.push_back({"slope " + std::to_string(i),
                     "not primitive: " + lattice::Slope::format(c.slopes[i])});
    }
  }
  // The two vertices of a bigon join the same pair; check it once.
  const std::size_t pairs = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Vec2& u = c.slopes[i];
    const Vec2& v = at(c, i + 1);
    if (!lattice::is_primitive(u) || !lattice::is_primitive(v)) continue;
    const Int d = lattice::det(u, v);
    if (d != 1 && d != -1) {
      out.push_back({"vertex " + std::to_string(i), "determinant " + std::to_string(d < 0 ? -d : d)});
    }
  }
  return out;
}

CycleData canonicalize(const CycleData& c) {
  require_valid(c);
  const std::size_t n = c.slopes.size();
  std::optional<std::vector<Vec2>> best;
  std::vector<Vec2> cand(n);
  for (const auto& g : lattice::canonical_frames(c.slopes)) {
    std::vector<Vec2> image;
    for (const auto& s : c.slopes) image.push_back(canonical_sign(g(s)));
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
          cand[i] = image[reflect ? (r + n - i) % n : (r + i) % n];
        }
        if (!best || cand < *best) best = cand;
      }
    }
  }
  return CycleData{*best};
}

Int b2(const CycleData& c) {
  require_valid(c);
  return static_cast<Int>(c.slopes.size()) - 2;
}

bool is_spin(const CycleData& c) {
  require_valid(c);
  const std::size_t n = c.slopes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lattice::mod2(at(c, i + n - 1)) != lattice::mod2(at(c, i + 1))) return false;
  }
  return true;
}

std::string BasicType::to_string() const {
  switch (kind) {
    case Kind::S4: return "S4";
    case Kind::CP2_or_conjugate: return "CP2_or_conjugate";
    case Kind::S2xS2: return "S2xS2";
    case Kind::CP2_sum_minus_CP2: return "CP2#-CP2";
    case Kind::Composite: return "Composite{" + std::to_string(sides) + "}";
  }
  return "?";
}

BasicType recognize_basic(const CycleData& c) {
  require_valid(c);
  const std::size_t n = c.slopes.size();
  BasicType t;
  t.sides = n;
  switch (n) {
    case 2: t.kind = BasicType::Kind::S4; break;
    case 3: t.kind = BasicType::Kind::CP2_or_conjugate; break;
    case 4:
      t.kind = is_spin(c) ? BasicType::Kind::S2xS2 : BasicType::Kind::CP2_sum_minus_CP2;
      break;
    default: t.kind = BasicType::Kind::Composite; break;
  }
  return t;
}

CycleData fixed_point_sum(const CycleData& c1, std::size_t v1, const CycleData& c2,
                          std::size_t v2) {
  require_valid(c1);
  require_valid(c2);
  if (v1 >= c1.slopes.size() || v2 >= c2.slopes.size()) {
    throw Error(ErrorCode::InvalidData, "vertex index out of range");
  }
  auto pair = [](const CycleData& c, std::size_t v) {
    const Vec2 a = canonical_sign(at(c, v));
    const Vec2 b = canonical_sign(at(c, v + 1));
    return a < b ? std::pair<Vec2, Vec2>{a, b} : std::pair<Vec2, Vec2>{b, a};
  };
  if (pair(c1, v1) != pair(c2, v2)) {
    throw Error(ErrorCode::SliceMismatch,
                "vertex slices differ: {" + lattice::Slope::format(at(c1, v1)) + "," +
                    lattice::Slope::format(at(c1, v1 + 1)) + "} vs {" +
                    lattice::Slope::format(at(c2, v2)) + "," +
                    lattice::Slope::format(at(c2, v2 + 1)) + "}");
  }
  CycleData out{detail::splice_cycles(c1.slopes, v1, c2.slopes, v2, [](const Vec2& a, const Vec2& b) {
    return lattice::same_class(a, b);
  })};
  require_valid(out);
  return out;
}

CycleData quotient(const CycleData3& c, const Vec3& w) {
  CycleData out;
  for (const auto& s : c.slopes) out.slopes.push_back(lattice::project_along(w, s).vec());
  require_valid(out);
  return out;
}

}  // namespace polar::cycle4
