#pragma once

// Independent oracles and random generators shared by the test binaries.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polar/forest5.hpp"
#include "polar/json_io.hpp"
#include "polar/lattice.hpp"
#include "polar/polygon5.hpp"

namespace support {

using polar::Int;
using polar::Vec2;
using polar::forest5::ForestData;
using polar::forest5::Tree;
using polar::lattice::UnimodularMap;
using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline std::size_t index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Int gcd2(Int a, Int b) { return std::gcd(a, b); }

inline Int det2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

// Words in swap, diag(-1,1) and shear(+-1).
inline UnimodularMap random_unimodular(Rng& rng, int length = 8) {
  UnimodularMap g;
  for (int i = 0; i < length; ++i) {
    switch (index(rng, 4)) {
      case 0: g = UnimodularMap::swap() * g; break;
      case 1: g = UnimodularMap::diag(-1, 1) * g; break;
      case 2: g = UnimodularMap::shear(1) * g; break;
      default: g = UnimodularMap::shear(-1) * g; break;
    }
  }
  return g;
}

inline Vec2 random_primitive(Rng& rng, Int bound) {
  for (;;) {
    Vec2 v{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
    if (gcd2(v[0], v[1]) == 1) return v;
  }
}

// A slope w with det(u, w) = 1, found with a Bezout pair for u.
inline Vec2 random_adjacent(Rng& rng, const Vec2& u, Int spread) {
  Int old_r = u[0], r = u[1], old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  // u0*old_s + u1*old_t = old_r = +-1
  Vec2 c{-old_t * old_r, old_s * old_r};
  const Int k = uniform(rng, -spread, spread);
  return {c[0] + k * u[0], c[1] + k * u[1]};
}

inline Tree random_tree(Rng& rng, std::size_t edges, Int spread = 2) {
  Tree t;
  t.slopes.push_back(random_primitive(rng, 2));
  for (std::size_t i = 1; i <= edges; ++i) {
    const std::size_t p = index(rng, i);
    t.slopes.push_back(random_adjacent(rng, t.slopes[p], spread));
    t.edges.push_back({p, i});
  }
  return t;
}

inline ForestData random_forest(Rng& rng, std::size_t max_edges, std::size_t max_components) {
  ForestData f;
  const std::size_t c = 1 + index(rng, max_components);
  std::size_t budget = max_edges;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t e = budget == 0 ? 0 : index(rng, budget + 1);
    budget -= e;
    f.components.push_back(random_tree(rng, e));
  }
  return f;
}

// A random element of GL(2,Z) x relabeling x per-vertex sign applied to f.
inline ForestData random_symmetry(Rng& rng, const ForestData& f) {
  const UnimodularMap g = random_unimodular(rng);
  ForestData out;
  for (const auto& t : f.components) {
    const std::size_t n = t.slopes.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Tree u;
    u.slopes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 s = g(t.slopes[i]);
      if (index(rng, 2)) s = {-s[0], -s[1]};
      u.slopes[perm[i]] = s;
    }
    for (const auto& e : t.edges) {
      if (index(rng, 2)) {
        u.edges.push_back({perm[e[0]], perm[e[1]]});
      } else {
        u.edges.push_back({perm[e[1]], perm[e[0]]});
      }
    }
    std::shuffle(u.edges.begin(), u.edges.end(), rng);
    out.components.push_back(std::move(u));
  }
  std::shuffle(out.components.begin(), out.components.end(), rng);
  return out;
}

// Z^2 modulo the lattice spanned by `slopes`, by counting cosets in (Z/D)^2
// with D = 2|det| of an independent pair, so that D Z^2 lies in the lattice.
inline std::vector<Int> coset_oracle(const std::vector<Vec2>& slopes) {
  Int d = 0;
  for (std::size_t i = 0; i < slopes.size() && d == 0; ++i) {
    for (std::size_t j = i + 1; j < slopes.size() && d == 0; ++j) d = std::abs(det2(slopes[i], slopes[j]));
  }
  if (d == 0) return {0};
  const Int D = 2 * d;
  auto key = [D](Int x, Int y) {
    return static_cast<std::size_t>(((x % D + D) % D) * D + ((y % D + D) % D));
  };
  std::vector<char> in(static_cast<std::size_t>(D * D), 0);
  std::vector<std::pair<Int, Int>> queue{{0, 0}};
  in[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& s : slopes) {
      for (int sign : {1, -1}) {
        const Int x = (queue[q].first + sign * s[0] % D + D) % D;
        const Int y = (queue[q].second + sign * s[1] % D + D) % D;
        if (!in[key(x, y)]) {
          in[key(x, y)] = 1;
          queue.push_back({x, y});
        }
      }
    }
  }
  const Int order = D * D / static_cast<Int>(queue.size());
  Int exponent = 1;
  while (!(in[key(exponent, 0)] && in[key(0, exponent)])) ++exponent;
  std::vector<Int> factors;
  if (order / exponent > 1) factors.push_back(order / exponent);
  if (exponent > 1) factors.push_back(exponent);
  return factors;
}

// Number of D_n x S_3 orbits on valid cyclic words of length n, by Burnside.
inline std::size_t necklace_oracle(std::size_t n) {
  std::vector<std::vector<int>> words;
  std::vector<int> w(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (n == 2 ? w[0] != w[1] : w[n - 1] != w[0]) words.push_back(w);
      return;
    }
    for (int l = 0; l < 3; ++l) {
      if (i > 0 && l == w[i - 1]) continue;
      w[i] = l;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t fixed = 0;
  for (const auto& word : words) {
    for (const auto& sigma : perms) {
      for (int reflect = 0; reflect < 2; ++reflect) {
        for (std::size_t r = 0; r < n; ++r) {
          bool same = true;
          for (std::size_t i = 0; i < n && same; ++i) {
            const std::size_t j = reflect ? (r + n - i) % n : (r + i) % n;
            same = sigma[static_cast<std::size_t>(word[j])] == word[i];
          }
          fixed += same;
        }
      }
    }
  }
  return fixed / (12 * n);
}

inline polar::polygon5::PolygonWord random_polygon_symmetry(Rng& rng,
                                                            const polar::polygon5::PolygonWord& w) {
  using polar::polygon5::Letter;
  std::array<int, 3> sigma{0, 1, 2};
  std::shuffle(sigma.begin(), sigma.end(), rng);
  const std::size_t n = w.size();
  const std::size_t r = index(rng, n);
  const bool reflect = index(rng, 2);
  polar::polygon5::PolygonWord out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = reflect ? (r + n - i) % n : (r + i) % n;
    out[i] = static_cast<Letter>(sigma[static_cast<std::size_t>(w[j])]);
  }
  return out;
}

inline std::string key(const ForestData& f) { return polar::json_io::to_json(f).dump(); }

// Every invariant of a forest in one comparable string. The polar group
// generators are residues in the input frame, so only the order is kept.
inline std::string forest_fingerprint(const ForestData& f) {
  auto j = polar::json_io::invariants(f);
  j["polar_group"].erase("generators");
  return j.dump();
}

inline std::string polygon_fingerprint(const polar::polygon5::PolygonWord& w) {
  auto j = polar::json_io::invariants(w);
  j["decomposition"].erase("trace");
  return j.dump();
}

// Builds tree t by fixed-point sums of 2-edge paths attached in a random
// order. Returns the assembled forest; `rank_ok` records whether each step
// added exactly the piece's rank.
struct Assembly {
  ForestData forest;
  bool rank_additive = true;
};

inline Assembly assemble_tree(Rng& rng, const Tree& t) {
  namespace f5 = polar::forest5;
  const std::size_t n = t.slopes.size();
  const std::size_t m = t.edges.size();
  if (m < 2) return {ForestData{{t}}, true};
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < m; ++e) {
    incident[t.edges[e][0]].push_back(e);
    incident[t.edges[e][1]].push_back(e);
  }
  auto other = [&](std::size_t e, std::size_t v) {
    return t.edges[e][0] == v ? t.edges[e][1] : t.edges[e][0];
  };

  std::vector<std::optional<std::size_t>> vpos(n), epos(m);
  std::size_t e0 = index(rng, m);
  std::vector<std::size_t> ends{t.edges[e0][0], t.edges[e0][1]};
  std::shuffle(ends.begin(), ends.end(), rng);
  std::size_t shared = incident[ends[0]].size() > 1 ? ends[0] : ends[1];
  std::vector<std::size_t> nbr;
  for (std::size_t e : incident[shared]) {
    if (e != e0) nbr.push_back(e);
  }
  const std::size_t e1 = nbr[index(rng, nbr.size())];
  const std::size_t x = other(e0, shared), y = other(e1, shared);
  Assembly a;
  a.forest = f5::path({t.slopes[x], t.slopes[shared], t.slopes[y]});
  vpos[x] = 0;
  vpos[shared] = 1;
  vpos[y] = 2;
  epos[e0] = 0;
  epos[e1] = 1;
  for (std::size_t done = 2; done < m; ++done) {
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (new edge, host edge)
    for (std::size_t e = 0; e < m; ++e) {
      if (epos[e]) continue;
      for (std::size_t end : {t.edges[e][0], t.edges[e][1]}) {
        if (!vpos[end]) continue;
        for (std::size_t h : incident[end]) {
          if (epos[h]) options.push_back({e, h});
        }
      }
    }
    const auto [e, h] = options[index(rng, options.size())];
    const std::size_t s = vpos[t.edges[e][0]] ? t.edges[e][0] : t.edges[e][1];
    const std::size_t z = other(e, s), p = other(h, s);
    const ForestData piece = f5::path({t.slopes[p], t.slopes[s], t.slopes[z]});
    const Int before = f5::h2_rank(a.forest);
    const std::size_t new_vertex = a.forest.components[0].slopes.size();
    const std::size_t new_edge = a.forest.components[0].edges.size();
    a.forest = f5::fixed_point_sum(a.forest, {0, *epos[h]}, piece, {0, 0});
    if (f5::h2_rank(a.forest) != before + f5::h2_rank(piece)) a.rank_additive = false;
    vpos[z] = new_vertex;
    epos[e] = new_edge;
  }
  return a;
}

// Assembles each component by random fixed-point sums, then joins the
// components by regular orbit sums in a random order and bracketing.
inline ForestData assemble_forest(Rng& rng, const ForestData& f) {
  std::vector<ForestData> parts;
  for (const auto& t : f.components) parts.push_back(assemble_tree(rng, t).forest);
  while (parts.size() > 1) {
    const std::size_t i = index(rng, parts.size());
    ForestData a = parts[i];
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
    const std::size_t j = index(rng, parts.size());
    ForestData b = parts[j];
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
    parts.push_back(polar::forest5::regular_orbit_sum(a, b));
  }
  return parts[0];
}

}  // namespace support
