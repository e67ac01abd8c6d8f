#include "polar/forest5.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace polar::forest5 {

namespace {

using lattice::canonical_sign;
using lattice::det;
using lattice::mod2;

std::string where(std::size_t c) { return "component " + std::to_string(c); }

std::string vertex_at(std::size_t c, std::size_t v) {
  return where(c) + ", vertex " + std::to_string(v);
}

std::string edge_at(std::size_t c, const EdgePair& e) {
  return where(c) + ", edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
}

// Checks that the edges form a tree on the vertices. Returns false if the
// edge list is unusable for further checks.
template <typename V>
bool check_structure(const BasicTree<V>& t, std::size_t c, Violations& out) {
  const std::size_t n = t.slopes.size();
  if (n == 0) {
    out.push_back({where(c), "component has no vertices"});
    return false;
  }
  bool usable = true;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : t.edges) {
    if (e[0] >= n || e[1] >= n) {
      out.push_back({edge_at(c, e), "vertex index out of range"});
      usable = false;
    } else if (e[0] == e[1]) {
      out.push_back({edge_at(c, e), "loop"});
      usable = false;
    } else if (!seen.insert(std::minmax(e[0], e[1])).second) {
      out.push_back({edge_at(c, e), "repeated edge"});
      usable = false;
    }
  }
  if (!usable) return false;
  if (t.edges.size() != n - 1) {
    out.push_back({where(c), "not a tree: " + std::to_string(n) + " vertices and " +
                                 std::to_string(t.edges.size()) + " edges"});
    return false;
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    const auto a = find(e[0]);
    const auto b = find(e[1]);
    if (a == b) {
      out.push_back({edge_at(c, e), "closes a cycle"});
      return false;
    }
    parent[a] = b;
  }
  return true;
}

Int minor_gcd(const Vec3& u, const Vec3& v) {
  Int g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      g = std::gcd(g, lattice::checked_sub(lattice::checked_mul(u[i], v[j]),
                                           lattice::checked_mul(u[j], v[i])));
    }
  }
  return g;
}

template <typename V>
Violations validate_forest(const BasicForest<V>& f) {
  Violations out;
  if (f.vertex_count() == 0) {
    out.push_back({"forest", "empty forest"});
    return out;
  }
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const auto& t = f.components[c];
    for (std::size_t v = 0; v < t.slopes.size(); ++v) {
      if (!lattice::is_primitive(t.slopes[v])) {
        out.push_back({vertex_at(c, v), "not primitive: " + lattice::BasicSlope<
                                            std::tuple_size_v<V>>::format(t.slopes[v])});
      }
    }
    if (!check_structure(t, c, out)) continue;
    for (const auto& e : t.edges) {
      const V& a = t.slopes[e[0]];
      const V& b = t.slopes[e[1]];
      if (!lattice::is_primitive(a) || !lattice::is_primitive(b)) continue;
      if constexpr (std::tuple_size_v<V> == 2) {
        const Int d = det(a, b);
        if (d != 1 && d != -1) {
          out.push_back({edge_at(c, e), "determinant " + std::to_string(d < 0 ? -d : d)});
        }
      } else {
        const Int g = minor_gcd(a, b);
        if (g != 1) {
          out.push_back({edge_at(c, e), g == 0 ? "equal circles"
                                               : "circles do not span a 2-torus (index " +
                                                     std::to_string(g) + ")"});
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> adjacency(const Tree& t) {
  std::vector<std::vector<std::size_t>> adj(t.slopes.size());
  for (const auto& e : t.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  return adj;
}

std::vector<std::size_t> centroids(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> order{0}, parent(n, n), size(n, 1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t w : adj[order[i]]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = order[i];
      order.push_back(w);
    }
  }
  for (std::size_t i = n; i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<std::size_t> result;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t largest = n - size[v];
    for (std::size_t w : adj[v]) {
      if (parent[w] == v) largest = std::max(largest, size[w]);
    }
    if (2 * largest <= n) result.push_back(v);
  }
  return result;
}

using Code = std::vector<Int>;

struct Labeled {
  const std::vector<Vec2>& labels;
  const std::vector<std::vector<std::size_t>>& adj;
};

Code encode(const Labeled& t, std::size_t v, std::size_t parent) {
  std::vector<Code> children;
  for (std::size_t w : t.adj[v]) {
    if (w != parent) children.push_back(encode(t, w, v));
  }
  std::sort(children.begin(), children.end());
  const Vec2& s = t.labels[v];
  Code code{s[0], s[1] < 0 ? -s[1] : s[1], s[1] < 0 ? 1 : 0, static_cast<Int>(children.size())};
  for (const auto& c : children) code.insert(code.end(), c.begin(), c.end());
  return code;
}

struct TreeChoice {
  Code code;
  std::size_t root;
};

TreeChoice best_root(const Labeled& t) {
  std::optional<TreeChoice> best;
  for (std::size_t r : centroids(t.adj)) {
    Code c = encode(t, r, t.adj.size());
    if (!best || c < best->code) best = TreeChoice{std::move(c), r};
  }
  return *best;
}

void emit(const Labeled& t, std::size_t v, std::size_t parent, Tree& out, std::size_t out_parent) {
  const std::size_t me = out.slopes.size();
  out.slopes.push_back(t.labels[v]);
  if (out_parent != static_cast<std::size_t>(-1)) out.edges.push_back({out_parent, me});
  std::vector<std::pair<Code, std::size_t>> children;
  for (std::size_t w : t.adj[v]) {
    if (w != parent) children.emplace_back(encode(t, w, v), w);
  }
  std::sort(children.begin(), children.end());
  for (const auto& [code, w] : children) emit(t, w, v, out, me);
}

std::vector<Vec2> all_slopes(const ForestData& f) {
  std::vector<Vec2> s;
  for (const auto& t : f.components) s.insert(s.end(), t.slopes.begin(), t.slopes.end());
  return s;
}

void require_simply_connected(const ForestData& f) {
  const auto pi1 = fundamental_group(f);
  if (!pi1.trivial()) {
    throw Error(ErrorCode::NotSimplyConnected, "fundamental group is " + pi1.to_string());
  }
}

// Calls fn(u, v, w) for every length-2 path u - v - w.
template <typename Fn>
void for_each_angle(const ForestData& f, Fn&& fn) {
  for (const auto& t : f.components) {
    const auto adj = adjacency(t);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      for (std::size_t i = 0; i < adj[v].size(); ++i) {
        for (std::size_t j = i + 1; j < adj[v].size(); ++j) {
          fn(t.slopes[adj[v][i]], t.slopes[v], t.slopes[adj[v][j]]);
        }
      }
    }
  }
}

std::vector<unsigned> residues(const std::vector<Vec2>& slopes) {
  std::vector<unsigned> r;
  for (const auto& s : slopes) r.push_back(mod2(s));
  return r;
}

// Angle summands of a canonical tree: vertices in preorder, edges (parent,
// child) in preorder, so every edge after the first meets an earlier one.
std::vector<SectionSummand> tree_summands(const Tree& t) {
  if (t.edges.size() <= 1) return {SectionSummand::S3};
  std::vector<std::size_t> parent(t.slopes.size(), t.slopes.size());
  for (const auto& e : t.edges) parent[e[1]] = e[0];
  std::vector<SectionSummand> out;
  for (std::size_t i = 1; i < t.edges.size(); ++i) {
    const auto [p, c] = t.edges[i];
    const std::size_t other = parent[p] < t.slopes.size() ? parent[p] : t.edges[0][1];
    const bool even = mod2(t.slopes[other]) == mod2(t.slopes[c]);
    out.push_back(even ? SectionSummand::S1xS2 : SectionSummand::NonOrientableS2BundleOverS1);
  }
  return out;
}

template <typename V>
ForestData project(const BasicForest<V>& f, auto&& proj) {
  const Violations v = validate(f);
  if (!v.empty()) throw Error(ErrorCode::InvalidData, v.front().at + ": " + v.front().message);
  ForestData out;
  for (const auto& t : f.components) {
    Tree q;
    q.edges = t.edges;
    for (const auto& s : t.slopes) q.slopes.push_back(proj(s).vec());
    out.components.push_back(std::move(q));
  }
  require_valid(out);
  return out;
}

}  // namespace

Violations validate(const ForestData& f) { return validate_forest(f); }
Violations validate(const ForestData3& f) { return validate_forest(f); }

void require_valid(const ForestData& f) {
  if (f.vertex_count() == 0) throw Error(ErrorCode::EmptyForest, "forest has no vertices");
  const Violations v = validate(f);
  if (!v.empty()) throw Error(ErrorCode::InvalidData, v.front().at + ": " + v.front().message);
}

ForestData canonicalize(const ForestData& f) {
  require_valid(f);
  const std::vector<Vec2> slopes = all_slopes(f);
  std::vector<std::vector<std::vector<std::size_t>>> adj;
  for (const auto& t : f.components) adj.push_back(adjacency(t));

  struct Candidate {
    std::vector<Code> key;
    std::vector<std::vector<Vec2>> labels;
    std::vector<std::pair<Code, std::size_t>> order;  // (code, component)
    std::vector<std::size_t> roots;
  };
  std::optional<Candidate> best;
  for (const auto& g : lattice::canonical_frames(slopes)) {
    Candidate cand;
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      std::vector<Vec2> lab;
      for (const auto& s : f.components[c].slopes) lab.push_back(canonical_sign(g(s)));
      cand.labels.push_back(std::move(lab));
    }
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      TreeChoice tc = best_root(Labeled{cand.labels[c], adj[c]});
      cand.roots.push_back(tc.root);
      cand.order.emplace_back(std::move(tc.code), c);
    }
    std::sort(cand.order.begin(), cand.order.end());
    for (const auto& [code, c] : cand.order) cand.key.push_back(code);
    if (!best || cand.key < best->key) best = std::move(cand);
  }

  ForestData out;
  for (const auto& [code, c] : best->order) {
    Tree t;
    emit(Labeled{best->labels[c], adj[c]}, best->roots[c], adj[c].size(), t,
         static_cast<std::size_t>(-1));
    out.components.push_back(std::move(t));
  }
  return out;
}

bool equivalent(const ForestData& a, const ForestData& b) {
  return canonicalize(a) == canonicalize(b);
}

ForestData align(const ForestData& f, const UnimodularMap& g) {
  ForestData out = f;
  for (auto& t : out.components) {
    for (auto& s : t.slopes) s = g(s);
  }
  return out;
}

ForestData fixed_point_sum(const ForestData& f1, EdgeRef e1, const ForestData& f2, EdgeRef e2) {
  require_valid(f1);
  require_valid(f2);
  auto edge = [](const ForestData& f, EdgeRef r, const char* name) {
    if (r.component >= f.components.size() || r.edge >= f.components[r.component].edges.size()) {
      throw Error(ErrorCode::InvalidData, std::string("no edge ") + std::to_string(r.component) +
                                              ":" + std::to_string(r.edge) + " in " + name);
    }
    return f.components[r.component].edges[r.edge];
  };
  const EdgePair a = edge(f1, e1, "first forest");
  const EdgePair b = edge(f2, e2, "second forest");
  const Tree& t1 = f1.components[e1.component];
  const Tree& t2 = f2.components[e2.component];
  auto cls = [](const Vec2& v) { return canonical_sign(v); };

  // Which endpoint of b lands on a[0]?
  std::array<std::size_t, 2> match{};
  if (cls(t2.slopes[b[0]]) == cls(t1.slopes[a[0]]) &&
      cls(t2.slopes[b[1]]) == cls(t1.slopes[a[1]])) {
    match = {b[0], b[1]};
  } else if (cls(t2.slopes[b[1]]) == cls(t1.slopes[a[0]]) &&
             cls(t2.slopes[b[0]]) == cls(t1.slopes[a[1]])) {
    match = {b[1], b[0]};
  } else {
    throw Error(ErrorCode::SliceMismatch,
                "edge slopes differ: {" + lattice::Slope::format(t1.slopes[a[0]]) + "," +
                    lattice::Slope::format(t1.slopes[a[1]]) + "} vs {" +
                    lattice::Slope::format(t2.slopes[b[0]]) + "," +
                    lattice::Slope::format(t2.slopes[b[1]]) + "}");
  }

  Tree merged = t1;
  std::vector<std::size_t> index(t2.slopes.size());
  for (std::size_t v = 0; v < t2.slopes.size(); ++v) {
    if (v == match[0]) {
      index[v] = a[0];
    } else if (v == match[1]) {
      index[v] = a[1];
    } else {
      index[v] = merged.slopes.size();
      merged.slopes.push_back(t2.slopes[v]);
    }
  }
  for (std::size_t i = 0; i < t2.edges.size(); ++i) {
    if (i == e2.edge) continue;
    merged.edges.push_back({index[t2.edges[i][0]], index[t2.edges[i][1]]});
  }

  ForestData out;
  for (std::size_t c = 0; c < f1.components.size(); ++c) {
    out.components.push_back(c == e1.component ? merged : f1.components[c]);
  }
  for (std::size_t c = 0; c < f2.components.size(); ++c) {
    if (c != e2.component) out.components.push_back(f2.components[c]);
  }
  require_valid(out);
  return out;
}

ForestData regular_orbit_sum(const ForestData& f1, const ForestData& f2) {
  require_valid(f1);
  require_valid(f2);
  ForestData out = f1;
  out.components.insert(out.components.end(), f2.components.begin(), f2.components.end());
  return out;
}

PolarGroupZ2 span_z2(const std::vector<unsigned>& residues) {
  PolarGroupZ2 g;
  std::set<unsigned> gens;
  for (unsigned r : residues) {
    if (r & 3u) gens.insert(r & 3u);
  }
  g.generators.assign(gens.begin(), gens.end());
  g.order = gens.empty() ? 1 : gens.size() == 1 ? 2 : 4;
  return g;
}

PolarGroupZ2 polar_group(const ForestData& f) {
  require_valid(f);
  return span_z2(residues(all_slopes(f)));
}

bool section_orientable(const ForestData& f) {
  require_valid(f);
  const auto r = residues(all_slopes(f));
  for (unsigned phi = 1; phi < 4; ++phi) {
    // phi(x) = parity of popcount(phi & x)
    if (std::all_of(r.begin(), r.end(), [phi](unsigned x) {
          return __builtin_popcount(phi & x) % 2 == 1;
        })) {
      return true;
    }
  }
  return false;
}

AbelianGroupShape fundamental_group(const ForestData& f) {
  require_valid(f);
  if (f.edge_count() > 0) return {};
  return lattice::smith_quotient(all_slopes(f));
}

Int h2_rank(const ForestData& f) {
  require_simply_connected(f);
  return static_cast<Int>(f.edge_count()) + 2 * static_cast<Int>(f.components.size()) - 3;
}

bool is_spin(const ForestData& f) {
  require_simply_connected(f);
  bool spin = true;
  for_each_angle(f, [&spin](const Vec2& u, const Vec2&, const Vec2& w) {
    if (mod2(u) != mod2(w)) spin = false;
  });
  return spin;
}

DiffeoType5 diffeo_type(const ForestData& f) {
  const auto pi1 = fundamental_group(f);
  if (!pi1.trivial()) return DiffeoType5::not_simply_connected(pi1);
  return DiffeoType5::from_rank_and_spin(h2_rank(f), is_spin(f));
}

bool nonneg_curvature_admissible(const ForestData& f) {
  require_simply_connected(f);
  const std::size_t c = f.components.size();
  const std::size_t e = f.edge_count();
  if (c == 1) return e == 1 || e == 2;
  // Simply connected with two isolated vertices means their slopes span Z^2.
  return c == 2 && e == 0;
}

std::string to_string(SectionSummand s) {
  switch (s) {
    case SectionSummand::S3: return "S3";
    case SectionSummand::S1xS2: return "S1xS2";
    case SectionSummand::NonOrientableS2BundleOverS1: return "S1~xS2";
  }
  return "?";
}

std::string SectionDescriptor::to_string() const {
  std::string s;
  std::size_t i = 0;
  while (i < summands.size()) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    if (!s.empty()) s += " # ";
    const std::string name = forest5::to_string(summands[i]);
    s += j - i == 1 ? name : "#" + std::to_string(j - i) + "(" + name + ")";
    i = j;
  }
  if (s.empty()) s = "S3";
  if (extra_zero_surgeries > 0) {
    s += " + " + std::to_string(extra_zero_surgeries) + " 0-surgeries";
  }
  return s;
}

SectionJoin join_counts(const std::vector<Vec2>& first, const std::vector<Vec2>& second) {
  std::vector<Vec2> both = first;
  both.insert(both.end(), second.begin(), second.end());
  const Int whole = span_z2(residues(both)).order;
  const Int n1 = whole / span_z2(residues(first)).order;
  const Int n2 = whole / span_z2(residues(second)).order;
  return {n1, n2, whole - n1 - n2 + 1};
}

SectionDescriptor section_descriptor(const ForestData& f) {
  const ForestData canon = canonicalize(f);
  SectionDescriptor d;

  std::vector<SectionSummand> acc = tree_summands(canon.components[0]);
  Int acc_extra = 0;
  std::vector<Vec2> acc_slopes = canon.components[0].slopes;
  for (std::size_t i = 1; i < canon.components.size(); ++i) {
    const Tree& t = canon.components[i];
    const SectionJoin join = join_counts(acc_slopes, t.slopes);
    const auto [n1, n2, m] = join;
    d.joins.push_back(join);

    const auto comp = tree_summands(t);
    std::vector<SectionSummand> next;
    for (Int k = 0; k < n1; ++k) next.insert(next.end(), acc.begin(), acc.end());
    for (Int k = 0; k < n2; ++k) next.insert(next.end(), comp.begin(), comp.end());
    acc = std::move(next);
    acc_extra = lattice::checked_add(lattice::checked_mul(n1, acc_extra), m);
    acc_slopes.insert(acc_slopes.end(), t.slopes.begin(), t.slopes.end());
  }

  // S^3 is the unit of the connected sum.
  std::vector<SectionSummand> kept;
  for (auto s : acc) {
    if (s != SectionSummand::S3) kept.push_back(s);
  }
  if (kept.empty() && acc_extra == 0) kept.push_back(SectionSummand::S3);
  std::sort(kept.begin(), kept.end());
  d.summands = std::move(kept);
  d.extra_zero_surgeries = acc_extra;
  d.orientable = section_orientable(canon);
  const bool has_nonorientable =
      std::find(d.summands.begin(), d.summands.end(),
                SectionSummand::NonOrientableS2BundleOverS1) != d.summands.end();
  d.nonorientable_surgery = !d.orientable && !has_nonorientable;
  return d;
}

ForestData quotient(const ForestData3& f, const Vec3& w) {
  return project(f, [&w](const Vec3& v) { return lattice::project_along(w, v); });
}

ForestData quotient(const ForestData3& f, const Vec3& w, const Vec3& c1, const Vec3& c2) {
  return project(f, [&](const Vec3& v) { return lattice::project_along(w, v, c1, c2); });
}

ForestData path(const std::vector<Vec2>& slopes) {
  Tree t;
  t.slopes = slopes;
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) t.edges.push_back({i, i + 1});
  return ForestData{{t}};
}

ForestData isolated(const std::vector<Vec2>& slopes) {
  ForestData f;
  for (const auto& s : slopes) f.components.push_back(Tree{{s}, {}});
  return f;
}

}  // namespace polar::forest5
