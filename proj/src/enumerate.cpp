#include "polar/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace polar::enumerate {

namespace {

using forest5::ForestData;
using forest5::Tree;

using Shape = std::vector<std::size_t>;  // parent array, parent[0] unused

std::vector<Int> unlabeled_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v,
                                std::size_t parent) {
  std::vector<std::vector<Int>> children;
  for (std::size_t w : adj[v]) {
    if (w != parent) children.push_back(unlabeled_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::vector<Int> code{static_cast<Int>(children.size())};
  for (const auto& c : children) code.insert(code.end(), c.begin(), c.end());
  return code;
}

std::vector<Int> shape_code(const Shape& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 1; i < n; ++i) {
    adj[i].push_back(s[i]);
    adj[s[i]].push_back(i);
  }
  std::vector<Int> best;
  for (std::size_t r = 0; r < n; ++r) {
    auto c = unlabeled_code(adj, r, n);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

bool tree_less(const Tree& a, const Tree& b) {
  if (a.slopes != b.slopes) return a.slopes < b.slopes;
  return a.edges < b.edges;
}

struct ForestLess {
  bool operator()(const ForestData& a, const ForestData& b) const { return forest_less(a, b); }
};

using ForestSet = std::set<ForestData, ForestLess>;

// A forest shape flattened to one vertex list: parent[i] < i inside the same
// component, or npos for a component root.
struct FlatShape {
  std::vector<std::size_t> component_sizes;
  std::vector<std::size_t> parent;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<FlatShape> forest_shapes(const ForestBounds& b) {
  std::vector<Shape> shapes;
  for (std::size_t e = 0; e <= b.max_edges; ++e) {
    for (auto& s : tree_shapes(e)) shapes.push_back(std::move(s));
  }
  std::vector<FlatShape> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::size_t edges) -> void {
    if (!pick.empty()) {
      FlatShape fs;
      for (std::size_t idx : pick) {
        const Shape& s = shapes[idx];
        const std::size_t base = fs.parent.size();
        fs.component_sizes.push_back(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) fs.parent.push_back(i == 0 ? npos : base + s[i]);
      }
      out.push_back(std::move(fs));
    }
    if (pick.size() == b.max_components) return;
    for (std::size_t i = from; i < shapes.size(); ++i) {
      const std::size_t e = shapes[i].size() - 1;
      if (edges + e > b.max_edges) continue;
      pick.push_back(i);
      self(self, i, edges + e);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Vec2> slope_box(Int h) {
  std::vector<Vec2> box;
  for (Int x = 0; x <= h; ++x) {
    for (Int y = -h; y <= h; ++y) {
      const Vec2 v{x, y};
      if (!lattice::is_primitive(v)) continue;
      if (lattice::canonical_sign(v) != v) continue;
      box.push_back(v);
    }
  }
  return box;
}

class Labeler {
 public:
  Labeler(const FlatShape& shape, const std::vector<Vec2>& box,
          const std::vector<std::vector<std::size_t>>& neighbours, Int max_height, ForestSet& out)
      : shape_(shape), box_(box), neighbours_(neighbours), max_height_(max_height), out_(out),
        label_(shape.parent.size()) {}

  void run_with_first(std::size_t first) {
    label_[0] = first;
    extend(1);
  }

 private:
  void extend(std::size_t i) {
    if (i == label_.size()) {
      finish();
      return;
    }
    const std::size_t p = shape_.parent[i];
    if (p == npos) {
      for (std::size_t k = 0; k < box_.size(); ++k) {
        label_[i] = k;
        extend(i + 1);
      }
    } else {
      for (std::size_t k : neighbours_[label_[p]]) {
        label_[i] = k;
        extend(i + 1);
      }
    }
  }

  void finish() {
    // The canonical form always contains (1,0), and (0,1) once there is an
    // edge, so labelings without them cannot be canonical forms.
    const bool has_edge = label_.size() > shape_.component_sizes.size();
    bool e1 = false, e2 = false;
    for (std::size_t k : label_) {
      e1 = e1 || box_[k] == Vec2{1, 0};
      e2 = e2 || box_[k] == Vec2{0, 1};
    }
    if (!e1 || (has_edge && !e2)) return;

    ForestData f;
    std::size_t base = 0;
    for (std::size_t size : shape_.component_sizes) {
      Tree t;
      for (std::size_t i = 0; i < size; ++i) {
        t.slopes.push_back(box_[label_[base + i]]);
        if (i > 0) t.edges.push_back({shape_.parent[base + i] - base, i});
      }
      f.components.push_back(std::move(t));
      base += size;
    }
    ForestData canon = forest5::canonicalize(f);
    for (const auto& t : canon.components) {
      for (const auto& s : t.slopes) {
        if (lattice::height(s) > max_height_) return;
      }
    }
    out_.insert(std::move(canon));
  }

  const FlatShape& shape_;
  const std::vector<Vec2>& box_;
  const std::vector<std::vector<std::size_t>>& neighbours_;
  Int max_height_;
  ForestSet& out_;
  std::vector<std::size_t> label_;
};

}  // namespace

bool forest_less(const ForestData& a, const ForestData& b) {
  return std::lexicographical_compare(a.components.begin(), a.components.end(),
                                      b.components.begin(), b.components.end(), tree_less);
}

std::vector<std::vector<std::size_t>> tree_shapes(std::size_t edges) {
  std::vector<Shape> level{Shape{0}};
  for (std::size_t e = 1; e <= edges; ++e) {
    std::map<std::vector<Int>, Shape> next;
    for (const auto& s : level) {
      for (std::size_t p = 0; p < s.size(); ++p) {
        Shape t = s;
        t.push_back(p);
        next.emplace(shape_code(t), std::move(t));
      }
    }
    level.clear();
    for (auto& [code, s] : next) level.push_back(std::move(s));
  }
  return level;
}

ForestRow describe(const ForestData& f) {
  ForestRow r;
  r.data = forest5::canonicalize(f);
  r.edges = r.data.edge_count();
  r.components = r.data.components.size();
  r.pi1 = forest5::fundamental_group(r.data);
  if (r.pi1.trivial()) {
    r.h2_rank = forest5::h2_rank(r.data);
    r.spin = forest5::is_spin(r.data);
    r.nonneg = forest5::nonneg_curvature_admissible(r.data);
  }
  r.type = forest5::diffeo_type(r.data);
  r.polar_group_order = forest5::polar_group(r.data).order;
  r.orientable_section = forest5::section_orientable(r.data);
  return r;
}

ForestTable enumerate_t2_forests(const ForestBounds& bounds, unsigned workers) {
  ForestTable table;
  table.bounds = bounds;
  if (bounds.max_components == 0 || bounds.max_height < 1) return table;

  const std::vector<Vec2> box = slope_box(bounds.max_height);
  std::vector<std::vector<std::size_t>> neighbours(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = 0; j < box.size(); ++j) {
      if (lattice::adjacency_ok(box[i], box[j])) neighbours[i].push_back(j);
    }
  }
  const std::vector<FlatShape> shapes = forest_shapes(bounds);

  // One task per (shape, label of the first vertex).
  const std::size_t tasks = shapes.size() * box.size();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<ForestSet> found(workers);
  auto work = [&](unsigned w) {
    for (std::size_t t = next++; t < tasks; t = next++) {
      Labeler(shapes[t / box.size()], box, neighbours, bounds.max_height, found[w])
          .run_with_first(t % box.size());
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  ForestSet all;
  for (auto& s : found) all.merge(s);
  for (const auto& f : all) table.rows.push_back(describe(f));
  std::sort(table.rows.begin(), table.rows.end(), [](const ForestRow& a, const ForestRow& b) {
    if (a.edges != b.edges) return a.edges < b.edges;
    if (a.components != b.components) return a.components < b.components;
    return forest_less(a.data, b.data);
  });
  return table;
}

std::vector<PolygonRow> enumerate_so3(std::size_t n) {
  std::vector<PolygonRow> rows;
  for (auto& w : polygon5::enumerate(n)) {
    PolygonRow r;
    r.type = polygon5::decompose(w).type;
    r.genus = polygon5::section_genus(w);
    r.chi_orb = polygon5::orbifold_euler(w);
    r.nonneg = polygon5::nonneg_curvature_admissible(w);
    r.word = std::move(w);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace polar::enumerate
