#pragma once

// T^2 Coxeter polar data on 5-manifolds: a forest whose vertices are the
// 2-faces of the orbit space, each marked by the slope of its circle
// isotropy, and whose edges are the fixed-point geodesics.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "polar/errors.hpp"
#include "polar/lattice.hpp"
#include "polar/manifold.hpp"

namespace polar::forest5 {

using lattice::AbelianGroupShape;
using lattice::UnimodularMap;

using EdgePair = std::array<std::size_t, 2>;

template <typename V>
struct BasicTree {
  std::vector<V> slopes;       // one per vertex
  std::vector<EdgePair> edges;  // vertex index pairs

  friend bool operator==(const BasicTree&, const BasicTree&) = default;
};

template <typename V>
struct BasicForest {
  std::vector<BasicTree<V>> components;

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& t : components) n += t.slopes.size();
    return n;
  }
  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& t : components) n += t.edges.size();
    return n;
  }

  friend bool operator==(const BasicForest&, const BasicForest&) = default;
};

using Tree = BasicTree<Vec2>;
using ForestData = BasicForest<Vec2>;
/// The same combinatorics with circle subgroups of T^3.
using Tree3 = BasicTree<Vec3>;
using ForestData3 = BasicForest<Vec3>;

struct EdgeRef {
  std::size_t component = 0;
  std::size_t edge = 0;
};

Violations validate(const ForestData& f);
Violations validate(const ForestData3& f);

/// Throws Error{EmptyForest} or Error{InvalidData} (first violation).
void require_valid(const ForestData& f);

/// Representative of the orbit under forest isomorphism x GL(2,Z) x
/// per-vertex sign. Slopes come out sign-normalized, each tree is listed
/// from a centroid in preorder with edges (parent, child), and components
/// are sorted.
ForestData canonicalize(const ForestData& f);
bool equivalent(const ForestData& a, const ForestData& b);

/// Applies `g` to every slope.
ForestData align(const ForestData& f, const UnimodularMap& g);

/// Glues the two host trees along e1 ~ e2. Endpoints are matched by equal
/// slope class, so the two edges must carry the same unordered pair.
/// The merged tree keeps the host vertices and edges of f1 in place and
/// appends the remaining ones of f2 in order; other components follow.
ForestData fixed_point_sum(const ForestData& f1, EdgeRef e1, const ForestData& f2, EdgeRef e2);

/// Disjoint union.
ForestData regular_orbit_sum(const ForestData& f1, const ForestData& f2);

struct PolarGroupZ2 {
  std::vector<unsigned> generators;  // distinct residues mod 2, as mod2() masks
  int order = 1;

  friend bool operator==(const PolarGroupZ2&, const PolarGroupZ2&) = default;
};

/// Span of a set of residues in Z_2^2.
PolarGroupZ2 span_z2(const std::vector<unsigned>& residues);

PolarGroupZ2 polar_group(const ForestData& f);
bool section_orientable(const ForestData& f);
AbelianGroupShape fundamental_group(const ForestData& f);
/// E + 2c - 3. Throws Error{NotSimplyConnected}.
Int h2_rank(const ForestData& f);
/// Throws Error{NotSimplyConnected}.
bool is_spin(const ForestData& f);
DiffeoType5 diffeo_type(const ForestData& f);
/// Throws Error{NotSimplyConnected}.
bool nonneg_curvature_admissible(const ForestData& f);

enum class SectionSummand { S3, S1xS2, NonOrientableS2BundleOverS1 };
std::string to_string(SectionSummand s);

struct SectionJoin {
  Int n1 = 0;  // copies of the section accumulated so far
  Int n2 = 0;  // copies of the joined component's section
  Int m = 0;   // extra 0-surgeries

  friend bool operator==(const SectionJoin&, const SectionJoin&) = default;
};

struct SectionDescriptor {
  std::vector<SectionSummand> summands;  // sorted
  Int extra_zero_surgeries = 0;
  bool orientable = true;
  /// Set when the section is non-orientable but no summand is: the
  /// orientation is lost along one of the 0-surgeries.
  bool nonorientable_surgery = false;
  std::vector<SectionJoin> joins;

  std::string to_string() const;

  friend bool operator==(const SectionDescriptor&, const SectionDescriptor&) = default;
};

/// Counts for a regular orbit sum of pieces with the given slopes:
/// n_i = |Pi / Pi_i| copies of each section and m = |Pi| - n1 - n2 + 1
/// extra 0-surgeries, Pi being generated by both.
SectionJoin join_counts(const std::vector<Vec2>& first, const std::vector<Vec2>& second);

/// Computed on the canonical form: angle summands per tree in preorder,
/// then the components joined in canonical order.
SectionDescriptor section_descriptor(const ForestData& f);

/// Image of T^3 data under T^3 -> T^3 / S^1_w (default complement).
ForestData quotient(const ForestData3& f, const Vec3& w);
ForestData quotient(const ForestData3& f, const Vec3& w, const Vec3& c1, const Vec3& c2);

/// Small constructors used by fixtures.
ForestData path(const std::vector<Vec2>& slopes);
ForestData isolated(const std::vector<Vec2>& slopes);

}  // namespace polar::forest5
