#include <doctest.h>

#include "polar/enumerate.hpp"
#include "support.hpp"

using namespace polar;
using namespace polar::enumerate;
using forest5::ForestData;

namespace {

std::set<std::string> keys(const ForestTable& t) {
  std::set<std::string> out;
  for (const auto& r : t.rows) out.insert(support::key(r.data));
  return out;
}

std::vector<const ForestRow*> exact(const ForestTable& t, std::size_t e, std::size_t c) {
  std::vector<const ForestRow*> out;
  for (const auto& r : t.rows) {
    if (r.edges == e && r.components == c) out.push_back(&r);
  }
  return out;
}

}  // namespace

TEST_CASE("tree shapes") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11};  // unlabeled trees by edges
  for (std::size_t e = 0; e < counts.size(); ++e) CHECK(tree_shapes(e).size() == counts[e]);
}

TEST_CASE("single edge") {
  const auto t = enumerate_t2_forests({1, 1, 1});
  const auto rows = exact(t, 1, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]->type.to_string() == "S5");
}

TEST_CASE("paths up to height two") {
  const auto t = enumerate_t2_forests({2, 1, 2});
  const auto rows = exact(t, 2, 1);
  REQUIRE(rows.size() == 3);
  std::set<std::string> want;
  for (Int k = 0; k <= 2; ++k) want.insert(support::key(forest5::canonicalize(forest5::path({{1, 0}, {0, 1}, {1, k}}))));
  std::set<std::string> got;
  for (const auto* r : rows) got.insert(support::key(r->data));
  CHECK(got == want);
}

TEST_CASE("rows are canonical and described consistently") {
  const auto t = enumerate_t2_forests({3, 2, 2});
  for (const auto& r : t.rows) {
    CHECK(forest5::canonicalize(r.data) == r.data);
    CHECK(r.pi1 == forest5::fundamental_group(r.data));
    if (r.h2_rank) CHECK(*r.h2_rank == static_cast<Int>(r.edges + 2 * r.components) - 3);
  }
}

TEST_CASE("tables do not depend on the worker count") {
  const ForestBounds b{3, 2, 2};
  CHECK(keys(enumerate_t2_forests(b, 1)) == keys(enumerate_t2_forests(b, 4)));
}

TEST_CASE("counts grow with the bounds") {
  const auto small = keys(enumerate_t2_forests({2, 1, 2}));
  const auto big = keys(enumerate_t2_forests({3, 2, 3}));
  CHECK(small.size() < big.size());
  for (const auto& k : small) CHECK(big.count(k) == 1);
}

TEST_CASE("closed under fixed point sums") {
  const ForestBounds b{3, 1, 3};
  const auto t = enumerate_t2_forests(b);
  const auto all = keys(t);
  std::size_t checked = 0;
  for (const auto& r1 : t.rows) {
    for (const auto& r2 : t.rows) {
      if (r1.edges + r2.edges - 1 > b.max_edges) continue;
      const auto& t1 = r1.data.components[0];
      const auto& t2 = r2.data.components[0];
      for (std::size_t e1 = 0; e1 < t1.edges.size(); ++e1) {
        for (std::size_t e2 = 0; e2 < t2.edges.size(); ++e2) {
          const std::set<Vec2> s1{t1.slopes[t1.edges[e1][0]], t1.slopes[t1.edges[e1][1]]};
          const std::set<Vec2> s2{t2.slopes[t2.edges[e2][0]], t2.slopes[t2.edges[e2][1]]};
          if (s1 != s2) continue;
          const auto sum = forest5::canonicalize(forest5::fixed_point_sum(r1.data, {0, e1}, r2.data, {0, e2}));
          bool low = true;
          for (const auto& s : sum.components[0].slopes) low = low && lattice::height(s) <= b.max_height;
          if (!low) continue;
          CHECK(all.count(support::key(sum)) == 1);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("two isolated vertices of height one") {
  const auto rows = exact(enumerate_t2_forests({0, 2, 1}), 0, 2);
  // (1,0),(0,1) and (1,0),(1,1) are the same class; (1,0),(1,2) needs height 2.
  CHECK(rows.size() == 2);
}

TEST_CASE("polygon tables") {
  const auto four = enumerate_so3(4);
  REQUIRE(four.size() == 2);
  std::set<std::string> types;
  for (const auto& r : four) types.insert(r.type.to_string());
  CHECK(types == std::set<std::string>{"B", "#2W"});
  const auto three = enumerate_so3(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].type.to_string() == "W");
  const auto six = enumerate_so3(6);
  CHECK(six.size() == 4);
  CHECK(std::count_if(six.begin(), six.end(), [](const PolygonRow& r) {
          return r.type.kind == polygon5::SO3Type::Kind::SumB;
        }) == 1);
}
