#include <doctest.h>

#include <set>

#include <json.hpp>

#include "polar/catalog.hpp"

using namespace polar;
using namespace polar::catalog;

TEST_CASE("catalog resource") {
  const auto doc = nlohmann::json::parse(resource());
  CHECK(doc.at("version").get<int>() == version());
  CHECK(doc.at("entries").size() == entries().size());
  std::set<std::string> ids;
  for (const auto& e : entries()) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.source.empty());
    CHECK(e.cohomogeneity >= 1);
  }
}

TEST_CASE("queries") {
  const auto so4 = query({.group = "SO(4)", .dimension = 5});
  REQUIRE(so4.size() == 1);
  CHECK(so4[0].manifold == "S5");
  const auto dim3 = query({.dimension = 3});
  REQUIRE(dim3.size() == 1);
  CHECK(dim3[0].group == "S1");
  CHECK(dim3[0].manifold == "S3");
  const auto so3 = query({.group = "SO(3)", .dimension = 5, .nonneg = true});
  bool wu = false;
  for (const auto& e : so3) wu = wu || e.id == "so3-wu";
  CHECK(wu);
  CHECK(query({.group = "E8"}).empty());
}

TEST_CASE("nonnegative flags cover exactly the dimension 5 list") {
  const std::set<std::string> flagged{
      "s1-s5",        "s1-s3xs2",    "s1-s3xks2",          "t2-s5",         "t2-s3xks2",
      "t2-s3xs2-first-factor",       "t3-s5",              "t3-s3xks2",     "su2-s5",
      "so3-s5-3dim",  "so3-s5-5dim", "su2-s3xks2",         "so3-wu",        "so3-s3xs2",
      "su2xs1-s3xks2", "so3xs1-s5",  "so3xs1-s3xs2",       "u2-s5",         "so4-s5"};
  std::set<std::string> got;
  for (const auto& e : query({.nonneg = true})) {
    CHECK(e.dimension == 5);
    got.insert(e.id);
  }
  CHECK(got == flagged);
  for (const auto& e : entries()) {
    if (e.dimension != 5) CHECK_FALSE(e.nonneg_admissible.has_value());
  }
}

TEST_CASE("circle actions") {
  CHECK(circle_action_type({0, true, 1, true}).to_string() == "S5");
  CHECK(circle_action_type({0, true, 2, true}).to_string() == "S3xS2");
  for (Int k = 0; k <= 6; ++k) {
    const bool even = k % 2 == 0;
    CHECK(circle_action_type({1, even, 1, true}).to_string() == (even ? "S3xS2" : "S3~xS2"));
  }
  CHECK_THROWS_AS(circle_action_type({0, true, 0, true}), Error);
  CHECK_THROWS_AS(circle_action_type({0, false, 1, true}), Error);
  CHECK_THROWS_AS(circle_action_type({1, true, 1, false}), Error);
}

TEST_CASE("each extra boundary component adds one to the rank") {
  for (Int b = 0; b <= 3; ++b) {
    for (bool spin : {true, false}) {
      if (b == 0 && !spin) continue;
      for (Int p = 1; p <= 4; ++p) {
        const auto a = circle_action_type({b, spin, p, true});
        const auto c = circle_action_type({b, spin, p + 1, true});
        CHECK(c.h2_rank() == a.h2_rank() + 1);
        CHECK(a.twisted() == (spin ? 0 : 1));
      }
    }
  }
}
