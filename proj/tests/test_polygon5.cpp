#include <doctest.h>

#include "polar/polygon5.hpp"
#include "support.hpp"

using namespace polar;
using namespace polar::polygon5;

namespace {

constexpr Letter A = Letter::E12, B = Letter::E13, C = Letter::E23;

const PolygonWord wu{A, C, B};
const PolygonWord brieskorn{A, B, A, B};
const PolygonWord wu_sum{A, C, A, B};

// Uniform random choice among the admissible deletions.
DeletionChooser random_chooser(support::Rng& rng) {
  return [&rng](const PolygonWord&, const std::vector<std::size_t>& options) {
    return options[support::index(rng, options.size())];
  };
}

PolygonWord random_word(support::Rng& rng, std::size_t n) {
  for (;;) {
    PolygonWord w;
    for (std::size_t i = 0; i < n; ++i) {
      Letter l;
      do l = static_cast<Letter>(support::index(rng, 3));
      while (i > 0 && l == w.back());
      w.push_back(l);
    }
    if (validate(w).empty()) return w;
  }
}

}  // namespace

TEST_CASE("letters") {
  CHECK(to_string(A) == "12");
  CHECK(parse_letter("E23") == C);
  CHECK(parse_letter("13") == B);
  CHECK_FALSE(parse_letter("14"));
  CHECK(format(wu) == "(12,23,13)");
}

TEST_CASE("validate") {
  CHECK(validate(wu).empty());
  const auto eq = validate({A, A, B});
  REQUIRE_FALSE(eq.empty());
  CHECK(eq[0].at.find("0") != std::string::npos);
  const auto shortw = validate({A});
  REQUIRE(shortw.size() == 1);
  CHECK(shortw[0].message == "length < 2");
  CHECK_FALSE(validate({A, B, A}).empty());
  CHECK(validate({A, B}).empty());
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize({A, C, A, B}) == canonicalize({B, A, C, A}));
  CHECK(canonicalize(brieskorn) != canonicalize(wu_sum));
  CHECK(canonicalize({B, C, B, C}) == canonicalize(brieskorn));
  CHECK(canonicalize(canonicalize(wu_sum)) == canonicalize(wu_sum));
}

TEST_CASE("enumeration counts match the Burnside oracle") {
  const std::vector<std::size_t> expected{1, 1, 2, 1, 4};
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(polygon5::enumerate(n).size() == expected[n - 2]);
    CHECK(polygon5::enumerate(n).size() == support::necklace_oracle(n));
  }
  for (std::size_t n = 7; n <= 10; ++n) CHECK(polygon5::enumerate(n).size() == support::necklace_oracle(n));
}

TEST_CASE("decompose") {
  CHECK(decompose(brieskorn).type == SO3Type{SO3Type::Kind::SumB, 1});
  CHECK(decompose(wu_sum).type == SO3Type{SO3Type::Kind::SumW, 2});
  CHECK(decompose({A, B}).type == SO3Type{SO3Type::Kind::Sphere5, 0});
  CHECK(decompose(wu).type == SO3Type{SO3Type::Kind::SumW, 1});
  CHECK(decompose(brieskorn).type.to_string() == "B");
  CHECK(decompose(wu_sum).type.to_string() == "#2W");
  CHECK(decompose({A, B, A, B, A, B}).type.to_string() == "#2B");
}

TEST_CASE("decompose ignores the deletion schedule") {
  support::Rng rng(31);
  for (std::size_t n = 3; n <= 10; ++n) {
    for (int i = 0; i < 4; ++i) {
      const auto w = random_word(rng, n);
      const auto base = decompose(w).type;
      for (int s = 0; s < 200; ++s) CHECK(decompose(w, random_chooser(rng)).type == base);
    }
  }
}

TEST_CASE("two letters exactly for B sums") {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (const auto& w : polygon5::enumerate(n)) {
      const std::set<Letter> letters(w.begin(), w.end());
      const bool b = decompose(w).type.kind == SO3Type::Kind::SumB;
      CHECK(b == (letters.size() == 2));
      if (b) {
        CHECK(n % 2 == 0);
        CHECK(decompose(w).type.count == static_cast<Int>((n - 2) / 2));
      }
    }
  }
}

TEST_CASE("orbifold Euler characteristic and genus") {
  using Q = boost::rational<Int>;
  CHECK(orbifold_euler(brieskorn) == Q(-1, 3));
  CHECK(orbifold_euler(wu) == Q(0));
  CHECK(orbifold_euler({A, B, A, B, A, B}) == Q(-1));
  CHECK(section_genus(brieskorn) == 2);
  CHECK(section_genus(wu) == 1);
  CHECK(section_genus({A, B, A, B, A, B}) == 4);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto& w : polygon5::enumerate(n)) CHECK(6 * orbifold_euler(w) == Q(2 - 2 * section_genus(w)));
  }
}

TEST_CASE("fixed point sums") {
  const auto ww = fixed_point_sum(wu, 2, wu, 2);
  CHECK(canonicalize(ww) == canonicalize(wu_sum));
  const auto bb = fixed_point_sum(brieskorn, 0, brieskorn, 0);
  CHECK(bb.size() == 6);
  CHECK(canonicalize(bb) == canonicalize({A, B, A, B, A, B}));
  CHECK(decompose(bb).type.to_string() == "#2B");
  CHECK(canonicalize(fixed_point_sum(wu, 0, {A, C}, 0)) == canonicalize(wu));
  CHECK_THROWS_AS(fixed_point_sum(wu, 0, brieskorn, 0), Error);
}

TEST_CASE("genus adds under fixed point sums") {
  support::Rng rng(32);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 150; ++i) {
    const auto w1 = random_word(rng, 2 + support::index(rng, 6));
    const auto w2 = random_word(rng, 2 + support::index(rng, 6));
    const std::size_t v1 = support::index(rng, w1.size());
    for (std::size_t v2 = 0; v2 < w2.size(); ++v2) {
      const std::set<Letter> s1{w1[v1], w1[(v1 + 1) % w1.size()]};
      const std::set<Letter> s2{w2[v2], w2[(v2 + 1) % w2.size()]};
      if (s1 != s2) continue;
      const auto w = fixed_point_sum(w1, v1, w2, v2);
      CHECK(w.size() == w1.size() + w2.size() - 2);
      CHECK(section_genus(w) == section_genus(w1) + section_genus(w2));
      ++checked;
      break;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("invariants are orbit constant") {
  support::Rng rng(33);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& w : polygon5::enumerate(n)) {
      const auto fp = support::polygon_fingerprint(w);
      for (int i = 0; i < 50; ++i) {
        const auto g = support::random_polygon_symmetry(rng, w);
        CHECK(canonicalize(g) == w);
        CHECK(support::polygon_fingerprint(g) == fp);
      }
    }
  }
}

TEST_CASE("nonnegative curvature") {
  CHECK(nonneg_curvature_admissible(wu));
  CHECK(nonneg_curvature_admissible({A, B}));
  CHECK_FALSE(nonneg_curvature_admissible(brieskorn));
  CHECK_FALSE(nonneg_curvature_admissible(wu_sum));
}
