#include "polar/polygon5.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "polar/detail/splice.hpp"

namespace polar::polygon5 {

namespace {

void require_valid(const PolygonWord& w) {
  const Violations v = validate(w);
  if (!v.empty()) throw Error(ErrorCode::InvalidData, v.front().at + ": " + v.front().message);
}

std::size_t distinct_letters(const PolygonWord& w) {
  return std::set<Letter>(w.begin(), w.end()).size();
}

Letter at(const PolygonWord& w, std::size_t i) { return w[i % w.size()]; }

}  // namespace

std::string_view to_string(Letter l) {
  switch (l) {
    case Letter::E12: return "12";
    case Letter::E13: return "13";
    case Letter::E23: return "23";
  }
  return "?";
}

std::optional<Letter> parse_letter(std::string_view s) {
  if (s.size() == 3 && (s[0] == 'E' || s[0] == 'e')) s.remove_prefix(1);
  if (s == "12") return Letter::E12;
  if (s == "13") return Letter::E13;
  if (s == "23") return Letter::E23;
  return std::nullopt;
}

std::string format(const PolygonWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + ")";
}

Violations validate(const PolygonWord& w) {
  Violations out;
  if (w.size() < 2) {
    out.push_back({"word", "length < 2"});
    return out;
  }
  // A bigon has one pair of sides, met at both vertices; report it once.
  const std::size_t pairs = w.size() == 2 ? 1 : w.size();
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t j = (i + 1) % w.size();
    if (w[i] == w[j]) {
      out.push_back({"position " + std::to_string(i) + "-" + std::to_string(j),
                     "equal neighbours " + std::string(to_string(w[i]))});
    }
  }
  return out;
}

PolygonWord canonicalize(const PolygonWord& w) {
  require_valid(w);
  const std::size_t n = w.size();
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  PolygonWord best;
  PolygonWord cand(n);
  do {
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t src = reflect ? (r + n - i) % n : (r + i) % n;
          cand[i] = static_cast<Letter>(perm[static_cast<std::size_t>(w[src])]);
        }
        if (best.empty() || cand < best) best = cand;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<PolygonWord> enumerate(std::size_t n) {
  std::set<PolygonWord> classes;
  if (n < 2) return {};
  // Up to a letter permutation every word starts with E12.
  PolygonWord w(n, Letter::E12);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (w[n - 1] != w[0]) classes.insert(canonicalize(w));
      return;
    }
    for (Letter l : {Letter::E12, Letter::E13, Letter::E23}) {
      if (l == w[i - 1]) continue;
      w[i] = l;
      self(self, i + 1);
    }
  };
  extend(extend, 1);
  return {classes.begin(), classes.end()};
}

std::string SO3Type::to_string() const {
  switch (kind) {
    case Kind::Sphere5: return "S5";
    case Kind::SumB: return count == 1 ? "B" : "#" + std::to_string(count) + "B";
    case Kind::SumW: return count == 1 ? "W" : "#" + std::to_string(count) + "W";
  }
  return "?";
}

std::vector<std::size_t> admissible_deletions(const PolygonWord& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> out;
  if (n <= 3) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter prev = at(w, i + n - 1);
    const Letter next = at(w, i + 1);
    if (prev == w[i] || next == w[i] || prev == next) continue;
    if (std::count(w.begin(), w.end(), w[i]) < 2) continue;
    out.push_back(i);
  }
  return out;
}

Decomposition decompose(const PolygonWord& w) {
  return decompose(w, [](const PolygonWord&, const std::vector<std::size_t>& options) {
    return options.front();
  });
}

Decomposition decompose(const PolygonWord& w, const DeletionChooser& choose) {
  require_valid(w);
  Decomposition d;
  const Int n = static_cast<Int>(w.size());
  if (n == 2) return d;
  if (distinct_letters(w) == 2) {
    // Alternating word: a fixed-point sum of (n-2)/2 copies of the square.
    d.type = {SO3Type::Kind::SumB, (n - 2) / 2};
    return d;
  }
  PolygonWord cur = w;
  while (cur.size() > 3) {
    const auto options = admissible_deletions(cur);
    if (options.empty()) {
      throw Error(ErrorCode::InvalidData, "no admissible side to erase in " + format(cur));
    }
    const std::size_t pos = choose(cur, options);
    if (std::find(options.begin(), options.end(), pos) == options.end()) {
      throw Error(ErrorCode::InvalidData, "chooser returned an inadmissible side");
    }
    d.trace.push_back({cur, pos});
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  // Every erasure splits off one triangle; the last triangle is the base.
  d.type = {SO3Type::Kind::SumW, static_cast<Int>(d.trace.size()) + 1};
  return d;
}

boost::rational<Int> orbifold_euler(const PolygonWord& w) {
  require_valid(w);
  using Q = boost::rational<Int>;
  const Int n = static_cast<Int>(w.size());
  // n vertices with isotropy D_3 in the polar group, n open sides with Z_2,
  // and the open face with trivial isotropy.
  return Q(n, 6) - Q(n, 2) + Q(1);
}

Int section_genus(const PolygonWord& w) {
  const auto chi_orb = orbifold_euler(w);
  const auto chi = chi_orb * Int{6};
  if (chi.denominator() != 1 || (2 - chi.numerator()) % 2 != 0) {
    throw Error(ErrorCode::InvalidData, "section Euler characteristic is not even");
  }
  return (2 - chi.numerator()) / 2;
}

PolygonWord fixed_point_sum(const PolygonWord& w1, std::size_t v1, const PolygonWord& w2,
                            std::size_t v2) {
  require_valid(w1);
  require_valid(w2);
  if (v1 >= w1.size() || v2 >= w2.size()) {
    throw Error(ErrorCode::InvalidData, "vertex index out of range");
  }
  const std::set<Letter> s1{at(w1, v1), at(w1, v1 + 1)};
  const std::set<Letter> s2{at(w2, v2), at(w2, v2 + 1)};
  if (s1 != s2) {
    throw Error(ErrorCode::SliceMismatch, "vertex slices differ: " +
                                              format({at(w1, v1), at(w1, v1 + 1)}) + " vs " +
                                              format({at(w2, v2), at(w2, v2 + 1)}));
  }
  PolygonWord out = detail::splice_cycles(w1, v1, w2, v2, std::equal_to<Letter>{});
  require_valid(out);
  return out;
}

bool nonneg_curvature_admissible(const PolygonWord& w) {
  require_valid(w);
  return w.size() == 2 || w.size() == 3;
}

}  // namespace polar::polygon5
