#pragma once

#include <cstddef>
#include <vector>

namespace polar::detail {

/// Joins two cyclic sequences at the vertices between positions v and v+1.
/// The elements flanking both vertices must agree as a set (checked by the
/// caller); `same` compares elements. Result length is n1 + n2 - 2.
template <typename T, typename Eq>
std::vector<T> splice_cycles(const std::vector<T>& w1, std::size_t v1, const std::vector<T>& w2,
                             std::size_t v2, Eq same) {
  const std::size_t n1 = w1.size();
  const std::size_t n2 = w2.size();
  // A runs from w1[v1+1] around to w1[v1]: it starts with b and ends with a.
  std::vector<T> out;
  out.reserve(n1 + n2 - 2);
  for (std::size_t i = 1; i <= n1; ++i) out.push_back(w1[(v1 + i) % n1]);
  const T& a = w1[v1 % n1];
  // B runs from w2[v2+1] around to w2[v2]; drop the two flanking elements
  // and insert the rest between a and b in the orientation that keeps a
  // next to its match.
  std::vector<T> inner;
  for (std::size_t i = 2; i < n2; ++i) inner.push_back(w2[(v2 + i) % n2]);
  if (same(w2[v2 % n2], a)) {
    out.insert(out.end(), inner.rbegin(), inner.rend());
  } else {
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

}  // namespace polar::detail
