#pragma once

// Purity of an affine semigroup cut to a box, decided by dynamic
// programming over the box and the definition read literally. Shares no
// code with the library's cone module.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace semiring_lab::testing {

inline bool brute_force_pure(std::size_t n, const std::vector<std::vector<std::uint32_t>>& gens, std::uint32_t box) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= box + 1;
  auto index = [&](const std::vector<std::uint32_t>& u) {
    std::size_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * (box + 1) + u[i];
    return idx;
  };
  std::vector<bool> member(count, false);
  std::vector<std::vector<std::uint32_t>> points(count, std::vector<std::uint32_t>(n, 0));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      points[idx][i] = static_cast<std::uint32_t>(rest % (box + 1));
      rest /= box + 1;
    }
  }
  // Indices grow with every coordinate, so u − g is visited before u.
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto& u = points[idx];
    if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) {
      member[idx] = true;
      continue;
    }
    for (const auto& g : gens) {
      bool fits = true;
      bool nonzero = false;
      std::vector<std::uint32_t> v(u);
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] > u[i]) fits = false;
        if (g[i] != 0) nonzero = true;
        v[i] = fits ? u[i] - g[i] : 0;
      }
      if (fits && nonzero && member[index(v)]) {
        member[idx] = true;
        break;
      }
    }
  }
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!member[idx]) continue;
    const auto& a = points[idx];
    for (std::uint32_t k = 2; k <= box; ++k) {
      if (!std::all_of(a.begin(), a.end(), [k](auto x) { return x % k == 0; })) continue;
      std::vector<std::uint32_t> q(a);
      for (auto& x : q) x /= k;
      if (!member[index(q)]) return false;
    }
  }
  return true;
}

}  // namespace semiring_lab::testing
