#pragma once
// Small independent reference computations used by the tests. Plain long arithmetic,
// nothing shared with the library beyond the value types.

#include "toricsing/rational.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Fractional-part sum numerator: sum_i (k a_i mod r).
inline long rt_numer(long r, const std::array<long, 3>& a, long k) {
  long s = 0;
  for (long x : a) s += ((k * x) % r + r) % r;
  return s;
}

// min over k of the Reid-Tai numerator, r >= 2
inline long rt_min(long r, const std::array<long, 3>& a) {
  long m = 3 * r;
  for (long k = 1; k < r; ++k) m = std::min(m, rt_numer(r, a, k));
  return m;
}

inline bool canonical(long r, const std::array<long, 3>& a) { return r == 1 || rt_min(r, a) >= r; }
inline bool terminal(long r, const std::array<long, 3>& a) { return r == 1 || rt_min(r, a) > r; }

// Brute-force normal form: least (a1,a2,a3) over units and permutations.
inline std::array<long, 3> normal_form(long r, std::array<long, 3> a) {
  if (r == 1) return {0, 0, 0};
  std::array<long, 3> best{r, r, r};
  for (long u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    std::array<long, 3> b;
    for (int i = 0; i < 3; ++i) b[i] = ((u * a[i]) % r + r) % r;
    std::sort(b.begin(), b.end());
    do {
      best = std::min(best, b);
    } while (std::next_permutation(b.begin(), b.end()));
  }
  return best;
}

inline long det3(const std::array<std::array<long, 3>, 3>& c) {
  // columns c[0], c[1], c[2]
  return c[0][0] * (c[1][1] * c[2][2] - c[2][1] * c[1][2]) - c[1][0] * (c[0][1] * c[2][2] - c[2][1] * c[0][2]) +
         c[2][0] * (c[0][1] * c[1][2] - c[1][1] * c[0][2]);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20261014);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace oracle
