#pragma once
// Start states of chains built from the plt case tables: the blow-up of a smooth point whose
// exceptional surface carries the case's surface pair, w_i = a_i d_j d_k.

#include "toricsing/chain.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace fixtures {

using namespace toricsing;

struct Start {
  int case_id;
  std::vector<Int> params;
  WeightedBlowup blowup;
  TripleRecord triple;
  ChainState state;
};

inline std::vector<Start> start_states(long bound) {
  std::vector<Start> out;
  for (int c = 1; c <= 8; ++c) {
    int n = plt_case_arity(c);
    std::vector<Int> p(n, Int(1));
    while (true) {
      if (plt_case_family(c, p)) {
        auto s = plt_case_shape(c, p);
        const auto &a = s.weights, &d = s.indices;
        std::vector<Int> w{a[0] * d[1] * d[2], a[1] * d[0] * d[2], a[2] * d[0] * d[1]};
        if (gcd(gcd(w[0], w[1]), w[2]) == 1 && !plt_case_is_toric(s)) {
          try {
            auto b = make_blowup(BaseSingularity::smooth(), w);
            auto t = plt_case_record(c, p);
            out.push_back({c, p, b, t, start_chain(b, t)});
          } catch (const std::domain_error&) {
          }
        }
      }
      int k = n - 1;
      while (k >= 0 && p[k] == bound) p[k--] = 1;
      if (k < 0) break;
      ++p[k];
    }
  }
  return out;
}

struct Step {
  ChainState parent;
  Int b1, b2;
  int j;
  ChainState child;
};

// Every successful step from the given states with 1 <= beta_i <= beta_bound, repeated depth times.
inline std::vector<Step> executed_steps(const std::vector<ChainState>& states, long beta_bound, int depth) {
  std::vector<Step> out;
  std::vector<ChainState> frontier = states;
  for (int d = 0; d < depth; ++d) {
    std::vector<ChainState> next;
    for (const auto& s : frontier)
      for (long b1 = 1; b1 <= beta_bound; ++b1)
        for (long b2 = 1; b2 <= beta_bound; ++b2) {
          if (std::gcd(b1, b2) != 1) continue;
          for (int j = 1; j <= 2; ++j) {
            try {
              auto ns = step(s, b1, b2, j);
              out.push_back({s, Int(b1), Int(b2), j, ns});
              next.push_back(ns);
            } catch (const std::domain_error&) {
            }
          }
        }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace fixtures
