#include "toricsing/enumerators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace toricsing {

namespace {

struct Row {
  std::vector<Int> key;
  std::string tag;
  Rat value;
  bool operator<(const Row& o) const { return key < o.key; }
};

// Runs task(i) for i in [0, n) over `jobs` threads; rows are merged and sorted.
std::vector<Row> collect(long n, int jobs, const std::function<void(long, std::vector<Row>&)>& task) {
  std::vector<Row> all;
  if (jobs <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) task(i, all);
  } else {
    int t = static_cast<int>(std::min<long>(jobs, n));
    std::vector<std::vector<Row>> parts(t);
    std::vector<std::exception_ptr> errs(t);
    std::vector<std::thread> pool;
    for (int k = 0; k < t; ++k)
      pool.emplace_back([&, k] {
        try {
          for (long i = k; i < n; i += t) task(i, parts[k]);
        } catch (...) {
          errs[k] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end(), [](const Row& a, const Row& b) { return a.key == b.key; }), all.end());
  return all;
}

EnumerationReport make_report(long bound, std::vector<Row> rows) {
  EnumerationReport r;
  r.bound = bound;
  for (auto& row : rows) {
    r.hits.push_back(std::move(row.key));
    r.tags.push_back(std::move(row.tag));
    r.values.push_back(std::move(row.value));
  }
  return r;
}

std::string key_string(const std::vector<Int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
  return s + ")";
}

bool contains(const EnumerationReport& r, const std::vector<Int>& w) {
  return std::binary_search(r.hits.begin(), r.hits.end(), w);
}

Int gcd_all(const std::vector<Int>& w) {
  Int g = 0;
  for (const auto& x : w) g = gcd(g, x);
  return g;
}

void check_bound(long b) {
  if (b < 1) throw std::domain_error("bound must be positive");
}

}  // namespace

const std::vector<std::vector<Int>>& canonical_sporadics() {
  static const std::vector<std::vector<Int>> s = {{15, 10, 6}, {12, 8, 5}, {10, 7, 4}, {9, 6, 4}, {8, 5, 3},
                                                  {7, 5, 3},   {6, 4, 3},  {5, 3, 2},  {9, 5, 2}};
  return s;
}

std::string canonical_smooth_family(const std::vector<Int>& w) {
  const auto& sp = canonical_sporadics();
  if (std::find(sp.begin(), sp.end(), w) != sp.end()) return "sporadic";
  if (w.size() != 3) return "";
  if (w[2] == 1) return "(w1,w2,1)";
  if (w[2] == 2 && w[1] == w[0] - 1) return "(l,l-1,2)";
  return "";
}

EnumerationReport enumerate_canonical_smooth(long max_weight, int jobs, CanonicalRule rule) {
  check_bound(max_weight);
  auto rows = collect(max_weight, jobs, [&](long i, std::vector<Row>& out) {
    long w1 = i + 1;
    for (long w2 = 1; w2 <= w1; ++w2)
      for (long w3 = 1; w3 <= w2; ++w3) {
        std::vector<Int> w{Int(w1), Int(w2), Int(w3)};
        if (gcd_all(w) != 1) continue;
        auto b = make_blowup(BaseSingularity::smooth(), w);
        if (!is_canonical_blowup(b, rule)) continue;
        std::string tag = canonical_smooth_family(w);
        out.push_back({w, tag.empty() ? "untagged" : tag, discrepancy_zero(b)});
      }
  });
  auto rep = make_report(max_weight, std::move(rows));
  for (std::size_t i = 0; i < rep.hits.size(); ++i)
    if (rep.tags[i] == "untagged") rep.errors.push_back("untagged hit " + key_string(rep.hits[i]));
  for (const auto& s : canonical_sporadics())
    if (s[0] <= max_weight && !contains(rep, s)) rep.errors.push_back("missing sporadic " + key_string(s));
  for (long w1 = 1; w1 <= max_weight; ++w1) {
    for (long w2 = 1; w2 <= w1; ++w2)
      if (!contains(rep, {Int(w1), Int(w2), Int(1)}))
        rep.errors.push_back("missing family member " + key_string({Int(w1), Int(w2), Int(1)}));
    if (w1 >= 3 && !contains(rep, {Int(w1), Int(w1 - 1), Int(2)}))
      rep.errors.push_back("missing family member " + key_string({Int(w1), Int(w1 - 1), Int(2)}));
  }
  return rep;
}

std::vector<Int> odp_representative(const std::vector<Int>& w) {
  if (w.size() != 4) throw std::domain_error("odp weights need 4 entries");
  std::vector<Int> best;
  for (const auto& v : quadric_orbit({w[0], w[1], w[2], w[3]})) {
    std::vector<Int> c(v.begin(), v.end());
    if (best.empty() || c < best) best = c;
  }
  return best;
}

EnumerationReport enumerate_canonical_odp(long max_weight, int jobs) {
  check_bound(max_weight);
  auto rows = collect(max_weight, jobs, [&](long i, std::vector<Row>& out) {
    long w1 = i + 1;
    for (long w2 = 1; w2 <= max_weight; ++w2)
      for (long w3 = 1; w3 <= max_weight; ++w3) {
        long w4 = w1 + w2 - w3;
        if (w4 < 1 || w4 > max_weight) continue;
        std::vector<Int> w{Int(w1), Int(w2), Int(w3), Int(w4)};
        if (gcd_all(w) != 1 || odp_representative(w) != w) continue;
        auto b = make_blowup(BaseSingularity::odp(), w);
        if (!is_canonical_blowup(b)) continue;
        bool unit = std::find(w.begin(), w.end(), Int(1)) != w.end();
        out.push_back({w, unit ? "unit weight" : "no unit weight", discrepancy_zero(b)});
      }
  });
  auto rep = make_report(max_weight, std::move(rows));
  for (std::size_t i = 0; i < rep.hits.size(); ++i)
    if (rep.tags[i] != "unit weight") rep.errors.push_back("canonical without a unit weight " + key_string(rep.hits[i]));
  // every balanced orbit with a unit weight must appear
  for (long w2 = 1; w2 <= max_weight; ++w2)
    for (long w3 = 1; w3 <= max_weight; ++w3) {
      long w4 = 1 + w2 - w3;
      if (w4 < 1 || w4 > max_weight) continue;
      auto rep_w = odp_representative({Int(1), Int(w2), Int(w3), Int(w4)});
      if (!contains(rep, rep_w)) rep.errors.push_back("missing unit-weight quadruple " + key_string(rep_w));
    }
  return rep;
}

EnumerationReport enumerate_terminal_cyclic(const Int& r, const Int& q, long max_weight, int jobs) {
  check_bound(max_weight);
  if (r < 1) throw std::domain_error("r must be positive");
  bool smooth = r == 1;
  BaseSingularity base = smooth ? BaseSingularity::smooth() : BaseSingularity::cyclic(r, q);
  auto rows = collect(max_weight, jobs, [&](long i, std::vector<Row>& out) {
    long w1 = i + 1;
    for (long w2 = 1; w2 <= (smooth ? w1 : max_weight); ++w2)
      for (long w3 = 1; w3 <= (smooth ? w2 : max_weight); ++w3) {
        std::vector<Int> w{Int(w1), Int(w2), Int(w3)};
        if (gcd_all(w) != 1) continue;
        WeightedBlowup b;
        try {
          b = make_blowup(base, w);
        } catch (const std::domain_error&) {
          continue;  // outside the blow-up cone
        }
        if (!is_terminal_blowup(b)) continue;
        out.push_back({w, "terminal", discrepancy_zero(b)});
      }
  });
  return make_report(max_weight, std::move(rows));
}

bool plt_case_predicate(int c, const std::vector<Int>& p) {
  if (c < 1 || c > 8) throw std::domain_error("plt table cases are 1..8");
  if (!plt_case_domain(c, p)) return false;
  auto s = plt_case_shape(c, p);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(s.weights[i], s.weights[j]) != 1) return false;
  if (plt_case_is_toric(s)) return false;
  auto pair = make_wps_pair(s.weights, s.indices);
  if (!triple_ample_and_adjunction(pair, s.gamma_degree).ample) return false;
  try {
    gamma_different(pair, s.gamma_degree);
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

EnumerationReport enumerate_plt_triples_case(int c, long bound, int jobs) {
  if (c < 1 || c > 8) throw std::domain_error("plt table cases are 1..8");
  if (bound < 2) throw std::domain_error("bound must be at least 2");
  int n = plt_case_arity(c);
  auto rows = collect(bound, jobs, [&](long i, std::vector<Row>& out) {
    std::vector<Int> p(n, Int(1));
    p[0] = i + 1;
    while (true) {
      if (plt_case_predicate(c, p)) {
        auto s = plt_case_shape(c, p);
        auto aa = triple_ample_and_adjunction(make_wps_pair(s.weights, s.indices), s.gamma_degree);
        out.push_back({p, plt_case_family(c, p) ? "listed" : "unlisted", aa.anti_degree});
      }
      int k = n - 1;
      while (k >= 1 && p[k] == bound) p[k--] = 1;
      if (k < 1) break;
      ++p[k];
    }
  });
  auto rep = make_report(bound, std::move(rows));
  rep.key_name = "params";
  rep.value_name = "anti_degree";
  for (std::size_t i = 0; i < rep.hits.size(); ++i)
    if (rep.tags[i] != "listed") rep.errors.push_back("unlisted parameters " + key_string(rep.hits[i]));
  // listed families inside the bound must all be hits (whenever the surface is well-formed)
  std::vector<Int> p(n, Int(1));
  while (true) {
    if (plt_case_family(c, p)) {
      auto s = plt_case_shape(c, p);
      bool wf = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) wf = wf && gcd(s.weights[i], s.weights[j]) == 1;
      if (wf && !contains(rep, p)) rep.errors.push_back("missing listed parameters " + key_string(p));
    }
    int k = n - 1;
    while (k >= 0 && p[k] == bound) p[k--] = 1;
    if (k < 0) break;
    ++p[k];
  }
  return rep;
}

}  // namespace toricsing
