#include "oracles.hpp"
#include "toricsing/enumerators.hpp"

#include <doctest.h>

#include <set>

using namespace toricsing;

using Key = std::vector<Int>;

static Key K(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

static std::set<Key> keys(const EnumerationReport& r) { return {r.hits.begin(), r.hits.end()}; }

static bool same(const EnumerationReport& a, const EnumerationReport& b) {
  return a.bound == b.bound && a.hits == b.hits && a.tags == b.tags && a.values == b.values && a.errors == b.errors;
}

TEST_CASE("canonical blow-ups of a smooth point, small bounds") {
  auto one = enumerate_canonical_smooth(1);
  CHECK(one.hits == std::vector<Key>{K({1, 1, 1})});
  CHECK(one.errors.empty());

  auto six = enumerate_canonical_smooth(6);
  auto s = keys(six);
  CHECK(s.count(K({5, 3, 2})));
  CHECK(s.count(K({6, 4, 3})));
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= a; ++b) CHECK(s.count(K({a, b, 1})));
  for (long l = 3; l <= 6; ++l) CHECK(s.count(K({l, l - 1, 2})));
  CHECK(six.errors.empty());
  CHECK(std::is_sorted(six.hits.begin(), six.hits.end()));
  CHECK(std::adjacent_find(six.hits.begin(), six.hits.end()) == six.hits.end());
}

TEST_CASE("sporadic weights up to 15") {
  auto r = enumerate_canonical_smooth(15);
  std::set<Key> sporadic;
  for (std::size_t i = 0; i < r.hits.size(); ++i)
    if (r.tags[i] == "sporadic") sporadic.insert(r.hits[i]);
  std::set<Key> expect{K({15, 10, 6}), K({12, 8, 5}), K({10, 7, 4}), K({9, 6, 4}), K({8, 5, 3}),
                       K({7, 5, 3}),   K({6, 4, 3}),  K({5, 3, 2}),  K({9, 5, 2})};
  CHECK(sporadic == expect);
  for (const auto& k : expect) CHECK(canonical_smooth_family(k) == "sporadic");
  // sporadics win over families: (3,2,2) is (l,l-1,2)
  CHECK(canonical_smooth_family(K({3, 2, 2})) == "(l,l-1,2)");
  CHECK(canonical_smooth_family(K({7, 4, 1})) == "(w1,w2,1)");
  CHECK(canonical_smooth_family(K({8, 3, 2})).empty());
}

TEST_CASE("stated criterion reproduces the list exactly") {
  auto r = enumerate_canonical_smooth(15, 1, CanonicalRule::stated_criterion);
  CHECK(r.errors.empty());
  for (const auto& t : r.tags) CHECK(t != "untagged");
}

TEST_CASE("hits re-verify and random non-hits fail") {
  const long B = 12;
  auto r = enumerate_canonical_smooth(B);
  for (const auto& h : r.hits) CHECK(is_canonical_blowup(make_blowup(BaseSingularity::smooth(), h)));
  auto s = keys(r);
  int sampled = 0;
  while (sampled < 100) {
    long a = oracle::uniform(1, B), b = oracle::uniform(1, a), c = oracle::uniform(1, b);
    if (std::gcd(std::gcd(a, b), c) != 1 || s.count(K({a, b, c}))) continue;
    CHECK_FALSE(is_canonical_blowup(make_blowup(BaseSingularity::smooth(), K({a, b, c}))));
    ++sampled;
  }
}

TEST_CASE("enumerations are monotone in the bound") {
  for (long b = 2; b < 12; ++b) {
    auto lo = keys(enumerate_canonical_smooth(b)), hi = keys(enumerate_canonical_smooth(b + 1));
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
    auto olo = keys(enumerate_canonical_odp(b)), ohi = keys(enumerate_canonical_odp(b + 1));
    CHECK(std::includes(ohi.begin(), ohi.end(), olo.begin(), olo.end()));
  }
}

TEST_CASE("enumerations do not depend on the number of workers") {
  CHECK(same(enumerate_canonical_smooth(14, 1), enumerate_canonical_smooth(14, 3)));
  CHECK(same(enumerate_canonical_odp(7, 1), enumerate_canonical_odp(7, 4)));
  CHECK(same(enumerate_terminal_cyclic(5, 2, 8, 1), enumerate_terminal_cyclic(5, 2, 8, 2)));
  CHECK(same(enumerate_plt_triples_case(7, 9, 1), enumerate_plt_triples_case(7, 9, 4)));
}

TEST_CASE("canonical blow-ups of the odp") {
  auto one = enumerate_canonical_odp(1);
  CHECK(one.hits == std::vector<Key>{K({1, 1, 1, 1})});
  auto three = enumerate_canonical_odp(3);
  CHECK(three.errors.empty());
  CHECK(keys(three).count(K({1, 3, 2, 2})));
  // every balanced orbit representative with a unit weight, and nothing else
  std::set<Key> expect;
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        long d = a + b - c;
        if (d < 1 || d > 3 || std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
        if (std::min({a, b, c, d}) != 1) continue;
        expect.insert(odp_representative(K({a, b, c, d})));
      }
  CHECK(keys(three) == expect);
  auto five = enumerate_canonical_odp(5);
  CHECK_FALSE(keys(five).count(odp_representative(K({2, 4, 3, 3}))));
  CHECK(five.errors.empty());
  for (const auto& h : five.hits) {
    CHECK(odp_representative(h) == h);
    CHECK(is_canonical_blowup(make_blowup(BaseSingularity::odp(), h)));
  }
}

TEST_CASE("odp orbit representative") {
  CHECK(odp_representative(K({2, 2, 3, 1})) == K({1, 3, 2, 2}));
  CHECK(odp_representative(K({3, 1, 2, 2})) == K({1, 3, 2, 2}));
  CHECK(odp_representative(K({1, 1, 1, 1})) == K({1, 1, 1, 1}));
}

TEST_CASE("terminal blow-ups of cyclic points") {
  auto r = enumerate_terminal_cyclic(2, 1, 4);
  CHECK_FALSE(r.hits.empty());
  for (const auto& h : r.hits) {
    auto b = make_blowup(BaseSingularity::cyclic(2, 1), h);
    for (const auto& t : charts(b).charts) {
      std::array<long, 3> a{to_long(t.a[0]), to_long(t.a[1]), to_long(t.a[2])};
      CHECK(oracle::terminal(to_long(t.r), a));
    }
    CHECK(discrepancy_zero(b) > 0);
    // the validity conditions
    CHECK(h[2] >= 1);
    CHECK(2 * h[1] - h[2] >= 1);
    CHECK(2 * h[0] - h[2] >= 1);
  }
  auto big = enumerate_terminal_cyclic(5, 2, 10);
  for (const auto& h : big.hits) {
    CHECK(5 * h[1] - 2 * h[2] >= 1);
    CHECK(5 * h[0] - h[2] >= 1);
    CHECK(is_terminal_blowup(make_blowup(BaseSingularity::cyclic(5, 2), h)));
  }
}

TEST_CASE("r = 1 gives the terminal part of the smooth table") {
  auto t = keys(enumerate_terminal_cyclic(1, 0, 12));
  std::set<Key> expect;
  for (const auto& h : enumerate_canonical_smooth(12).hits)
    if (is_terminal_blowup(make_blowup(BaseSingularity::smooth(), h))) expect.insert(h);
  CHECK(t == expect);
  for (const auto& h : t) CHECK(h[2] == 1);
}

TEST_CASE("plt parameter tables") {
  auto two = enumerate_plt_triples_case(2, 30);
  std::set<Key> expect{K({2, 3, 3}), K({2, 3, 4}), K({2, 3, 5})};
  for (long k = 2; k <= 30; ++k) expect.insert(K({2, 2, k}));
  CHECK(keys(two) == expect);
  CHECK(two.errors.empty());
  CHECK(two.key_name == "params");
  CHECK(two.value_name == "anti_degree");

  auto one = enumerate_plt_triples_case(1, 10);
  std::set<Key> d1;
  for (long d = 1; d <= 10; ++d) d1.insert(K({d}));
  CHECK(keys(one) == d1);

  auto three = enumerate_plt_triples_case(3, 10);
  CHECK(three.errors.empty());
  for (const auto& h : three.hits) {
    bool fam = (h[0] == 2 && h[1] == 2) || (h[0] == 2 && h[1] == 3 && h[2] <= 2) ||
               (h[0] == 2 && h[1] >= 4 && h[2] == 1) || (h[0] == 3 && h[1] == 2 && h[2] == 1);
    CHECK(fam);
  }
  for (long k = 1; k <= 10; ++k) CHECK(keys(three).count(K({2, 2, k})));
  CHECK(keys(three).count(K({3, 2, 1})));
  CHECK_THROWS_AS(enumerate_plt_triples_case(9, 10), std::domain_error);
}

TEST_CASE("every plt table matches its families") {
  for (int c = 1; c <= 8; ++c) {
    auto r = enumerate_plt_triples_case(c, 12);
    CAPTURE(c);
    CHECK(r.errors.empty());
    for (const auto& h : r.hits) CHECK(plt_case_predicate(c, h));
  }
}
