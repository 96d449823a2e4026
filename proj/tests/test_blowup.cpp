#include "oracles.hpp"
#include "toricsing/blowup.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace toricsing;

static std::vector<Int> W(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
static CyclicQuotientType N(long r, long a, long b, long c) { return normalize(CyclicQuotientType(r, a, b, c)); }

static std::vector<CyclicQuotientType> fan_charts(const WeightedBlowup& b) {
  std::vector<CyclicQuotientType> out;
  for (const auto& c : chart_cones(b)) out.push_back(normalize(quotient_type(c)));
  return out;
}

static std::multiset<std::string> as_multiset(const std::vector<CyclicQuotientType>& v) {
  std::multiset<std::string> s;
  for (const auto& t : v) s.insert(to_string(normalize(t)));
  return s;
}

TEST_CASE("base singularities") {
  CHECK(to_string(BaseSingularity::smooth()) == "smooth");
  CHECK(to_string(BaseSingularity::cyclic(5, 2)) == "cyclic:5,2");
  CHECK(to_string(BaseSingularity::odp()) == "odp");
  CHECK_THROWS_AS(BaseSingularity::cyclic(1, 0), std::domain_error);
  CHECK_THROWS_AS(BaseSingularity::cyclic(6, 3), std::domain_error);
  CHECK_THROWS_AS(BaseSingularity::cyclic(5, 5), std::domain_error);
}

TEST_CASE("smooth point charts") {
  auto r = charts_smooth(W({2, 1, 1}));
  CHECK(r.charts == std::vector<CyclicQuotientType>{N(2, 1, 1, 1), N(1, 0, 0, 0), N(1, 0, 0, 0)});
  CHECK(r.cs_points.empty());

  auto s = charts_smooth(W({9, 5, 2}));
  CHECK(s.charts == std::vector<CyclicQuotientType>{N(9, 5, 2, 8), N(5, 9, 2, 4), N(2, 9, 5, 1)});
  CHECK(s.verdicts[0].kind == VerdictKind::canonical_not_terminal);
  CHECK(s.verdicts[1].kind == VerdictKind::canonical_not_terminal);
  CHECK(s.verdicts[2].kind == VerdictKind::terminal);
  CHECK(s.cs_points == std::vector<std::string>{"P1", "P2"});

  for (const auto& t : charts_smooth(W({1, 1, 1})).charts) CHECK(t.smooth());
}

TEST_CASE("cyclic base charts") {
  auto b = make_blowup(BaseSingularity::cyclic(5, 2), W({1, 1, 1}));
  auto r = charts(b);
  CHECK(r.charts == fan_charts(b));
  CHECK(r.charts[0].smooth());
  CHECK(r.charts[1].r == 3);
  CHECK(r.charts[1] == N(3, 1, 1, 1));
  CHECK(r.charts[2].r == 4);

  auto b2 = make_blowup(BaseSingularity::cyclic(2, 1), W({1, 1, 1}));
  for (const auto& t : charts(b2).charts) CHECK(t.smooth());
  CHECK(charts(b2).charts == fan_charts(b2));

  // r w2 - q w3 = 5 - 2*3 < 1
  CHECK_THROWS_WITH_AS(make_blowup(BaseSingularity::cyclic(5, 2), W({1, 1, 3})), "vector not in the blow-up cone",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(make_blowup(BaseSingularity::cyclic(5, 2), W({1, 2, 5})), "vector not in the blow-up cone",
                       std::domain_error);
}

TEST_CASE("odp charts") {
  for (const auto& t : charts_odp(W({1, 1, 1, 1})).charts) CHECK(t.smooth());
  auto r = charts_odp(W({2, 2, 3, 1}));
  CHECK(r.charts == std::vector<CyclicQuotientType>{N(2, 3, 1, -1), N(2, 3, 1, -1), N(3, 2, 2, -1), N(1, 0, 0, 0)});
  auto r2 = charts_odp(W({3, 1, 2, 2}));
  CHECK(r2.charts == std::vector<CyclicQuotientType>{N(3, 2, 2, -1), N(1, 0, 0, 0), N(2, 3, 1, -1), N(2, 3, 1, -1)});
  auto b = make_blowup(BaseSingularity::odp(), W({2, 2, 3, 1}));
  CHECK(as_multiset(r.charts) == as_multiset(fan_charts(b)));
  CHECK_THROWS_AS(make_blowup(BaseSingularity::odp(), W({2, 2, 3, 2})), std::domain_error);
  CHECK_THROWS_AS(make_blowup(BaseSingularity::odp(), W({2, 2, 2, 2})), std::domain_error);
}

TEST_CASE("odp charts are symmetric under the quadric symmetries") {
  for (long w1 = 1; w1 <= 7; ++w1)
    for (long w2 = 1; w2 <= 7; ++w2)
      for (long w3 = 1; w3 < w1 + w2; ++w3) {
        long w4 = w1 + w2 - w3;
        if (std::gcd(std::gcd(w1, w2), std::gcd(w3, w4)) != 1) continue;
        auto base = as_multiset(charts_odp(W({w1, w2, w3, w4})).charts);
        CHECK(as_multiset(charts_odp(W({w2, w1, w3, w4})).charts) == base);
        CHECK(as_multiset(charts_odp(W({w1, w2, w4, w3})).charts) == base);
        CHECK(as_multiset(charts_odp(W({w3, w4, w1, w2})).charts) == base);
      }
}

TEST_CASE("odp vector and weights") {
  CHECK(odp_vector_to_weights(vec(1, 1, 1)) == W({2, 1, 2, 1}));
  CHECK(odp_vector_to_weights(vec(1, 2, 1)) == W({2, 2, 3, 1}));
  CHECK_THROWS_WITH_AS(odp_vector_to_weights(vec(1, 1, -1)), "vector outside the odp cone interior",
                       std::domain_error);
  for (long a1 = 1; a1 <= 6; ++a1)
    for (long a2 = 1; a2 <= 6; ++a2)
      for (long a3 = -5; a3 <= 6; ++a3) {
        Vec3 a = vec(a1, a2, a3);
        if (a1 + a3 <= 0 || a2 + a3 <= 0 || content(a) != 1) continue;
        auto w = odp_vector_to_weights(a);
        CHECK(w[0] + w[1] == w[2] + w[3]);
        CHECK(odp_weights_to_vector(w) == a);
      }
}

TEST_CASE("discrepancy of the exceptional divisor") {
  CHECK(discrepancy_zero(make_blowup(BaseSingularity::smooth(), W({15, 10, 6}))) == 30);
  CHECK(discrepancy_zero(make_blowup(BaseSingularity::odp(), W({1, 1, 1, 1}))) == 1);
  CHECK(discrepancy_zero(make_blowup(BaseSingularity::cyclic(5, 2), W({1, 1, 1}))) == make_rat(3, 5));
}

TEST_CASE("toric discrepancy") {
  std::array<Vec3, 3> c{vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)};
  CHECK(toric_discrepancy(c, {0, 0, 0}, vec(1, 1, 1)) == 2);
  CHECK(toric_discrepancy(c, {0, 0, 0}, vec(15, 10, 6)) == 30);
  CHECK(toric_discrepancy(c, {1, 1, 1}, vec(1, 1, 1)) == -1);
  // coefficients follow the stored (sorted) generator order, where e1 comes last
  SimplicialCone sc(c[0], c[1], c[2]);
  CHECK(sc.generators()[2] == c[0]);
  CHECK(toric_discrepancy(sc, {0, 0, make_rat(1, 2)}, vec(2, 1, 1)) == 2);
  CHECK_THROWS_AS(toric_discrepancy(c, {0, 0, 0}, vec(1, 1, 0)), std::domain_error);
}

TEST_CASE("discrepancy formula agrees with the toric computation") {
  for (int t = 0; t < 300; ++t) {
    long w1 = oracle::uniform(1, 30), w2 = oracle::uniform(1, 30), w3 = oracle::uniform(1, 30);
    if (std::gcd(std::gcd(w1, w2), w3) != 1) continue;
    auto b = make_blowup(BaseSingularity::smooth(), W({w1, w2, w3}));
    auto e = base_rays(b.base);
    CHECK(discrepancy_zero(b) == toric_discrepancy(std::array<Vec3, 3>{e[0], e[1], e[2]}, {0, 0, 0}, blowup_vector(b)));
  }
  int done = 0;
  while (done < 300) {
    long r = oracle::uniform(2, 15), q = oracle::uniform(1, r - 1);
    if (std::gcd(r, q) != 1) continue;
    auto w = W({oracle::uniform(1, 20), oracle::uniform(1, 20), oracle::uniform(1, 20)});
    WeightedBlowup b;
    try {
      b = make_blowup(BaseSingularity::cyclic(r, q), w);
    } catch (const std::domain_error&) {
      continue;
    }
    auto e = base_rays(b.base);
    CHECK(discrepancy_zero(b) == toric_discrepancy(std::array<Vec3, 3>{e[0], e[1], e[2]}, {0, 0, 0}, blowup_vector(b)));
    ++done;
  }
  // the odp cone is Gorenstein: psi = (1,1,1) is 1 on all four rays
  RatVec3 psi{1, 1, 1};
  for (const auto& e : base_rays(BaseSingularity::odp())) CHECK(evaluate(psi, e) == 1);
  for (long w1 = 1; w1 <= 8; ++w1)
    for (long w2 = 1; w2 <= 8; ++w2)
      for (long w3 = 1; w3 < w1 + w2; ++w3) {
        auto w = W({w1, w2, w3, w1 + w2 - w3});
        if (std::gcd(std::gcd(w1, w2), std::gcd(w3, w1 + w2 - w3)) != 1) continue;
        auto b = make_blowup(BaseSingularity::odp(), w);
        CHECK(discrepancy_zero(b) == evaluate(psi, blowup_vector(b)) - 1);
      }
}

static MonomialDivisor D(std::vector<std::vector<long>> e, Rat d = 1) {
  MonomialDivisor m;
  for (const auto& x : e) m.exponents.push_back(std::vector<Int>(x.begin(), x.end()));
  m.d = d;
  return m;
}

TEST_CASE("weighted multiplicity") {
  CHECK(weighted_multiplicity(W({5, 3, 2}), D({{2, 0, 0}, {0, 3, 0}, {0, 1, 3}})) == 9);
  CHECK(weighted_multiplicity(W({9, 5, 2}), D({{5, 0, 0}, {0, 9, 0}, {0, 0, 23}})) == 45);
  for (long a = 1; a <= 10; ++a)
    for (long b = 1; b <= 10; ++b)
      CHECK(weighted_multiplicity(W({a, b, 1}), D({{1, 1, 0}, {0, 0, a + b}})) == a + b);
  CHECK_THROWS_AS(weighted_multiplicity(W({1, 1, 1}), D({})), std::domain_error);
  CHECK_THROWS_AS(weighted_multiplicity(W({1, 1, 1}), D({{1, 1}})), std::domain_error);
}

TEST_CASE("divisor discrepancy") {
  auto s = BaseSingularity::smooth();
  CHECK(divisor_discrepancy(make_blowup(s, W({5, 3, 2})), D({{2, 0, 0}, {0, 3, 0}, {0, 1, 3}})) == 0);
  CHECK(divisor_discrepancy(make_blowup(s, W({9, 5, 2})), D({{5, 0, 0}, {0, 9, 0}, {0, 0, 23}}, make_rat(1, 3))) ==
        0);
  CHECK(divisor_discrepancy(make_blowup(s, W({9, 5, 2})), D({{5, 0, 0}, {0, 9, 0}, {0, 0, 23}}, make_rat(1, 2))) <
        0);
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b)
      CHECK(divisor_discrepancy(make_blowup(s, W({a, b, 1})), D({{1, 1, 0}, {0, 0, a + b}})) == 0);
}

TEST_CASE("divisor discrepancy is affine in d and monotone in the support") {
  auto b = make_blowup(BaseSingularity::smooth(), W({7, 5, 3}));
  auto full = D({{3, 0, 0}, {0, 4, 0}, {0, 0, 7}});
  Rat base = discrepancy_zero(b);
  for (long n = 1; n <= 6; ++n) {
    auto x = full;
    x.d = make_rat(n, 6);
    CHECK(divisor_discrepancy(b, x) == base - x.d * weighted_multiplicity(b.weights, full));
  }
  // adding a monomial of lower weight never raises the discrepancy
  auto more = full;
  more.exponents.push_back(W({0, 1, 1}));
  CHECK(divisor_discrepancy(b, more) >= divisor_discrepancy(b, full));
  auto fewer = full;
  fewer.exponents.push_back(W({0, 0, 1}));
  CHECK(weighted_multiplicity(b.weights, fewer) <= weighted_multiplicity(b.weights, full));
}

TEST_CASE("canonical and terminal blow-ups") {
  auto s = BaseSingularity::smooth();
  CHECK(is_canonical_blowup(make_blowup(s, W({9, 5, 2}))));
  CHECK_FALSE(is_terminal_blowup(make_blowup(s, W({9, 5, 2}))));
  CHECK(is_canonical_blowup(make_blowup(s, W({2, 2, 1}))));
  CHECK(is_canonical_blowup(make_blowup(BaseSingularity::odp(), W({1, 2, 2, 1}))));
  CHECK(is_terminal_blowup(make_blowup(s, W({1, 1, 1}))));
  CHECK(is_terminal_blowup(make_blowup(s, W({2, 1, 1}))));
  CHECK(is_canonical_blowup(make_blowup(s, W({7, 5, 1}))));
  // chart 1/7(3,2,6) has sum 6/7 at k = 5
  CHECK_FALSE(is_canonical_blowup(make_blowup(s, W({7, 3, 2}))));
}

TEST_CASE("blow-up validation") {
  auto s = BaseSingularity::smooth();
  CHECK_THROWS_AS(make_blowup(s, W({2, 2, 2})), std::domain_error);
  CHECK_THROWS_AS(make_blowup(s, W({0, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(make_blowup(s, W({1, 1})), std::domain_error);
  CHECK_THROWS_AS(make_blowup(BaseSingularity::odp(), W({1, 1, 1})), std::domain_error);
}
