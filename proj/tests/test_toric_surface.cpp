#include "oracles.hpp"
#include "toricsing/surface_pairs.hpp"
#include "toricsing/toric_surface.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace toricsing;

static ToricSurface P2(std::vector<Rat> b = {0, 0, 0}) { return ToricSurface({{1, 0}, {0, 1}, {-1, -1}}, b); }

TEST_CASE("projective plane intersections") {
  auto s = P2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s.intersection(i, j) == 1);
  auto k = s.canonical_class();
  CHECK(s.dot(k, k) == 9);
  for (std::size_t i = 0; i < 3; ++i) CHECK(s.cone_index(i) == 1);
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}}, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {-1, -1}, {0, 1}}, {0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(ToricSurface({{2, 0}, {0, 1}, {-1, -1}}, {0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}, {-1, -1}}, {1, 0, 0}), std::domain_error);
  // not complete: all rays in a half plane
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {1, 1}, {0, 1}}, {0, 0, 0}), std::domain_error);
}

TEST_CASE("weighted projective planes") {
  // D_i . D_j = 1/a_k, D_i^2 = a_i / (a_j a_k)
  for (long a1 = 1; a1 <= 9; ++a1)
    for (long a2 = 1; a2 <= 9; ++a2)
      for (long a3 = 1; a3 <= 9; ++a3) {
        if (std::gcd(a1, a2) != 1 || std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
        std::array<Int, 3> a{a1, a2, a3};
        auto s = wps_surface(a, {0, 0, 0});
        REQUIRE(s.size() == 3);
        Int prod = a[0] * a[1] * a[2];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            Rat expect = i == j ? make_rat(a[i] * a[i], prod) : make_rat(a[i] * a[j], prod);
            CHECK(s.intersection(i, j) == expect);
          }
        auto k = s.canonical_class();
        Int sum = a[0] + a[1] + a[2];
        CHECK(s.dot(k, k) == make_rat(sum * sum, prod));
        // O(g) from any integral representative
        for (long g = 1; g <= 12; ++g) {
          auto c = wps_class(a, g);
          CHECK(c[0] * a[0] + c[1] * a[1] + c[2] * a[2] == g);
        }
      }
}

TEST_CASE("sections of a divisor") {
  auto s = P2();
  CHECK(s.section_points({1, 0, 0}).size() == 3);
  CHECK(s.section_points({2, 0, 0}).size() == 6);
  CHECK(s.section_points({1, 1, 1}).size() == 10);
  CHECK(s.section_points({-1, 0, 0}).empty());
  auto q = wps_surface({1, 1, 2}, {0, 0, 0});
  // h^0(O(2)) on P(1,1,2) is 4
  CHECK(q.section_points(wps_class({1, 1, 2}, 2)).size() == 4);
}

TEST_CASE("general members on the projective plane") {
  auto conic = general_member(P2(), {2, 0, 0});
  CHECK(conic.multiplicities().empty());
  // a conic meets the line with coefficient 1/2 in two points
  auto s = P2({make_rat(1, 2), 0, 0});
  auto m = general_member(s, {2, 0, 0});
  CHECK(m.multiplicities() == std::vector<Int>{2, 2});
  // a line through none of the vertices, against three boundary lines
  auto t = P2({make_rat(1, 2), make_rat(2, 3), make_rat(4, 5)});
  CHECK(general_member(t, {1, 0, 0}).multiplicities() == std::vector<Int>{2, 3, 5});
}

TEST_CASE("general member failures") {
  auto s = P2();
  CHECK_THROWS_WITH_AS(general_member(s, {1, 0, 0}, std::vector<Vec2>{{5, 5}}), "monomial is not a section of the divisor",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(general_member(s, {-1, 0, 0}), "empty linear system", std::domain_error);
  CHECK_THROWS_AS(general_member(s, {1, 0, 0}, std::vector<Vec2>{{0, 0}}), std::domain_error);
  // three collinear monomials: a pencil of pairs of lines
  CHECK_THROWS_WITH_AS(general_member(s, {2, 0, 0}, std::vector<Vec2>{{0, 0}, {-1, 0}, {-2, 0}}),
                       "general member is reducible", std::domain_error);
}
