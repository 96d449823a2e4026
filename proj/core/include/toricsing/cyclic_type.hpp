#pragma once
#include "toricsing/rational.hpp"

#include <array>

namespace toricsing {

// 1/r(a1,a2,a3) with the weights reduced into [0, r).
struct CyclicQuotientType {
  Int r;
  std::array<Int, 3> a;

  CyclicQuotientType() : r(1), a{0, 0, 0} {}
  CyclicQuotientType(const Int& order, const Int& a1, const Int& a2, const Int& a3);

  bool smooth() const { return r == 1; }
  // gcd(ai, r) = 1 for every i (isolated fixed point)
  bool well_formed() const;
  // gcd(ai, aj, r) = 1 for every pair (no quasi-reflections)
  bool codim1_free() const;

  bool operator==(const CyclicQuotientType& o) const { return r == o.r && a == o.a; }
  bool operator<(const CyclicQuotientType& o) const;
};

std::string to_string(const CyclicQuotientType& t);  // "1/5(1,3,4)"

}  // namespace toricsing
