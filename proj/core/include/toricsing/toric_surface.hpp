#pragma once
// Complete toric surfaces with a toric boundary: intersection numbers, sections of
// torus-invariant divisors, and the singularities of a general member of a linear system.

#include "toricsing/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace toricsing {

using Vec2 = std::array<Int, 2>;

Int det2(const Vec2& a, const Vec2& b);
// Sorts by angle in [0, 2pi) starting from the positive x axis.
bool angle_less(const Vec2& a, const Vec2& b);

class ToricSurface {
 public:
  // rays: primitive, counter-clockwise, spanning a complete fan; boundary[i] is the
  // coefficient of D_i, in [0, 1).
  ToricSurface(std::vector<Vec2> rays, std::vector<Rat> boundary);

  std::size_t size() const { return rays_.size(); }
  const Vec2& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<Vec2>& rays() const { return rays_; }
  const Rat& boundary(std::size_t i) const { return boundary_[i]; }
  const std::vector<Rat>& boundary() const { return boundary_; }
  std::size_t next(std::size_t i) const { return (i + 1) % size(); }
  std::size_t prev(std::size_t i) const { return (i + size() - 1) % size(); }

  Int cone_index(std::size_t i) const;  // |det(u_i, u_{i+1})|
  Rat intersection(std::size_t i, std::size_t j) const;
  Rat dot(const std::vector<Rat>& c, const std::vector<Rat>& d) const;
  std::vector<Rat> canonical_class() const;      // -sum D_i
  std::vector<Rat> log_canonical_class() const;  // K + boundary

  // Lattice points m with <m, u_i> + c_i >= 0, i.e. the torus-invariant sections of sum c_i D_i.
  std::vector<Vec2> section_points(const std::vector<Int>& c) const;

 private:
  std::vector<Vec2> rays_;
  std::vector<Rat> boundary_;
};

std::vector<Rat> to_rat(const std::vector<Int>& c);

struct SpecialPoint {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  std::size_t index = 0;      // vertex: cone (index, index+1); edge: ray index
  Int multiplicity = 1;       // the different of the boundary on the curve is (m-1)/m there
  std::size_t resembled = 0;  // vertex only: the ray whose divisor the curve looks like locally
  Int count = 1;              // edge only: number of such points on the divisor
};

struct MemberAnalysis {
  std::vector<SpecialPoint> points;
  // All multiplicities > 1, with edge points repeated, sorted.
  std::vector<Int> multiplicities() const;
};

// General member of the linear system spanned by the monomials M of sum c_i D_i
// (all section points when M is absent). Throws std::domain_error when the general member
// has a fixed component, is reducible, is singular at a fixed point, or the pair
// (S, boundary + member) is not plt along it.
MemberAnalysis general_member(const ToricSurface& s, const std::vector<Int>& c,
                              const std::optional<std::vector<Vec2>>& sections = std::nullopt);

// Fan of P(a1,a2,a3), pairwise coprime weights, rays in coordinate order.
ToricSurface wps_surface(const std::array<Int, 3>& a, const std::array<Rat, 3>& boundary);
// Integral coefficients c with sum c_i a_i = g (the class O(g)).
std::vector<Int> wps_class(const std::array<Int, 3>& a, const Int& g);

// (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
std::array<Int, 3> extended_gcd(const Int& a, const Int& b);

}  // namespace toricsing
