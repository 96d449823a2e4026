#pragma once
// Integer lattice N = Z^3: vectors, 3x3 matrices, Smith normal form, simplicial cones.

#include "toricsing/cyclic_type.hpp"
#include "toricsing/rational.hpp"

#include <array>
#include <utility>

namespace toricsing {

using LatticeVector = std::array<Int, 3>;
using Vec3 = LatticeVector;
using Mat3 = std::array<std::array<Int, 3>, 3>;  // row major
using RatVec3 = std::array<Rat, 3>;

Vec3 vec(long x, long y, long z);
Int dot(const Vec3& a, const Vec3& b);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 scale(const Int& k, const Vec3& v);
Int content(const Vec3& v);  // gcd of the coordinates, >= 0
bool is_primitive(const Vec3& v);
std::string to_string(const Vec3& v);

// v = content * primitive; throws std::domain_error on the zero vector.
std::pair<Vec3, Int> primitivize(const Vec3& v);

Mat3 identity3();
Mat3 mul(const Mat3& a, const Mat3& b);
Vec3 mul(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);
Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
Int det(const Mat3& m);
Int det(const Vec3& a, const Vec3& b, const Vec3& c);  // det of the matrix with columns a, b, c
// Inverse of a unimodular matrix (throws if |det| != 1).
Mat3 inverse_unimodular(const Mat3& m);

struct SNFDecomposition {
  Mat3 left;
  std::array<Int, 3> diag;
  Mat3 right;
};

// left * M * right = diag(d1,d2,d3), d1 | d2 | d3, di >= 0.
SNFDecomposition smith_normal_form(const Mat3& m);

// Unimodular U with U v = e3, for primitive v.
Mat3 unimodular_to_e3(const Vec3& v);

// Index of Z a + Z b inside its saturation (gcd of the 2x2 minors).
Int saturation_index(const Vec3& a, const Vec3& b);

// Solve A x = b exactly for invertible A.
RatVec3 solve(const Mat3& a, const RatVec3& b);

class SimplicialCone {
 public:
  // Generators are primitivized and stored in lexicographic order.
  SimplicialCone(const Vec3& v1, const Vec3& v2, const Vec3& v3);
  const std::array<Vec3, 3>& generators() const { return gens_; }
  int orientation() const { return orientation_; }  // sign of det of the stored order
  bool operator==(const SimplicialCone& o) const { return gens_ == o.gens_; }

 private:
  std::array<Vec3, 3> gens_;
  int orientation_;
};

Int cone_index(const SimplicialCone& c);
Int cone_index(const std::array<Vec3, 3>& gens);

// Raw SNF-derived type; throws std::domain_error when the quotient group is not cyclic.
CyclicQuotientType quotient_type(const SimplicialCone& c);
CyclicQuotientType quotient_type(const std::array<Vec3, 3>& gens);

// psi with psi(v_i) = values_i for the generators in the given order.
RatVec3 interior_hyperplane_functional(const std::array<Vec3, 3>& gens, const RatVec3& values);
RatVec3 interior_hyperplane_functional(const SimplicialCone& c, const RatVec3& values);
Rat evaluate(const RatVec3& psi, const Vec3& v);

// Coordinates of v in the basis given by gens (rational).
RatVec3 cone_coordinates(const std::array<Vec3, 3>& gens, const Vec3& v);
bool strictly_inside(const std::array<Vec3, 3>& gens, const Vec3& v);

}  // namespace toricsing
