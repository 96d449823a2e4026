#pragma once
// Weighted blow-ups of a smooth point, of 1/r(-1,-q,1) and of the ordinary double point.

#include "toricsing/lattice.hpp"
#include "toricsing/quotient.hpp"

#include <string>
#include <vector>

namespace toricsing {

struct BaseSingularity {
  enum class Kind { smooth, cyclic, odp };
  Kind kind = Kind::smooth;
  Int r = 1, q = 0;  // cyclic only: 1/r(-1,-q,1), r >= 2, 1 <= q <= r-1, gcd(r,q) = 1

  static BaseSingularity smooth();
  static BaseSingularity cyclic(const Int& r, const Int& q);
  static BaseSingularity odp();
  bool operator==(const BaseSingularity& o) const = default;
};

std::string to_string(const BaseSingularity& b);  // "smooth", "cyclic:5,2", "odp"

struct WeightedBlowup {
  BaseSingularity base;
  std::vector<Int> weights;  // 3 entries, or 4 for odp
};

// Validates the weight vector for the base; throws std::domain_error.
WeightedBlowup make_blowup(const BaseSingularity& base, const std::vector<Int>& weights);

struct ChartReport {
  std::vector<CyclicQuotientType> charts;  // normalized, labelled P1.. in weight order
  std::vector<Verdict> verdicts;
  std::vector<std::string> cs_points;      // charts that are not terminal
};

struct MonomialDivisor {
  std::vector<std::vector<Int>> exponents;
  Rat d = 1;
};

// The ambient cone of the base, generators in the order used by the chart formulas.
std::vector<Vec3> base_rays(const BaseSingularity& base);
// The vector of the weighted blow-up inside the base cone.
Vec3 blowup_vector(const WeightedBlowup& b);
// The subdivided cones, one per chart, in chart order; the last generator is the blow-up vector.
std::vector<std::array<Vec3, 3>> chart_cones(const WeightedBlowup& b);

ChartReport charts_smooth(const std::vector<Int>& w, CanonicalRule rule = CanonicalRule::oracle_off_domain);
ChartReport charts_cyclic(const Int& r, const Int& q, const std::vector<Int>& w,
                          CanonicalRule rule = CanonicalRule::oracle_off_domain);
ChartReport charts_odp(const std::vector<Int>& w, CanonicalRule rule = CanonicalRule::oracle_off_domain);
ChartReport charts(const WeightedBlowup& b, CanonicalRule rule = CanonicalRule::oracle_off_domain);

// Raw (unnormalized) chart types from the closed formulas.
std::vector<CyclicQuotientType> chart_types_formula(const WeightedBlowup& b);

// (a1+a3, a2, a2+a3, a1)
std::vector<Int> odp_vector_to_weights(const Vec3& a);
Vec3 odp_weights_to_vector(const std::vector<Int>& w);

Rat discrepancy_zero(const WeightedBlowup& b);
// a(E_w, sum d_i D_i) for the cone with generators gens (coefficients in the same order).
Rat toric_discrepancy(const std::array<Vec3, 3>& gens, const RatVec3& boundary, const Vec3& w);
Rat toric_discrepancy(const SimplicialCone& c, const RatVec3& boundary, const Vec3& w);

Int weighted_multiplicity(const std::vector<Int>& w, const MonomialDivisor& d);
Rat divisor_discrepancy(const WeightedBlowup& b, const MonomialDivisor& d);

bool is_canonical_blowup(const WeightedBlowup& b, CanonicalRule rule = CanonicalRule::oracle_off_domain);
bool is_terminal_blowup(const WeightedBlowup& b);

}  // namespace toricsing
