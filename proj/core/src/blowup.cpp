#include "toricsing/blowup.hpp"

#include <stdexcept>

namespace toricsing {

BaseSingularity BaseSingularity::smooth() { return {}; }

BaseSingularity BaseSingularity::cyclic(const Int& r, const Int& q) {
  if (r < 2) throw std::domain_error("cyclic base needs r >= 2");
  if (q < 1 || q > r - 1) throw std::domain_error("cyclic base needs 1 <= q <= r-1");
  if (gcd(r, q) != 1) throw std::domain_error("cyclic base needs gcd(r,q) = 1");
  BaseSingularity b;
  b.kind = Kind::cyclic;
  b.r = r;
  b.q = q;
  return b;
}

BaseSingularity BaseSingularity::odp() {
  BaseSingularity b;
  b.kind = Kind::odp;
  return b;
}

std::string to_string(const BaseSingularity& b) {
  switch (b.kind) {
    case BaseSingularity::Kind::smooth: return "smooth";
    case BaseSingularity::Kind::cyclic: return "cyclic:" + b.r.get_str() + "," + b.q.get_str();
    case BaseSingularity::Kind::odp: return "odp";
  }
  return "?";
}

static Int gcd_all(const std::vector<Int>& w) {
  Int g = 0;
  for (const auto& x : w) g = gcd(g, x);
  return g;
}

WeightedBlowup make_blowup(const BaseSingularity& base, const std::vector<Int>& w) {
  using K = BaseSingularity::Kind;
  std::size_t n = base.kind == K::odp ? 4 : 3;
  if (w.size() != n) throw std::domain_error("expected " + std::to_string(n) + " weights");
  switch (base.kind) {
    case K::smooth:
      for (const auto& x : w)
        if (x < 1) throw std::domain_error("weights must be positive");
      break;
    case K::cyclic:
      if (w[2] < 1 || base.r * w[1] - base.q * w[2] < 1 || base.r * w[0] - w[2] < 1)
        throw std::domain_error("vector not in the blow-up cone");
      break;
    case K::odp:
      for (const auto& x : w)
        if (x < 1) throw std::domain_error("weights must be positive");
      if (w[0] + w[1] != w[2] + w[3]) throw std::domain_error("odp weights must satisfy w1+w2 = w3+w4");
      break;
  }
  if (gcd_all(w) != 1) throw std::domain_error("weights must have gcd 1");
  return {base, w};
}

std::vector<Vec3> base_rays(const BaseSingularity& base) {
  using K = BaseSingularity::Kind;
  switch (base.kind) {
    case K::smooth: return {vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)};
    case K::cyclic: return {vec(1, 0, 0), vec(0, 1, 0), Vec3{Int(1), base.q, base.r}};
    case K::odp: return {vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1), vec(1, 1, -1)};
  }
  return {};
}

Vec3 blowup_vector(const WeightedBlowup& b) {
  if (b.base.kind == BaseSingularity::Kind::odp) return odp_weights_to_vector(b.weights);
  return {b.weights[0], b.weights[1], b.weights[2]};
}

std::vector<std::array<Vec3, 3>> chart_cones(const WeightedBlowup& b) {
  auto e = base_rays(b.base);
  Vec3 w = blowup_vector(b);
  if (b.base.kind == BaseSingularity::Kind::odp)
    return {{e[1], e[3], w}, {e[0], e[2], w}, {e[0], e[3], w}, {e[1], e[2], w}};
  if (b.base.kind == BaseSingularity::Kind::cyclic) return {{e[0], e[1], w}, {e[0], e[2], w}, {e[1], e[2], w}};
  return {{e[1], e[2], w}, {e[0], e[2], w}, {e[0], e[1], w}};
}

std::vector<CyclicQuotientType> chart_types_formula(const WeightedBlowup& b) {
  const auto& w = b.weights;
  using K = BaseSingularity::Kind;
  std::vector<CyclicQuotientType> out;
  switch (b.base.kind) {
    case K::smooth:
      out.emplace_back(w[0], w[1], w[2], w[0] - 1);
      out.emplace_back(w[1], w[0], w[2], w[1] - 1);
      out.emplace_back(w[2], w[0], w[1], w[2] - 1);
      break;
    case K::cyclic: {
      const Int &r = b.base.r, &q = b.base.q;
      Int u;
      mpz_invert(u.get_mpz_t(), q.get_mpz_t(), r.get_mpz_t());  // 0 <= u <= r-1
      Int v = (1 - u * q) / r;
      out.emplace_back(w[2], -w[0], -w[1], Int(1));
      out.emplace_back(r * w[1] - q * w[2], -w[0] + u * w[1] + v * w[2], -u * w[1] - v * w[2], Int(1));
      out.emplace_back(r * w[0] - w[2], -w[0], q * w[0] - w[1], Int(1));
      break;
    }
    case K::odp:
      out.emplace_back(w[0], w[2], w[3], Int(-1));
      out.emplace_back(w[1], w[2], w[3], Int(-1));
      out.emplace_back(w[2], w[0], w[1], Int(-1));
      out.emplace_back(w[3], w[0], w[1], Int(-1));
      break;
  }
  return out;
}

static ChartReport report_from(const std::vector<CyclicQuotientType>& raw, CanonicalRule rule) {
  ChartReport rep;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    rep.charts.push_back(normalize(raw[i]));
    rep.verdicts.push_back(is_canonical(raw[i], rule));
    if (rep.verdicts.back().kind != VerdictKind::terminal) rep.cs_points.push_back("P" + std::to_string(i + 1));
  }
  return rep;
}

ChartReport charts(const WeightedBlowup& b, CanonicalRule rule) { return report_from(chart_types_formula(b), rule); }

ChartReport charts_smooth(const std::vector<Int>& w, CanonicalRule rule) {
  return charts(make_blowup(BaseSingularity::smooth(), w), rule);
}

ChartReport charts_cyclic(const Int& r, const Int& q, const std::vector<Int>& w, CanonicalRule rule) {
  return charts(make_blowup(BaseSingularity::cyclic(r, q), w), rule);
}

ChartReport charts_odp(const std::vector<Int>& w, CanonicalRule rule) {
  return charts(make_blowup(BaseSingularity::odp(), w), rule);
}

std::vector<Int> odp_vector_to_weights(const Vec3& a) {
  if (content(a) != 1) throw std::domain_error("vector outside the odp cone interior (not primitive)");
  if (!(a[0] > 0 && a[1] > 0 && a[0] + a[2] > 0 && a[1] + a[2] > 0))
    throw std::domain_error("vector outside the odp cone interior");
  return {a[0] + a[2], a[1], a[1] + a[2], a[0]};
}

Vec3 odp_weights_to_vector(const std::vector<Int>& w) {
  if (w.size() != 4 || w[0] + w[1] != w[2] + w[3]) throw std::domain_error("odp weights must satisfy w1+w2 = w3+w4");
  return {w[3], w[1], w[0] - w[3]};
}

Rat discrepancy_zero(const WeightedBlowup& b) {
  const auto& w = b.weights;
  using K = BaseSingularity::Kind;
  switch (b.base.kind) {
    case K::smooth: return Rat(w[0] + w[1] + w[2] - 1);
    case K::cyclic: {
      const Int &r = b.base.r, &q = b.base.q;
      return make_rat(w[2] + r * w[1] - q * w[2] + r * w[0] - w[2], r) - 1;
    }
    case K::odp: return Rat(w[0] + w[1] - 1);
  }
  return 0;
}

Rat toric_discrepancy(const std::array<Vec3, 3>& gens, const RatVec3& boundary, const Vec3& w) {
  if (!strictly_inside(gens, w)) throw std::domain_error("vector is not in the interior of the cone");
  RatVec3 vals{1 - boundary[0], 1 - boundary[1], 1 - boundary[2]};
  Rat a = evaluate(interior_hyperplane_functional(gens, vals), w) - 1;
  a.canonicalize();
  return a;
}

Rat toric_discrepancy(const SimplicialCone& c, const RatVec3& boundary, const Vec3& w) {
  return toric_discrepancy(c.generators(), boundary, w);
}

Int weighted_multiplicity(const std::vector<Int>& w, const MonomialDivisor& d) {
  if (d.exponents.empty()) throw std::domain_error("monomial divisor has no monomials");
  Int best;
  bool have = false;
  for (const auto& m : d.exponents) {
    if (m.size() != w.size()) throw std::domain_error("exponent dimension does not match the weights");
    Int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0) throw std::domain_error("negative exponent");
      s += w[i] * m[i];
    }
    if (!have || s < best) {
      best = s;
      have = true;
    }
  }
  return best;
}

Rat divisor_discrepancy(const WeightedBlowup& b, const MonomialDivisor& d) {
  Rat a = discrepancy_zero(b) - d.d * Rat(weighted_multiplicity(b.weights, d));
  a.canonicalize();
  return a;
}

bool is_canonical_blowup(const WeightedBlowup& b, CanonicalRule rule) {
  if (discrepancy_zero(b) <= 0) return false;
  for (const auto& v : charts(b, rule).verdicts)
    if (v.kind == VerdictKind::not_canonical) return false;
  return true;
}

bool is_terminal_blowup(const WeightedBlowup& b) {
  if (discrepancy_zero(b) <= 0) return false;
  for (const auto& t : chart_types_formula(b))
    if (!is_terminal(t)) return false;
  return true;
}

}  // namespace toricsing
