#include "toricsing/toric_surface.hpp"

#include "toricsing/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricsing {

Int det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

static int half(const Vec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

ToricSurface::ToricSurface(std::vector<Vec2> rays, std::vector<Rat> boundary)
    : rays_(std::move(rays)), boundary_(std::move(boundary)) {
  if (rays_.size() < 3) throw std::domain_error("a complete toric surface needs at least 3 rays");
  if (boundary_.size() != rays_.size()) throw std::domain_error("boundary size does not match the rays");
  for (const auto& u : rays_)
    if (gcd(u[0], u[1]) != 1) throw std::domain_error("surface rays must be primitive");
  for (const auto& d : boundary_)
    if (d < 0 || d >= 1) throw std::domain_error("boundary coefficients must lie in [0,1)");
  // one full turn: each step turns left by less than pi and the angles increase once around
  int descents = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (det2(rays_[i], rays_[next(i)]) <= 0) throw std::domain_error("surface rays are not counter-clockwise");
    if (!angle_less(rays_[i], rays_[next(i)])) ++descents;
  }
  if (descents != 1) throw std::domain_error("surface rays do not form a complete fan");
}

Int ToricSurface::cone_index(std::size_t i) const { return abs_of(det2(rays_[i], rays_[next(i)])); }

Rat ToricSurface::intersection(std::size_t i, std::size_t j) const {
  if (i == j) {
    const Vec2 &a = rays_[prev(i)], &b = rays_[i], &c = rays_[next(i)];
    return make_rat(-det2(a, c), det2(a, b) * det2(b, c));
  }
  if (next(i) == j || next(j) == i) return make_rat(1, abs_of(det2(rays_[i], rays_[j])));
  return 0;
}

Rat ToricSurface::dot(const std::vector<Rat>& c, const std::vector<Rat>& d) const {
  if (c.size() != size() || d.size() != size()) throw std::domain_error("divisor size does not match the surface");
  Rat s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j)
      if (d[j] != 0) s += c[i] * d[j] * intersection(i, j);
  }
  s.canonicalize();
  return s;
}

std::vector<Rat> ToricSurface::canonical_class() const { return std::vector<Rat>(size(), Rat(-1)); }

std::vector<Rat> ToricSurface::log_canonical_class() const {
  std::vector<Rat> k(size());
  for (std::size_t i = 0; i < size(); ++i) k[i] = boundary_[i] - 1;
  return k;
}

static Int ceil_of(const Rat& x) { return -floor_of(-x); }

std::vector<Vec2> ToricSurface::section_points(const std::vector<Int>& c) const {
  if (c.size() != size()) throw std::domain_error("divisor size does not match the surface");
  auto inside = [&](const Rat& x, const Rat& y) {
    for (std::size_t i = 0; i < size(); ++i)
      if (rays_[i][0] * x + rays_[i][1] * y + c[i] < 0) return false;
    return true;
  };
  bool have = false;
  Rat xlo, xhi, ylo, yhi;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      const Vec2 &u = rays_[i], &v = rays_[j];
      Int d = det2(u, v);
      if (d == 0) continue;
      // <m,u> = -c_i, <m,v> = -c_j
      Rat x = make_rat(-c[i] * v[1] + c[j] * u[1], d);
      Rat y = make_rat(-u[0] * c[j] + v[0] * c[i], d);
      if (!inside(x, y)) continue;
      if (!have) {
        xlo = xhi = x;
        ylo = yhi = y;
        have = true;
      }
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  std::vector<Vec2> out;
  if (!have) return out;
  Int x0 = ceil_of(xlo), x1 = floor_of(xhi), y0 = ceil_of(ylo), y1 = floor_of(yhi);
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y)
      if (inside(Rat(x), Rat(y))) out.push_back({x, y});
  return out;
}

std::vector<Rat> to_rat(const std::vector<Int>& c) {
  std::vector<Rat> r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(x);
  return r;
}

std::vector<Int> MemberAnalysis::multiplicities() const {
  std::vector<Int> out;
  for (const auto& p : points) {
    if (p.multiplicity <= 1) continue;
    for (Int k = 0; k < p.count; ++k) out.push_back(p.multiplicity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Int, 3> extended_gcd(const Int& a, const Int& b) {
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, x, y};
}

// Lattice length of a collinear point set, or nullopt when the points span the plane.
static std::optional<Int> collinear_length(const std::vector<Vec2>& pts) {
  Vec2 dir{0, 0};
  for (const auto& p : pts) {
    Vec2 d{p[0] - pts[0][0], p[1] - pts[0][1]};
    if (d[0] == 0 && d[1] == 0) continue;
    if (dir[0] == 0 && dir[1] == 0) {
      Int g = gcd(d[0], d[1]);
      dir = {d[0] / g, d[1] / g};
    } else if (det2(dir, d) != 0) {
      return std::nullopt;
    }
  }
  Int lo = 0, hi = 0;
  for (const auto& p : pts) {
    Vec2 d{p[0] - pts[0][0], p[1] - pts[0][1]};
    Int t = dir[0] != 0 ? Int(d[0] / dir[0]) : (dir[1] != 0 ? Int(d[1] / dir[1]) : Int(0));
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

MemberAnalysis general_member(const ToricSurface& s, const std::vector<Int>& c,
                              const std::optional<std::vector<Vec2>>& sections) {
  const std::size_t n = s.size();
  if (c.size() != n) throw std::domain_error("divisor size does not match the surface");
  std::vector<Vec2> pts = sections ? *sections : s.section_points(c);
  if (pts.empty()) throw std::domain_error("empty linear system");
  // p[k][i]: order of vanishing of the k-th monomial along D_i
  std::vector<std::vector<Int>> p(pts.size(), std::vector<Int>(n));
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      p[k][i] = s.ray(i)[0] * pts[k][0] + s.ray(i)[1] * pts[k][1] + c[i];
      if (p[k][i] < 0) throw std::domain_error("monomial is not a section of the divisor");
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool all_pos = true;
    for (const auto& row : p) all_pos = all_pos && row[i] > 0;
    if (all_pos) throw std::domain_error("general member has a fixed component");
  }
  if (pts.size() == 1) throw std::domain_error("linear system has no moving part");
  if (auto len = collinear_length(pts); len && *len >= 2)
    throw std::domain_error("general member is reducible");

  MemberAnalysis out;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = s.next(i);
    bool misses = false, lin_i = false, lin_j = false;
    for (const auto& row : p) {
      if (row[i] == 0 && row[j] == 0) misses = true;
      if (row[i] == 1 && row[j] == 0) lin_i = true;
      if (row[j] == 1 && row[i] == 0) lin_j = true;
    }
    if (misses) continue;
    if (!lin_i && !lin_j) throw std::domain_error("general member is singular at a torus-fixed point");
    Int mu_i = 1, mu_j = 1;
    std::size_t res;
    if (lin_i && lin_j) {
      res = s.boundary(i) == 0 ? i : j;
    } else if (lin_i) {
      bool first = true;
      for (const auto& row : p)
        if (row[i] == 0 && (first || row[j] < mu_i)) {
          mu_i = row[j];
          first = false;
        }
      res = i;
    } else {
      bool first = true;
      for (const auto& row : p)
        if (row[j] == 0 && (first || row[i] < mu_j)) {
          mu_j = row[i];
          first = false;
        }
      res = j;
    }
    Rat t = 1 - s.boundary(i) * mu_i - s.boundary(j) * mu_j;
    if (t <= 0) throw std::domain_error("pair is not plt at a torus-fixed point");
    Rat m = Rat(s.cone_index(i)) / t;
    m.canonicalize();
    if (m.get_den() != 1) throw std::domain_error("non-standard coefficient in the different");
    SpecialPoint sp;
    sp.kind = SpecialPoint::Kind::vertex;
    sp.index = i;
    sp.multiplicity = m.get_num();
    sp.resembled = res;
    out.points.push_back(sp);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = s.ray(i);
    auto eg = extended_gcd(-u[1], u[0]);  // a with <a, (-u2, u1)> = 1
    Vec2 a{eg[1], eg[2]};
    bool first = true;
    Int lo, hi;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (p[k][i] != 0) continue;
      Int t = a[0] * pts[k][0] + a[1] * pts[k][1];
      if (first) {
        lo = hi = t;
        first = false;
      }
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    if (first) continue;
    Int cnt = hi - lo;
    if (s.boundary(i) > 0 && cnt > 0) {
      Rat q = 1 / (1 - s.boundary(i));
      q.canonicalize();
      if (q.get_den() != 1) throw std::domain_error("non-standard boundary coefficient");
      SpecialPoint sp;
      sp.kind = SpecialPoint::Kind::edge;
      sp.index = i;
      sp.multiplicity = q.get_num();
      sp.count = cnt;
      out.points.push_back(sp);
    }
  }
  return out;
}

ToricSurface wps_surface(const std::array<Int, 3>& a, const std::array<Rat, 3>& boundary) {
  for (int i = 0; i < 3; ++i)
    if (a[i] < 1) throw std::domain_error("weights must be positive");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(a[i], a[j]) != 1) throw std::domain_error("weights must be pairwise coprime");
  Mat3 u = unimodular_to_e3({a[0], a[1], a[2]});
  std::vector<Vec2> rays;
  for (int i = 0; i < 3; ++i) rays.push_back({u[0][i], u[1][i]});
  if (det2(rays[0], rays[1]) < 0)
    for (auto& r : rays) r[1] = -r[1];
  return ToricSurface(rays, {boundary[0], boundary[1], boundary[2]});
}

std::vector<Int> wps_class(const std::array<Int, 3>& a, const Int& g) {
  auto e01 = extended_gcd(a[0], a[1]);
  auto e2 = extended_gcd(e01[0], a[2]);  // e2[0] = 1 for coprime weights
  if (g % e2[0] != 0) throw std::domain_error("degree not representable");
  Int k = g / e2[0];
  return {e01[1] * e2[1] * k, e01[2] * e2[1] * k, e2[2] * k};
}

}  // namespace toricsing
