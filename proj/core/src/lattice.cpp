#include "toricsing/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricsing {

CyclicQuotientType::CyclicQuotientType(const Int& order, const Int& a1, const Int& a2, const Int& a3)
    : r(order) {
  if (order < 1) throw std::domain_error("group order must be positive");
  std::array<Int, 3> in{a1, a2, a3};
  for (int i = 0; i < 3; ++i) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), in[i].get_mpz_t(), r.get_mpz_t());
    a[i] = m;
  }
}

bool CyclicQuotientType::well_formed() const {
  for (const auto& x : a)
    if (gcd(x, r) != 1) return false;
  return true;
}

bool CyclicQuotientType::codim1_free() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(gcd(a[i], a[j]), r) != 1) return false;
  return true;
}

bool CyclicQuotientType::operator<(const CyclicQuotientType& o) const {
  if (r != o.r) return r < o.r;
  return a < o.a;
}

std::string to_string(const CyclicQuotientType& t) {
  return "1/" + t.r.get_str() + "(" + t.a[0].get_str() + "," + t.a[1].get_str() + "," +
         t.a[2].get_str() + ")";
}

Vec3 vec(long x, long y, long z) { return {Int(x), Int(y), Int(z)}; }

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 scale(const Int& k, const Vec3& v) { return {k * v[0], k * v[1], k * v[2]}; }

Int content(const Vec3& v) { return gcd(gcd(v[0], v[1]), v[2]); }

bool is_primitive(const Vec3& v) { return content(v) == 1; }

std::string to_string(const Vec3& v) {
  return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

std::pair<Vec3, Int> primitivize(const Vec3& v) {
  Int g = content(v);
  if (g == 0) throw std::domain_error("zero vector has no direction");
  return {{v[0] / g, v[1] / g, v[2] / g}, g};
}

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

Vec3 mul(const Mat3& a, const Vec3& v) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return out;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = c0[i];
    m[i][1] = c1[i];
    m[i][2] = c2[i];
  }
  return m;
}

Int det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Int det(const Vec3& a, const Vec3& b, const Vec3& c) { return det(from_columns(a, b, c)); }

static Mat3 adjugate(const Mat3& m) {
  Mat3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return adj;
}

Mat3 inverse_unimodular(const Mat3& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
  Mat3 adj = adjugate(m);
  for (auto& row : adj)
    for (auto& x : row) x *= d;  // d = +-1, so dividing equals multiplying
  return adj;
}

RatVec3 solve(const Mat3& a, const RatVec3& b) {
  Int d = det(a);
  if (d == 0) throw std::domain_error("singular system");
  Mat3 adj = adjugate(a);
  RatVec3 x;
  for (int i = 0; i < 3; ++i) {
    Rat s = 0;
    for (int k = 0; k < 3; ++k) s += Rat(adj[i][k]) * b[k];
    x[i] = s / Rat(d);
    x[i].canonicalize();
  }
  return x;
}

namespace {

// Row/column operations mirrored into the transforms so that L * M * R stays invariant.
struct SnfWork {
  Mat3 d, l, r;
  void swap_rows(int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(l[i], l[j]);
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < 3; ++k) {
      std::swap(d[k][i], d[k][j]);
      std::swap(r[k][i], r[k][j]);
    }
  }
  // row i -= q * row j
  void row_sub(int i, int j, const Int& q) {
    for (int k = 0; k < 3; ++k) {
      d[i][k] -= q * d[j][k];
      l[i][k] -= q * l[j][k];
    }
  }
  // col i -= q * col j
  void col_sub(int i, int j, const Int& q) {
    for (int k = 0; k < 3; ++k) {
      d[k][i] -= q * d[k][j];
      r[k][i] -= q * r[k][j];
    }
  }
  void negate_row(int i) {
    for (int k = 0; k < 3; ++k) {
      d[i][k] = -d[i][k];
      l[i][k] = -l[i][k];
    }
  }
};

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SNFDecomposition smith_normal_form(const Mat3& m) {
  SnfWork w{m, identity3(), identity3()};
  for (int t = 0; t < 3; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < 3; ++i)
        for (int j = t; j < 3; ++j)
          if (w.d[i][j] != 0 && (pi < 0 || abs_of(w.d[i][j]) < abs_of(w.d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // remaining block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < 3; ++i) {
        w.row_sub(i, t, tdiv(w.d[i][t], w.d[t][t]));
        if (w.d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < 3; ++j) {
        w.col_sub(j, t, tdiv(w.d[t][j], w.d[t][t]));
        if (w.d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      int bad = -1;
      for (int i = t + 1; i < 3 && bad < 0; ++i)
        for (int j = t + 1; j < 3; ++j)
          if (w.d[i][j] % w.d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      w.row_sub(t, bad, Int(-1));
    }
    if (w.d[t][t] < 0) w.negate_row(t);
  }
  return {w.l, {w.d[0][0], w.d[1][1], w.d[2][2]}, w.r};
}

Mat3 unimodular_to_e3(const Vec3& v) {
  if (!is_primitive(v)) throw std::domain_error("vector is not primitive");
  // column vector reduced by row operations; U accumulates them
  Mat3 u = identity3();
  Vec3 x = v;
  auto row_sub = [&](int i, int j, const Int& q) {
    x[i] -= q * x[j];
    for (int k = 0; k < 3; ++k) u[i][k] -= q * u[j][k];
  };
  while (true) {
    int p = -1, nz = 0;
    for (int i = 0; i < 3; ++i)
      if (x[i] != 0) {
        ++nz;
        if (p < 0 || abs_of(x[i]) < abs_of(x[p])) p = i;
      }
    if (nz <= 1) break;
    for (int i = 0; i < 3; ++i)
      if (i != p && x[i] != 0) row_sub(i, p, tdiv(x[i], x[p]));
  }
  int p = 0;
  while (x[p] == 0) ++p;
  if (p != 2) {
    std::swap(x[p], x[2]);
    std::swap(u[p], u[2]);
  }
  if (x[2] < 0) {
    x[2] = -x[2];
    for (auto& e : u[2]) e = -e;
  }
  return u;
}

Int saturation_index(const Vec3& a, const Vec3& b) {
  Int m0 = a[0] * b[1] - a[1] * b[0];
  Int m1 = a[0] * b[2] - a[2] * b[0];
  Int m2 = a[1] * b[2] - a[2] * b[1];
  return gcd(gcd(m0, m1), m2);
}

SimplicialCone::SimplicialCone(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  gens_ = {primitivize(v1).first, primitivize(v2).first, primitivize(v3).first};
  std::sort(gens_.begin(), gens_.end());
  Int d = det(gens_[0], gens_[1], gens_[2]);
  if (d == 0) throw std::domain_error("cone generators are linearly dependent");
  orientation_ = d > 0 ? 1 : -1;
}

Int cone_index(const std::array<Vec3, 3>& gens) { return abs_of(det(gens[0], gens[1], gens[2])); }

Int cone_index(const SimplicialCone& c) { return cone_index(c.generators()); }

CyclicQuotientType quotient_type(const std::array<Vec3, 3>& gens) {
  Mat3 a = from_columns(gens[0], gens[1], gens[2]);
  if (det(a) == 0) throw std::domain_error("cone generators are linearly dependent");
  SNFDecomposition snf = smith_normal_form(a);
  if (snf.diag[1] != 1) throw std::domain_error("quotient group is not cyclic");
  const Int& r = snf.diag[2];
  if (r == 1) return CyclicQuotientType();
  // generator U^{-1} e3 has barycentric coordinates V e3 / r
  return CyclicQuotientType(r, snf.right[0][2], snf.right[1][2], snf.right[2][2]);
}

CyclicQuotientType quotient_type(const SimplicialCone& c) { return quotient_type(c.generators()); }

RatVec3 interior_hyperplane_functional(const std::array<Vec3, 3>& gens, const RatVec3& values) {
  // rows of the system are the generators: <psi, v_i> = values_i
  Mat3 a = transpose(from_columns(gens[0], gens[1], gens[2]));
  return solve(a, values);
}

RatVec3 interior_hyperplane_functional(const SimplicialCone& c, const RatVec3& values) {
  return interior_hyperplane_functional(c.generators(), values);
}

Rat evaluate(const RatVec3& psi, const Vec3& v) {
  Rat s = psi[0] * Rat(v[0]) + psi[1] * Rat(v[1]) + psi[2] * Rat(v[2]);
  s.canonicalize();
  return s;
}

RatVec3 cone_coordinates(const std::array<Vec3, 3>& gens, const Vec3& v) {
  return solve(from_columns(gens[0], gens[1], gens[2]), {Rat(v[0]), Rat(v[1]), Rat(v[2])});
}

bool strictly_inside(const std::array<Vec3, 3>& gens, const Vec3& v) {
  for (const auto& c : cone_coordinates(gens, v))
    if (c <= 0) return false;
  return true;
}

}  // namespace toricsing
