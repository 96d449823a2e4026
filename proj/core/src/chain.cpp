#include "toricsing/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricsing {

namespace {

const char* kTerminates = "chain terminates: only type A continues";

Vec2 project(const Mat3& u, const Vec3& v) {
  Vec3 y = mul(u, v);
  return {y[0], y[1]};
}

std::pair<Vec2, Int> primitive2(const Vec2& v) {
  Int g = gcd(v[0], v[1]);
  if (g == 0) throw std::logic_error("zero vector in the quotient lattice");
  return {{v[0] / g, v[1] / g}, g};
}

Rat standard(const Int& q) { return 1 - make_rat(1, q); }

// b in [0, m) with (pE + b pF) / m integral, m = |det(pF, pE)|.
std::pair<Int, Int> local_type(const Vec2& pF, const Vec2& pE) {
  Int m = abs_of(det2(pF, pE));
  if (m == 0) throw std::logic_error("degenerate local cone");
  for (Int b = 0; b < m; ++b)
    if ((pE[0] + b * pF[0]) % m == 0 && (pE[1] + b * pF[1]) % m == 0) return {m, b};
  throw std::logic_error("local cone is not cyclic");
}

Int inverse_mod(const Int& b, const Int& m) {
  if (m == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) == 0) throw std::logic_error("local weight is not a unit");
  return r;
}

Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Fills multiplicities, type, plt and charts' index data from the general member.
void analyse(ChainState& st, const ToricSurface& s, const std::optional<std::vector<Vec2>>& sections,
             MemberAnalysis& gm) {
  st.surface_rays = s.rays();
  st.surface_boundary = s.boundary();
  auto cr = to_rat(st.gamma_class);
  st.gamma_sq = s.dot(cr, cr);
  st.k_gamma = s.dot(s.log_canonical_class(), cr);
  st.anti_ample = st.gamma_sq + st.k_gamma < 0;
  try {
    gm = general_member(s, st.gamma_class, sections);
    st.plt = true;
    st.multiplicities = gm.multiplicities();
    st.type = ade_type(st.multiplicities);
  } catch (const std::domain_error& e) {
    st.plt = false;
    st.stop_reason = e.what();
  }
}

struct PointData {
  Int r, k, m, b;
  std::array<Vec3, 3> e;
  Vec3 beta;
};

}  // namespace

Vec3 complete_pair(const Vec3& e, const Vec3& w) {
  Mat3 u = unimodular_to_e3(w);
  auto [p, g] = primitive2(project(u, e));
  (void)g;
  auto eg = extended_gcd(p[0], p[1]);  // p0 x + p1 y = 1
  Vec3 t{-eg[2], eg[1], Int(0)};       // p0 t1 - p1 t0 = 1
  return mul(inverse_unimodular(u), t);
}

ChainState start_chain(const WeightedBlowup& b, const TripleRecord& triple) {
  if (b.base.kind == BaseSingularity::Kind::odp) throw std::domain_error("chain start needs a smooth or cyclic base");
  if (triple.case_id.rfind("plt-", 0) != 0) throw std::domain_error("chain start needs a plt triple (cases 1..8)");
  int c = std::stoi(triple.case_id.substr(4));
  if (c < 1 || c > 8) throw std::domain_error("chain start needs a plt triple (cases 1..8)");
  if (!plt_case_family(c, triple.params)) throw std::domain_error("parameters are not in the listed families");
  PltCaseShape shape = plt_case_shape(c, triple.params);

  Vec3 w = blowup_vector(b);
  Mat3 u = unimodular_to_e3(w);
  struct RayData {
    Vec2 ray;
    Int q;
    Vec3 e;
  };
  std::vector<RayData> rd;
  for (const auto& e : base_rays(b.base)) {
    auto [p, q] = primitive2(project(u, e));
    rd.push_back({p, q, e});
  }
  std::sort(rd.begin(), rd.end(), [](const RayData& x, const RayData& y) { return angle_less(x.ray, y.ray); });
  std::vector<Vec2> rays;
  std::vector<Rat> delta;
  for (const auto& r : rd) {
    rays.push_back(r.ray);
    delta.push_back(standard(r.q));
  }
  ToricSurface s(rays, delta);
  std::array<Int, 3> a;
  for (std::size_t i = 0; i < 3; ++i) a[i] = abs_of(det2(rays[(i + 1) % 3], rays[(i + 2) % 3]));

  // ray i plays the coordinate perm[i] of the case
  std::array<int, 3> perm{0, 1, 2};
  bool found = false;
  do {
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      ok = ok && a[i] == shape.weights[perm[i]] && rd[i].q == shape.indices[perm[i]];
    if (ok) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw std::domain_error("triple does not match the exceptional surface of the blow-up");

  auto cls = wps_class(shape.weights, shape.gamma_degree);
  ChainState st;
  st.step = 0;
  st.start_triple = plt_case_record(c, triple.params);
  st.a_plus_1 = discrepancy_zero(b) + 1;
  st.gamma_class = {cls[perm[0]], cls[perm[1]], cls[perm[2]]};
  MemberAnalysis gm;
  analyse(st, s, std::nullopt, gm);
  if (!st.plt) throw std::domain_error("the curve of the triple is not plt on the exceptional surface: " + st.stop_reason);
  for (const auto& p : gm.points) {
    if (p.multiplicity <= 1) continue;
    if (p.kind == SpecialPoint::Kind::vertex) {
      std::size_t i = p.index, j = s.next(i);
      std::size_t res = p.resembled, oth = res == i ? j : i;
      if (s.boundary(res) > 0) throw std::domain_error("curve is tangent to the boundary at a singular point");
      LocalChart ch{p.multiplicity, {rd[oth].e, rd[res].e, w}};
      if (abs_of(det(ch.e[0], ch.e[1], ch.e[2])) != ch.r) throw std::logic_error("chart index mismatch");
      st.charts.push_back(ch);
    } else {
      const Vec3& e = rd[p.index].e;
      LocalChart ch{p.multiplicity, {e, complete_pair(e, w), w}};
      if (abs_of(det(ch.e[0], ch.e[1], ch.e[2])) != ch.r) throw std::logic_error("chart index mismatch");
      for (Int k = 0; k < p.count; ++k) st.charts.push_back(ch);
    }
  }
  return st;
}

ChainState start_canonical_chain(const std::array<Int, 3>& w, const Int& g) {
  auto recs = classify_canonical_triple(w, g);
  if (recs.empty()) throw std::domain_error("weights and curve degree are not in the canonical triple table");
  auto b = make_blowup(BaseSingularity::smooth(), {w[0], w[1], w[2]});
  ChainState st;
  st.step = 0;
  st.start_triple = recs.front();
  Rat a = discrepancy_zero(b);
  st.a_plus_1 = a + 1;
  st.omega.push_back({"S", a, a, Rat(0)});
  return st;
}

Rat gamma_tilde_sq(const ChainState& s, const Int& b1, const Int& b2) {
  if (b1 < 1 || b2 < 1) throw std::domain_error("beta must be positive");
  Rat r = Rat(b1) * s.k_gamma / s.a_plus_1 - Rat(b2) * s.gamma_sq;
  r.canonicalize();
  return r;
}

bool contraction_triple_check(const Rat& gt, const Int& m1, const Int& m2, const Int& m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1) throw std::domain_error("triple must be positive");
  return gt == -make_rat(m3, m1 * m2);
}

bool contraction_triple_check(const ChainState& s, const Int& b1, const Int& b2, const Int& m1, const Int& m2,
                              const Int& m3) {
  return contraction_triple_check(gamma_tilde_sq(s, b1, b2), m1, m2, m3);
}

bool continuation_inequality(const Int& m1, const Int& m2, const Int& m3, const Int& k1, const Int& k2,
                             const Int& beta2) {
  if (k1 < 1 || k2 < 1 || beta2 < 1) throw std::domain_error("indices must be positive");
  return Rat(m3) > Rat(beta2) * (make_rat(m1, k2) + make_rat(m2, k1));
}

bool continuation_inequality(const ChainState& s, const Int& beta2) {
  if (!s.triple || !s.boundary) throw std::domain_error("state carries no contraction data");
  const auto &m = *s.triple, &k = *s.boundary;
  return continuation_inequality(m[0], m[1], m[2], k[0], k[1], beta2);
}

ChainState step(const ChainState& s, const Int& b1, const Int& b2, int j) {
  if (b1 < 1 || b2 < 1) throw std::domain_error("beta must be positive");
  if (gcd(b1, b2) != 1) throw std::domain_error("beta1 and beta2 must be coprime");
  if (j != 1 && j != 2) throw std::domain_error("fiber index j must be 1 or 2");
  if (!s.omega.empty()) throw std::domain_error("canonical construction states use canonical_chain_step");
  bool type_a = s.plt && s.type && s.type->kind == AdeType::Kind::A;
  if (!type_a || !s.anti_ample || !s.continuation) throw std::domain_error(kTerminates);
  for (const auto& ch : s.charts)
    if (!ch) throw std::domain_error("no toric chart at the contracted point");

  std::vector<LocalChart> charts;
  for (const auto& ch : s.charts)
    if (ch->r > 1) charts.push_back(*ch);
  if (charts.size() > 2) throw std::domain_error(kTerminates);
  while (charts.size() < 2) charts.push_back({Int(1), {vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)}});

  std::array<PointData, 2> q;
  for (int i = 0; i < 2; ++i) {
    const auto& e = charts[i].e;
    Vec3 beta = add(scale(b1, e[1]), scale(b2, e[2]));
    Int k = saturation_index(beta, e[0]);
    if (charts[i].r % k != 0) throw std::logic_error("fiber index does not divide the chart index");
    Int m = charts[i].r / k;
    Mat3 u = unimodular_to_e3(beta);
    Vec2 pF = primitive2(project(u, e[0])).first;
    Vec2 pE = primitive2(project(u, e[1])).first;
    Vec2 pG = primitive2(project(u, e[2])).first;
    auto [mm, b] = local_type(pF, pE);
    auto [mm2, bb] = local_type(pF, pG);
    if (mm != m || mm2 != m || mod(b + bb, m) != 0) throw std::logic_error("local types of the new surface disagree");
    q[i] = {charts[i].r, k, m, b, e, beta};
  }

  Rat gt = gamma_tilde_sq(s, b1, b2);
  const Int &m1 = q[0].m, &m2 = q[1].m;
  Rat m3r = -Rat(m1 * m2) * gt;
  m3r.canonicalize();
  if (m3r.get_den() != 1 || m3r <= 0)
    throw std::domain_error("contracted curve gives no cyclic point (m3 = " + to_string(m3r) + ")");
  Int m3 = m3r.get_num();
  Int y1 = inverse_mod(q[0].b, m1);
  if (mod(m3 - m2 * y1, m1) != 0) throw std::domain_error("contraction is not realizable by a toric surface");
  Int y2 = (m3 - m2 * y1) / m1;
  if (m2 > 1 && mod(y2 * q[1].b - 1, m2) != 0)
    throw std::domain_error("contraction is not realizable by a toric surface");

  Vec2 e{0, -1}, u1{m1, y1}, g{0, 1}, u2{-m2, y2};
  Rat d_e = standard(b2), d1 = standard(q[0].k), d2 = standard(q[1].k);
  ToricSurface tilde({e, u1, g, u2}, {d_e, d1, 0, d2});
  if (tilde.intersection(2, 2) != gt) throw std::logic_error("fan self-intersection disagrees with the formula");
  ToricSurface s1({e, u1, u2}, {d_e, d1, d2});

  ChainState ns;
  ns.step = s.step + 1;
  ns.triple = std::array<Int, 3>{m1, m2, m3};
  ns.boundary = std::array<Int, 3>{q[0].k, q[1].k, b2};
  ns.betas = std::array<Int, 3>{b1, b2, Int(j)};
  ns.a_plus_1 = Rat(b1) + Rat(b2) * s.a_plus_1;
  ns.tilde_sq_fan = tilde.intersection(2, 2);
  ns.continuation = continuation_inequality(m1, m2, m3, q[0].k, q[1].k, b2);
  ns.gamma_class = {Int(1), Int(j == 1 ? 1 : 0), Int(j == 2 ? 1 : 0)};
  std::vector<Int> ct{Int(1), ns.gamma_class[1], Int(0), ns.gamma_class[2]};
  auto sections = tilde.section_points(ct);
  MemberAnalysis gm;
  analyse(ns, s1, sections, gm);

  // Gamma' on S1 is the image of its strict transform on the surface before contracting Gamma_tilde
  auto ctr = to_rat(ct);
  std::vector<Rat> g0{0, 0, 1, 0};
  Rat meet = tilde.dot(ctr, g0);
  if (ns.gamma_sq != tilde.dot(ctr, ctr) + meet * meet / (-gt)) throw std::logic_error("contraction formula mismatch");

  if (!ns.plt) return ns;
  for (const auto& p : gm.points) {
    if (p.multiplicity <= 1) continue;
    if (p.kind == SpecialPoint::Kind::vertex) {
      std::size_t i = p.index, jj = s1.next(i);
      bool at_r = (i == 1 && jj == 2) || (i == 2 && jj == 1);
      if (at_r || s1.boundary(p.resembled) > 0) {
        ns.charts.push_back(std::nullopt);
        continue;
      }
      int qi = (i == 1 || jj == 1) ? 0 : 1;
      // rays of S1: 0 = E0 (image of e2), 1 + qi = F_qi (image of e1)
      auto vec_of = [&](std::size_t ray) { return ray == 0 ? q[qi].e[1] : q[qi].e[0]; };
      std::size_t res = p.resembled, oth = res == i ? jj : i;
      LocalChart ch{p.multiplicity, {vec_of(oth), vec_of(res), q[qi].beta}};
      if (abs_of(det(ch.e[0], ch.e[1], ch.e[2])) != ch.r) throw std::logic_error("chart index mismatch");
      ns.charts.push_back(ch);
    } else {
      const PointData& pd = p.index == 0 ? q[0] : q[p.index - 1];
      const Vec3& base = p.index == 0 ? pd.e[1] : pd.e[0];
      LocalChart ch{p.multiplicity, {base, complete_pair(base, pd.beta), pd.beta}};
      if (abs_of(det(ch.e[0], ch.e[1], ch.e[2])) != ch.r) throw std::logic_error("chart index mismatch");
      for (Int k = 0; k < p.count; ++k) ns.charts.push_back(ch);
    }
  }
  return ns;
}

ChainState canonical_chain_step(const ChainState& s, const Int& b1, const Int& b2) {
  if (b2 != 1) throw std::domain_error("the canonical construction blows up with weights (beta1, 1)");
  if (b1 < 1) throw std::domain_error("beta1 must be positive");
  if (s.omega.empty()) throw std::domain_error("state carries no elephant ledger");
  // locally along Gamma: S = V(e3), Omega = V(e2), Gamma = V(e2, e3)
  std::array<Vec3, 3> cone{vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)};
  Vec3 beta{Int(0), b1, b2};
  // beta lies on the face <e2, e3>, so the divisor is centred on Gamma
  Rat a0 = evaluate(interior_hyperplane_functional(cone, {Rat(1), Rat(1), Rat(1)}), beta) - 1;
  Rat aw = evaluate(interior_hyperplane_functional(cone, {Rat(1), Rat(0), Rat(1)}), beta) - 1;
  Rat mult = a0 - aw;
  if (aw != 0) throw std::logic_error("blow-up along Gamma is not crepant for the elephant");
  ChainState ns = s;
  ns.step = s.step + 1;
  ns.betas = std::array<Int, 3>{b1, b2, Int(0)};
  ns.a_plus_1 = Rat(b1) + Rat(b2) * s.a_plus_1;
  ns.omega.push_back({"E" + std::to_string(ns.step), mult, a0, aw});
  return ns;
}

ChainRun run_chain(const WeightedBlowup& b, const TripleRecord& triple, const std::vector<ChainStepArgs>& steps) {
  ChainRun run;
  try {
    run.states.push_back(start_chain(b, triple));
    for (const auto& sp : steps) run.states.push_back(step(run.states.back(), sp.beta1, sp.beta2, sp.j));
  } catch (const std::domain_error& e) {
    run.error = e.what();
  }
  return run;
}

}  // namespace toricsing
