#include "toricsing/surface_pairs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricsing {

std::string to_string(const AdeType& t) {
  switch (t.kind) {
    case AdeType::Kind::A: return "A";
    case AdeType::Kind::D: return t.l > 0 ? "D" + std::to_string(t.l) : std::string("D");
    case AdeType::Kind::E6: return "E6";
    case AdeType::Kind::E7: return "E7";
    case AdeType::Kind::E8: return "E8";
  }
  return "?";
}

AdeType ade_type_from_string(const std::string& s) {
  if (s == "A") return {AdeType::Kind::A, 0};
  if (s == "E6") return {AdeType::Kind::E6, 0};
  if (s == "E7") return {AdeType::Kind::E7, 0};
  if (s == "E8") return {AdeType::Kind::E8, 0};
  if (s == "D") return {AdeType::Kind::D, 0};
  if (s.size() >= 2 && s[0] == 'D') {
    std::size_t pos = 0;
    long l = std::stol(s.substr(1), &pos);
    if (pos == s.size() - 1 && l >= 4) return {AdeType::Kind::D, l};
  }
  throw std::domain_error("unknown ADE type: " + s);
}

std::optional<AdeType> ade_type(const std::vector<Int>& multiplicities) {
  std::vector<Int> m;
  for (const auto& x : multiplicities)
    if (x > 1) m.push_back(x);
  std::sort(m.begin(), m.end());
  if (m.size() <= 2) return AdeType{AdeType::Kind::A, 0};
  if (m.size() > 3) return std::nullopt;
  if (m[0] == 2 && m[1] == 2) return AdeType{AdeType::Kind::D, to_long(m[2]) + 2};
  if (m[0] == 2 && m[1] == 3) {
    if (m[2] == 3) return AdeType{AdeType::Kind::E6, 0};
    if (m[2] == 4) return AdeType{AdeType::Kind::E7, 0};
    if (m[2] == 5) return AdeType{AdeType::Kind::E8, 0};
  }
  return std::nullopt;
}

int complement_index(const AdeType& t) {
  switch (t.kind) {
    case AdeType::Kind::A: return 1;
    case AdeType::Kind::D: return 2;
    case AdeType::Kind::E6: return 3;
    case AdeType::Kind::E7: return 4;
    case AdeType::Kind::E8: return 6;
  }
  return 0;
}

WPSPair make_wps_pair(const std::array<Int, 3>& weights, const std::array<Int, 3>& indices) {
  for (int i = 0; i < 3; ++i) {
    if (weights[i] < 1) throw std::domain_error("weights must be positive");
    if (indices[i] < 1) throw std::domain_error("boundary indices must be positive");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(weights[i], weights[j]) != 1) throw std::domain_error("weights are not well-formed");
  return {weights, indices};
}

ToricSurface WPSPair::surface() const { return wps_surface(weights, coefficients()); }

WPSPair exceptional_surface(const std::array<Int, 3>& w) {
  for (const auto& x : w)
    if (x < 1) throw std::domain_error("weights must be positive");
  if (gcd(gcd(w[0], w[1]), w[2]) != 1) throw std::domain_error("weights must have gcd 1");
  std::array<Int, 3> q{gcd(w[1], w[2]), gcd(w[0], w[2]), gcd(w[0], w[1])};
  std::array<Int, 3> a{w[0] / (q[1] * q[2]), w[1] / (q[0] * q[2]), w[2] / (q[0] * q[1])};
  return make_wps_pair(a, q);
}

QuadricPair quadric_surface_pair(const std::array<Int, 4>& w) {
  for (const auto& x : w)
    if (x < 1) throw std::domain_error("weights must be positive");
  if (w[0] + w[1] != w[2] + w[3]) throw std::domain_error("quadric weights must satisfy w1+w2 = w3+w4");
  if (gcd(gcd(w[0], w[1]), gcd(w[2], w[3])) != 1) throw std::domain_error("weights must have gcd 1");
  QuadricPair p;
  p.w = w;
  p.d13 = gcd(w[1], w[3]);
  p.d14 = gcd(w[1], w[2]);
  p.d23 = gcd(w[0], w[3]);
  p.d24 = gcd(w[0], w[2]);
  std::array<Int, 4> den{p.d23 * p.d24, p.d13 * p.d14, p.d14 * p.d24, p.d13 * p.d23};
  for (int i = 0; i < 4; ++i) {
    if (w[i] % den[i] != 0) throw std::logic_error("weights not decomposable");
    p.a[i] = w[i] / den[i];
    if (p.a[i] * den[i] != w[i]) throw std::logic_error("weights not decomposable");
  }
  return p;
}

Rat wps_degree(const WPSPair& s, const Int& d1, const Int& d2) {
  return make_rat(d1 * d2, s.weights[0] * s.weights[1] * s.weights[2]);
}

AmpleAdjunction triple_ample_and_adjunction(const WPSPair& s, const Int& g) {
  Rat tot = Rat(g) - Rat(s.weights[0] + s.weights[1] + s.weights[2]);
  for (int i = 0; i < 3; ++i) tot += s.coefficient(i) * Rat(s.weights[i]);
  tot.canonicalize();
  Int vol = s.weights[0] * s.weights[1] * s.weights[2];
  AmpleAdjunction r;
  r.anti_degree = -tot / Rat(vol);
  r.anti_degree.canonicalize();
  r.ample = r.anti_degree > 0;
  r.gamma_log_degree = tot * Rat(g) / Rat(vol);
  r.gamma_log_degree.canonicalize();
  return r;
}

std::vector<Int> gamma_different(const WPSPair& s, const Int& g) {
  return general_member(s.surface(), wps_class(s.weights, g)).multiplicities();
}

int plt_case_arity(int c) {
  static const int ar[] = {0, 1, 3, 3, 2, 3, 2, 4, 3, 3, 4};
  if (c < 1 || c > 10) throw std::domain_error("plt case must be 1..10");
  return ar[c];
}

static void check_arity(int c, const std::vector<Int>& p) {
  if (static_cast<int>(p.size()) != plt_case_arity(c))
    throw std::domain_error("plt case " + std::to_string(c) + " takes " + std::to_string(plt_case_arity(c)) +
                            " parameters");
  for (const auto& x : p)
    if (x < 1) throw std::domain_error("plt case parameters must be positive");
}

PltCaseShape plt_case_shape(int c, const std::vector<Int>& p) {
  check_arity(c, p);
  const Int one = 1;
  switch (c) {
    case 1: return {{one, one, one}, {p[0], one, one}, Int(2)};
    case 2: return {{one, one, one}, {p[0], p[1], p[2]}, one};
    case 3: return {{p[0], one, one}, {p[1], p[2], one}, p[0]};
    case 4: return {{p[0], one, one}, {one, p[1], one}, p[0] + 1};
    case 5: return {{p[0] + 1, p[0], one}, {p[1], p[2], one}, p[0] + 1};
    case 6: return {{2 * p[0] + 1, p[0], one}, {p[1], one, one}, 2 * p[0] + 1};
    case 7: return {{p[0] * p[1] - 1, p[1], one}, {p[2], p[3], one}, p[0] * p[1]};
    case 8: return {{p[0], p[1], one}, {one, one, p[2]}, p[0] + p[1]};
    default: throw std::domain_error("plt cases 9 and 10 are not given by a weighted projective plane");
  }
}

bool plt_case_domain(int c, const std::vector<Int>& p) {
  check_arity(c, p);
  switch (c) {
    case 1: return true;
    case 2: return 2 <= p[0] && p[0] <= p[1] && p[1] <= p[2];
    case 3:
    case 4: return p[0] >= 2;
    case 5:
    case 6: return p[0] >= 2;
    case 7: return p[0] >= 2 && p[1] >= 2;
    case 8: return p[0] > p[1] && p[1] >= 2 && gcd(p[0], p[1]) == 1;  // P(a1,a2,1) well-formed
    case 9: return p[0] >= 2 && p[1] >= 2 && p[2] >= 2;
    case 10: return p[0] >= 2 && p[1] >= 2 && p[2] >= 2 && (p[0] + p[1]) % p[2] == 0;
  }
  return false;
}

bool plt_case_family(int c, const std::vector<Int>& p) {
  if (!plt_case_domain(c, p)) return false;
  switch (c) {
    case 2: return p[0] == 2 && (p[1] == 2 || (p[1] == 3 && p[2] <= 5));
    case 3:
      return (p[0] == 2 && p[1] == 2) || (p[0] == 2 && p[1] == 3 && p[2] <= 2) ||
             (p[0] == 2 && p[1] >= 4 && p[2] == 1) || (p[0] == 3 && p[1] == 2 && p[2] == 1);
    case 5:
      return (p[0] == 2 && p[1] == 2 && p[2] <= 3) || (p[0] >= 3 && p[1] == 2 && p[2] <= 2) ||
             (p[1] >= 3 && p[2] == 1);
    case 6: return p[1] == 2;
    case 7: return (p[0] == 2 && p[2] == 2 && p[3] == 1) || p[2] == 1;
    default: return true;
  }
}

std::vector<Int> plt_case_multiplicities(int c, const std::vector<Int>& p) {
  check_arity(c, p);
  std::vector<Int> m;
  switch (c) {
    case 1: m = {p[0], p[0]}; break;
    case 2: m = {p[0], p[1], p[2]}; break;
    case 3:
      for (Int k = 0; k < p[0]; ++k) m.push_back(p[1]);
      m.push_back(p[2]);
      break;
    case 4: m = {p[0] * p[1], p[1]}; break;
    case 5: m = {p[0] * p[1], p[1], p[2]}; break;
    case 6: m = {p[0] * p[1], p[1], p[1]}; break;
    case 7:
      m = {(p[0] * p[1] - 1) * p[3], p[3]};
      for (Int k = 0; k < p[0]; ++k) m.push_back(p[2]);
      break;
    case 8: m = {p[0] * p[2], p[1] * p[2]}; break;
    case 9: m = {p[0], p[1]}; break;
    case 10: m = {p[0], p[1]}; break;
  }
  std::vector<Int> out;
  for (const auto& x : m)
    if (x > 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

TripleRecord plt_case_record(int c, const std::vector<Int>& p) {
  TripleRecord r;
  r.case_id = "plt-" + std::to_string(c);
  r.params = p;
  if (c >= 9) {
    check_arity(c, p);
    r.type = AdeType{AdeType::Kind::A, 0};
    return r;
  }
  auto t = ade_type(plt_case_multiplicities(c, p));
  if (!t) throw std::domain_error("parameters give no ADE type (the pair is not anti-ample along the curve)");
  r.type = *t;
  return r;
}

bool plt_case_is_toric(const PltCaseShape& s) {
  for (int i = 0; i < 3; ++i)
    if (s.gamma_degree == s.weights[i] && s.indices[i] == 1) return true;
  return false;
}

// Parameters a query would have in case c, read off the permuted surface data.
static std::optional<std::vector<Int>> candidate_params(int c, const std::array<Int, 3>& w,
                                                        const std::array<Int, 3>& d) {
  switch (c) {
    case 1: return std::vector<Int>{d[0]};
    case 2: {
      std::vector<Int> s{d[0], d[1], d[2]};
      std::sort(s.begin(), s.end());
      return s;
    }
    case 3: return std::vector<Int>{w[0], d[0], d[1]};
    case 4: return std::vector<Int>{w[0], d[1]};
    case 5: return std::vector<Int>{w[1], d[0], d[1]};
    case 6: return std::vector<Int>{w[1], d[0]};
    case 7:
      if ((w[0] + 1) % w[1] != 0) return std::nullopt;
      return std::vector<Int>{(w[0] + 1) / w[1], w[1], d[0], d[1]};
    case 8: return std::vector<Int>{w[0], w[1], d[2]};
  }
  return std::nullopt;
}

std::optional<TripleRecord> classify_plt_triple(const PltQuery& q) {
  for (int i = 0; i < 3; ++i) {
    if (q.weights[i] < 1) throw std::domain_error("weights must be positive");
    if (q.indices[i] < 1) throw std::domain_error("boundary indices must be positive");
  }
  if (q.gamma_degree < 1) throw std::domain_error("curve degree must be positive");
  std::array<int, 3> perm{0, 1, 2};
  for (int c = 1; c <= 8; ++c) {
    std::sort(perm.begin(), perm.end());
    do {
      std::array<Int, 3> w{q.weights[perm[0]], q.weights[perm[1]], q.weights[perm[2]]};
      std::array<Int, 3> d{q.indices[perm[0]], q.indices[perm[1]], q.indices[perm[2]]};
      auto p = candidate_params(c, w, d);
      if (!p || !plt_case_domain(c, *p) || !plt_case_family(c, *p)) continue;
      auto s = plt_case_shape(c, *p);
      if (s.weights != w || s.indices != d || s.gamma_degree != q.gamma_degree) continue;
      if (plt_case_is_toric(s)) continue;
      auto aa = triple_ample_and_adjunction(make_wps_pair(s.weights, s.indices), s.gamma_degree);
      if (!aa.ample) continue;
      return plt_case_record(c, *p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::optional<TripleRecord> classify_plt_record(int c, const std::vector<Int>& p) {
  if (c != 9 && c != 10) throw std::domain_error("only cases 9 and 10 are records");
  check_arity(c, p);
  if (!plt_case_domain(c, p)) return std::nullopt;
  return plt_case_record(c, p);
}

namespace {

CanonicalTableEntry entry(long w1, long w2, long w3, long g, AdeType::Kind k, long l = 0,
                          std::optional<long> split = std::nullopt) {
  CanonicalTableEntry e{{Int(w1), Int(w2), Int(w3)}, Int(g), {k, l}, std::nullopt};
  if (split) e.split_degree = Int(*split);
  return e;
}

const std::vector<CanonicalTableEntry>& exceptional_entries() {
  using K = AdeType::Kind;
  static const std::vector<CanonicalTableEntry> t = {
      entry(3, 2, 2, 3, K::E6),   entry(6, 4, 3, 2, K::E6),    entry(5, 3, 2, 9, K::E6),
      entry(4, 2, 1, 3, K::E6),   entry(3, 2, 2, 3, K::E7),    entry(6, 4, 3, 2, K::E7),
      entry(9, 6, 4, 3, K::E7),   entry(3, 3, 1, 2, K::E7),    entry(5, 4, 2, 5, K::E7),
      entry(7, 5, 3, 14, K::E7),  entry(5, 3, 2, 6, K::E7, 0, 3), entry(3, 2, 2, 3, K::E8),
      entry(6, 4, 3, 2, K::E8),   entry(9, 6, 4, 3, K::E8),    entry(12, 8, 5, 6, K::E8),
      entry(15, 10, 6, 1, K::E8), entry(5, 4, 2, 5, K::E8),    entry(10, 7, 4, 10, K::E8),
      entry(8, 5, 3, 15, K::E8),
  };
  return t;
}

std::string canonical_case_id(const AdeType& t) {
  return "canonical-" + (t.kind == AdeType::Kind::D ? std::string("D") : to_string(t));
}

TripleRecord to_record(const CanonicalTableEntry& e) {
  TripleRecord r;
  r.case_id = canonical_case_id(e.type);
  r.params = {e.weights[0], e.weights[1], e.weights[2], e.gamma_degree};
  r.type = e.type;
  r.split_degree = e.split_degree;
  return r;
}

}  // namespace

std::vector<CanonicalTableEntry> canonical_table(long bound) {
  using K = AdeType::Kind;
  std::vector<CanonicalTableEntry> t;
  for (long a1 = 1; a1 <= bound; ++a1)
    for (long a2 = 1; a2 <= a1; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      for (long q3 = 1; q3 <= bound; ++q3) t.push_back(entry(a1 * q3, a2 * q3, 1, a1 + a2, K::A));
    }
  for (long l = 2; l <= bound; ++l) {
    t.push_back(entry(l, l - 1, 2, l, K::D));
    t.push_back(entry(l + 1, l, 1, 2 * l, K::D, 0, 1));
    t.push_back(entry(l, l, 1, 2, K::D));
  }
  for (const auto& e : exceptional_entries()) t.push_back(e);
  return t;
}

std::vector<TripleRecord> classify_canonical_triple(const std::array<Int, 3>& w, const Int& g) {
  std::vector<TripleRecord> out;
  auto add = [&](TripleRecord r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  };
  std::array<int, 3> perm{0, 1, 2};
  do {
    Int x = w[perm[0]], y = w[perm[1]], z = w[perm[2]];
    if (z == 1 && x >= y && y >= 1) {
      Int q3 = gcd(x, y);
      Int a1 = x / q3, a2 = y / q3;
      if (g == a1 + a2)
        add(to_record({{x, y, z}, g, {AdeType::Kind::A, 0}, std::nullopt}));
    }
    // the table states type D without a rank
    const AdeType d{AdeType::Kind::D, 0};
    if (x >= 2 && y == x - 1 && z == 2 && g == x) add(to_record({{x, y, z}, g, d, std::nullopt}));
    if (x >= 2 && y == x && z == 1 && g == 2) add(to_record({{x, y, z}, g, d, std::nullopt}));
    if (x >= 3 && y == x - 1 && z == 1 && g == 2 * y) add(to_record({{x, y, z}, g, d, Int(1)}));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& e : exceptional_entries()) {
    std::array<Int, 3> s = w, t = e.weights;
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    if (s == t && g == e.gamma_degree) add(to_record(e));
  }
  return out;
}

std::vector<std::array<Int, 4>> quadric_orbit(const std::array<Int, 4>& w) {
  std::vector<std::array<Int, 4>> out;
  for (int pair = 0; pair < 2; ++pair)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        std::array<Int, 4> v = w;
        if (pair) v = {w[2], w[3], w[0], w[1]};
        if (s1) std::swap(v[0], v[1]);
        if (s2) std::swap(v[2], v[3]);
        out.push_back(v);
      }
  return out;
}

bool quadric_triple_condition(const std::array<Int, 4>& w, const Int& gamma, QuadricMode mode) {
  quadric_surface_pair(w);  // validates
  for (const auto& v : quadric_orbit(w)) {
    if (gamma != v[1]) continue;
    if (mode == QuadricMode::canonical) {
      if (v[0] == 1) return true;
    } else {
      auto p = quadric_surface_pair(v);
      if (p.d23 == 1 && p.d24 == 1 && p.a[1] % p.a[0] == 0) return true;
    }
  }
  return false;
}

bool is_in_Pn(const Rat& a, long n) {
  if (a < 0 || a > 1) throw std::domain_error("coefficient must lie in [0,1]");
  if (n < 1) throw std::domain_error("n must be positive");
  return Rat(floor_of(Rat(n + 1) * a)) >= Rat(n) * a;
}

}  // namespace toricsing
