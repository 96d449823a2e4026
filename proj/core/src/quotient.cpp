#include "toricsing/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricsing {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::terminal: return "terminal";
    case VerdictKind::canonical_not_terminal: return "canonical-not-terminal";
    case VerdictKind::not_canonical: return "not-canonical";
  }
  return "?";
}

VerdictKind verdict_kind_from_string(const std::string& s) {
  if (s == "terminal") return VerdictKind::terminal;
  if (s == "canonical-not-terminal") return VerdictKind::canonical_not_terminal;
  if (s == "not-canonical") return VerdictKind::not_canonical;
  throw std::invalid_argument("unknown verdict kind '" + s + "'");
}

namespace {

struct Small {
  long r;
  long a[3];
};

Small small_of(const CyclicQuotientType& t) {
  Small s{to_long(t.r), {to_long(t.a[0]), to_long(t.a[1]), to_long(t.a[2])}};
  if (s.r > (1L << 31)) throw std::overflow_error("group order too large to enumerate");
  return s;
}

long gcdl(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

long residue_sum(const Small& s, long k) {
  return (k * s.a[0]) % s.r + (k * s.a[1]) % s.r + (k * s.a[2]) % s.r;
}

}  // namespace

long reid_tai_residue_sum(const CyclicQuotientType& t, long k) { return residue_sum(small_of(t), k); }

CyclicQuotientType normalize(const CyclicQuotientType& t) {
  if (t.r == 1) return CyclicQuotientType();
  Small s = small_of(t);
  std::array<long, 3> best{};
  bool have = false;
  for (long u = 1; u < s.r; ++u) {
    if (gcdl(u, s.r) != 1) continue;
    std::array<long, 3> w{(u * s.a[0]) % s.r, (u * s.a[1]) % s.r, (u * s.a[2]) % s.r};
    std::sort(w.begin(), w.end());  // least permutation
    if (!have || w < best) {
      best = w;
      have = true;
    }
  }
  return CyclicQuotientType(t.r, best[0], best[1], best[2]);
}

std::vector<Rat> reid_tai_profile(const CyclicQuotientType& t) {
  std::vector<Rat> out;
  if (t.r == 1) return out;
  Small s = small_of(t);
  out.reserve(s.r - 1);
  for (long k = 1; k < s.r; ++k) out.push_back(make_rat(residue_sum(s, k), s.r));
  return out;
}

bool reid_tai_canonical(const CyclicQuotientType& t) {
  if (t.r == 1) return true;
  Small s = small_of(t);
  for (long k = 1; k < s.r; ++k)
    if (residue_sum(s, k) < s.r) return false;
  return true;
}

bool reid_tai_terminal(const CyclicQuotientType& t) {
  if (t.r == 1) return true;
  Small s = small_of(t);
  for (long k = 1; k < s.r; ++k)
    if (residue_sum(s, k) <= s.r) return false;
  return true;
}

bool opposite_pair_criterion(const CyclicQuotientType& t) {
  if (t.r == 1) return true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Int m;
      Int sum = t.a[i] + t.a[j];
      mpz_fdiv_r(m.get_mpz_t(), sum.get_mpz_t(), t.r.get_mpz_t());
      if (m == 0) return true;
    }
  return false;
}

bool three_case_criterion(const CyclicQuotientType& t) {
  if (t.r == 1) return true;
  Small s = small_of(t);
  bool integral = true;
  for (long k = 1; k < s.r && integral; ++k)
    if (residue_sum(s, k) % s.r != 0) integral = false;
  if (integral) return true;
  if (opposite_pair_criterion(t)) return true;
  if (t.r == 9 || t.r == 14) {
    CyclicQuotientType n = normalize(t);
    if (n == normalize(CyclicQuotientType(9, 1, 4, 7))) return true;
    if (n == normalize(CyclicQuotientType(14, 1, 9, 11))) return true;
  }
  return false;
}

bool is_terminal(const CyclicQuotientType& t) { return reid_tai_terminal(t); }

Verdict is_canonical(const CyclicQuotientType& t, CanonicalRule rule) {
  Verdict v;
  if (t.r == 1) return v;
  Small s = small_of(t);
  long below = -1, equal = -1;
  for (long k = 1; k < s.r; ++k) {
    long x = residue_sum(s, k);
    if (x < s.r && below < 0) below = k;
    if (x == s.r && equal < 0) equal = k;
  }
  bool canonical;
  if (rule == CanonicalRule::stated_criterion || t.well_formed())
    canonical = three_case_criterion(t);
  else
    canonical = below < 0;
  if (!canonical) {
    v.kind = VerdictKind::not_canonical;
    if (below >= 0) v.witness_k = below;
    return v;
  }
  if (is_terminal(t)) return v;
  v.kind = VerdictKind::canonical_not_terminal;
  if (equal >= 0) v.witness_k = equal;
  return v;
}

Rat minimal_discrepancy(const CyclicQuotientType& t) {
  if (!is_terminal(t))
    throw std::domain_error("minimal discrepancy over exceptional divisors only defined here for terminal types");
  if (t.r == 1) throw std::domain_error("smooth point has no exceptional divisor here; minimal discrepancy undefined");
  Small s = small_of(t);
  long m = residue_sum(s, 1);
  for (long k = 2; k < s.r; ++k) m = std::min(m, residue_sum(s, k));
  return make_rat(m - s.r, s.r);
}

}  // namespace toricsing
