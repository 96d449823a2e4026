#pragma once
// Terminal / canonical verdicts for 3-dimensional cyclic quotient singularities.

#include "toricsing/cyclic_type.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricsing {

enum class VerdictKind { terminal, canonical_not_terminal, not_canonical };

std::string to_string(VerdictKind k);
VerdictKind verdict_kind_from_string(const std::string& s);

struct Verdict {
  VerdictKind kind = VerdictKind::terminal;
  std::optional<long> witness_k;  // k with sum < 1 (not canonical) or sum = 1 (canonical, not terminal)
  bool operator==(const Verdict& o) const = default;
};

// Which rule decides canonicity for types with some gcd(ai, r) > 1.
enum class CanonicalRule {
  oracle_off_domain,  // three-case criterion only on well-formed types, Reid-Tai elsewhere (default)
  stated_criterion,   // the three-case criterion on every type
};

// Lexicographically least representative over weight permutations and unit multiples.
CyclicQuotientType normalize(const CyclicQuotientType& t);

// Entry k-1 is sum_i frac(k ai / r), k = 1..r-1.
std::vector<Rat> reid_tai_profile(const CyclicQuotientType& t);

// Integer form: r * (entry for k).
long reid_tai_residue_sum(const CyclicQuotientType& t, long k);

// Oracle definitions.
bool reid_tai_canonical(const CyclicQuotientType& t);  // every sum >= 1
bool reid_tai_terminal(const CyclicQuotientType& t);   // every sum > 1

// The three-case criterion: integral sums, a pair ai + aj = 0 mod r, or 1/9(1,4,7), 1/14(1,9,11).
bool three_case_criterion(const CyclicQuotientType& t);
// Some ai + aj = 0 mod r with i != j.
bool opposite_pair_criterion(const CyclicQuotientType& t);

Verdict is_canonical(const CyclicQuotientType& t, CanonicalRule rule = CanonicalRule::oracle_off_domain);
bool is_terminal(const CyclicQuotientType& t);

// min_k (sum_k - 1); only for terminal types.
Rat minimal_discrepancy(const CyclicQuotientType& t);

}  // namespace toricsing
