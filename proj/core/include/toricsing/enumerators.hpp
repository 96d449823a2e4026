#pragma once
// Bounded exhaustive searches: canonical blow-ups of a smooth point and of the odp, terminal
// blow-ups of cyclic quotients, parameter tables of the plt cases.

#include "toricsing/blowup.hpp"
#include "toricsing/surface_pairs.hpp"

#include <string>
#include <vector>

namespace toricsing {

struct EnumerationReport {
  long bound = 0;
  std::string key_name = "weights";   // column name of hits
  std::string value_name = "a_S_0";   // column name of values
  std::vector<std::vector<Int>> hits;  // sorted, unique
  std::vector<std::string> tags;       // family label per hit
  std::vector<Rat> values;             // a(S,0) per hit (anti-degree for plt tables)
  std::vector<std::string> errors;     // untagged hits, missing family members
};

// jobs <= 1 runs on the calling thread; output does not depend on jobs.
EnumerationReport enumerate_canonical_smooth(long max_weight, int jobs = 1,
                                             CanonicalRule rule = CanonicalRule::oracle_off_domain);
EnumerationReport enumerate_canonical_odp(long max_weight, int jobs = 1);
EnumerationReport enumerate_terminal_cyclic(const Int& r, const Int& q, long max_weight, int jobs = 1);
EnumerationReport enumerate_plt_triples_case(int case_id, long bound, int jobs = 1);

// Family label of a canonical smooth-point weight triple (w1 >= w2 >= w3), or "" when none fits.
std::string canonical_smooth_family(const std::vector<Int>& w);
const std::vector<std::vector<Int>>& canonical_sporadics();

// The predicate behind enumerate_plt_triples_case for a single parameter tuple.
bool plt_case_predicate(int case_id, const std::vector<Int>& params);

// Lexicographically least member of the quadric symmetry orbit.
std::vector<Int> odp_representative(const std::vector<Int>& w);

}  // namespace toricsing
