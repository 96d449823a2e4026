#pragma once
// Log pairs on exceptional surfaces: weighted projective planes, the quadric surface,
// ADE types of curve differents, and the plt / canonical triple tables.

#include "toricsing/rational.hpp"
#include "toricsing/toric_surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toricsing {

struct AdeType {
  enum class Kind { A, D, E6, E7, E8 };
  Kind kind = Kind::A;
  long l = 0;  // D only; 0 when the rank is not determined
  bool operator==(const AdeType& o) const = default;
};

std::string to_string(const AdeType& t);  // "A", "D5", "E6"
AdeType ade_type_from_string(const std::string& s);

// Multiplicities <= 1 are ignored; none when K_Gamma + Diff is not anti-ample.
std::optional<AdeType> ade_type(const std::vector<Int>& multiplicities);

// Complement index attached to a type: A 1, D 2, E6 3, E7 4, E8 6.
int complement_index(const AdeType& t);

// (P(a1,a2,a3), sum (q_i-1)/q_i {x_i=0}).
struct WPSPair {
  std::array<Int, 3> weights;
  std::array<Int, 3> indices;  // q_i >= 1
  Rat coefficient(int i) const { return 1 - make_rat(1, indices[i]); }
  std::array<Rat, 3> coefficients() const { return {coefficient(0), coefficient(1), coefficient(2)}; }
  ToricSurface surface() const;
  bool operator==(const WPSPair& o) const = default;
};

WPSPair make_wps_pair(const std::array<Int, 3>& weights, const std::array<Int, 3>& indices);
WPSPair exceptional_surface(const std::array<Int, 3>& w);

struct QuadricPair {
  std::array<Int, 4> w;
  Int d13, d14, d23, d24;
  std::array<Int, 4> a;
};

QuadricPair quadric_surface_pair(const std::array<Int, 4>& w);

Rat wps_degree(const WPSPair& s, const Int& d1, const Int& d2);

struct AmpleAdjunction {
  bool ample = false;
  Rat anti_degree;       // degree of -(K_S + D + Gamma)
  Rat gamma_log_degree;  // (K_S + D + Gamma).Gamma = deg(K_Gamma + Diff)
};

AmpleAdjunction triple_ample_and_adjunction(const WPSPair& s, const Int& gamma_degree);

// Multiplicities of Diff_Gamma(D) for a general Gamma in |O(g)|; throws if that member is not plt.
std::vector<Int> gamma_different(const WPSPair& s, const Int& gamma_degree);

struct TripleRecord {
  std::string case_id;  // "plt-1".."plt-10", "canonical-A", "canonical-D", "canonical-E6", ...
  std::vector<Int> params;
  AdeType type;
  std::optional<Int> split_degree;  // canonical split elephant: Gamma_1 ~ O(split_degree)
  bool operator==(const TripleRecord& o) const = default;
};

// Plt cases 1..8 as surface data. Parameters:
//   1 (d1)  2 (d1,d2,d3)  3 (a1,d1,d2)  4 (a1,d1)  5 (a2,d1,d2)  6 (a2,d1)  7 (l,a2,d1,d2)  8 (a1,a2,d1)
// and the records 9 (r1,r2,d1), 10 (r1,r2,l,d1).
struct PltCaseShape {
  std::array<Int, 3> weights;
  std::array<Int, 3> indices;
  Int gamma_degree;
};

int plt_case_arity(int case_id);
PltCaseShape plt_case_shape(int case_id, const std::vector<Int>& params);
// The parameter inequalities of the case statement.
bool plt_case_domain(int case_id, const std::vector<Int>& params);
// The listed parameter families.
bool plt_case_family(int case_id, const std::vector<Int>& params);
// Closed-form multiplicity multiset of Diff_Gamma(D).
std::vector<Int> plt_case_multiplicities(int case_id, const std::vector<Int>& params);
TripleRecord plt_case_record(int case_id, const std::vector<Int>& params);

// Gamma is a coordinate line (the pair is toric).
bool plt_case_is_toric(const PltCaseShape& s);

struct PltQuery {
  std::array<Int, 3> weights;
  std::array<Int, 3> indices;  // boundary indices on the coordinate lines, 1 = no boundary
  Int gamma_degree;
};

std::optional<TripleRecord> classify_plt_triple(const PltQuery& q);
// Cases 9 and 10 from their singularity data.
std::optional<TripleRecord> classify_plt_record(int case_id, const std::vector<Int>& params);

struct CanonicalTableEntry {
  std::array<Int, 3> weights;
  Int gamma_degree;
  AdeType type;
  std::optional<Int> split_degree;
};

// The finite part of the canonical triple table plus the families of types A and D
// instantiated with parameters <= param_bound.
std::vector<CanonicalTableEntry> canonical_table(long param_bound);

// All table entries matching w up to permutation with Gamma ~ O(g).
std::vector<TripleRecord> classify_canonical_triple(const std::array<Int, 3>& w, const Int& gamma_degree);

enum class QuadricMode { plt, canonical };
bool quadric_triple_condition(const std::array<Int, 4>& w, const Int& gamma_class, QuadricMode mode);
// The eight coordinate permutations preserving x1x2 + x3x4.
std::vector<std::array<Int, 4>> quadric_orbit(const std::array<Int, 4>& w);

bool is_in_Pn(const Rat& a, long n);

}  // namespace toricsing
