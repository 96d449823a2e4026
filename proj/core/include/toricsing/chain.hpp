#pragma once
// Arithmetic of the chains of blow-ups along the marked curve: the exceptional-surface pair,
// the data of Gamma on it, and the transition to the next exceptional surface.

#include "toricsing/blowup.hpp"
#include "toricsing/surface_pairs.hpp"
#include "toricsing/toric_surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricsing {

// Local toric picture of the ambient threefold at a point of Gamma: S = V(e3), Gamma = V(e2, e3).
struct LocalChart {
  Int r;  // index of the cone <e1,e2,e3>
  std::array<Vec3, 3> e;
};

struct OmegaEntry {
  std::string divisor;
  Rat multiplicity;  // multiplicity of the pulled back elephant
  Rat a_zero;        // a(E, 0)
  Rat a_omega;       // a(E, Omega)
};

struct ChainState {
  long step = 0;
  std::optional<std::array<Int, 3>> triple;    // (m1, m2, m3): the contracted point is 1/m3(m1, m2)
  std::optional<std::array<Int, 3>> boundary;  // (k1, k2, beta2)
  std::optional<std::array<Int, 3>> betas;     // (beta1, beta2, j) of the step that produced the state
  Rat gamma_sq;                                // (Gamma^2)
  Rat k_gamma;                                 // (K + Diff).Gamma
  Rat a_plus_1;                                // a(S, 0) + 1

  std::optional<TripleRecord> start_triple;  // step 0 only
  std::optional<Rat> tilde_sq_fan;           // Gamma_tilde^2 read off the fan of the step
  bool continuation = true;                  // continuation inequality of the step

  // surface data
  std::vector<Rat> surface_boundary;
  std::vector<Vec2> surface_rays;
  std::vector<Int> gamma_class;
  bool plt = false;           // the general member of the class is plt
  std::string stop_reason;    // why the general member is not usable
  std::vector<Int> multiplicities;
  std::optional<AdeType> type;
  bool anti_ample = false;    // (K + Diff + Gamma).Gamma < 0
  std::vector<std::optional<LocalChart>> charts;  // one per point of Gamma with multiplicity > 1

  std::vector<OmegaEntry> omega;  // elephant bookkeeping of the canonical construction
};

// Start from a weighted blow-up of a smooth or cyclic point and a plt triple (cases 1..8)
// on its exceptional surface.
ChainState start_chain(const WeightedBlowup& b, const TripleRecord& triple);

// Start of the canonical construction: the blow-up w of a smooth point with Gamma ~ O(g) from the
// canonical table; the elephant ledger records S with multiplicity a(S,0).
ChainState start_canonical_chain(const std::array<Int, 3>& w, const Int& gamma_degree);

Rat gamma_tilde_sq(const ChainState& s, const Int& beta1, const Int& beta2);

bool contraction_triple_check(const Rat& gamma_tilde_sq, const Int& m1, const Int& m2, const Int& m3);
bool contraction_triple_check(const ChainState& s, const Int& beta1, const Int& beta2, const Int& m1,
                              const Int& m2, const Int& m3);

bool continuation_inequality(const Int& m1, const Int& m2, const Int& m3, const Int& k1, const Int& k2,
                             const Int& beta2);
// Uses the (m, k) stored in a state produced by a step.
bool continuation_inequality(const ChainState& s, const Int& beta2);

// Blow up Gamma with weights (beta1, beta2) and mark Gamma' ~ E0 + F_j (j = 1 or 2).
ChainState step(const ChainState& s, const Int& beta1, const Int& beta2, int j);

ChainState canonical_chain_step(const ChainState& s, const Int& beta1, const Int& beta2 = 1);

struct ChainStepArgs {
  Int beta1, beta2;
  int j = 1;
};

// Runs the steps in order; on a failing step the error is returned along with the states so far.
struct ChainRun {
  std::vector<ChainState> states;
  std::optional<std::string> error;
};
ChainRun run_chain(const WeightedBlowup& b, const TripleRecord& triple, const std::vector<ChainStepArgs>& steps);

// t with <t, w> saturated and <e, t, w> of index equal to the index of <e, w> in its saturation.
Vec3 complete_pair(const Vec3& e, const Vec3& w);

}  // namespace toricsing
