#pragma once
#include <array>
#include <string>
#include <vector>

#include "twistcalc/curve.hpp"
#include "twistcalc/divisor.hpp"

namespace twistcalc {

// Solution of L(C) b = deficit together with the per-edge-side twists derived
// from it. Twists follow the paper's sign convention: across every non-loop
// edge s_[side i] + s_[side k] = -2, and summing all edge sides at a vertex
// (loops counted as -1 per side) gives 2 g_i - 2 - M_i for the geometric
// vertex genus. The constant twist b corresponds to the dualizing sheaf
// itself, s = -1 everywhere.
struct TwistAssignment {
  std::vector<Int> b;                     // per vertex, normalized to min 0
  std::vector<std::array<Int, 2>> s;      // per edge, per endpoint slot; loops {-1,-1}
  std::vector<Int> leg_sum;               // M_i per vertex
  std::vector<Int> deficit;               // right-hand side of the Laplacian system
};

// Solve for the twisting coefficients b_i of the curve whose leg orders carry
// the signature. deficit_i = M_i - deg(omega|_{C_i}) where omega is the
// dualizing sheaf of the whole curve, so the twisted bundle gets degree M_i
// on every component. Unique modulo the all-ones vector; normalized so the
// minimum b_i is zero. Throws NoIntegralTwist when no integer solution exists.
TwistAssignment solve_twist(const StableCurve& c);

struct Polarity {
  std::vector<bool> polar;  // per vertex; false = holomorphic component
};

// A component is polar when the twisted divisor fails to be effective on it:
// some edge-side twist is negative or some leg order is negative. Validates
// the tail rule: a component meeting its complement in one node cannot have
// twist -1 there (the node would be a base point, forcing a marked point
// into it). Throws TailMinusOne in that case.
Polarity classify_polarity(const StableCurve& c, const TwistAssignment& t);

enum class CheckStatus { TwistedCanonical, NotTwistedCanonical, Undecided };

struct TwistedCanonicalCheck {
  std::vector<Trilean> per_vertex;
  CheckStatus status;
  TwistAssignment twist;
};

// Evaluate, on each component, the linear-equivalence relation
//   sum m_j z_j + sum_{non-loop nodes} s_ij q_j ~ K(component)
// via the per-vertex models. Loop nodes are excluded from the relation; on a
// vertex with loops the right side is the component dualizing sheaf, i.e.
// K(normalization) plus the loop branch points (named <edge>' and <edge>'').
// Requires a curve of compact or pseudocompact type.
TwistedCanonicalCheck check_twisted_canonical(const StableCurve& c, const ModelMap& models);

// dim B - g, or dim B - (g-1) for the refined bound (g >= 1 required there).
Int dimension_bound(const Int& b_dim, const Int& g, bool refined);

enum class Smoothable { Yes, No, Inconclusive };

struct Verdict {
  CheckStatus status = CheckStatus::Undecided;
  Smoothable smoothable = Smoothable::Inconclusive;
  std::string criterion;           // citation tag backing the answer
  std::vector<std::string> notes;  // diagnostics, undecided reasons
};

// Decision tree over the paper's smoothability criteria:
//   failed relation            -> No   (Prop-4.1 / Thm-4.12 necessity)
//   <= 1 separating node       -> iff  (Thm-1.2 holomorphic; Thm-1.3 meromorphic
//                                       with both sides polar; Thm-1.1 for
//                                       self-nodes only, plumbed per Rem-4.10)
//   the two genus-2 chains     -> Prop-4.4 exact answer
//   one holomorphic component  -> Yes  (Thm-4.9, holomorphic signatures)
//   all components polar       -> Yes  (Thm-4.13, meromorphic signatures)
//   otherwise                  -> Inconclusive
// Non-pseudocompact curves are Inconclusive here; the genus-3 catalog decides
// its own configurations.
Verdict smoothability_verdict(const StableCurve& c, const ModelMap& models);

const char* to_string(CheckStatus s);
const char* to_string(Smoothable s);

// Name of a loop branch point on the normalization: <edge>' or <edge>''.
std::string branch_point_name(const std::string& edge_label, int side);

}  // namespace twistcalc
