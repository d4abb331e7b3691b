#pragma once
#include <optional>
#include <string>
#include <vector>

#include "twistcalc/curve.hpp"
#include "twistcalc/divisor.hpp"

namespace twistcalc {

// Limit spin structure on the blow-up of the curve: every non-loop edge gets
// an exceptional P^1 carrying O(1); every non-exceptional vertex carries a
// divisor class eta_i of degree (component arithmetic genus) - 1 built from
// half the leg orders and solved node coefficients. Self-nodes are never
// blown up; eta on such a component is a square root of its dualizing sheaf
// (first kind).
struct SpinStructure {
  StableCurve blown;                             // curve with exceptional components inserted
  std::vector<std::optional<DivisorClass>> eta;  // per blown vertex; nullopt = O(1)
  std::vector<Int> eta_degree;                   // per blown vertex
  Int total_degree;                              // sum over all vertices, must be g-1
};

// Construct the limit spin structure. All leg orders must be even (OddEntry).
// The half-twist system is solved on the blown-up dual graph; it always has
// an integer solution on pseudocompact curves. When a non-pseudocompact
// curve's system happens to be integrally solvable (e.g. the genus-3 banana
// of two elliptic curves) the structure is still produced; when it is not,
// NotPseudocompact is thrown, which is exactly the situation where the parity
// fails to be well defined.
SpinStructure limit_spin(const StableCurve& c);

enum class ParityValue { Even, Odd, Undecided };

struct Parity {
  ParityValue value = ParityValue::Undecided;
  std::vector<std::string> reasons;  // vertices whose h^0 is unknown
};

// Sum of h^0(C_i, eta_i) over non-exceptional components, mod 2. Exceptional
// O(1)-components do not contribute. Any unknown h^0 makes the parity
// Undecided, never a guess.
Parity parity(const SpinStructure& spin, const ModelMap& models);

const char* to_string(ParityValue p);

}  // namespace twistcalc
