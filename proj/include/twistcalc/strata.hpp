#pragma once
#include <string>
#include <vector>

#include "twistcalc/lattice.hpp"

namespace twistcalc {

// Ordered zero/pole orders of a differential. Positive entries are zero
// orders, negative entries pole orders; order-0 entries are legal marked
// points and count toward the dimension like any other.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<Int> orders) : orders_(std::move(orders)) {}

  const std::vector<Int>& orders() const { return orders_; }
  std::size_t n() const { return orders_.size(); }
  bool holomorphic() const;  // no negative entry
  std::size_t zeros() const;  // entries >= 0
  std::size_t poles() const;  // entries < 0
  Int sum() const;

  bool operator==(const Signature& rhs) const = default;
  std::string to_string() const;  // "(4, -2)"
};

Int genus_of(const Signature& mu);  // OddSum / NegativeGenus

// dim H(mu): 2g + n - 1 without poles, 2g - 2 + r + s with at least one pole;
// minus one when projectivized.
Int stratum_dimension(const Signature& mu, bool projectivized);

enum class ComponentLabel { Hyperelliptic, OddSpin, EvenSpin, Nonhyperelliptic, Unlabeled };

const char* to_string(ComponentLabel l);

// Connected-component labels, for exactly the stated shapes: (2g-2) and
// (g-1,g-1) admit a hyperelliptic component; all-even holomorphic signatures
// admit odd/even spin; the meromorphic shapes (2k,-2l), (2k,-l,-l), (k,k,-2l),
// (k,k,-l,-l) admit a hyperelliptic component. In genus three the even spin
// component coincides with the hyperelliptic one, so only {hyp, odd} remain.
// Anything else is Unlabeled; no nonemptiness promise is made.
std::vector<ComponentLabel> component_labels(const Signature& mu);

// "contained" lies in the closure of the stratum of "ambient".
struct AdjacencyFact {
  Signature contained;
  Signature ambient;
};

struct SignatureMove {
  Signature result;
  AdjacencyFact adjacency;
};

// Replace the zero orders[index] by the given positive parts (same position,
// in order). The unsplit signature lies in the closure of the split one.
SignatureMove split_zero(const Signature& mu, std::size_t index, const std::vector<Int>& parts);

// Merge the poles at positions i and j into one of their combined order (at
// position min(i,j)). The merged signature lies in the closure of the
// unmerged one. Merging anything that is not a pole is rejected: a zero and
// a pole cannot always be merged.
SignatureMove merge_poles(const Signature& mu, std::size_t i, std::size_t j);

}  // namespace twistcalc
