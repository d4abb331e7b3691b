#pragma once
#include <optional>
#include <string>
#include <vector>

#include "twistcalc/strata.hpp"

namespace twistcalc {

// Chain of g elliptic curves E_1,...,E_g joined at q_1,...,q_{g-1}, marked at
// a smooth point of E_g. torsion[i] is the torsion order t_{i+2} of
// (q_{i+1}, q_{i+2}) in E_{i+2}; nullopt means infinite order.
struct ChainInput {
  int g = 2;
  std::vector<std::optional<Int>> torsion;  // size g-1, entries t_2..t_g
};

struct ChainResult {
  bool limit_weierstrass = false;
  std::vector<Int> witness;  // k_1 <= ... <= k_g = g when true
};

// Is the marked point a limit Weierstrass point? Decided by dynamic
// programming over admissible ramification sequences g = k_g >= ... >= k_1
// >= 2, where the step into E_i needs k_i > k_{i-1} or t_i | k_i.
ChainResult chain_is_limit_weierstrass(const ChainInput& in);

enum class WeierstrassStatus { Weierstrass, NotWeierstrass, OutOfScope };

struct WeierstrassFact {
  WeierstrassStatus status;
  std::string citation;
  std::string hypothesis;  // attached side conditions for conditional answers
};

// Curated fact table for the marked point orders()[index] of a general curve
// in the named component of the stratum. Unlabeled means the non-hyperelliptic
// components.
WeierstrassFact generic_nonweierstrass(const Signature& mu, std::size_t index,
                                       ComponentLabel component = ComponentLabel::Unlabeled);

}  // namespace twistcalc
