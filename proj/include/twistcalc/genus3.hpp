#pragma once
#include <string>
#include <vector>

#include "twistcalc/curve.hpp"
#include "twistcalc/divisor.hpp"

namespace twistcalc {

// Topological types of stable pointed genus-3 curves with one zero of order 4
// and at most two nodes: three one-node cases and ten two-node cases.
enum class CaseLabel {
  OneNodeI,
  OneNodeII,
  OneNodeIII,
  CaseIV,
  CaseV,
  CaseVI,
  CaseVII,
  CaseVIII,
  CaseIX,
  CaseX,
  CaseXI,
  CaseXII,
  CaseXIII
};

const char* to_string(CaseLabel c);

// Match the curve against the catalog topologies. Errors: WrongGenus,
// WrongSignature (needs exactly one leg of order 4), UnsupportedTopology
// (smooth, more than two nodes, or no catalog shape).
CaseLabel identify_case(const StableCurve& c);

struct CatalogVerdict {
  CaseLabel label;
  Trilean in_hyp = Trilean::Unknown;
  Trilean in_odd = Trilean::Unknown;
  std::vector<std::string> conditions_used;
};

// Evaluate the case conditions against the component models. The only
// configuration family that may land in both closures is Case XII with the
// two nodes hyperelliptic-conjugate; every pseudocompact case keeps the two
// spin closures disjoint.
CatalogVerdict classify(const StableCurve& c, const ModelMap& models);

}  // namespace twistcalc
