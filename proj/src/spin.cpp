#include "twistcalc/spin.hpp"

#include <algorithm>

namespace twistcalc {

SpinStructure limit_spin(const StableCurve& c) {
  if (c.vertices().empty()) throw Error("EmptyCurve", "no vertices");
  if (!c.is_connected()) throw Error("Disconnected", "dual graph must be connected");
  for (const Leg& l : c.legs())
    if (l.order % 2 != 0)
      throw Error("OddEntry", "leg '" + l.label + "' has odd order; spin needs an even signature");

  // blow up every non-loop edge once
  SpinStructure spin;
  spin.blown = c;
  std::vector<std::string> to_blow;
  for (std::size_t e = 0; e < c.edges().size(); ++e)
    if (!c.is_loop(e)) to_blow.push_back(c.edges()[e].label);
  for (const std::string& label : to_blow)
    spin.blown = insert_rational_chain(spin.blown, label, 1);
  const StableCurve& b = spin.blown;
  const std::size_t n = b.vertices().size();

  // half-twist system: deg eta_i = (g_i + loops_i) - 1 on original vertices,
  // 1 on exceptional ones
  std::vector<Int> rhs(n);
  std::vector<Int> half_order(n);  // N_i
  for (const Leg& l : b.legs()) half_order[l.vertex] += l.order / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.vertices()[i].exceptional)
      rhs[i] = -1;
    else
      rhs[i] = half_order[i] - b.component_arithmetic_genus(i) + 1;
  }
  SolutionSet sol = solve_integral(laplacian(b), rhs);
  if (!sol.solvable)
    throw Error("NotPseudocompact",
                "no integral half-twist: the limit spin structure is not determined by the "
                "curve (non-pseudocompact)");
  const std::vector<Int>& coef = sol.particular;

  spin.eta.resize(n);
  spin.eta_degree.assign(n, Int(0));
  spin.total_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.vertices()[i].exceptional) {
      spin.eta_degree[i] = 1;
      spin.total_degree += 1;
      continue;
    }
    DivisorClass eta(b.vertices()[i].label);
    for (const Leg& l : b.legs())
      if (l.vertex == i) eta.add(l.label, l.order / 2);
    for (std::size_t e = 0; e < b.edges().size(); ++e) {
      if (b.is_loop(e)) continue;
      const Edge& ed = b.edges()[e];
      for (int side = 0; side < 2; ++side)
        if (ed.v[side] == i) {
          // point named after the original node; blow-up edge labels are q/e1, q/e2
          std::string node = ed.label;
          if (auto pos = node.rfind("/e"); pos != std::string::npos) node = node.substr(0, pos);
          eta.add(node, coef[i] - coef[ed.v[1 - side]]);
        }
    }
    spin.eta_degree[i] = half_order[i];
    for (std::size_t e = 0; e < b.edges().size(); ++e) {
      if (b.is_loop(e)) continue;
      const Edge& ed = b.edges()[e];
      for (int side = 0; side < 2; ++side)
        if (ed.v[side] == i) spin.eta_degree[i] += coef[i] - coef[ed.v[1 - side]];
    }
    spin.total_degree += spin.eta_degree[i];
    spin.eta[i] = std::move(eta);
  }
  return spin;
}

Parity parity(const SpinStructure& spin, const ModelMap& models) {
  Parity out;
  Int sum = 0;
  const StableCurve& b = spin.blown;
  for (std::size_t i = 0; i < b.vertices().size(); ++i) {
    if (b.vertices()[i].exceptional) continue;
    const std::string& label = b.vertices()[i].label;
    auto it = models.find(label);
    if (it == models.end()) throw Error("MissingModel", "no component model for '" + label + "'");
    if (b.loops_at(i) > 0 && it->second.genus() == b.vertices()[i].genus) {
      // first-kind structure on a self-nodal component: h^0 lives on the nodal
      // curve, which a normalization model cannot answer
      out.reasons.push_back("'" + label +
                            "' carries self-nodes; its first-kind h^0 is not determined by "
                            "the normalization model");
      continue;
    }
    std::optional<Int> h = it->second.h0(*spin.eta[i]);
    if (!h) {
      out.reasons.push_back("h^0 unknown on '" + label + "' for " + spin.eta[i]->to_string());
      continue;
    }
    sum += *h;
  }
  if (!out.reasons.empty()) {
    out.value = ParityValue::Undecided;
    return out;
  }
  out.value = (sum % 2 == 0) ? ParityValue::Even : ParityValue::Odd;
  return out;
}

const char* to_string(ParityValue p) {
  switch (p) {
    case ParityValue::Even: return "even";
    case ParityValue::Odd: return "odd";
    default: return "undecided";
  }
}

}  // namespace twistcalc
