#include "twistcalc/twist.hpp"

#include <algorithm>

namespace twistcalc {

std::string branch_point_name(const std::string& edge_label, int side) {
  return edge_label + (side == 0 ? "'" : "''");
}

TwistAssignment solve_twist(const StableCurve& c) {
  if (c.vertices().empty()) throw Error("EmptyCurve", "no vertices");
  if (!c.is_connected()) throw Error("Disconnected", "dual graph must be connected");
  const std::size_t n = c.vertices().size();

  TwistAssignment t;
  t.leg_sum.resize(n);
  t.deficit.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.leg_sum[i] = c.leg_order_sum(i);
    Int comp_genus = c.component_arithmetic_genus(i);
    // deg omega|_{C_i} = 2 (g_i + loops_i) - 2 + valence_i
    t.deficit[i] = t.leg_sum[i] - (2 * comp_genus - 2) - Int(c.valence(i));
  }

  SolutionSet sol = solve_integral(laplacian(c), t.deficit);
  if (!sol.solvable)
    throw Error("NoIntegralTwist", "the Laplacian system has no integer solution");
  t.b = sol.particular;
  Int mn = *std::min_element(t.b.begin(), t.b.end());
  for (Int& x : t.b) x -= mn;

  t.s.resize(c.edges().size());
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    if (c.is_loop(e)) {
      t.s[e] = {Int(-1), Int(-1)};  // simple poles on both branches
      continue;
    }
    const Edge& ed = c.edges()[e];
    t.s[e][0] = t.b[ed.v[0]] - t.b[ed.v[1]] - 1;
    t.s[e][1] = t.b[ed.v[1]] - t.b[ed.v[0]] - 1;
  }
  return t;
}

Polarity classify_polarity(const StableCurve& c, const TwistAssignment& t) {
  const std::size_t n = c.vertices().size();
  Polarity p;
  p.polar.assign(n, false);
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    const Edge& ed = c.edges()[e];
    for (int side = 0; side < 2; ++side) {
      if (t.s[e][side] < 0) p.polar[ed.v[side]] = true;
      if (!c.is_loop(e) && t.s[e][side] == -1 && c.valence(ed.v[side]) == 1)
        throw Error("TailMinusOne", "twist -1 at the node of tail '" +
                                        c.vertices()[ed.v[side]].label +
                                        "' would force a marked point into the node");
    }
  }
  for (const Leg& l : c.legs())
    if (l.order < 0) p.polar[l.vertex] = true;
  return p;
}

TwistedCanonicalCheck check_twisted_canonical(const StableCurve& c, const ModelMap& models) {
  CurveType type = classify_type(c);
  if (type.cls == CurveClass::NonPseudocompact)
    throw Error("NotPseudocompact",
                "the twisted-canonical relation is only defined on curves of pseudocompact type");

  TwistedCanonicalCheck out;
  out.twist = solve_twist(c);
  classify_polarity(c, out.twist);  // validates the tail rule

  const std::size_t n = c.vertices().size();
  out.per_vertex.assign(n, Trilean::Unknown);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& label = c.vertices()[i].label;
    auto it = models.find(label);
    if (it == models.end())
      throw Error("MissingModel", "no component model for vertex '" + label + "'");
    const ComponentModel& model = it->second;

    DivisorClass lhs(label), rhs(label);
    for (const Leg& l : c.legs())
      if (l.vertex == i) lhs.add(l.label, l.order);
    for (std::size_t e = 0; e < c.edges().size(); ++e) {
      if (c.is_loop(e)) continue;
      const Edge& ed = c.edges()[e];
      for (int side = 0; side < 2; ++side)
        if (ed.v[side] == i) lhs.add(ed.label, out.twist.s[e][side]);
    }
    rhs.canonical = 1;
    if (c.loops_at(i) > 0 && model.genus() == c.vertices()[i].genus) {
      // normalization model: component dualizing = K + loop branch points
      for (std::size_t e = 0; e < c.edges().size(); ++e)
        if (c.is_loop(e) && c.edges()[e].v[0] == i) {
          rhs.add(branch_point_name(c.edges()[e].label, 0), 1);
          rhs.add(branch_point_name(c.edges()[e].label, 1), 1);
        }
    }
    out.per_vertex[i] = model.linear_equiv(lhs, rhs);
  }

  bool any_false = std::any_of(out.per_vertex.begin(), out.per_vertex.end(),
                               [](Trilean t) { return t == Trilean::False; });
  bool all_true = std::all_of(out.per_vertex.begin(), out.per_vertex.end(),
                              [](Trilean t) { return t == Trilean::True; });
  out.status = any_false  ? CheckStatus::NotTwistedCanonical
               : all_true ? CheckStatus::TwistedCanonical
                          : CheckStatus::Undecided;
  return out;
}

Int dimension_bound(const Int& b_dim, const Int& g, bool refined) {
  if (g < 0) throw Error("NegativeGenus", "genus must be nonnegative");
  if (refined && g < 1)
    throw Error("InvalidGenus", "the refined bound dim B - (g-1) needs g >= 1");
  return refined ? Int(b_dim - (g - 1)) : Int(b_dim - g);
}

namespace {

bool signature_holomorphic(const StableCurve& c) {
  return std::none_of(c.legs().begin(), c.legs().end(),
                      [](const Leg& l) { return l.order < 0; });
}

// The two genus-2 chains of Prop 4.4: E_1 - R - E_2 with all marked points on
// the rational bridge and signature (1,1) or (2).
enum class G2Chain { No, U1, U2 };

G2Chain match_g2_chain(const StableCurve& c, std::size_t& bridge_vertex) {
  if (c.vertices().size() != 3 || c.edges().size() != 2) return G2Chain::No;
  if (c.arithmetic_genus() != 2) return G2Chain::No;
  CurveType type = classify_type(c);
  if (type.cls != CurveClass::CompactType) return G2Chain::No;
  std::size_t mid = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (c.valence(i) == 2) mid = i;
  if (mid == 3 || c.vertices()[mid].genus != 0) return G2Chain::No;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != mid && c.vertices()[i].genus != 1) return G2Chain::No;
  for (const Leg& l : c.legs())
    if (l.vertex != mid) return G2Chain::No;
  bridge_vertex = mid;
  if (c.legs().size() == 2 && c.legs()[0].order == 1 && c.legs()[1].order == 1)
    return G2Chain::U1;
  if (c.legs().size() == 1 && c.legs()[0].order == 2) return G2Chain::U2;
  return G2Chain::No;
}

}  // namespace

Verdict smoothability_verdict(const StableCurve& c, const ModelMap& models) {
  Verdict v;
  CurveType type = classify_type(c);

  if (type.cls == CurveClass::NonPseudocompact) {
    v.status = CheckStatus::Undecided;
    v.smoothable = Smoothable::Inconclusive;
    v.criterion = "Sec-4.5";
    try {
      solve_twist(c);
      v.notes.push_back(
          "non-pseudocompact: smoothability needs semistable models and regular smoothings");
    } catch (const Error&) {
      v.notes.push_back("no integral twist on this stable model; Cor-4.15 constrains only "
                        "some semistable model, so this alone decides nothing");
    }
    v.notes.push_back("genus-3 minimal-stratum configurations are decided by the catalog");
    return v;
  }

  TwistedCanonicalCheck check;
  try {
    check = check_twisted_canonical(c, models);
  } catch (const Error& e) {
    if (e.code() == "TailMinusOne") {
      v.status = CheckStatus::NotTwistedCanonical;
      v.smoothable = Smoothable::No;
      v.criterion = signature_holomorphic(c) ? "Prop-4.1" : "Thm-4.12";
      v.notes.push_back(e.what());
      return v;
    }
    throw;
  }
  v.status = check.status;

  const bool holomorphic = signature_holomorphic(c);
  if (check.status == CheckStatus::NotTwistedCanonical) {
    v.smoothable = Smoothable::No;
    v.criterion = holomorphic ? "Prop-4.1" : "Thm-4.12";
    v.notes.push_back("the twisted-canonical relation fails on some component");
    return v;
  }

  Polarity pol = classify_polarity(c, check.twist);
  const std::size_t holomorphic_components =
      static_cast<std::size_t>(std::count(pol.polar.begin(), pol.polar.end(), false));
  const std::size_t bridges = type.bridges.size();
  const bool has_loops = !type.loops.empty();

  auto conclude_iff = [&](const char* criterion) {
    v.criterion = criterion;
    if (has_loops) v.notes.push_back("self-nodes plumbed out first (Rem-4.10)");
    if (check.status == CheckStatus::TwistedCanonical) {
      v.smoothable = Smoothable::Yes;
    } else {
      v.smoothable = Smoothable::Inconclusive;
      v.notes.push_back("relation undecided on some component; the criterion is an iff");
    }
  };

  // the two Prop 4.4 configurations override the generic tree
  std::size_t bridge_vertex = 0;
  G2Chain g2 = match_g2_chain(c, bridge_vertex);
  if (g2 == G2Chain::U2) {
    v.smoothable = Smoothable::No;
    v.criterion = "Prop-4.4";
    v.notes.push_back("a double cover of P^1 ramified at q_1, q_2 and z would need three "
                      "ramification points");
    return v;
  }
  if (g2 == G2Chain::U1) {
    v.criterion = "Prop-4.4";
    bool conjugate = false;
    auto it = models.find(c.vertices()[bridge_vertex].label);
    if (it != models.end()) {
      for (const Axiom& ax : it->second.axioms())
        if (ax.kind == Axiom::Kind::HyperellipticConjugate) {
          const std::string &a = ax.points[0], &b = ax.points[1];
          const std::string &z1 = c.legs()[0].label, &z2 = c.legs()[1].label;
          if ((a == z1 && b == z2) || (a == z2 && b == z1)) conjugate = true;
        }
    }
    if (conjugate && check.status == CheckStatus::TwistedCanonical) {
      v.smoothable = Smoothable::Yes;
      v.notes.push_back("z_1 + z_2 lies in the g^1_2 induced by 2q_1 ~ 2q_2");
    } else {
      v.smoothable = Smoothable::No;
      v.notes.push_back("z_1 + z_2 is not a section of the g^1_2 induced by 2q_1 ~ 2q_2");
    }
    return v;
  }

  if (bridges == 0) {
    // smooth curve, or an irreducible component with self-nodes only
    conclude_iff(has_loops ? "Thm-1.1" : "Thm-1.2");
    return v;
  }
  if (bridges == 1) {
    if (holomorphic) {
      conclude_iff("Thm-1.2");
      return v;
    }
    if (holomorphic_components == 0) {
      conclude_iff("Thm-1.3");
      return v;
    }
    v.smoothable = Smoothable::Inconclusive;
    v.criterion = "Thm-1.3";
    v.notes.push_back(
        "meromorphic one-node criterion is stated for two polar components only");
    return v;
  }

  if (check.status == CheckStatus::TwistedCanonical) {
    if (holomorphic && holomorphic_components == 1) {
      v.smoothable = Smoothable::Yes;
      v.criterion = "Thm-4.9";
      return v;
    }
    if (!holomorphic && holomorphic_components == 0) {
      v.smoothable = Smoothable::Yes;
      v.criterion = "Thm-4.13";
      return v;
    }
  }

  v.smoothable = Smoothable::Inconclusive;
  v.criterion = "Thm-4.2";
  if (check.status == CheckStatus::Undecided)
    v.notes.push_back("twisted-canonical relation undecided on some component");
  else
    v.notes.push_back("necessary relation holds, but no stated sufficient criterion applies");
  return v;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::TwistedCanonical: return "twisted-canonical";
    case CheckStatus::NotTwistedCanonical: return "not-twisted-canonical";
    default: return "undecided";
  }
}

const char* to_string(Smoothable s) {
  switch (s) {
    case Smoothable::Yes: return "yes";
    case Smoothable::No: return "no";
    default: return "inconclusive";
  }
}

}  // namespace twistcalc
