#include "twistcalc/genus3.hpp"

#include <sstream>

#include "twistcalc/twist.hpp"

namespace twistcalc {

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::OneNodeI: return "I";
    case CaseLabel::OneNodeII: return "II";
    case CaseLabel::OneNodeIII: return "III";
    case CaseLabel::CaseIV: return "IV";
    case CaseLabel::CaseV: return "V";
    case CaseLabel::CaseVI: return "VI";
    case CaseLabel::CaseVII: return "VII";
    case CaseLabel::CaseVIII: return "VIII";
    case CaseLabel::CaseIX: return "IX";
    case CaseLabel::CaseX: return "X";
    case CaseLabel::CaseXI: return "XI";
    case CaseLabel::CaseXII: return "XII";
    case CaseLabel::CaseXIII: return "XIII";
  }
  return "?";
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Role assignment worked out during matching; indices into vertices/edges.
struct CaseMatch {
  CaseLabel label;
  std::size_t mark = npos;   // vertex carrying z
  std::size_t other = npos;  // the second principal vertex (when present)
  std::size_t far = npos;    // third vertex in chains
  std::size_t e1 = npos, e2 = npos;  // edges; e1 is the node nearest z in chains
};

CaseMatch match_case(const StableCurve& c) {
  ValidationResult val = validate(c);
  if (!val.ok()) {
    std::string what;
    for (const auto& v : val.violations) what += v.what + "; ";
    throw Error("InvalidCurve", what);
  }
  if (c.arithmetic_genus() != 3) throw Error("WrongGenus", "catalog curves have genus 3");
  if (c.legs().size() != 1 || c.legs()[0].order != 4)
    throw Error("WrongSignature", "catalog curves carry one marked zero of order 4");
  const std::size_t nedges = c.edges().size();
  if (nedges == 0) throw Error("UnsupportedTopology", "smooth curves are not boundary cases");
  if (nedges > 2)
    throw Error("UnsupportedTopology", "curves with more than two nodes are out of scope");

  const std::size_t zv = c.legs()[0].vertex;
  auto genus = [&](std::size_t v) { return c.vertices()[v].genus; };

  CaseMatch m;
  m.mark = zv;
  if (nedges == 1) {
    m.e1 = 0;
    if (c.is_loop(0)) {
      if (genus(zv) == 2) {
        m.label = CaseLabel::OneNodeIII;
        return m;
      }
      throw Error("UnsupportedTopology", "one self-node needs a genus-2 component");
    }
    m.other = c.edges()[0].v[0] == zv ? c.edges()[0].v[1] : c.edges()[0].v[0];
    if (genus(zv) == 1 && genus(m.other) == 2) {
      m.label = CaseLabel::OneNodeI;
      return m;
    }
    if (genus(zv) == 2 && genus(m.other) == 1) {
      m.label = CaseLabel::OneNodeII;
      return m;
    }
    throw Error("UnsupportedTopology", "no one-node catalog shape matches");
  }

  const bool loop0 = c.is_loop(0), loop1 = c.is_loop(1);
  if (loop0 && loop1) {
    if (genus(zv) == 1 && c.edges()[0].v[0] == zv && c.edges()[1].v[0] == zv) {
      m.label = CaseLabel::CaseXIII;
      m.e1 = 0;
      m.e2 = 1;
      return m;
    }
    throw Error("UnsupportedTopology", "two self-nodes need a single genus-1 component");
  }
  if (loop0 || loop1) {
    const std::size_t loop_e = loop0 ? 0 : 1, bridge_e = loop0 ? 1 : 0;
    const std::size_t lv = c.edges()[loop_e].v[0];
    const std::size_t ov = c.edges()[bridge_e].v[0] == lv ? c.edges()[bridge_e].v[1]
                                                          : c.edges()[bridge_e].v[0];
    m.e1 = loop_e;
    m.e2 = bridge_e;
    if (genus(lv) == 1 && genus(ov) == 1) {
      m.label = zv == lv ? CaseLabel::CaseVII : CaseLabel::CaseVIII;
      m.mark = zv;
      m.other = zv == lv ? ov : lv;
      return m;
    }
    if (genus(lv) == 0 && genus(ov) == 2) {
      m.label = zv == lv ? CaseLabel::CaseIX : CaseLabel::CaseX;
      m.mark = zv;
      m.other = zv == lv ? ov : lv;
      return m;
    }
    throw Error("UnsupportedTopology", "no self-node catalog shape matches");
  }

  const Edge &ea = c.edges()[0], &eb = c.edges()[1];
  const bool parallel = (ea.v[0] == eb.v[0] && ea.v[1] == eb.v[1]) ||
                        (ea.v[0] == eb.v[1] && ea.v[1] == eb.v[0]);
  if (parallel) {
    m.other = ea.v[0] == zv ? ea.v[1] : ea.v[0];
    m.e1 = 0;
    m.e2 = 1;
    if (genus(zv) == 1 && genus(m.other) == 1) {
      m.label = CaseLabel::CaseXI;
      return m;
    }
    if (genus(zv) == 0 && genus(m.other) == 2) {
      m.label = CaseLabel::CaseXII;
      return m;
    }
    throw Error("UnsupportedTopology", "no two-node irreducible-pair shape matches");
  }

  // chain of three vertices
  std::size_t mid = npos;
  for (std::size_t v = 0; v < c.vertices().size(); ++v)
    if (c.valence(v) == 2) mid = v;
  if (mid == npos || c.vertices().size() != 3)
    throw Error("UnsupportedTopology", "no chain shape matches");
  std::size_t end_a = ea.v[0] == mid ? ea.v[1] : ea.v[0];
  std::size_t end_b = eb.v[0] == mid ? eb.v[1] : eb.v[0];
  if (genus(mid) == 0 && zv == mid) {
    // ends have genus 1 and 2
    if ((genus(end_a) == 1 && genus(end_b) == 2) || (genus(end_a) == 2 && genus(end_b) == 1)) {
      m.label = CaseLabel::CaseIV;
      m.e1 = 0;
      m.e2 = 1;
      return m;
    }
    throw Error("UnsupportedTopology", "no genus-0 chain shape matches");
  }
  if (genus(mid) == 1 && genus(end_a) == 1 && genus(end_b) == 1) {
    if (zv == mid) {
      m.label = CaseLabel::CaseVI;
      m.other = mid;
      m.e1 = 0;
      m.e2 = 1;
      return m;
    }
    m.label = CaseLabel::CaseV;
    m.other = mid;
    m.far = zv == end_a ? end_b : end_a;
    m.e1 = (ea.v[0] == zv || ea.v[1] == zv) ? 0 : 1;  // node on the marked component
    m.e2 = 1 - m.e1;
    return m;
  }
  throw Error("UnsupportedTopology", "no chain shape matches");
}

class Conditions {
public:
  Conditions(const StableCurve& c, const ModelMap& models, std::vector<std::string>& log)
      : c_(c), models_(models), log_(log) {}

  const ComponentModel& model(std::size_t v, ComponentModel::Kind* require = nullptr) const {
    const std::string& label = c_.vertices()[v].label;
    auto it = models_.find(label);
    if (it == models_.end())
      throw Error("MissingModel", "no component model for vertex '" + label + "'");
    if (require && it->second.kind() != *require)
      throw Error("BadModel", "vertex '" + label + "' needs a different model kind here");
    return it->second;
  }

  Trilean lin(std::size_t v, const DivisorClass& d1, const DivisorClass& d2) {
    const ComponentModel& m = model(v);
    Trilean t = m.linear_equiv(d1, d2);
    std::ostringstream os;
    os << d1.to_string() << " ~ " << d2.to_string() << " on " << m.label() << ": "
       << to_string(t);
    log_.push_back(os.str());
    return t;
  }

  Trilean residue(std::size_t v, const std::string& node) {
    bool declared = model(v).has_residue_axiom(node);
    log_.push_back("residues at " + node + " sum to zero: " +
                   (declared ? "true (declared)" : "unknown (not declared)"));
    return declared ? Trilean::True : Trilean::Unknown;
  }

  DivisorClass pt(std::size_t v, const std::string& name, const Int& k = 1) const {
    return point_class(c_.vertices()[v].label, name, k);
  }
  DivisorClass K(std::size_t v) const { return canonical_class(c_.vertices()[v].label); }

private:
  const StableCurve& c_;
  const ModelMap& models_;
  std::vector<std::string>& log_;
};

}  // namespace

CaseLabel identify_case(const StableCurve& c) { return match_case(c).label; }

CatalogVerdict classify(const StableCurve& c, const ModelMap& models) {
  CaseMatch m = match_case(c);
  CatalogVerdict out;
  out.label = m.label;
  Conditions cond(c, models, out.conditions_used);

  const std::string z = c.legs()[0].label;
  auto edge_label = [&](std::size_t e) { return c.edges()[e].label; };

  switch (m.label) {
    case CaseLabel::OneNodeI: {
      const std::string q = edge_label(m.e1);
      Trilean tor4 = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q, 4));
      Trilean tor2 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q, 2));
      Trilean wq = cond.lin(m.other, cond.pt(m.other, q, 2), cond.K(m.other));
      out.in_hyp = tri_and(tor2, wq);
      out.in_odd = tri_and(tri_and(tor4, tri_not(tor2)), wq);
      break;
    }
    case CaseLabel::OneNodeII: {
      const std::string q = edge_label(m.e1);
      Trilean a = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q, 2) + cond.K(m.mark));
      Trilean zq = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q, 2));
      Trilean zk = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.K(m.mark));
      out.in_hyp = tri_and(zq, cond.lin(m.mark, cond.pt(m.mark, q, 2), cond.K(m.mark)));
      out.in_odd = tri_and(a, tri_not(zk));
      break;
    }
    case CaseLabel::OneNodeIII: {
      const std::string q = edge_label(m.e1);
      DivisorClass branches = cond.pt(m.mark, branch_point_name(q, 0)) +
                              cond.pt(m.mark, branch_point_name(q, 1));
      Trilean a = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.K(m.mark) + branches);
      Trilean zk = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.K(m.mark));
      Trilean zb = cond.lin(m.mark, cond.pt(m.mark, z, 2), branches);
      out.in_hyp = tri_and(zb, zk);
      out.in_odd = tri_and(a, tri_not(zk));
      break;
    }
    case CaseLabel::CaseIV: {
      out.in_hyp = Trilean::False;
      out.in_odd = Trilean::False;
      out.conditions_used.push_back(
          "type (IV) is disjoint from the closure: an admissible double cover would need "
          "three ramification points on the rational bridge");
      break;
    }
    case CaseLabel::CaseV: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      Trilean tor4 = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q1, 4));
      Trilean tor2 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q1, 2));
      Trilean mid = cond.lin(m.other, cond.pt(m.other, q1, 2), cond.pt(m.other, q2, 2));
      out.in_hyp = tri_and(tor2, mid);
      out.in_odd = tri_and(tri_and(tor4, tri_not(tor2)), mid);
      break;
    }
    case CaseLabel::CaseVI: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      Trilean h1 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q1, 2));
      Trilean h2 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q2, 2));
      Trilean o = cond.lin(m.mark, cond.pt(m.mark, z, 2),
                           cond.pt(m.mark, q1) + cond.pt(m.mark, q2));
      out.in_hyp = tri_and(h1, h2);
      out.in_odd = o;
      break;
    }
    case CaseLabel::CaseVII: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      DivisorClass branches = cond.pt(m.mark, branch_point_name(q1, 0)) +
                              cond.pt(m.mark, branch_point_name(q1, 1));
      Trilean zq = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q2, 2));
      Trilean qb = cond.lin(m.mark, cond.pt(m.mark, q2, 2), branches);
      Trilean a =
          cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q2, 2) + branches);
      out.in_hyp = tri_and(zq, qb);
      out.in_odd = tri_and(a, tri_not(zq));
      break;
    }
    case CaseLabel::CaseVIII: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      DivisorClass branches = cond.pt(m.other, branch_point_name(q1, 0)) +
                              cond.pt(m.other, branch_point_name(q1, 1));
      Trilean qb = cond.lin(m.other, cond.pt(m.other, q2, 2), branches);
      Trilean tor4 = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q2, 4));
      Trilean tor2 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q2, 2));
      out.in_hyp = tri_and(qb, tor2);
      out.in_odd = tri_and(qb, tri_and(tor4, tri_not(tor2)));
      break;
    }
    case CaseLabel::CaseIX: {
      ComponentModel::Kind need = ComponentModel::Kind::Elliptic;
      cond.model(m.mark, &need);  // the nodal Pic needs a torsion model
      const std::string q2 = edge_label(m.e2);
      Trilean wq = cond.lin(m.other, cond.pt(m.other, q2, 2), cond.K(m.other));
      Trilean t4 = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q2, 4));
      Trilean t2 = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q2, 2));
      out.in_hyp = tri_and(wq, t2);
      out.in_odd = tri_and(wq, tri_and(t4, tri_not(t2)));
      break;
    }
    case CaseLabel::CaseX: {
      const std::string q2 = edge_label(m.e2);
      Trilean zq = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.pt(m.mark, q2, 2));
      Trilean a = cond.lin(m.mark, cond.pt(m.mark, z, 4), cond.pt(m.mark, q2, 2) + cond.K(m.mark));
      Trilean zk = cond.lin(m.mark, cond.pt(m.mark, z, 2), cond.K(m.mark));
      out.in_hyp = zq;
      out.in_odd = tri_and(a, tri_not(zk));
      break;
    }
    case CaseLabel::CaseXI: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      DivisorClass nodes = cond.pt(m.mark, q1) + cond.pt(m.mark, q2);
      Trilean e = cond.lin(m.mark, cond.pt(m.mark, z, 2), nodes);
      Trilean a = cond.lin(m.mark, cond.pt(m.mark, z, 4), nodes * 2);
      out.in_hyp = e;
      out.in_odd = tri_and(a, tri_not(e));
      break;
    }
    case CaseLabel::CaseXII: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      Trilean h = cond.lin(m.other, cond.pt(m.other, q1) + cond.pt(m.other, q2), cond.K(m.other));
      Trilean w1 = cond.lin(m.other, cond.pt(m.other, q1, 2), cond.K(m.other));
      Trilean w2 = cond.lin(m.other, cond.pt(m.other, q2, 2), cond.K(m.other));
      out.in_hyp = h;
      out.in_odd = tri_or(h, tri_or(w1, w2));
      break;
    }
    case CaseLabel::CaseXIII: {
      const std::string q1 = edge_label(m.e1), q2 = edge_label(m.e2);
      DivisorClass b1 = cond.pt(m.mark, branch_point_name(q1, 0)) +
                        cond.pt(m.mark, branch_point_name(q1, 1));
      DivisorClass b2 = cond.pt(m.mark, branch_point_name(q2, 0)) +
                        cond.pt(m.mark, branch_point_name(q2, 1));
      Trilean h1 = cond.lin(m.mark, b1, cond.pt(m.mark, z, 2));
      Trilean h2 = cond.lin(m.mark, b2, cond.pt(m.mark, z, 2));
      Trilean a = cond.lin(m.mark, cond.pt(m.mark, z, 4), b1 + b2);
      Trilean r1 = cond.residue(m.mark, q1);
      Trilean r2 = cond.residue(m.mark, q2);
      out.in_hyp = tri_and(h1, h2);
      out.in_odd = tri_and(tri_and(a, tri_and(r1, r2)),
                           tri_and(tri_not(h1), tri_not(h2)));
      break;
    }
  }
  return out;
}

}  // namespace twistcalc
