#include "twistcalc/curve.hpp"

#include <algorithm>
#include <functional>

namespace twistcalc {

std::size_t StableCurve::add_vertex(const std::string& label, int genus, bool exceptional) {
  if (has_vertex(label)) throw Error("DuplicateVertex", "vertex '" + label + "' already declared");
  if (genus < 0) throw Error("NegativeGenus", "vertex '" + label + "' has negative genus");
  vertices_.push_back({label, genus, exceptional});
  return vertices_.size() - 1;
}

std::size_t StableCurve::add_edge(const std::string& label, const std::string& a,
                                  const std::string& b) {
  for (const auto& e : edges_)
    if (e.label == label) throw Error("DuplicateEdge", "edge '" + label + "' already declared");
  edges_.push_back({label, {vertex_index(a), vertex_index(b)}});
  return edges_.size() - 1;
}

std::size_t StableCurve::add_leg(const std::string& label, const std::string& vertex, Int order) {
  for (const auto& l : legs_)
    if (l.label == label) throw Error("DuplicateLeg", "leg '" + label + "' already declared");
  legs_.push_back({label, vertex_index(vertex), std::move(order)});
  return legs_.size() - 1;
}

std::size_t StableCurve::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].label == label) return i;
  throw Error("UnknownVertex", "no vertex named '" + label + "'");
}

std::size_t StableCurve::edge_index(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return i;
  throw Error("UnknownEdge", "no edge named '" + label + "'");
}

bool StableCurve::has_vertex(const std::string& label) const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [&](const Vertex& v) { return v.label == label; });
}

std::size_t StableCurve::loops_at(std::size_t vtx) const {
  std::size_t n = 0;
  for (const auto& e : edges_)
    if (e.v[0] == vtx && e.v[1] == vtx) ++n;
  return n;
}

std::size_t StableCurve::valence(std::size_t vtx) const {
  std::size_t n = 0;
  for (const auto& e : edges_) {
    if (e.v[0] == e.v[1]) continue;
    if (e.v[0] == vtx) ++n;
    if (e.v[1] == vtx) ++n;
  }
  return n;
}

std::size_t StableCurve::legs_at(std::size_t vtx) const {
  std::size_t n = 0;
  for (const auto& l : legs_)
    if (l.vertex == vtx) ++n;
  return n;
}

Int StableCurve::component_arithmetic_genus(std::size_t vtx) const {
  return Int(vertices_[vtx].genus) + Int(loops_at(vtx));
}

Int StableCurve::leg_order_sum(std::size_t vtx) const {
  Int m = 0;
  for (const auto& l : legs_)
    if (l.vertex == vtx) m += l.order;
  return m;
}

Int StableCurve::arithmetic_genus() const {
  Int g = 0;
  for (const auto& v : vertices_) g += v.genus;
  return g + Int(edges_.size()) - Int(vertices_.size()) + 1;
}

bool StableCurve::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      for (int s = 0; s < 2; ++s)
        if (e.v[s] == v && !seen[e.v[1 - s]]) {
          seen[e.v[1 - s]] = 1;
          stack.push_back(e.v[1 - s]);
        }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

ValidationResult validate(const StableCurve& c) {
  ValidationResult r;
  r.genus = 0;
  if (c.vertices().empty()) {
    r.violations.push_back({"curve has no vertices"});
    return r;
  }
  if (!c.is_connected()) r.violations.push_back({"dual graph is disconnected"});
  r.genus = c.arithmetic_genus();
  if (r.genus < 1) r.violations.push_back({"arithmetic genus below 1"});
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    const Vertex& v = c.vertices()[i];
    if (v.genus == 0) {
      std::size_t special = c.valence(i) + 2 * c.loops_at(i) + c.legs_at(i);
      if (special < 3)
        r.violations.push_back(
            {"unstable: genus-0 vertex '" + v.label + "' carries fewer than three special points"});
    }
  }
  return r;
}

namespace {

// Bridges of a multigraph by DFS lowlink; a parallel pair is never a bridge
// because only the tree edge may be skipped when looking back.
std::vector<std::size_t> find_bridges(const StableCurve& c) {
  const std::size_t n = c.vertices().size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    if (c.is_loop(e)) continue;
    adj[c.edges()[e].v[0]].push_back({c.edges()[e].v[1], e});
    adj[c.edges()[e].v[1]].push_back({c.edges()[e].v[0], e});
  }
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> bridges;
  std::size_t timer = 1;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t pe) {
    seen[v] = 1;
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (e == pe) continue;
      if (seen[w]) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.push_back(e);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) dfs(v, static_cast<std::size_t>(-1));
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace

CurveType classify_type(const StableCurve& c) {
  CurveType t;
  t.bridges = find_bridges(c);
  for (std::size_t e = 0; e < c.edges().size(); ++e)
    if (c.is_loop(e)) t.loops.push_back(e);
  const std::size_t covered = t.bridges.size() + t.loops.size();
  if (covered == c.edges().size()) {
    t.cls = t.loops.empty() ? CurveClass::CompactType : CurveClass::PseudocompactType;
  } else {
    t.cls = CurveClass::NonPseudocompact;
  }
  return t;
}

const char* to_string(CurveClass c) {
  switch (c) {
    case CurveClass::CompactType: return "compact";
    case CurveClass::PseudocompactType: return "pseudocompact";
    default: return "non-pseudocompact";
  }
}

IntMatrix laplacian(const StableCurve& c) {
  const std::size_t n = c.vertices().size();
  IntMatrix m(n, n);
  for (const auto& e : c.edges()) {
    if (e.v[0] == e.v[1]) continue;
    m.at(e.v[0], e.v[1]) += 1;
    m.at(e.v[1], e.v[0]) += 1;
    m.at(e.v[0], e.v[0]) -= 1;
    m.at(e.v[1], e.v[1]) -= 1;
  }
  return m;
}

StableCurve insert_rational_chain(const StableCurve& c, const std::string& edge_label,
                                  std::size_t length) {
  std::size_t target = c.edge_index(edge_label);
  if (length == 0) return c;
  StableCurve out;
  for (const auto& v : c.vertices()) out.add_vertex(v.label, v.genus, v.exceptional);
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    const Edge& edge = c.edges()[e];
    if (e != target) {
      out.add_edge(edge.label, c.vertices()[edge.v[0]].label, c.vertices()[edge.v[1]].label);
      continue;
    }
    std::string prev = c.vertices()[edge.v[0]].label;
    for (std::size_t k = 1; k <= length; ++k) {
      std::string vname = edge.label + "/v" + std::to_string(k);
      out.add_vertex(vname, 0, /*exceptional=*/true);
      out.add_edge(edge.label + "/e" + std::to_string(k), prev, vname);
      prev = vname;
    }
    out.add_edge(edge.label + "/e" + std::to_string(length + 1), prev,
                 c.vertices()[edge.v[1]].label);
  }
  for (const auto& l : c.legs()) out.add_leg(l.label, c.vertices()[l.vertex].label, l.order);
  return out;
}

}  // namespace twistcalc
