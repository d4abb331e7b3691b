#pragma once
#include <string>
#include <vector>

#include "twistcalc/lattice.hpp"

namespace twistcalc {

// Decorated dual graph of a stable pointed nodal curve. Half-edge flavored:
// an edge keeps both endpoint slots, so loops and parallel edges are
// first-class. Vertex order is declaration order and fixes the Laplacian
// row order bit-exactly.
struct Vertex {
  std::string label;
  int genus = 0;
  // inserted P^1 from a semistable model / spin blow-up
  bool exceptional = false;
};

struct Edge {
  std::string label;  // the node q_j
  std::size_t v[2];
};

struct Leg {
  std::string label;  // marked point z_i or p_j
  std::size_t vertex;
  Int order;  // m_i / k_i, or -l_j for poles
};

class StableCurve {
public:
  std::size_t add_vertex(const std::string& label, int genus, bool exceptional = false);
  std::size_t add_edge(const std::string& label, const std::string& a, const std::string& b);
  std::size_t add_leg(const std::string& label, const std::string& vertex, Int order);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }

  std::size_t vertex_index(const std::string& label) const;  // UnknownVertex
  std::size_t edge_index(const std::string& label) const;    // UnknownEdge
  bool has_vertex(const std::string& label) const;

  bool is_loop(std::size_t e) const { return edges_[e].v[0] == edges_[e].v[1]; }
  std::size_t loops_at(std::size_t vtx) const;
  // number of non-loop half-edges at vtx (parallel edges counted separately)
  std::size_t valence(std::size_t vtx) const;
  std::size_t legs_at(std::size_t vtx) const;

  // geometric genus of the component = vertex genus; arithmetic adds loops
  Int component_arithmetic_genus(std::size_t vtx) const;
  // sum of leg orders on the vertex (M_i)
  Int leg_order_sum(std::size_t vtx) const;

  Int arithmetic_genus() const;  // sum g_i + #E - #V + 1
  bool is_connected() const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
};

// Reported instead of thrown: a curve failing validation is data, not a bug.
struct Violation {
  std::string what;
};

struct ValidationResult {
  std::vector<Violation> violations;
  Int genus;  // computed arithmetic genus
  bool ok() const { return violations.empty(); }
};

ValidationResult validate(const StableCurve& c);

enum class CurveClass { CompactType, PseudocompactType, NonPseudocompact };

struct CurveType {
  CurveClass cls;
  std::vector<std::size_t> bridges;  // separating edge indices
  std::vector<std::size_t> loops;    // self-edge indices
};

CurveType classify_type(const StableCurve& c);

const char* to_string(CurveClass c);

// Dual-graph Laplacian: a_ij = #edges between i != j, a_ii = -sum_{j!=i} a_ij.
// Loops contribute nothing. Rows follow vertex declaration order.
IntMatrix laplacian(const StableCurve& c);

// Replace `edge` by a chain of `length` exceptional genus-0 vertices.
// length 0 returns the curve unchanged. Stability is not re-enforced:
// semistable models are legitimate values here.
StableCurve insert_rational_chain(const StableCurve& c, const std::string& edge_label,
                                  std::size_t length);

}  // namespace twistcalc
