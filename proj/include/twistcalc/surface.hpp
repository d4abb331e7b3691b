#pragma once
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcalc/errors.hpp"
#include "twistcalc/lattice.hpp"

namespace twistcalc {

using Rat = mpq_class;

struct Vec2 {
  Rat x, y;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& k) const { return {x * k, y * k}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Vec2 rot90(const Vec2& a) { return {-a.y, a.x}; }

// Simple CCW polygon with stable ids on its directed edges (edge i runs from
// vertex i to vertex i+1). Ids survive surgeries; (polygon, index) addresses
// are only used at the file-format boundary.
struct Polygon {
  std::string name;
  std::vector<Vec2> v;
  std::vector<long> eid;
  std::size_t size() const { return v.size(); }
  Vec2 evec(std::size_t i) const { return v[(i + 1) % v.size()] - v[i]; }
};

struct EdgeRef {
  std::size_t poly = 0;
  std::size_t edge = 0;
};

// Polygons glued edge-to-edge by translation (paired directed edges carry
// exactly opposite vectors). Unpaired edges may be organized into named
// boundary circles, the data cylinder plumbing consumes. Surgeries return
// new values.
class TranslationSurface {
public:
  std::size_t add_polygon(const std::string& name, std::vector<Vec2> vertices);
  void pair_edges(EdgeRef a, EdgeRef b);  // also by ids internally
  void pair_ids(long a, long b);
  void declare_boundary(const std::string& name, std::vector<long> edge_ids);
  void declare_boundary_refs(const std::string& name, const std::vector<EdgeRef>& edges);
  void remove_boundary(const std::string& name);

  const std::vector<Polygon>& polygons() const { return polys_; }
  const std::map<long, long>& pairing() const { return pair_; }
  const std::vector<std::pair<std::string, std::vector<long>>>& boundaries() const {
    return boundaries_;
  }

  bool is_paired(long id) const { return pair_.count(id) != 0; }
  long partner(long id) const;
  EdgeRef locate(long id) const;
  long edge_id(EdgeRef r) const { return polys_[r.poly].eid[r.edge]; }
  const Polygon& poly_of(const std::string& name) const;
  std::size_t poly_index(const std::string& name) const;

  // structural checks: pairing is a fixed-point-free involution with opposite
  // vectors, polygons are simple and positively oriented, boundary circles
  // list existing unpaired edges. Throws InvalidPairing / InvalidPolygon /
  // InvalidBoundary.
  void validate() const;

  Rat area() const;

  // internal surgery helpers (exposed for tests)
  // split edge `id` at interior point p; partner and boundary lists follow.
  // Returns the ids of the two halves in traversal order.
  std::pair<long, long> split_edge(long id, const Vec2& p);
  // cut the polygon along the interior chord between vertex indices a and b;
  // the two new chord edges are returned (paired with each other) so the cut
  // is invisible until they are re-paired.
  std::pair<long, long> cut_chord(std::size_t poly, std::size_t a, std::size_t b);
  void unpair(long id);

  long fresh_id() { return next_id_++; }
  std::string fresh_poly_name(const std::string& base) const;

private:
  std::vector<Polygon> polys_;
  std::map<long, long> pair_;
  std::vector<std::pair<std::string, std::vector<long>>> boundaries_;
  long next_id_ = 0;
};

// One cone point: the corners in its class, the number of full turns of the
// total angle (cone angle = 2 pi * turns), and the zero order turns - 1.
struct SingularityDatum {
  std::vector<EdgeRef> corners;  // corner i of polygon p, addressed by (p, i)
  Int turns;
  Int order;
};

struct SingularityData {
  std::vector<SingularityDatum> points;  // order >= 1 only
  std::size_t regular_classes = 0;
  Int genus;
  std::vector<Int> signature() const;  // orders, descending
};

// Cone-point data and genus of a closed surface. Angles are counted
// combinatorially (absolutely no trigonometry): walking the corners of a
// vertex class, the total angle is 2 pi times the number of times the
// sweeping ray crosses the +x direction. Throws OpenSurface on boundary.
SingularityData singularity_data(const TranslationSurface& s);

// Same computation restricted to vertex classes that never touch an unpaired
// edge; legal on surfaces with boundary.
SingularityData interior_singularities(const TranslationSurface& s);

// Cone order at a specific point (a polygon corner class or a regular point);
// used to watch slit endpoints gain +1.
Int order_at_point(const TranslationSurface& s, const Vec2& p);

struct Slit {
  std::string polygon;
  Vec2 a, b;
};

// Cut both slits open and cross-identify the four lips by translation. The
// slits must carry equal nonzero vectors, be disjoint, and each lie in the
// closure of one polygon with open interior inside it. Each endpoint's cone
// order rises by one; genus rises by one (same component) or the components
// merge.
TranslationSurface slit_smoothing(const TranslationSurface& s, const Slit& s1, const Slit& s2);

// Glue boundary circles alpha and beta through a flat cylinder. The circles
// must be straight (all edges positive multiples of one direction), with
// anti-parallel directions and equal circumference. `height` > 0 and `twist`
// are fractions of the circumference: the inserted area is height * c^2 where
// c is the circumference, i.e. circumference times the geometric height.
TranslationSurface plumb_cylinder(const TranslationSurface& s, const std::string& alpha,
                                  const std::string& beta, const Rat& height, const Rat& twist);

// Disjoint union; polygon names from b get a "#2" suffix on collision.
TranslationSurface disjoint_union(const TranslationSurface& a, const TranslationSurface& b);

std::string to_string(const Rat& r);  // exact "p/q"
std::string to_string(const Vec2& v);

}  // namespace twistcalc
