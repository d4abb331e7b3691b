#include "twistcalc/surface.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace twistcalc {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Vec2& v) { return to_string(v.x) + " " + to_string(v.y); }

namespace {

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (cross(b - a, p - a) != 0) return false;
  Rat d = dot(p - a, b - a);
  return d >= 0 && d <= dot(b - a, b - a);
}

// closed segments sharing at least one point
bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  Rat d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  Rat d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && point_on_segment(c, a, b)) return true;
  if (d2 == 0 && point_on_segment(d, a, b)) return true;
  if (d3 == 0 && point_on_segment(a, c, d)) return true;
  if (d4 == 0 && point_on_segment(b, c, d)) return true;
  return false;
}

bool point_in_polygon_strict(const Polygon& poly, const Vec2& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (point_on_segment(p, poly.v[i], poly.v[(i + 1) % poly.size()])) return false;
  bool inside = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly.v[i];
    const Vec2& b = poly.v[(i + 1) % poly.size()];
    if ((a.y <= p.y) != (b.y <= p.y)) {
      // x-coordinate of the edge at height p.y
      Rat xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xi > p.x) inside = !inside;
    }
  }
  return inside;
}

bool on_polygon_boundary(const Polygon& poly, const Vec2& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (point_on_segment(p, poly.v[i], poly.v[(i + 1) % poly.size()])) return true;
  return false;
}

Rat polygon_area2(const Polygon& poly) {
  Rat a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    a += cross(poly.v[i], poly.v[(i + 1) % poly.size()]);
  return a;
}

// primitive integer direction of a rational vector
Vec2 primitive(const Vec2& v) {
  mpz_class l = lcm(v.x.get_den(), v.y.get_den());
  mpz_class ix = v.x.get_num() * (l / v.x.get_den());
  mpz_class iy = v.y.get_num() * (l / v.y.get_den());
  mpz_class g = gcd(ix, iy);
  if (g == 0) throw Error("InvalidBoundary", "zero direction");
  return {Rat(ix / g), Rat(iy / g)};
}

}  // namespace

std::size_t TranslationSurface::add_polygon(const std::string& name, std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw Error("InvalidPolygon", "polygon needs at least 3 vertices");
  for (const auto& p : polys_)
    if (p.name == name) throw Error("DuplicatePolygon", "polygon '" + name + "' already declared");
  Polygon poly;
  poly.name = name;
  poly.v = std::move(vertices);
  for (std::size_t i = 0; i < poly.v.size(); ++i) poly.eid.push_back(fresh_id());
  polys_.push_back(std::move(poly));
  return polys_.size() - 1;
}

void TranslationSurface::pair_edges(EdgeRef a, EdgeRef b) {
  pair_ids(edge_id(a), edge_id(b));
}

void TranslationSurface::pair_ids(long a, long b) {
  if (a == b) throw Error("InvalidPairing", "an edge cannot pair with itself");
  if (pair_.count(a) || pair_.count(b))
    throw Error("InvalidPairing", "edge already paired");
  EdgeRef ra = locate(a), rb = locate(b);
  Vec2 va = polys_[ra.poly].evec(ra.edge), vb = polys_[rb.poly].evec(rb.edge);
  if (!(va == -vb))
    throw Error("InvalidPairing", "paired edges must carry opposite vectors");
  pair_[a] = b;
  pair_[b] = a;
}

void TranslationSurface::declare_boundary(const std::string& name, std::vector<long> edge_ids) {
  for (const auto& [n, ids] : boundaries_)
    if (n == name) throw Error("DuplicateBoundary", "boundary '" + name + "' already declared");
  boundaries_.push_back({name, std::move(edge_ids)});
}

void TranslationSurface::declare_boundary_refs(const std::string& name,
                                               const std::vector<EdgeRef>& edges) {
  std::vector<long> ids;
  for (const auto& r : edges) ids.push_back(edge_id(r));
  declare_boundary(name, std::move(ids));
}

void TranslationSurface::remove_boundary(const std::string& name) {
  std::erase_if(boundaries_, [&](const auto& bc) { return bc.first == name; });
}

long TranslationSurface::partner(long id) const {
  auto it = pair_.find(id);
  if (it == pair_.end()) throw Error("InvalidPairing", "edge is unpaired");
  return it->second;
}

EdgeRef TranslationSurface::locate(long id) const {
  for (std::size_t p = 0; p < polys_.size(); ++p)
    for (std::size_t e = 0; e < polys_[p].eid.size(); ++e)
      if (polys_[p].eid[e] == id) return {p, e};
  throw Error("UnknownEdge", "no edge with that id");
}

const Polygon& TranslationSurface::poly_of(const std::string& name) const {
  return polys_[poly_index(name)];
}

std::size_t TranslationSurface::poly_index(const std::string& name) const {
  for (std::size_t p = 0; p < polys_.size(); ++p)
    if (polys_[p].name == name) return p;
  throw Error("UnknownPolygon", "no polygon named '" + name + "'");
}

std::string TranslationSurface::fresh_poly_name(const std::string& base) const {
  std::string name = base;
  auto taken = [&](const std::string& n) {
    return std::any_of(polys_.begin(), polys_.end(),
                       [&](const Polygon& p) { return p.name == n; });
  };
  while (taken(name)) name += "+";
  return name;
}

void TranslationSurface::validate() const {
  for (const auto& poly : polys_) {
    const std::size_t n = poly.size();
    if (polygon_area2(poly) <= 0)
      throw Error("InvalidPolygon", "'" + poly.name + "' is not positively oriented");
    for (std::size_t i = 0; i < n; ++i) {
      if (poly.evec(i).is_zero())
        throw Error("InvalidPolygon", "'" + poly.name + "' has a zero edge");
      Vec2 u = poly.evec(i), w = poly.evec((i + 1) % n);
      if (cross(u, w) == 0 && dot(u, w) < 0)
        throw Error("InvalidPolygon", "'" + poly.name + "' has a degenerate spike");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        if (adjacent) continue;
        if (segments_touch(poly.v[i], poly.v[(i + 1) % n], poly.v[j], poly.v[(j + 1) % n]))
          throw Error("InvalidPolygon", "'" + poly.name + "' is not simple");
      }
  }
  for (const auto& [a, b] : pair_) {
    if (a == b) throw Error("InvalidPairing", "self-paired edge");
    auto it = pair_.find(b);
    if (it == pair_.end() || it->second != a)
      throw Error("InvalidPairing", "pairing is not an involution");
    EdgeRef ra = locate(a), rb = locate(b);
    if (!(polys_[ra.poly].evec(ra.edge) == -polys_[rb.poly].evec(rb.edge)))
      throw Error("InvalidPairing", "paired edges must carry opposite vectors");
  }
  std::set<long> seen;
  for (const auto& [name, ids] : boundaries_)
    for (long id : ids) {
      locate(id);
      if (pair_.count(id))
        throw Error("InvalidBoundary", "boundary '" + name + "' lists a paired edge");
      if (!seen.insert(id).second)
        throw Error("InvalidBoundary", "edge listed in two boundary circles");
    }
}

Rat TranslationSurface::area() const {
  Rat a = 0;
  for (const auto& poly : polys_) a += polygon_area2(poly);
  return a / 2;
}

std::pair<long, long> TranslationSurface::split_edge(long id, const Vec2& p) {
  EdgeRef r = locate(id);
  Polygon& poly = polys_[r.poly];
  const Vec2 a = poly.v[r.edge];
  const Vec2 b = poly.v[(r.edge + 1) % poly.size()];
  if (p == a || p == b || !point_on_segment(p, a, b))
    throw Error("BadSplit", "split point must lie strictly inside the edge");

  std::optional<long> mate;
  if (auto it = pair_.find(id); it != pair_.end()) mate = it->second;

  auto raw_insert = [&](std::size_t pi, std::size_t ei, const Vec2& pt, long id1, long id2) {
    Polygon& pl = polys_[pi];
    pl.v.insert(pl.v.begin() + static_cast<long>(ei) + 1, pt);
    pl.eid[ei] = id1;
    pl.eid.insert(pl.eid.begin() + static_cast<long>(ei) + 1, id2);
  };

  long n1 = fresh_id(), n2 = fresh_id();
  raw_insert(r.poly, r.edge, p, n1, n2);

  if (mate) {
    pair_.erase(id);
    pair_.erase(*mate);
    EdgeRef rm = locate(*mate);
    // e(t) is glued to partner(1-t); the split lands at q = start' + (1-t)(-v)
    Vec2 q = polys_[rm.poly].v[rm.edge] + (a - p) + (b - a);
    // q = start' - v + t v  written via  start' + (b-p) ... direct form:
    q = polys_[rm.poly].v[rm.edge] + (b - a) - (p - a);
    long m1 = fresh_id(), m2 = fresh_id();
    raw_insert(rm.poly, rm.edge, q, m1, m2);
    pair_[n1] = m2;
    pair_[m2] = n1;
    pair_[n2] = m1;
    pair_[m1] = n2;
  } else {
    for (auto& [name, ids] : boundaries_)
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) {
          ids[i] = n1;
          ids.insert(ids.begin() + static_cast<long>(i) + 1, n2);
          return {n1, n2};
        }
  }
  return {n1, n2};
}

std::pair<long, long> TranslationSurface::cut_chord(std::size_t poly, std::size_t a,
                                                    std::size_t b) {
  Polygon& pl = polys_[poly];
  const std::size_t n = pl.size();
  if (a == b || (a + 1) % n == b || (b + 1) % n == a)
    throw Error("BadCut", "chord endpoints must be non-adjacent vertices");

  long c1 = fresh_id(), c2 = fresh_id();
  Polygon p1, p2;
  p1.name = pl.name;
  p2.name = fresh_poly_name(pl.name);
  for (std::size_t i = a; i != b; i = (i + 1) % n) {
    p1.v.push_back(pl.v[i]);
    p1.eid.push_back(pl.eid[i]);
  }
  p1.v.push_back(pl.v[b]);
  p1.eid.push_back(c1);  // from v_b back to v_a
  for (std::size_t i = b; i != a; i = (i + 1) % n) {
    p2.v.push_back(pl.v[i]);
    p2.eid.push_back(pl.eid[i]);
  }
  p2.v.push_back(pl.v[a]);
  p2.eid.push_back(c2);  // from v_a to v_b

  polys_[poly] = std::move(p1);
  polys_.push_back(std::move(p2));
  pair_[c1] = c2;
  pair_[c2] = c1;
  return {c1, c2};
}

void TranslationSurface::unpair(long id) {
  auto it = pair_.find(id);
  if (it == pair_.end()) return;
  pair_.erase(it->second);
  pair_.erase(id);
}

namespace {

struct Corner {
  std::size_t poly, idx;
  bool operator<(const Corner& o) const {
    return poly != o.poly ? poly < o.poly : idx < o.idx;
  }
  bool operator==(const Corner& o) const = default;
};

// Does the CCW sweep from u to v (interior angle, half-open at v) pass the
// +x direction? Counting these over a vertex class counts full turns.
int sweep_crosses_east(const Vec2& u, const Vec2& v) {
  auto east = [](const Vec2& w) { return w.y == 0 && w.x > 0; };
  if (east(u)) return 1;
  if (east(v)) return 0;
  Rat cuv = cross(u, v);
  bool u_side = u.y < 0;  // cross(u, east) > 0
  bool v_side = v.y > 0;  // cross(east, v) > 0
  if (cuv > 0) return (u_side && v_side) ? 1 : 0;
  if (cuv < 0) return (u_side || v_side) ? 1 : 0;
  return u_side ? 1 : 0;  // angle exactly pi
}

struct ClassData {
  std::vector<Corner> corners;
  bool boundary = false;
  Int turns = 0;
};

struct ClassAnalysis {
  std::vector<ClassData> classes;
  std::size_t boundary_circuits = 0;
};

ClassAnalysis analyze_classes(const TranslationSurface& s) {
  const auto& polys = s.polygons();
  auto next_corner = [&](Corner c) -> std::optional<Corner> {
    const Polygon& pl = polys[c.poly];
    const std::size_t n = pl.size();
    long in_edge = pl.eid[(c.idx + n - 1) % n];
    if (!s.is_paired(in_edge)) return std::nullopt;
    EdgeRef r = s.locate(s.partner(in_edge));
    return Corner{r.poly, r.edge};
  };
  auto prev_corner = [&](Corner c) -> std::optional<Corner> {
    const Polygon& pl = polys[c.poly];
    long out_edge = pl.eid[c.idx];
    if (!s.is_paired(out_edge)) return std::nullopt;
    EdgeRef r = s.locate(s.partner(out_edge));
    return Corner{r.poly, (r.edge + 1) % polys[r.poly].size()};
  };

  ClassAnalysis out;
  std::set<Corner> visited;
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t i = 0; i < polys[p].size(); ++i) {
      Corner start{p, i};
      if (visited.count(start)) continue;
      ClassData cls;
      Corner c = start;
      // walk forward
      while (true) {
        cls.corners.push_back(c);
        visited.insert(c);
        auto nx = next_corner(c);
        if (!nx) {
          cls.boundary = true;
          break;
        }
        if (*nx == start) break;
        c = *nx;
      }
      if (cls.boundary) {
        // collect the rest of the fan behind the start
        Corner b = start;
        while (auto pv = prev_corner(b)) {
          b = *pv;
          cls.corners.push_back(b);
          visited.insert(b);
        }
      }
      for (const Corner& cr : cls.corners) {
        const Polygon& pl = polys[cr.poly];
        const std::size_t n = pl.size();
        Vec2 u = pl.evec(cr.idx);
        Vec2 v = -pl.evec((cr.idx + n - 1) % n);
        cls.turns += sweep_crosses_east(u, v);
      }
      out.classes.push_back(std::move(cls));
    }

  // boundary circuits: follow unpaired edges head to tail
  std::set<long> seen;
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t i = 0; i < polys[p].size(); ++i) {
      long id = polys[p].eid[i];
      if (s.is_paired(id) || seen.count(id)) continue;
      out.boundary_circuits++;
      long cur = id;
      while (!seen.count(cur)) {
        seen.insert(cur);
        EdgeRef r = s.locate(cur);
        Corner c{r.poly, (r.edge + 1) % polys[r.poly].size()};
        // rotate backwards through the fan to the next boundary out-edge
        while (s.is_paired(polys[c.poly].eid[c.idx])) {
          auto pv = prev_corner(c);
          c = *pv;
        }
        cur = polys[c.poly].eid[c.idx];
      }
    }
  return out;
}

SingularityData build_data(const TranslationSurface& s, bool interior_only) {
  s.validate();
  ClassAnalysis an = analyze_classes(s);
  std::size_t unpaired = 0;
  for (const auto& poly : s.polygons())
    for (long id : poly.eid)
      if (!s.is_paired(id)) ++unpaired;
  if (!interior_only && unpaired > 0)
    throw Error("OpenSurface", "surface has boundary; singularity_data needs a closed surface");

  SingularityData out;
  Int v_count = Int(an.classes.size());
  Int e_count = Int(s.pairing().size() / 2) + Int(unpaired);
  Int f_count = Int(s.polygons().size());
  Int chi = v_count - e_count + f_count;
  Int two_g = 2 - chi - Int(an.boundary_circuits);
  if (two_g % 2 != 0) throw Error("InvalidPairing", "non-integral genus");
  out.genus = two_g / 2;

  for (const auto& cls : an.classes) {
    if (cls.boundary) continue;
    if (cls.turns < 1) throw Error("InvalidPairing", "vertex class with vanishing cone angle");
    if (cls.turns == 1) {
      out.regular_classes++;
      continue;
    }
    SingularityDatum d;
    for (const Corner& c : cls.corners) d.corners.push_back({c.poly, c.idx});
    d.turns = cls.turns;
    d.order = cls.turns - 1;
    out.points.push_back(std::move(d));
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const SingularityDatum& a, const SingularityDatum& b) { return a.order > b.order; });
  return out;
}

}  // namespace

std::vector<Int> SingularityData::signature() const {
  std::vector<Int> sig;
  for (const auto& p : points) sig.push_back(p.order);
  return sig;
}

SingularityData singularity_data(const TranslationSurface& s) { return build_data(s, false); }

SingularityData interior_singularities(const TranslationSurface& s) {
  return build_data(s, true);
}

Int order_at_point(const TranslationSurface& s, const Vec2& p) {
  ClassAnalysis an = analyze_classes(s);
  const auto& polys = s.polygons();
  std::vector<const ClassData*> hits;
  for (const auto& cls : an.classes)
    for (const Corner& c : cls.corners)
      if (polys[c.poly].v[c.idx] == p) {
        hits.push_back(&cls);
        break;
      }
  if (hits.empty()) return 0;  // not a vertex: regular point
  if (hits.size() > 1)
    throw Error("AmbiguousPoint", "coordinate belongs to several vertex classes");
  if (hits[0]->boundary)
    throw Error("AmbiguousPoint", "point lies on the boundary");
  return hits[0]->turns - 1;
}

namespace {

// chord endpoint: nearest boundary hit from `from` along `dir`
Vec2 ray_exit(const Polygon& poly, const Vec2& from, const Vec2& dir) {
  std::optional<Rat> best;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly.v[i];
    const Vec2& q = poly.v[(i + 1) % n];
    Rat denom = cross(dir, q - p);
    if (denom == 0) {
      if (cross(p - from, dir) != 0) continue;  // parallel, off-line
      Rat dd = dot(dir, dir);
      for (const Vec2& end : {p, q}) {
        Rat t = dot(end - from, dir) / dd;
        if (t > 0 && (!best || t < *best)) best = t;
      }
      continue;
    }
    Rat t = cross(p - from, q - p) / denom;
    Rat u = cross(p - from, dir) / denom;
    if (t > 0 && u >= 0 && u <= 1 && (!best || t < *best)) best = t;
  }
  if (!best) throw Error("BadSlit", "slit does not extend to the polygon boundary");
  return from + dir * (*best);
}

std::size_t vertex_index_of(const Polygon& poly, const Vec2& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly.v[i] == p) return i;
  throw Error("BadSlit", "expected a vertex at that coordinate");
}

// make p a vertex of the polygon (splitting an edge if needed)
void ensure_vertex(TranslationSurface& s, std::size_t poly, const Vec2& p) {
  const Polygon& pl = s.polygons()[poly];
  for (std::size_t i = 0; i < pl.size(); ++i)
    if (pl.v[i] == p) return;
  for (std::size_t i = 0; i < pl.size(); ++i) {
    const Vec2& a = pl.v[i];
    const Vec2& b = pl.v[(i + 1) % pl.size()];
    if (point_on_segment(p, a, b)) {
      s.split_edge(pl.eid[i], p);
      return;
    }
  }
  throw Error("BadSlit", "point is not on the polygon boundary");
}

struct PreparedSlit {
  long plus = 0;   // edge a -> b
  long minus = 0;  // its partner b -> a
};

// The slit must lie in the closure of the polygon and its open interior must
// stay strictly inside: every contact with a boundary edge is confined to the
// slit endpoints.
void check_slit_inside(const Polygon& poly, const Slit& s) {
  bool a_ok = on_polygon_boundary(poly, s.a) || point_in_polygon_strict(poly, s.a);
  bool b_ok = on_polygon_boundary(poly, s.b) || point_in_polygon_strict(poly, s.b);
  if (!a_ok || !b_ok) throw Error("BadSlit", "slit endpoint outside polygon '" + poly.name + "'");
  Vec2 mid{(s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2};
  if (!point_in_polygon_strict(poly, mid))
    throw Error("BadSlit", "slit interior leaves polygon '" + poly.name + "'");
  const Vec2 dir = s.b - s.a;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& p = poly.v[i];
    const Vec2& q = poly.v[(i + 1) % poly.size()];
    if (!segments_touch(s.a, s.b, p, q)) continue;
    bool collinear = cross(q - p, dir) == 0 && cross(p - s.a, dir) == 0;
    if (collinear) {
      // common 1-d interval: anything longer than a single slit endpoint is out
      Rat lp = dot(p - s.a, dir), lq = dot(q - s.a, dir);
      Rat lo = std::max(std::min(lp, lq), Rat(0));
      Rat hi = std::min(std::max(lp, lq), dot(dir, dir));
      if (lo < hi || !(lo == 0 || lo == dot(dir, dir)))
        throw Error("BadSlit", "slit runs along the boundary of polygon '" + poly.name + "'");
    } else {
      // single intersection point; it must be a slit endpoint
      if (!point_on_segment(s.a, p, q) && !point_on_segment(s.b, p, q))
        throw Error("BadSlit", "slit crosses the boundary of polygon '" + poly.name + "'");
    }
  }
}

// cut the chord through the collinear slit group and expose each slit as its
// own paired sub-edge; returns the prepared slits in input order
std::vector<PreparedSlit> prepare_group(TranslationSurface& out, std::size_t poly,
                                        std::vector<Slit> slits) {
  const Vec2 dir = slits[0].b - slits[0].a;
  const Vec2 base = slits[0].a;
  std::sort(slits.begin(), slits.end(), [&](const Slit& l, const Slit& r) {
    return dot(l.a - base, dir) < dot(r.a - base, dir);
  });

  const Vec2& first = slits.front().a;
  const Vec2& last = slits.back().b;
  Vec2 x = on_polygon_boundary(out.polygons()[poly], first)
               ? first
               : ray_exit(out.polygons()[poly], first, -dir);
  Vec2 y = on_polygon_boundary(out.polygons()[poly], last)
               ? last
               : ray_exit(out.polygons()[poly], last, dir);

  ensure_vertex(out, poly, x);
  ensure_vertex(out, poly, y);

  // no stray vertex may sit on the open chord
  for (const Vec2& v : out.polygons()[poly].v) {
    if (v == x || v == y) continue;
    bool is_slit_end = false;
    for (const Slit& sl : slits)
      if (v == sl.a || v == sl.b) is_slit_end = true;
    if (!is_slit_end && point_on_segment(v, x, y))
      throw Error("SlitChordObstructed", "a vertex lies on the slit chord");
  }

  std::size_t ix = vertex_index_of(out.polygons()[poly], x);
  std::size_t iy = vertex_index_of(out.polygons()[poly], y);
  auto [c_back, c_fwd] = out.cut_chord(poly, ix, iy);
  // c_fwd runs x -> y (the +dir side lives in the second piece)

  std::vector<PreparedSlit> prepared(slits.size());
  long cur = c_fwd;  // successively peel pieces off the front
  Vec2 cur_start = x;
  for (std::size_t k = 0; k < slits.size(); ++k) {
    const Slit& sl = slits[k];
    if (!(cur_start == sl.a)) {
      auto [before, rest] = out.split_edge(cur, sl.a);
      (void)before;
      cur = rest;
      cur_start = sl.a;
    }
    if (sl.b == y && k + 1 == slits.size()) {
      prepared[k].plus = cur;
    } else {
      auto [piece, rest] = out.split_edge(cur, sl.b);
      prepared[k].plus = piece;
      cur = rest;
      cur_start = sl.b;
    }
    prepared[k].minus = out.partner(prepared[k].plus);
  }
  return prepared;
}

}  // namespace

TranslationSurface slit_smoothing(const TranslationSurface& s, const Slit& s1, const Slit& s2) {
  s.validate();
  Vec2 v1 = s1.b - s1.a, v2 = s2.b - s2.a;
  if (v1.is_zero() || !(v1 == v2))
    throw Error("UnequalVectors", "slits must carry the same nonzero vector");

  TranslationSurface out = s;
  std::size_t p1 = out.poly_index(s1.polygon), p2 = out.poly_index(s2.polygon);
  check_slit_inside(out.polygons()[p1], s1);
  check_slit_inside(out.polygons()[p2], s2);

  bool same_line = p1 == p2 && cross(v1, s2.a - s1.a) == 0;
  if (same_line) {
    // collinear slits must be disjoint as closed segments
    Rat ta = dot(s2.a - s1.a, v1), tb = dot(s2.b - s1.a, v1);
    if (std::min(ta, tb) <= dot(v1, v1) && std::max(ta, tb) >= 0)
      throw Error("OverlappingSlits", "collinear slits overlap");
  }
  // parallel slits on distinct lines never meet

  std::vector<PreparedSlit> prep;
  if (same_line) {
    prep = prepare_group(out, p1, {s1, s2});
    // prepare_group sorted by position; restore input order
    if (!(dot(s1.a - s2.a, v1) < 0)) std::swap(prep[0], prep[1]);
  } else {
    prep.push_back(prepare_group(out, p1, {s1})[0]);
    // polygon indices may have changed after the first cut
    std::size_t q2 = 0;
    bool found = false;
    Vec2 mid{(s2.a.x + s2.b.x) / 2, (s2.a.y + s2.b.y) / 2};
    for (std::size_t p = 0; p < out.polygons().size(); ++p)
      if (point_in_polygon_strict(out.polygons()[p], mid)) {
        q2 = p;
        found = true;
        break;
      }
    if (!found) throw Error("BadSlit", "second slit lost after the first cut");
    prep.push_back(prepare_group(out, q2, {s2})[0]);
  }

  out.unpair(prep[0].plus);
  out.unpair(prep[1].plus);
  out.pair_ids(prep[0].plus, prep[1].minus);
  out.pair_ids(prep[1].plus, prep[0].minus);
  out.validate();
  return out;
}

namespace {

struct CircleInfo {
  std::vector<long> ids;
  std::vector<Rat> lengths;  // along the primitive direction
  Vec2 prim;
  Rat total = 0;
};

CircleInfo analyze_circle(const TranslationSurface& s, const std::string& name) {
  const std::vector<long>* ids = nullptr;
  for (const auto& [n, e] : s.boundaries())
    if (n == name) ids = &e;
  if (!ids) throw Error("UnknownBoundary", "no boundary circle named '" + name + "'");
  if (ids->empty()) throw Error("InvalidBoundary", "empty boundary circle");
  CircleInfo info;
  info.ids = *ids;
  for (std::size_t i = 0; i < ids->size(); ++i) {
    EdgeRef r = s.locate((*ids)[i]);
    Vec2 v = s.polygons()[r.poly].evec(r.edge);
    if (i == 0) info.prim = primitive(v);
    Rat lambda = info.prim.x != 0 ? v.x / info.prim.x : v.y / info.prim.y;
    if (lambda <= 0 || !(info.prim * lambda == v))
      throw Error("InvalidBoundary",
                  "boundary circle '" + name + "' is not a straight closed geodesic");
    info.lengths.push_back(lambda);
    info.total += lambda;
  }
  return info;
}

}  // namespace

TranslationSurface plumb_cylinder(const TranslationSurface& s, const std::string& alpha,
                                  const std::string& beta, const Rat& height, const Rat& twist) {
  if (height <= 0) throw Error("BadHeight", "cylinder height must be positive");
  if (alpha == beta) throw Error("InvalidBoundary", "plumbing needs two distinct circles");
  s.validate();
  TranslationSurface out = s;

  CircleInfo ca = analyze_circle(out, alpha);
  CircleInfo cb = analyze_circle(out, beta);
  if (!(cb.prim == -ca.prim))
    throw Error("WidthMismatch", "boundary circles are not anti-parallel");
  if (ca.total != cb.total)
    throw Error("WidthMismatch", "boundary circles have different circumference");

  // rotate beta so the cylinder seam lands on a vertex
  Rat m = ca.total;
  Rat offset = twist;  // fractional part in [0,1)
  while (offset < 0) offset += 1;
  while (offset >= 1) offset -= 1;
  Rat sigma = offset * m;
  if (sigma > 0) {
    Rat acc = 0;
    std::size_t k = 0;
    while (k < cb.lengths.size() && acc + cb.lengths[k] <= sigma) {
      acc += cb.lengths[k];
      ++k;
    }
    if (acc != sigma) {
      // split the beta edge containing sigma
      EdgeRef r = out.locate(cb.ids[k]);
      Vec2 start = out.polygons()[r.poly].v[r.edge];
      Vec2 p = start + cb.prim * (sigma - acc);
      out.split_edge(cb.ids[k], p);
      cb = analyze_circle(out, beta);
    }
    // rotate ids/lengths so position sigma comes first
    Rat acc2 = 0;
    std::size_t k2 = 0;
    while (acc2 != sigma) {
      acc2 += cb.lengths[k2];
      ++k2;
    }
    std::rotate(cb.ids.begin(), cb.ids.begin() + static_cast<long>(k2), cb.ids.end());
    std::rotate(cb.lengths.begin(), cb.lengths.begin() + static_cast<long>(k2),
                cb.lengths.end());
  }

  // cylinder polygon: base u anti-parallel to alpha, side h and twist in
  // units of the base
  Vec2 u = -(ca.prim * m);
  Vec2 side = u * twist + rot90(u) * height;
  std::string cyl = out.fresh_poly_name("cyl");
  std::size_t ci = out.add_polygon(cyl, {Vec2{0, 0}, u, u + side, side});
  long bottom = out.polygons()[ci].eid[0];
  long right = out.polygons()[ci].eid[1];
  long top = out.polygons()[ci].eid[2];
  long left = out.polygons()[ci].eid[3];
  out.pair_ids(right, left);

  // subdivide and glue an attachment edge against circle edges, reverse
  // cyclic order after the first
  auto attach = [&](long edge, const CircleInfo& circle) {
    const std::size_t k = circle.ids.size();
    std::vector<Rat> seglen;
    seglen.push_back(circle.lengths[0]);
    for (std::size_t l = 1; l < k; ++l) seglen.push_back(circle.lengths[k - l]);
    std::vector<long> subs;
    long cur = edge;
    Rat used = 0;
    for (std::size_t l = 0; l + 1 < k; ++l) {
      used += seglen[l];
      EdgeRef r = out.locate(cur);
      Vec2 start = out.polygons()[r.poly].v[r.edge];
      Vec2 ev = out.polygons()[r.poly].evec(r.edge);
      Rat remaining = 0;
      for (std::size_t t = l; t < k; ++t) remaining += seglen[t];
      Vec2 p = start + ev * (seglen[l] / remaining);
      auto [piece, rest] = out.split_edge(cur, p);
      subs.push_back(piece);
      cur = rest;
    }
    subs.push_back(cur);
    out.pair_ids(subs[0], circle.ids[0]);
    for (std::size_t l = 1; l < k; ++l) out.pair_ids(subs[l], circle.ids[k - l]);
  };
  attach(bottom, ca);
  attach(top, cb);

  out.remove_boundary(alpha);
  out.remove_boundary(beta);
  out.validate();
  return out;
}

TranslationSurface disjoint_union(const TranslationSurface& a, const TranslationSurface& b) {
  TranslationSurface out = a;
  std::map<long, long> remap;
  for (const auto& poly : b.polygons()) {
    std::string name = out.fresh_poly_name(poly.name);
    std::size_t pi = out.add_polygon(name, poly.v);
    for (std::size_t e = 0; e < poly.eid.size(); ++e)
      remap[poly.eid[e]] = out.polygons()[pi].eid[e];
  }
  for (const auto& [x, y] : b.pairing())
    if (x < y) out.pair_ids(remap[x], remap[y]);
  for (const auto& [name, ids] : b.boundaries()) {
    std::vector<long> mapped;
    for (long id : ids) mapped.push_back(remap[id]);
    std::string bname = name;
    for (const auto& [n, e] : out.boundaries())
      if (n == bname) bname += "#2";
    out.declare_boundary(bname, std::move(mapped));
  }
  return out;
}

}  // namespace twistcalc
