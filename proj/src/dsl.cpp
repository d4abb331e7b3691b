#include "twistcalc/dsl.hpp"

#include <algorithm>
#include <sstream>

#include "twistcalc/genus3.hpp"
#include "twistcalc/spin.hpp"
#include "twistcalc/twist.hpp"

#include "json.hpp"

namespace twistcalc {

ParseErrors::ParseErrors(std::vector<ParseIssue> issues)
    : Error("ParseErrors", render(issues)), issues_(std::move(issues)) {}

std::string ParseErrors::render(const std::vector<ParseIssue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << "line " << issues[i].line << ": " << issues[i].message;
  }
  return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    tokens.push_back(t);
  }
  return tokens;
}

std::string strip_colon(std::string t) {
  if (!t.empty() && t.back() == ':') t.pop_back();
  return t;
}

bool is_integer(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Int parse_int(const std::string& t) {
  if (!is_integer(t)) throw Error("BadInteger", "expected an integer, got '" + t + "'");
  return Int(t);
}

Rat parse_rat(const std::string& t) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_int(t));
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (den == 0) throw Error("BadRational", "zero denominator in '" + t + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// divisor expression: sign-separated terms "2q", "K", "3K", "z'", "0"
DivisorClass parse_divisor(const std::string& component, const std::vector<std::string>& tokens,
                           std::size_t from, std::size_t to) {
  DivisorClass d(component);
  int sign = 1;
  bool expect_term = true;
  for (std::size_t i = from; i < to; ++i) {
    const std::string& t = tokens[i];
    if (t == "+" || t == "-") {
      if (expect_term && t == "-") {
        sign = -sign;
        continue;
      }
      sign = (t == "-") ? -1 : 1;
      expect_term = true;
      continue;
    }
    std::size_t p = 0;
    while (p < t.size() && (t[p] >= '0' && t[p] <= '9')) ++p;
    Int coeff = p > 0 ? Int(t.substr(0, p)) : Int(1);
    std::string name = t.substr(p);
    if (name.empty()) {
      if (coeff == 0) {  // literal zero divisor
        sign = 1;
        expect_term = false;
        continue;
      }
      throw Error("BadDivisor", "coefficient '" + t + "' without a point");
    }
    if (name == "K")
      d.canonical += sign * coeff;
    else
      d.add(name, sign * coeff);
    sign = 1;
    expect_term = false;
  }
  return d;
}

std::size_t find_token(const std::vector<std::string>& tokens, const std::string& what) {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i] == what) return i;
  return tokens.size();
}

EdgeRef parse_edge_ref(const TranslationSurface& s, const std::string& t) {
  auto dotpos = t.rfind('.');
  if (dotpos == std::string::npos)
    throw Error("BadEdgeRef", "edge reference must look like POLY.INDEX, got '" + t + "'");
  std::string poly = t.substr(0, dotpos);
  std::size_t idx = static_cast<std::size_t>(std::stoul(t.substr(dotpos + 1)));
  std::size_t pi = s.poly_index(poly);
  if (idx >= s.polygons()[pi].size())
    throw Error("BadEdgeRef", "edge index out of range in '" + t + "'");
  return {pi, idx};
}

ComponentModel default_model(const Vertex& v) {
  if (v.genus == 0) return ComponentModel::rational(v.label);
  if (v.genus == 1) return ComponentModel::elliptic(v.label);
  return ComponentModel::axiomatic(v.label, v.genus);
}

ComponentModel& get_or_create_model(CurveDocument& doc, const std::string& vertex) {
  auto it = doc.models.find(vertex);
  if (it != doc.models.end()) return it->second;
  const Vertex& v = doc.curve.vertices()[doc.curve.vertex_index(vertex)];
  return doc.models.emplace(vertex, default_model(v)).first->second;
}

void ensure_standard_points(CurveDocument& doc) {
  const StableCurve& c = doc.curve;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    const std::string& label = c.vertices()[i].label;
    ComponentModel& m = get_or_create_model(doc, label);
    for (const Leg& l : c.legs())
      if (l.vertex == i) m.ensure_point(l.label);
    for (std::size_t e = 0; e < c.edges().size(); ++e) {
      if (c.is_loop(e)) {
        if (c.edges()[e].v[0] == i && m.genus() == c.vertices()[i].genus) {
          m.ensure_point(branch_point_name(c.edges()[e].label, 0));
          m.ensure_point(branch_point_name(c.edges()[e].label, 1));
        }
        continue;
      }
      if (c.edges()[e].v[0] == i || c.edges()[e].v[1] == i) m.ensure_point(c.edges()[e].label);
    }
  }
}

}  // namespace

CurveDocument parse_document(const std::string& text) {
  CurveDocument doc;
  std::vector<ParseIssue> issues;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;

  std::map<std::string, std::vector<std::pair<std::string, Rat>>> pending;  // unused placeholder
  (void)pending;

  auto fail = [&](const std::string& msg) { issues.push_back({lineno, msg}); };

  std::vector<Int> signature_orders;
  bool have_signature = false;

  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    try {
      if (kw == "signature") {
        signature_orders.clear();
        for (std::size_t i = 1; i < tok.size(); ++i) signature_orders.push_back(parse_int(tok[i]));
        have_signature = true;
      } else if (kw == "vertex") {
        if (tok.size() < 4 || tok[2] != "genus") throw Error("Syntax", "vertex NAME genus N");
        bool exc = tok.size() > 4 && tok[4] == "exceptional";
        doc.curve.add_vertex(tok[1], static_cast<int>(parse_int(tok[3]).get_si()), exc);
      } else if (kw == "edge") {
        if (tok.size() != 4) throw Error("Syntax", "edge NAME V1 V2");
        doc.curve.add_edge(tok[1], tok[2], tok[3]);
      } else if (kw == "leg") {
        if (tok.size() != 5 || tok[3] != "order") throw Error("Syntax", "leg NAME VERTEX order N");
        doc.curve.add_leg(tok[1], tok[2], parse_int(tok[4]));
      } else if (kw == "model") {
        if (tok.size() != 3) throw Error("Syntax", "model VERTEX rational|elliptic|axiomatic");
        const Vertex& v = doc.curve.vertices()[doc.curve.vertex_index(tok[1])];
        if (doc.models.count(tok[1]))
          throw Error("DuplicateModel", "vertex '" + tok[1] + "' already has a model");
        if (tok[2] == "rational")
          doc.models.emplace(tok[1], ComponentModel::rational(tok[1]));
        else if (tok[2] == "elliptic")
          doc.models.emplace(tok[1], ComponentModel::elliptic(tok[1]));
        else if (tok[2] == "axiomatic")
          doc.models.emplace(tok[1], ComponentModel::axiomatic(tok[1], v.genus));
        else
          throw Error("Syntax", "unknown model kind '" + tok[2] + "'");
        doc.model_decls.push_back({tok[1], tok[2]});
      } else if (kw == "torsion") {
        // torsion V: a - b order N|inf
        if (tok.size() != 7 || tok[3] != "-" || tok[5] != "order")
          throw Error("Syntax", "torsion V: a - b order N|inf");
        std::string vertex = strip_colon(tok[1]);
        doc.curve.vertex_index(vertex);
        ComponentModel& m = get_or_create_model(doc, vertex);
        std::optional<Int> order;
        if (tok[6] != "inf") order = parse_int(tok[6]);
        m.declare_torsion(tok[2], tok[4], order);
        doc.torsions.push_back({vertex, tok[2], tok[4], order});
      } else if (kw == "axiom") {
        if (tok.size() < 3) throw Error("Syntax", "axiom V: ...");
        std::string vertex = strip_colon(tok[1]);
        doc.curve.vertex_index(vertex);
        ComponentModel& m = get_or_create_model(doc, vertex);
        Axiom ax;
        if (tok[2] == "weierstrass") {
          ax.kind = Axiom::Kind::WeierstrassPoint;
          ax.points = {tok.at(3)};
        } else if (tok[2] == "conjugate") {
          ax.kind = Axiom::Kind::HyperellipticConjugate;
          ax.points = {tok.at(3), tok.at(4)};
        } else if (tok[2] == "residues") {
          ax.kind = Axiom::Kind::ResidueSumZero;
          ax.points = {tok.at(3)};
        } else if (tok[2] == "effective") {
          ax.kind = Axiom::Kind::Effective;
          ax.lhs = parse_divisor(vertex, tok, 3, tok.size());
        } else if (tok[2] == "noteffective") {
          ax.kind = Axiom::Kind::NotEffective;
          ax.lhs = parse_divisor(vertex, tok, 3, tok.size());
        } else {
          std::size_t tilde = find_token(tok, "~");
          if (tilde == tok.size()) throw Error("Syntax", "axiom V: D1 ~ D2");
          ax.kind = Axiom::Kind::LinearEquivalence;
          ax.lhs = parse_divisor(vertex, tok, 2, tilde);
          ax.rhs = parse_divisor(vertex, tok, tilde + 1, tok.size());
        }
        m.add_axiom(ax);
        doc.axioms.push_back({vertex, std::move(ax)});
      } else if (kw == "chain") {
        // chain g=N t2=... t3=...
        ChainInput ci;
        bool have_g = false;
        std::vector<std::pair<int, std::optional<Int>>> ts;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto eq = tok[i].find('=');
          if (eq == std::string::npos) throw Error("Syntax", "chain g=N t2=V ...");
          std::string key = tok[i].substr(0, eq), val = tok[i].substr(eq + 1);
          if (key == "g") {
            ci.g = static_cast<int>(parse_int(val).get_si());
            have_g = true;
          } else if (key.size() > 1 && key[0] == 't') {
            int idx = std::stoi(key.substr(1));
            std::optional<Int> t;
            if (val != "inf") t = parse_int(val);
            ts.push_back({idx, t});
          } else {
            throw Error("Syntax", "unknown chain key '" + key + "'");
          }
        }
        if (!have_g) throw Error("Syntax", "chain needs g=N");
        ci.torsion.assign(static_cast<std::size_t>(std::max(ci.g - 1, 0)), std::nullopt);
        for (auto& [idx, t] : ts) {
          if (idx < 2 || idx > ci.g) throw Error("Syntax", "torsion index out of range");
          ci.torsion[static_cast<std::size_t>(idx - 2)] = t;
        }
        doc.chain = std::move(ci);
      } else if (kw == "polygon") {
        if (!doc.surface) doc.surface.emplace();
        std::string name = strip_colon(tok.at(1));
        if (tok.size() < 2 + 6 || (tok.size() - 2) % 2 != 0)
          throw Error("Syntax", "polygon NAME: x y x y x y ...");
        std::vector<Vec2> verts;
        for (std::size_t i = 2; i + 1 < tok.size(); i += 2)
          verts.push_back({parse_rat(tok[i]), parse_rat(tok[i + 1])});
        doc.surface->add_polygon(name, std::move(verts));
      } else if (kw == "pair") {
        if (!doc.surface) throw Error("Syntax", "pair before any polygon");
        if (tok.size() != 3) throw Error("Syntax", "pair P.i Q.j");
        doc.surface->pair_edges(parse_edge_ref(*doc.surface, tok[1]),
                                parse_edge_ref(*doc.surface, tok[2]));
      } else if (kw == "boundary") {
        if (!doc.surface) throw Error("Syntax", "boundary before any polygon");
        std::string name = strip_colon(tok.at(1));
        std::vector<EdgeRef> refs;
        for (std::size_t i = 2; i < tok.size(); ++i)
          refs.push_back(parse_edge_ref(*doc.surface, tok[i]));
        doc.surface->declare_boundary_refs(name, refs);
      } else if (kw == "slit") {
        if (tok.size() != 6) throw Error("Syntax", "slit POLY x1 y1 x2 y2");
        doc.slits.push_back({tok[1],
                             {parse_rat(tok[2]), parse_rat(tok[3])},
                             {parse_rat(tok[4]), parse_rat(tok[5])}});
      } else if (kw == "plumb") {
        if (tok.size() != 7 || tok[3] != "height" || tok[5] != "twist")
          throw Error("Syntax", "plumb ALPHA BETA height H twist T");
        doc.plumb = CurveDocument::PlumbSpec{tok[1], tok[2], parse_rat(tok[4]), parse_rat(tok[6])};
      } else {
        throw Error("Syntax", "unknown keyword '" + kw + "'");
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  if (have_signature) {
    doc.signature = Signature(signature_orders);
    const auto& legs = doc.curve.legs();
    if (!legs.empty()) {
      bool match = legs.size() == signature_orders.size();
      for (std::size_t i = 0; match && i < legs.size(); ++i)
        match = legs[i].order == signature_orders[i];
      if (!match) issues.push_back({0, "signature block does not match the leg orders"});
    }
  }

  if (!issues.empty()) throw ParseErrors(std::move(issues));
  if (doc.has_curve()) ensure_standard_points(doc);
  if (doc.surface) doc.surface->validate();
  return doc;
}

Signature document_signature(const CurveDocument& doc) {
  if (doc.signature) return *doc.signature;
  std::vector<Int> orders;
  for (const Leg& l : doc.curve.legs()) orders.push_back(l.order);
  return Signature(std::move(orders));
}

namespace {

std::string render_int_list(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string print_document(const CurveDocument& doc) {
  std::ostringstream os;
  if (doc.signature) {
    os << "signature";
    for (const Int& o : doc.signature->orders()) os << " " << o.get_str();
    os << "\n";
  }
  for (const Vertex& v : doc.curve.vertices()) {
    os << "vertex " << v.label << " genus " << v.genus;
    if (v.exceptional) os << " exceptional";
    os << "\n";
  }
  for (const Edge& e : doc.curve.edges())
    os << "edge " << e.label << " " << doc.curve.vertices()[e.v[0]].label << " "
       << doc.curve.vertices()[e.v[1]].label << "\n";
  for (const Leg& l : doc.curve.legs())
    os << "leg " << l.label << " " << doc.curve.vertices()[l.vertex].label << " order "
       << l.order.get_str() << "\n";
  for (const auto& [vertex, kind] : doc.model_decls) os << "model " << vertex << " " << kind << "\n";
  for (const auto& t : doc.torsions)
    os << "torsion " << t.vertex << ": " << t.a << " - " << t.b << " order "
       << (t.order ? t.order->get_str() : std::string("inf")) << "\n";
  for (const auto& [vertex, ax] : doc.axioms)
    os << "axiom " << vertex << ": " << ax.to_string() << "\n";
  if (doc.chain) {
    os << "chain g=" << doc.chain->g;
    for (std::size_t i = 0; i < doc.chain->torsion.size(); ++i)
      os << " t" << (i + 2) << "="
         << (doc.chain->torsion[i] ? doc.chain->torsion[i]->get_str() : std::string("inf"));
    os << "\n";
  }
  if (doc.surface) os << print_surface(*doc.surface);
  for (const Slit& s : doc.slits)
    os << "slit " << s.polygon << " " << to_string(s.a.x) << " " << to_string(s.a.y) << " "
       << to_string(s.b.x) << " " << to_string(s.b.y) << "\n";
  if (doc.plumb)
    os << "plumb " << doc.plumb->alpha << " " << doc.plumb->beta << " height "
       << to_string(doc.plumb->height) << " twist " << to_string(doc.plumb->twist) << "\n";
  return os.str();
}

std::string print_surface(const TranslationSurface& s) {
  std::ostringstream os;
  for (const Polygon& p : s.polygons()) {
    os << "polygon " << p.name << ":";
    for (const Vec2& v : p.v) os << " " << to_string(v.x) << " " << to_string(v.y);
    os << "\n";
  }
  auto ref_name = [&](long id) {
    EdgeRef r = s.locate(id);
    return s.polygons()[r.poly].name + "." + std::to_string(r.edge);
  };
  std::vector<std::pair<long, long>> pairs;
  for (const auto& [a, b] : s.pairing())
    if (a < b) pairs.push_back({a, b});
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    EdgeRef rx = s.locate(x.first), ry = s.locate(y.first);
    return rx.poly != ry.poly ? rx.poly < ry.poly : rx.edge < ry.edge;
  });
  for (const auto& [a, b] : pairs) os << "pair " << ref_name(a) << " " << ref_name(b) << "\n";
  for (const auto& [name, ids] : s.boundaries()) {
    os << "boundary " << name << ":";
    for (long id : ids) os << " " << ref_name(id);
    os << "\n";
  }
  return os.str();
}

std::string Report::text(bool json) const {
  if (json) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [k, v] : fields) os << k << " = " << v << "\n";
  return os.str();
}

namespace {

void surface_fields(Report& rep, const TranslationSurface& s, const std::string& prefix) {
  bool open = false;
  for (const Polygon& p : s.polygons())
    for (long id : p.eid)
      if (!s.is_paired(id)) open = true;
  SingularityData data = open ? interior_singularities(s) : singularity_data(s);
  rep.fields[prefix + "genus"] = data.genus.get_str();
  rep.fields[prefix + "area"] = to_string(s.area());
  rep.fields[prefix + "polygons"] = std::to_string(s.polygons().size());
  rep.fields[prefix + "closed"] = open ? "no" : "yes";
  rep.fields[prefix + "signature"] = render_int_list(data.signature());
  Int total = 0;
  for (const Int& o : data.signature()) total += o;
  rep.fields[prefix + "order_sum"] = total.get_str();
  std::size_t i = 0;
  for (const auto& pt : data.points) {
    EdgeRef c = pt.corners.front();
    rep.fields[prefix + "singularity." + std::to_string(i)] =
        "order " + pt.order.get_str() + " at " + s.polygons()[c.poly].name + " vertex " +
        std::to_string(c.edge) + " (" + to_string(s.polygons()[c.poly].v[c.edge]) + ")";
    ++i;
  }
  std::size_t bi = 0;
  for (const auto& [name, ids] : s.boundaries()) {
    rep.fields[prefix + "boundary." + std::to_string(bi)] =
        name + " (" + std::to_string(ids.size()) + " edges)";
    ++bi;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("CommandError", what);
}

}  // namespace

std::optional<TranslationSurface> run_surface_surgery(const CurveDocument& doc,
                                                      const std::string& op) {
  if (op == "slit") {
    require(doc.surface.has_value(), "surface slit needs a surface block");
    require(doc.slits.size() == 2, "surface slit needs exactly two slit lines");
    return slit_smoothing(*doc.surface, doc.slits[0], doc.slits[1]);
  }
  if (op == "plumb") {
    require(doc.surface.has_value(), "surface plumb needs a surface block");
    require(doc.plumb.has_value(), "surface plumb needs a plumb line");
    return plumb_cylinder(*doc.surface, doc.plumb->alpha, doc.plumb->beta, doc.plumb->height,
                          doc.plumb->twist);
  }
  return std::nullopt;
}

Report run(const CurveDocument& doc, const std::string& command, const RunOptions& opts) {
  Report rep;
  rep.fields["command"] = command;

  if (command == "check") {
    require(doc.has_curve(), "check needs a curve");
    Signature mu = document_signature(doc);
    rep.fields["signature"] = mu.to_string();
    rep.fields["genus"] = doc.curve.arithmetic_genus().get_str();
    CurveType type = classify_type(doc.curve);
    rep.fields["curve.type"] = to_string(type.cls);
    Verdict v = smoothability_verdict(doc.curve, doc.models);
    try {
      TwistAssignment t = solve_twist(doc.curve);
      rep.fields["twist.b"] = render_int_list(t.b);
      for (std::size_t e = 0; e < doc.curve.edges().size(); ++e)
        rep.fields["twist.s." + doc.curve.edges()[e].label] =
            "(" + t.s[e][0].get_str() + ", " + t.s[e][1].get_str() + ")";
      try {
        Polarity pol = classify_polarity(doc.curve, t);
        for (std::size_t i = 0; i < doc.curve.vertices().size(); ++i)
          rep.fields["vertex." + doc.curve.vertices()[i].label + ".polar"] =
              pol.polar[i] ? "yes" : "no";
      } catch (const Error& e) {
        rep.fields["polarity"] = std::string("invalid: ") + e.what();
      }
    } catch (const Error& e) {
      rep.fields["twist"] = std::string("unsolvable: ") + e.what();
    }
    if (type.cls != CurveClass::NonPseudocompact) {
      try {
        TwistedCanonicalCheck chk = check_twisted_canonical(doc.curve, doc.models);
        for (std::size_t i = 0; i < doc.curve.vertices().size(); ++i)
          rep.fields["vertex." + doc.curve.vertices()[i].label + ".relation"] =
              to_string(chk.per_vertex[i]);
      } catch (const Error&) {
      }
    }
    rep.fields["status"] = to_string(v.status);
    rep.fields["smoothable"] = to_string(v.smoothable);
    rep.fields["criterion"] = v.criterion;
    for (std::size_t i = 0; i < v.notes.size(); ++i)
      rep.fields["note." + std::to_string(i)] = v.notes[i];
    rep.exit_code = v.smoothable == Smoothable::Inconclusive ? 2 : 0;
    return rep;
  }

  if (command == "twist") {
    require(doc.has_curve(), "twist needs a curve");
    try {
      TwistAssignment t = solve_twist(doc.curve);
      rep.fields["twist.solvable"] = "yes";
      rep.fields["twist.b"] = render_int_list(t.b);
      rep.fields["twist.deficit"] = render_int_list(t.deficit);
      for (std::size_t i = 0; i < doc.curve.vertices().size(); ++i)
        rep.fields["vertex." + doc.curve.vertices()[i].label + ".M"] = t.leg_sum[i].get_str();
      for (std::size_t e = 0; e < doc.curve.edges().size(); ++e)
        rep.fields["twist.s." + doc.curve.edges()[e].label] =
            "(" + t.s[e][0].get_str() + ", " + t.s[e][1].get_str() + ")";
      try {
        Polarity pol = classify_polarity(doc.curve, t);
        for (std::size_t i = 0; i < doc.curve.vertices().size(); ++i)
          rep.fields["vertex." + doc.curve.vertices()[i].label + ".polar"] =
              pol.polar[i] ? "yes" : "no";
      } catch (const Error& e) {
        rep.fields["polarity"] = std::string("invalid: ") + e.what();
      }
    } catch (const Error& e) {
      rep.fields["twist.solvable"] = "no";
      rep.fields["twist.error"] = e.what();
    }
    return rep;
  }

  if (command == "spin") {
    require(doc.has_curve(), "spin needs a curve");
    SpinStructure spin = limit_spin(doc.curve);
    for (std::size_t i = 0; i < spin.blown.vertices().size(); ++i) {
      const std::string& label = spin.blown.vertices()[i].label;
      if (spin.blown.vertices()[i].exceptional) {
        rep.fields["eta." + label] = "O(1)";
      } else {
        rep.fields["eta." + label] = "O(" + spin.eta[i]->to_string() + ")";
        rep.fields["eta.degree." + label] = spin.eta_degree[i].get_str();
      }
    }
    rep.fields["eta.total_degree"] = spin.total_degree.get_str();
    Parity par = parity(spin, doc.models);
    rep.fields["parity"] = to_string(par.value);
    for (std::size_t i = 0; i < par.reasons.size(); ++i)
      rep.fields["note." + std::to_string(i)] = par.reasons[i];
    rep.exit_code = par.value == ParityValue::Undecided ? 2 : 0;
    return rep;
  }

  if (command == "dim") {
    Signature mu = document_signature(doc);
    require(mu.n() > 0, "dim needs a signature or legs");
    Int g = genus_of(mu);
    rep.fields["signature"] = mu.to_string();
    rep.fields["genus"] = g.get_str();
    rep.fields["dim.stratum"] = stratum_dimension(mu, false).get_str();
    rep.fields["dim.projectivized"] = stratum_dimension(mu, true).get_str();
    std::string labels;
    for (ComponentLabel l : component_labels(mu)) {
      if (!labels.empty()) labels += ", ";
      labels += to_string(l);
    }
    rep.fields["components"] = labels;
    if (doc.has_curve()) {
      Int b = 3 * g - 3 + Int(doc.curve.legs().size()) - Int(doc.curve.edges().size());
      rep.fields["dim.boundary_stratum"] = b.get_str();
      rep.fields["dim.bound"] = dimension_bound(b, g, false).get_str();
      if (g >= 1)
        rep.fields["dim.bound.refined"] = dimension_bound(b, g, true).get_str();
      if (opts.refined && g >= 1)
        rep.fields["dim.bound.used"] = dimension_bound(b, g, true).get_str();
    }
    return rep;
  }

  if (command == "genus3") {
    require(doc.has_curve(), "genus3 needs a curve");
    CatalogVerdict v = classify(doc.curve, doc.models);
    rep.fields["case"] = to_string(v.label);
    rep.fields["in_hyp"] = to_string(v.in_hyp);
    rep.fields["in_odd"] = to_string(v.in_odd);
    for (std::size_t i = 0; i < v.conditions_used.size(); ++i)
      rep.fields["condition." + std::to_string(i)] = v.conditions_used[i];
    rep.exit_code =
        (v.in_hyp == Trilean::Unknown || v.in_odd == Trilean::Unknown) ? 2 : 0;
    return rep;
  }

  if (command == "chain") {
    require(doc.chain.has_value(), "chain needs a chain line");
    ChainResult r = chain_is_limit_weierstrass(*doc.chain);
    rep.fields["chain.g"] = std::to_string(doc.chain->g);
    rep.fields["chain.limit_weierstrass"] = r.limit_weierstrass ? "true" : "false";
    if (r.limit_weierstrass) rep.fields["chain.witness"] = render_int_list(r.witness);
    return rep;
  }

  if (command.rfind("surface", 0) == 0) {
    std::string op = command.size() > 8 ? command.substr(8) : "info";
    require(doc.surface.has_value(), "surface commands need a surface block");
    if (op == "info") {
      surface_fields(rep, *doc.surface, "surface.");
      return rep;
    }
    std::optional<TranslationSurface> result = run_surface_surgery(doc, op);
    require(result.has_value(), "unknown surface operation '" + op + "'");
    rep.fields["surgery"] = op;
    surface_fields(rep, *doc.surface, "input.");
    surface_fields(rep, *result, "surface.");
    return rep;
  }

  throw Error("CommandError", "unknown command '" + command + "'");
}

}  // namespace twistcalc
