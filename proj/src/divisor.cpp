#include "twistcalc/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace twistcalc {

DivisorClass& DivisorClass::add(const std::string& point, const Int& c) {
  coeff[point] += c;
  if (coeff[point] == 0) coeff.erase(point);
  return *this;
}

DivisorClass DivisorClass::operator+(const DivisorClass& rhs) const {
  DivisorClass out = *this;
  if (out.component.empty()) out.component = rhs.component;
  for (const auto& [p, c] : rhs.coeff) out.add(p, c);
  out.canonical += rhs.canonical;
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& rhs) const {
  return *this + rhs * Int(-1);
}

DivisorClass DivisorClass::operator*(const Int& k) const {
  DivisorClass out(component);
  if (k != 0) {
    for (const auto& [p, c] : coeff) out.coeff[p] = c * k;
    out.canonical = canonical * k;
  }
  return out;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Int& c, const std::string& name) {
    if (c == 0) return;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << a.get_str();
    os << name;
  };
  for (const auto& [p, c] : coeff) emit(c, p);
  emit(canonical, "K");
  if (first) os << "0";
  return os.str();
}

DivisorClass point_class(const std::string& component, const std::string& point, const Int& mult) {
  DivisorClass d(component);
  d.add(point, mult);
  return d;
}

DivisorClass canonical_class(const std::string& component, const Int& mult) {
  DivisorClass d(component);
  d.canonical = mult;
  return d;
}

std::string Axiom::to_string() const {
  switch (kind) {
    case Kind::LinearEquivalence: return lhs.to_string() + " ~ " + rhs.to_string();
    case Kind::Effective: return "effective " + lhs.to_string();
    case Kind::NotEffective: return "noteffective " + lhs.to_string();
    case Kind::WeierstrassPoint: return "weierstrass " + points[0];
    case Kind::HyperellipticConjugate: return "conjugate " + points[0] + " " + points[1];
    case Kind::ResidueSumZero: return "residues " + points[0];
  }
  return "?";
}

ComponentModel ComponentModel::rational(const std::string& label) {
  return ComponentModel(label, Kind::Rational, 0);
}

ComponentModel ComponentModel::elliptic(const std::string& label) {
  return ComponentModel(label, Kind::Elliptic, 1);
}

ComponentModel ComponentModel::axiomatic(const std::string& label, int genus) {
  if (genus < 2) throw Error("BadModel", "axiomatic models require genus >= 2");
  return ComponentModel(label, Kind::Axiomatic, genus);
}

void ComponentModel::ensure_point(const std::string& name) {
  if (points_.count(name)) return;
  points_.insert(name);
  if (kind_ == Kind::Elliptic) {
    // generic position: fresh free generator
    group_.rank += 1;
    for (auto& rel : group_.relations) rel.push_back(0);
    for (auto& [p, v] : coords_) v.push_back(0);
    std::vector<Int> v(group_.rank, 0);
    v[group_.rank - 1] = 1;
    coords_[name] = std::move(v);
  }
}

void ComponentModel::declare_torsion(const std::string& a, const std::string& b,
                                     std::optional<Int> n) {
  if (kind_ != Kind::Elliptic)
    throw Error("BadModel", "torsion declarations only make sense on elliptic models");
  if (n && *n < 1) throw Error("BadTorsion", "torsion order must be >= 1");
  if (points_.count(a))
    throw Error("DuplicateTorsion", "point '" + a + "' already has a group coordinate");
  ensure_point(b);
  // new generator e with a = b + e and (n)e = 0
  group_.rank += 1;
  for (auto& rel : group_.relations) rel.push_back(0);
  for (auto& [p, v] : coords_) v.push_back(0);
  if (n) {
    std::vector<Int> rel(group_.rank, 0);
    rel[group_.rank - 1] = *n;
    group_.relations.push_back(std::move(rel));
  }
  std::vector<Int> v = coords_[b];
  v[group_.rank - 1] = 1;
  points_.insert(a);
  coords_[a] = std::move(v);
}

void ComponentModel::add_axiom(Axiom ax) {
  if (kind_ != Kind::Axiomatic)
    throw Error("BadModel", "axioms attach to axiomatic (genus >= 2) models only");
  for (const auto& p : ax.points) ensure_point(p);
  for (const auto& [p, c] : ax.lhs.coeff) ensure_point(p);
  for (const auto& [p, c] : ax.rhs.coeff) ensure_point(p);
  axioms_.push_back(std::move(ax));
}

bool ComponentModel::has_residue_axiom(const std::string& node) const {
  for (const auto& ax : axioms_)
    if (ax.kind == Axiom::Kind::ResidueSumZero && ax.points[0] == node) return true;
  return false;
}

Int ComponentModel::degree(const DivisorClass& d) const {
  Int deg = d.canonical * Int(2 * genus_ - 2);
  for (const auto& [p, c] : d.coeff) deg += c;
  return deg;
}

void ComponentModel::check_divisor(const DivisorClass& d) const {
  if (!d.component.empty() && d.component != label_)
    throw Error("MixedComponents",
                "divisor on '" + d.component + "' queried against model '" + label_ + "'");
  for (const auto& [p, c] : d.coeff)
    if (!points_.count(p))
      throw Error("UnknownPoint", "point '" + p + "' is not in the model of '" + label_ + "'");
}

Trilean ComponentModel::class_is_trivial(const DivisorClass& diff) const {
  switch (kind_) {
    case Kind::Rational:
      return Trilean::True;  // degree-0 on genus 0
    case Kind::Elliptic: {
      GroupElement x;
      x.coordinates.assign(group_.rank, 0);
      for (const auto& [p, c] : diff.coeff) {
        const auto& v = coords_.at(p);
        for (std::size_t i = 0; i < v.size(); ++i) x.coordinates[i] += c * v[i];
      }
      // K is the zero element on genus 1
      return element_is_zero(group_, x) ? Trilean::True : Trilean::False;
    }
    case Kind::Axiomatic: {
      std::vector<Int> x = vec(diff);
      auto lattice = relation_lattice();
      if (in_lattice(lattice, x)) return Trilean::True;
      // A certificate n with n in <lattice, x> but not in <lattice> shows
      // that x ~ 0 would force n ~ 0, contradicting the declaration.
      auto extended = lattice;
      extended.push_back(x);
      for (const auto& n : nonzero_certificates())
        if (in_lattice(extended, n) && !in_lattice(lattice, n)) return Trilean::False;
      return Trilean::Unknown;
    }
  }
  return Trilean::Unknown;
}

Trilean ComponentModel::linear_equiv(const DivisorClass& d1, const DivisorClass& d2) const {
  check_divisor(d1);
  check_divisor(d2);
  if (degree(d1) != degree(d2)) return Trilean::False;
  return class_is_trivial(d1 - d2);
}

std::optional<Int> ComponentModel::h0(const DivisorClass& d) const {
  check_divisor(d);
  Int deg = degree(d);
  if (deg < 0) return Int(0);
  switch (kind_) {
    case Kind::Rational:
      return deg + 1;
    case Kind::Elliptic: {
      if (deg == 0) return class_is_trivial(d) == Trilean::True ? Int(1) : Int(0);
      return deg;
    }
    case Kind::Axiomatic: {
      const Int k = 2 * genus_ - 2;
      if (deg == 0) {
        switch (class_is_trivial(d)) {
          case Trilean::True: return Int(1);
          case Trilean::False: return Int(0);
          default: return std::nullopt;
        }
      }
      if (deg > k) return deg - genus_ + 1;  // nonspecial by Riemann-Roch
      if (deg == k) {
        switch (linear_equiv(d, canonical_class(label_))) {
          case Trilean::True: return Int(genus_);
          case Trilean::False: return Int(genus_ - 1);
          default: return std::nullopt;
        }
      }
      if (deg == 1) {
        // h^0 of a degree-1 class on genus >= 2 is 0 or 1
        switch (is_effective(d)) {
          case Trilean::True: return Int(1);
          case Trilean::False: return Int(0);
          default: return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Trilean ComponentModel::is_effective(const DivisorClass& d) const {
  check_divisor(d);
  Int deg = degree(d);
  if (deg < 0) return Trilean::False;
  switch (kind_) {
    case Kind::Rational:
      return Trilean::True;
    case Kind::Elliptic:
      if (deg == 0) return class_is_trivial(d);
      return Trilean::True;
    case Kind::Axiomatic: {
      if (deg == 0) return class_is_trivial(d);
      // manifestly a sum of actual points plus copies of K (K effective, g >= 2)
      bool manifest = d.canonical >= 0;
      for (const auto& [p, c] : d.coeff)
        if (c < 0) manifest = false;
      if (manifest) return Trilean::True;
      if (deg == 1) {
        for (const auto& p : points_)
          if (linear_equiv(d, point_class(label_, p)) == Trilean::True) return Trilean::True;
      }
      for (const auto& ax : axioms_) {
        if (ax.kind == Axiom::Kind::Effective &&
            linear_equiv(d, ax.lhs) == Trilean::True)
          return Trilean::True;
        if (ax.kind == Axiom::Kind::NotEffective &&
            linear_equiv(d, ax.lhs) == Trilean::True)
          return Trilean::False;
      }
      return Trilean::Unknown;
    }
  }
  return Trilean::Unknown;
}

std::vector<Int> ComponentModel::vec(const DivisorClass& d) const {
  std::vector<Int> x;
  x.reserve(points_.size() + 1);
  for (const auto& p : points_) {
    auto it = d.coeff.find(p);
    x.push_back(it == d.coeff.end() ? Int(0) : it->second);
  }
  x.push_back(d.canonical);
  return x;
}

std::vector<std::vector<Int>> ComponentModel::relation_lattice() const {
  std::vector<std::vector<Int>> gens;
  for (const auto& ax : axioms_) {
    switch (ax.kind) {
      case Axiom::Kind::LinearEquivalence:
        gens.push_back(vec(ax.lhs - ax.rhs));
        break;
      case Axiom::Kind::Effective:
        if (degree(ax.lhs) == 0) gens.push_back(vec(ax.lhs));
        break;
      case Axiom::Kind::WeierstrassPoint:
        if (genus_ == 2)
          gens.push_back(vec(point_class(label_, ax.points[0], 2) - canonical_class(label_)));
        break;
      case Axiom::Kind::HyperellipticConjugate:
        if (genus_ == 2)
          gens.push_back(vec(point_class(label_, ax.points[0]) +
                             point_class(label_, ax.points[1]) - canonical_class(label_)));
        break;
      default:
        break;
    }
  }
  return gens;
}

std::vector<std::vector<Int>> ComponentModel::nonzero_certificates() const {
  std::vector<std::vector<Int>> certs;
  for (const auto& ax : axioms_)
    if (ax.kind == Axiom::Kind::NotEffective && degree(ax.lhs) == 0) certs.push_back(vec(ax.lhs));
  // two distinct points on a curve of genus >= 1 are never linearly equivalent
  for (auto i = points_.begin(); i != points_.end(); ++i)
    for (auto j = std::next(i); j != points_.end(); ++j)
      certs.push_back(vec(point_class(label_, *i) - point_class(label_, *j)));
  return certs;
}

bool ComponentModel::in_lattice(const std::vector<std::vector<Int>>& gens,
                                const std::vector<Int>& x) const {
  if (gens.empty())
    return std::all_of(x.begin(), x.end(), [](const Int& a) { return a == 0; });
  IntMatrix a(x.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) a.at(i, j) = gens[j][i];
  return solve_integral(a, x).solvable;
}

}  // namespace twistcalc
