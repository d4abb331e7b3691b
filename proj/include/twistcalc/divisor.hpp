#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistcalc/lattice.hpp"

namespace twistcalc {

// Formal integer combination of named points on one component, plus a
// multiple of the canonical symbol K. Degree counts K as 2g-2 on the
// component the class lives on.
struct DivisorClass {
  std::string component;
  std::map<std::string, Int> coeff;
  Int canonical = 0;

  DivisorClass() = default;
  explicit DivisorClass(std::string comp) : component(std::move(comp)) {}

  DivisorClass& add(const std::string& point, const Int& c);
  DivisorClass operator+(const DivisorClass& rhs) const;
  DivisorClass operator-(const DivisorClass& rhs) const;
  DivisorClass operator*(const Int& k) const;
  bool operator==(const DivisorClass& rhs) const = default;

  std::string to_string() const;  // canonical "2z - 2q + K" form, points sorted
};

DivisorClass point_class(const std::string& component, const std::string& point,
                         const Int& mult = 1);
DivisorClass canonical_class(const std::string& component, const Int& mult = 1);

struct Axiom {
  enum class Kind {
    LinearEquivalence,
    Effective,
    NotEffective,
    WeierstrassPoint,
    HyperellipticConjugate,
    ResidueSumZero
  };
  Kind kind;
  DivisorClass lhs, rhs;            // LinearEquivalence: lhs ~ rhs; (Not)Effective: lhs
  std::vector<std::string> points;  // WeierstrassPoint {p}; HyperellipticConjugate {p,q};
                                    // ResidueSumZero {node label}
  std::string to_string() const;
};

// Divisor-class oracle for a single component.
//
//   Rational   genus 0, classes determined by degree alone
//   Elliptic   genus 1 (or the nodal Pic of an arithmetic-genus-1 component):
//              a finitely presented abelian group with one coordinate per
//              named point; a point never mentioned in a torsion declaration
//              sits in generic position (its own free generator)
//   Axiomatic  genus >= 2, smooth: declared axioms combined by integer linear
//              algebra; anything not derivable is Unknown
//
// WeierstrassPoint(p) and HyperellipticConjugate(p,q) expand to the lattice
// relations 2p ~ K resp. p + q ~ K on genus 2 only; on higher genus they are
// stored but never consumed (no sound divisor-class expansion exists there).
class ComponentModel {
public:
  enum class Kind { Rational, Elliptic, Axiomatic };

  static ComponentModel rational(const std::string& label);
  static ComponentModel elliptic(const std::string& label);
  static ComponentModel axiomatic(const std::string& label, int genus);

  const std::string& label() const { return label_; }
  Kind kind() const { return kind_; }
  int genus() const { return genus_; }
  const std::set<std::string>& points() const { return points_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  void ensure_point(const std::string& name);
  // a - b has exact order `n` in the group (nullopt = infinite order).
  void declare_torsion(const std::string& a, const std::string& b, std::optional<Int> n);
  void add_axiom(Axiom ax);
  bool has_residue_axiom(const std::string& node) const;

  Int degree(const DivisorClass& d) const;

  Trilean linear_equiv(const DivisorClass& d1, const DivisorClass& d2) const;
  std::optional<Int> h0(const DivisorClass& d) const;  // nullopt = Unknown
  Trilean is_effective(const DivisorClass& d) const;

private:
  ComponentModel(std::string label, Kind kind, int genus)
      : label_(std::move(label)), kind_(kind), genus_(genus) {}

  void check_divisor(const DivisorClass& d) const;  // MixedComponents / UnknownPoint
  // difference-of-classes triviality over the model's relation knowledge
  Trilean class_is_trivial(const DivisorClass& diff) const;

  // Axiomatic machinery: coordinates over (sorted points, K)
  std::vector<Int> vec(const DivisorClass& d) const;
  std::vector<std::vector<Int>> relation_lattice() const;
  std::vector<std::vector<Int>> nonzero_certificates() const;
  bool in_lattice(const std::vector<std::vector<Int>>& gens, const std::vector<Int>& x) const;

  std::string label_;
  Kind kind_;
  int genus_;
  std::set<std::string> points_;
  std::vector<Axiom> axioms_;

  // Elliptic group data
  GroupPresentation group_;
  std::map<std::string, std::vector<Int>> coords_;
};

using ModelMap = std::map<std::string, ComponentModel>;

}  // namespace twistcalc
