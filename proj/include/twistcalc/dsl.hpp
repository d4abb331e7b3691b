#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcalc/curve.hpp"
#include "twistcalc/divisor.hpp"
#include "twistcalc/strata.hpp"
#include "twistcalc/surface.hpp"
#include "twistcalc/weierstrass.hpp"

namespace twistcalc {

// One parsed input file: a curve with its component models, a torsion chain,
// or a translation surface with optional surgery directives. Line-oriented,
// keyword-prefixed, '#' comments; see README for the grammar.
struct CurveDocument {
  // curve block
  std::optional<Signature> signature;
  StableCurve curve;
  ModelMap models;

  struct TorsionDecl {
    std::string vertex, a, b;
    std::optional<Int> order;  // nullopt = inf
  };
  std::vector<TorsionDecl> torsions;
  std::vector<std::pair<std::string, Axiom>> axioms;       // vertex, axiom
  std::vector<std::pair<std::string, std::string>> model_decls;  // vertex, kind

  // chain block
  std::optional<ChainInput> chain;

  // surface block
  std::optional<TranslationSurface> surface;
  std::vector<Slit> slits;
  struct PlumbSpec {
    std::string alpha, beta;
    Rat height, twist;
  };
  std::optional<PlumbSpec> plumb;

  bool has_curve() const { return !curve.vertices().empty(); }
};

struct ParseIssue {
  std::size_t line;
  std::string message;
};

class ParseErrors : public Error {
public:
  explicit ParseErrors(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const { return issues_; }

private:
  static std::string render(const std::vector<ParseIssue>& issues);
  std::vector<ParseIssue> issues_;
};

CurveDocument parse_document(const std::string& text);
std::string print_document(const CurveDocument& doc);

// Signature carried by the document: the explicit signature block if present
// (cross-checked against the legs), otherwise read off the legs.
Signature document_signature(const CurveDocument& doc);

struct RunOptions {
  bool refined = false;
  bool json = false;
};

// Structured report: canonically key-sorted fields, exact integers rendered
// as strings. Identical documents produce byte-identical reports.
struct Report {
  std::map<std::string, std::string> fields;
  int exit_code = 0;  // 0 decided, 2 undecided, 1 error
  std::string text(bool json) const;
};

// Commands: check, twist, spin, dim, genus3, chain,
// surface info | surface slit | surface plumb.
Report run(const CurveDocument& doc, const std::string& command, const RunOptions& opts = {});

// Surface resulting from `surface slit` / `surface plumb`, for writing out.
std::optional<TranslationSurface> run_surface_surgery(const CurveDocument& doc,
                                                      const std::string& op);

std::string print_surface(const TranslationSurface& s);

}  // namespace twistcalc
