#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/semidirect.hpp"

namespace orbitkit::dsl {

struct Span {
  int line1 = 0, col1 = 0, line2 = 0, col2 = 0;
  std::string to_string() const;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string message;
  Span span;
  std::vector<std::string> notes;
  std::string render() const;
};

/// One scalar term of a linear combination: coeff * name.
struct Term {
  CRat coeff;
  std::string name;
  Span span;
};

struct LinComb {
  std::vector<Term> terms;
  Span span;
};

struct BracketDecl {
  std::string lhs1, lhs2;
  LinComb rhs;
  Span span;
};

struct AlgebraDecl {
  std::string name;
  std::vector<std::string> basis;
  std::vector<BracketDecl> brackets;
  Span span;
};

struct RepEntry {
  std::string basis_name;
  std::vector<std::vector<Rat>> matrix;
  Span span;
};

struct RepDecl {
  std::string name;
  std::string algebra;
  std::size_t dim = 0;
  std::vector<RepEntry> entries;
  Span span;
};

struct ProductDecl {
  std::string name;
  std::string algebra;
  std::string rep;
  Span span;
};

struct PointDecl {
  std::string name;
  std::string product;
  LinComb f, p;
  Span span;
};

struct PolarizationDecl {
  std::string name;
  std::string point;
  std::vector<LinComb> span_vectors;
  Span span;
};

struct Decl {
  enum class Kind { algebra, rep, product, point, polarization };
  Kind kind;
  AlgebraDecl algebra;
  RepDecl rep;
  ProductDecl product;
  PointDecl point;
  PolarizationDecl polarization;
};

struct SpecDocument {
  std::vector<Decl> decls;
};

struct ParseResult {
  SpecDocument doc;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(const std::string& text);

/// Canonical printing; parse(print(doc)) reproduces the document.
std::string print(const SpecDocument& doc);

struct ElaboratedPoint {
  std::string product;
  CovectorPoint value;
};

struct ElaboratedPolarization {
  std::string product;
  std::string point;
  ComplexSubspace h;  // a (+) V^C inside g^C
};

struct Elaboration {
  std::map<std::string, LieAlgebra> algebras;
  std::map<std::string, Representation> reps;
  std::map<std::string, std::string> rep_algebra;  // rep name -> algebra name
  std::map<std::string, SemidirectProduct> products;
  std::map<std::string, ElaboratedPoint> points;
  std::map<std::string, ElaboratedPolarization> polarizations;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

Elaboration elaborate(const SpecDocument& doc);

/// parse + elaborate of a whole file's contents.
Elaboration load(const std::string& text);

}  // namespace orbitkit::dsl
