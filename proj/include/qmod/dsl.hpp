// Text format for quivers, algebras, modules and submodule points.
//
//   quiver { vertices: 1 2; arrows: a1: 1 -> 2, a2: 1 -> 2; }
//   algebra { field: Q; max_len: 3; relations: [b*a - d*c, J^4]; }
//   top: (1,0);  dimvec: (1,1);  weight: (-1,1);  layering: [(1,0), (0,1)];
//   module { dims: (1,1); a1: [[1]]; a2: [[0]]; }
//   point { (a2 - 5*a1).z1; }
//   skeleton: [z1, a1.z1];  coords: (5);  total: 3;
//   endo { z1 -> (a).z1; }
//
// Paths are written right to left ("b*a": first a, then b); '.' and '*' both
// join arrows. '#' starts a comment.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmod/grass.hpp"

namespace qmod {

struct SourcePos {
  int line = 1, col = 1;
};

/// coeff · path, with the path in application order. In relations the start
/// vertex is derived from the first arrow; idempotent terms carry `vertex`.
struct DslTerm {
  mpq_class coeff;
  std::vector<int> arrows;
  int vertex = -1;  // for idempotents
  int r = -1;       // generator index (vectors of P only)
  SourcePos pos;
};

struct DslRelation {
  std::vector<DslTerm> terms;
  int power = 0;  // J^power when nonzero
  SourcePos pos;
};

using DslVector = std::vector<DslTerm>;

struct DslModule {
  DimVector dims;
  std::map<int, std::vector<std::vector<mpq_class>>> maps;  // arrow -> rows
};

struct InputDocument {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::string field = "Q";
  std::size_t max_len = 0;  // 0: not given
  std::vector<DslRelation> relations;
  std::optional<TopSpec> top;
  std::optional<DimVector> dimvec;
  std::optional<std::vector<long>> weight;
  std::optional<SemisimpleSequence> layering;
  std::optional<DslModule> module;
  std::vector<std::vector<DslVector>> points;
  std::optional<DslVector> skeleton;  // one term per skeleton path, coefficient 1
  std::optional<std::vector<mpq_class>> coords;
  std::optional<int> total_dim;
  std::optional<std::vector<std::pair<int, DslVector>>> endo;  // z_r -> image
};

/// Throws SyntaxError / UnknownLabel / TypeMismatch with "line:col" in the message.
InputDocument parse_input(const std::string& text);
/// Canonical text; parse_input(render_document(d)) renders identically.
std::string render_document(const InputDocument& doc);

Quiver doc_quiver(const InputDocument& doc);
/// `field_override` replaces the document's field when nonempty.
Algebra doc_algebra(const InputDocument& doc, const std::string& field_override = "");
Vec doc_vector(const ProjectiveCover& p, const DslVector& v);
SubmodulePoint doc_point(const ProjectiveCover& p, const std::vector<DslVector>& gens);
Rep doc_module(const Algebra& alg, const DslModule& m);
Skeleton doc_skeleton(const ProjectiveCover& p, const DslVector& s);
Vec doc_coords(const Field& f, const std::vector<mpq_class>& c);
Matrix doc_endo(const ProjectiveCover& p, const std::vector<std::pair<int, DslVector>>& images);

/// Inverse renderings for building documents from computed objects.
DslVector vector_to_dsl(const ProjectiveCover& p, const Vec& v);
std::string render_vector(const InputDocument& doc, const DslVector& v);

}  // namespace qmod
