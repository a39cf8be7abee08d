// Representations of a bound quiver as tuples of arrow matrices.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmod/algebra.hpp"
#include "qmod/error.hpp"
#include "qmod/matrix.hpp"
#include "qmod/sweep.hpp"

namespace qmod {

using DimVector = std::vector<int>;
/// Layers of a radical layering; entry [l][i] is the multiplicity of S_i in layer l.
using SemisimpleSequence = std::vector<DimVector>;
/// One matrix per vertex: elements of GL(d), or homomorphisms between reps.
using VertexMaps = std::vector<Matrix>;
using GroupElement = VertexMaps;

int total(const DimVector& d);
std::string dim_string(const DimVector& d);

/// A point of Mod_d(Λ). Vectors of the total space K^{|d|} are laid out
/// vertex by vertex. The algebra must outlive the rep.
class Rep {
 public:
  Rep() = default;
  Rep(const Algebra& alg, DimVector d);  // all maps zero
  /// Throws ShapeMismatch unless map a is d[to] x d[from].
  Rep(const Algebra& alg, DimVector d, std::vector<Matrix> maps);

  const Algebra& algebra() const { return *alg_; }
  const Field& field() const { return alg_->field(); }
  const DimVector& dims() const { return dims_; }
  int dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex)]; }
  std::size_t total() const { return offsets_.back(); }
  std::size_t offset(int vertex) const { return offsets_[static_cast<std::size_t>(vertex)]; }
  /// Vertex owning a coordinate of the total space.
  int vertex_of(std::size_t coord) const;
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(int arrow) const { return maps_[static_cast<std::size_t>(arrow)]; }

  /// Arrow action on the total space.
  const Matrix& total_map(int arrow) const { return total_[static_cast<std::size_t>(arrow)]; }
  /// Action of a path on the total space (idempotents project).
  Matrix path_action(const Path& p) const;
  /// Action of an algebra element given in basis coordinates.
  Matrix element_action(const Vec& coords) const;
  Vec act(int arrow, const Vec& v) const { return total_map(arrow).apply(v); }

 private:
  const Algebra* alg_ = nullptr;
  DimVector dims_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Matrix> maps_, total_;
};

bool rep_validate(const Rep& m);
Rep base_change(const Rep& m, const GroupElement& g);
Rep simple_rep(const Algebra& alg, int vertex);
/// Λe_i with basis the basis paths from i, grouped by end vertex in basis order.
Rep projective_rep(const Algebra& alg, int vertex);
Rep direct_sum(const Rep& a, const Rep& b);
GroupElement random_group_element(const Field& f, const DimVector& d, std::mt19937_64& rng);

/// Per-vertex dimensions of a subspace of the total space spanned by
/// vertex-homogeneous vectors.
DimVector graded_dims(const Rep& m, const Subspace& s);
bool is_graded(const Rep& m, const Subspace& s);
bool is_submodule(const Rep& m, const Subspace& s);
/// Smallest submodule containing the vectors.
Subspace generated_submodule(const Rep& m, const std::vector<Vec>& vectors);
Subspace radical(const Rep& m);
/// Rep on the echelon basis of a submodule; throws NotSubmodule.
Rep sub_rep(const Rep& m, const Subspace& s);
/// Rep on the non-pivot coordinates of s; throws NotSubmodule.
Rep quotient_rep(const Rep& m, const Subspace& s);

SemisimpleSequence radical_layering(const Rep& m);
DimVector top_dims(const Rep& m);
/// Renders e.g. "(S1^3, S1^2+S2)" with the quiver's vertex labels.
std::string layering_string(const Quiver& q, const SemisimpleSequence& s);

/// Basis of Hom(M, N) as per-vertex matrices (N_i x M_i).
std::vector<VertexMaps> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
/// Block-diagonal total-space matrix of a vertex family.
Matrix total_matrix(const Rep& m, const Rep& n, const VertexMaps& f);

struct IsoOptions {
  std::uint64_t seed = 1;
  int random_attempts = 24;
  std::uint64_t max_exhaustive = 1u << 16;
  std::size_t max_symbolic_dim = 12;
};
Tri is_isomorphic(const Rep& m, const Rep& n, const IsoOptions& opts = {});

/// All submodules (exact, finite fields only), sorted by dimension then key.
/// The parallel kernel and the serial reference produce identical output.
std::vector<Subspace> enumerate_submodules(const Rep& m, const SweepLimits& limits = {}, bool serial = false);
std::vector<DimVector> submodule_dim_vectors(const Rep& m, const SweepLimits& limits = {}, bool serial = false);

/// Dimension of the annihilator in M of the two-sided ideal generated by gens.
std::size_t annihilator_dim(const Rep& m, const std::vector<AlgebraElement>& gens);
/// Span (basis coordinates) of the two-sided ideal generated by gens.
Subspace two_sided_ideal(const Algebra& alg, const std::vector<AlgebraElement>& gens);

struct Decomposition {
  enum class Kind { Locals, NotSumOfLocals, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<Rep> pieces;        // direct summands, certified or split as far as possible
  std::vector<std::string> notes; // certificates, one per piece
};
const char* decomposition_kind_name(Decomposition::Kind k);
Decomposition decompose_local(const Rep& m, std::uint64_t seed = 1);

}  // namespace qmod
