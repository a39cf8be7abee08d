// Modules with fixed top as points of Grass^T_d: projective covers, skeleta,
// affine charts, endomorphism actions and moduli verdicts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/poly.hpp"
#include "qmod/rep.hpp"

namespace qmod {

using TopSpec = DimVector;

/// P = ⊕ Λz_r with t_i generators at vertex i. Coordinates of P are pairs
/// (r, b) with b a basis path from e(r); they are ordered by end vertex, then
/// r, then deglex, so that they coincide with the coordinates of `rep()`.
class ProjectiveCover {
 public:
  struct Coord {
    int r;            // generator index
    std::size_t path;  // algebra basis index
  };

  ProjectiveCover() = default;
  /// Throws InvalidArgument for an empty or malformed top.
  ProjectiveCover(const Algebra& alg, TopSpec top);

  const Algebra& algebra() const { return *alg_; }
  const Field& field() const { return alg_->field(); }
  const TopSpec& top() const { return top_; }
  int generators() const { return static_cast<int>(gen_vertex_.size()); }
  int generator_vertex(int r) const { return gen_vertex_[static_cast<std::size_t>(r)]; }
  std::size_t dim() const { return coords_.size(); }
  const DimVector& dims() const { return rep_.dims(); }
  const Coord& coord(std::size_t i) const { return coords_[i]; }
  /// -1 if b is not a basis path starting at e(r).
  long index(int r, std::size_t path) const;
  std::size_t length(std::size_t i) const { return alg_->basis_path(coords_[i].path).length(); }
  int end_vertex(std::size_t i) const;
  /// Coordinate of the parent path (last arrow dropped), or -1 for generators.
  long parent(std::size_t i) const;
  int last_arrow(std::size_t i) const;
  std::string label(std::size_t i) const;  // e.g. "b*a.z1"
  const Rep& rep() const { return rep_; }

  /// x·z_r as a vector of P.
  Vec element_at(const AlgebraElement& x, int r) const;
  Vec element_at(const Vec& basis_coords, int r) const;
  /// Renders a vector of P as "(…).z1 + (…).z2".
  std::string vector_string(const Vec& v) const;

 private:
  const Algebra* alg_ = nullptr;
  TopSpec top_;
  std::vector<int> gen_vertex_;
  std::vector<Coord> coords_;
  std::vector<std::vector<long>> lookup_;  // [r][basis] -> coordinate
  Rep rep_;
};

/// A submodule C ⊆ JP, with dim P/C cached.
struct SubmodulePoint {
  Subspace space;
  DimVector quotient_dims;
};

/// Submodule generated by the given vectors of P (not checked to lie in JP).
SubmodulePoint make_point(const ProjectiveCover& p, const std::vector<Vec>& generators);
SubmodulePoint point_from_subspace(const ProjectiveCover& p, const Subspace& s);
bool is_grass_point(const ProjectiveCover& p, const SubmodulePoint& c, const DimVector& d);
Rep coker_rep(const ProjectiveCover& p, const SubmodulePoint& c);
std::string point_string(const ProjectiveCover& p, const SubmodulePoint& c);

/// A set of P-coordinates closed under initial subpaths.
struct Skeleton {
  std::vector<std::size_t> coords;  // sorted
  SemisimpleSequence layering;
  friend bool operator==(const Skeleton& a, const Skeleton& b) { return a.coords == b.coords; }
};
/// Coordinates of σ in display order: by generator, then deglex.
std::vector<std::size_t> display_order(const ProjectiveCover& p, const Skeleton& s);
std::string skeleton_string(const ProjectiveCover& p, const Skeleton& s);
/// Skeleton on the given coordinates (sorted, layering recomputed; not validated).
Skeleton skeleton_from_coords(const ProjectiveCover& p, std::vector<std::size_t> coords);
/// True if closed under initial subpaths, contains every generator and its
/// layering is as recorded.
bool skeleton_valid(const ProjectiveCover& p, const Skeleton& s);

std::vector<Skeleton> enumerate_skeleta(const ProjectiveCover& p, const SemisimpleSequence& s);
/// All skeleta containing every generator with the given dimension vector.
std::vector<Skeleton> skeleta_with_dims(const ProjectiveCover& p, const DimVector& d);
std::vector<Skeleton> skeleta_with_total(const ProjectiveCover& p, int total_dim);
/// P = C ⊕ span(σ)?
bool complementary(const ProjectiveCover& p, const SubmodulePoint& c, const Skeleton& s);
std::vector<Skeleton> skeleta_of_point(const ProjectiveCover& p, const SubmodulePoint& c);

struct ChartVariable {
  int arrow;
  std::size_t source;  // b ∈ σ
  std::size_t target;  // b' ∈ σ
};

/// Grass(σ) as the zero set of `equations` in A^N, N = vars.size(). The
/// generic module has basis σ and arrow matrices `action`.
struct ChartPresentation {
  Skeleton sigma;
  std::vector<ChartVariable> vars;
  std::vector<MPoly> equations;
  std::vector<PolyMatrix> action;  // per arrow, |σ| x |σ|
  std::vector<std::string> var_names() const;
  std::string var_description(const ProjectiveCover& p, std::size_t k) const;
};

ChartPresentation chart_equations(const ProjectiveCover& p, const Skeleton& s);
SubmodulePoint coords_to_point(const ProjectiveCover& p, const ChartPresentation& pres, const Vec& values);
Vec point_to_coords(const ProjectiveCover& p, const ChartPresentation& pres, const SubmodulePoint& c);
bool satisfies(const ChartPresentation& pres, const Vec& values);

/// Satisfying points of a chart over F_q (parallel kernel / serial reference).
std::vector<Vec> chart_points(const ChartPresentation& pres, const Field& f, const SweepLimits& limits,
                              bool serial = false);
/// All points of Grass^T_d over F_q, deduplicated, in chart order.
std::vector<SubmodulePoint> grass_points(const ProjectiveCover& p, const DimVector& d, const SweepLimits& limits,
                                         bool serial = false);

/// Basis of End_Λ(P): z_r ↦ b·z_s for basis paths b from e(s) to e(r).
struct EndoBasisElement {
  int r, s;
  std::size_t path;
};
class EndoSpace {
 public:
  explicit EndoSpace(const ProjectiveCover& p);
  std::size_t size() const { return elems_.size(); }
  const EndoBasisElement& element(std::size_t k) const { return elems_[k]; }
  const Matrix& matrix(std::size_t k) const { return mats_[k]; }
  /// Indices of Hom(P, JP), degree-0 and torus elements.
  const std::vector<std::size_t>& unipotent() const { return unipotent_; }
  const std::vector<std::size_t>& graded() const { return graded_; }
  const std::vector<std::size_t>& torus() const { return torus_; }
  std::string describe(const ProjectiveCover& p, std::size_t k) const;

 private:
  std::vector<EndoBasisElement> elems_;
  std::vector<Matrix> mats_;
  std::vector<std::size_t> unipotent_, graded_, torus_;
};

/// Endomorphism with z_r ↦ images[r] (images[r] must lie in e(r)P).
Matrix endo_from_images(const ProjectiveCover& p, const std::vector<Vec>& images);
/// True if the endomorphism maps P into JP.
bool raises_length(const ProjectiveCover& p, const Matrix& f);
/// f(C); throws NotInvertible unless f is invertible on P/JP.
SubmodulePoint apply_auto(const ProjectiveCover& p, const Matrix& f, const SubmodulePoint& c);

struct OrbitDims {
  std::size_t aut = 0, unipotent = 0, graded = 0;
  std::size_t end_dim = 0, unipotent_dim = 0, graded_dim = 0;
  bool tangent_bound = false;  // finite field: numbers bound the orbit dimensions
};
OrbitDims orbit_dims(const ProjectiveCover& p, const EndoSpace& e, const SubmodulePoint& c);

/// First End basis element not preserving C, if any.
std::optional<std::size_t> endo_invariance_witness(const ProjectiveCover& p, const EndoSpace& e,
                                                   const SubmodulePoint& c);
bool endo_invariant(const ProjectiveCover& p, const EndoSpace& e, const SubmodulePoint& c);
bool is_homogeneous_point(const ProjectiveCover& p, const SubmodulePoint& c);

/// e_i JP lies in the socle of P (every arrow kills it).
bool top_only_in_socle(const ProjectiveCover& p, int vertex);

struct ModuliOptions {
  std::uint64_t seed = 1;
  SweepLimits sweep;
  int random_samples = 20;
};

struct ModuliVerdict {
  enum class Kind { Fine, GradedFine, NoCoarse, UnknownLeaningFine, Unknown };
  Kind kind = Kind::Unknown;
  std::string certificate;
  std::vector<std::string> notes;
  std::optional<SubmodulePoint> witness;
  std::optional<std::size_t> witness_endo;
  std::size_t points_checked = 0;
  bool exhaustive = false;
};
const char* verdict_name(ModuliVerdict::Kind k);
ModuliVerdict moduli_report(const ProjectiveCover& p, const DimVector& d, const ModuliOptions& opts = {});

/// One stratum of Grass^T_{|d| = n}: a dimension vector with its skeleta and charts.
struct Stratum {
  DimVector d;
  std::vector<Skeleton> skeleta;
  std::vector<std::size_t> chart_vars, chart_equations;
};
std::vector<Stratum> strata_by_total(const ProjectiveCover& p, int total_dim);

}  // namespace qmod
