// Quivers, paths and the finite-dimensional algebra KQ/I with a normal-form
// path basis.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qmod/field.hpp"
#include "qmod/matrix.hpp"

namespace qmod {

struct Arrow {
  std::string label;
  int from = 0;  // vertex indices, 0-based
  int to = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  /// -1 if unknown.
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& label) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path; `arrows` lists arrows in the order they are applied, so the path
/// written "b*a" is {a, b}. A length-0 path is the idempotent at `start`.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  int end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).to; }
  /// Composition: this path followed by `after` ("after * this").
  Path then(const Path& after) const;
  Path then(int arrow) const;
  /// Drops the last-applied arrow; for length-0 paths returns *this.
  Path parent() const;
  std::string to_string(const Quiver& q) const;

  friend bool operator==(const Path& a, const Path& b) { return a.start == b.start && a.arrows == b.arrows; }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
};

/// Deglex: shorter first, then arrows compared lexicographically in
/// application order by declaration index, then start vertex.
bool operator<(const Path& a, const Path& b);

/// Formal combination of paths; zero terms are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Field& f) : field_(f) {}
  static AlgebraElement path(const Field& f, const Path& p, const Scalar& c);

  const Field& field() const { return field_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& p, const Scalar& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& s) const;

  /// True if all terms share start and end vertices.
  bool is_parallel(const Quiver& q) const;
  std::size_t min_length() const;
  std::size_t max_length() const;
  std::string to_string(const Quiver& q) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  Field field_;
  std::map<Path, Scalar> terms_;
};

/// Sparse coordinate vector over the algebra basis.
using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<AlgebraElement>& relations() const { return relations_; }
  std::size_t max_len() const { return max_len_; }
  /// Smallest ℓ with every path of length ℓ in I.
  std::size_t vanishing_length() const { return witness_; }
  std::size_t loewy_length() const { return loewy_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_[i]; }
  /// Index of p in the basis, or -1.
  long basis_index(const Path& p) const;

  /// Normal form of a single path, as coordinates over the basis.
  Sparse reduce_path(const Path& p) const;
  Vec reduce(const AlgebraElement& x) const;
  AlgebraElement normal_form(const AlgebraElement& x) const;
  AlgebraElement element(const Vec& coords) const;
  /// arrow * basis path, as basis coordinates (cached).
  const Sparse& left_arrow(int arrow, std::size_t basis_index) const {
    return left_[static_cast<std::size_t>(arrow)][basis_index];
  }
  /// basis path * arrow, i.e. the arrow applied first.
  const Sparse& right_arrow(int arrow, std::size_t basis_index) const {
    return right_[static_cast<std::size_t>(arrow)][basis_index];
  }
  Vec multiply(const Vec& a, const Vec& b) const;

  /// Basis paths starting at vertex i, in basis order.
  const std::vector<std::size_t>& paths_from(int i) const { return from_[static_cast<std::size_t>(i)]; }

  /// Per-layer dimension vectors of Λe_i.
  std::vector<std::vector<int>> projective_layer_dims(int i) const;
  std::vector<int> projective_dim_vector(int i) const;
  bool is_nakayama() const;
  bool is_homogeneous_ideal() const;
  bool is_monomial() const;

 private:
  friend Algebra build_algebra(const Quiver&, const std::vector<AlgebraElement>&, const Field&, std::size_t);
  Quiver quiver_;
  Field field_;
  std::vector<AlgebraElement> relations_;
  std::size_t max_len_ = 0, witness_ = 0, loewy_ = 0;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::map<Path, Sparse> reductions_;  // non-basis surviving paths of length < witness
  std::vector<std::vector<int>> monomials_;  // as arrow words
  std::vector<std::vector<Sparse>> left_, right_;
  std::vector<std::vector<std::size_t>> from_;
};

/// Builds KQ/I. Throws BadRelation for relations outside J^2 or non-parallel
/// ones, NotAdmissible when no length ℓ ≤ max_len has all its paths in I.
Algebra build_algebra(const Quiver& q, const std::vector<AlgebraElement>& relations, const Field& f,
                      std::size_t max_len);

/// All paths of Q of the given length, in deglex order.
std::vector<Path> all_paths_of_length(const Quiver& q, std::size_t length);

}  // namespace qmod
