// Dense exact matrices, row reduction, kernels and subspaces.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmod/field.hpp"

namespace qmod {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void append_row(const Vec& v);

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix transpose() const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;  // this * v
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form with pivots chosen left to right.
struct Echelon {
  Matrix rref;                      // only the nonzero rows
  std::vector<std::size_t> pivots;  // pivot column of each row
};
Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix kernel(const Matrix& m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// A linear subspace of K^n held as its reduced row echelon basis. Two
/// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambient);  // the zero subspace
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  /// Subtracts basis multiples so v vanishes on pivot columns.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Vec coordinates(const Vec& v) const;
  /// Columns that are not pivots; their unit vectors span a complement.
  std::vector<std::size_t> non_pivots() const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image under a linear map (m is ambient' x ambient).
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  /// Canonical text key (used for hashing and deterministic ordering).
  std::string key() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qmod
