// Univariate and sparse multivariate polynomials over a Field.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/field.hpp"
#include "qmod/matrix.hpp"

namespace qmod {

/// Dense univariate polynomial; coeffs[k] multiplies t^k. Trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Field& f) : field_(f) {}
  UPoly(const Field& f, std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, int degree);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int k) const;
  Scalar leading() const { return coeff(degree()); }
  Scalar eval(const Scalar& x) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Scalar& s) const;
  UPoly shifted(int k) const;  // times t^k
  UPoly derivative() const;
  UPoly monic() const;
  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);

/// Characteristic polynomial det(t I - m) (Berkowitz, division free).
UPoly characteristic_polynomial(const Matrix& m);

/// Exponent vector of a monomial; indices are variable numbers.
using Monomial = std::vector<std::uint16_t>;

/// Sparse polynomial in a fixed number of variables.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static MPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
  static MPoly variable(const Field& f, std::size_t nvars, std::size_t index);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  std::size_t total_degree() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly scaled(const Scalar& s) const;
  Scalar eval(const Vec& point) const;
  /// Divides by the leading coefficient (largest monomial); zero stays zero.
  MPoly monic() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MPoly& a, const MPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Field field_;
  std::size_t nvars_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Square matrix with polynomial entries (used for generic chart actions and
/// symbolic determinants).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const Field& f, std::size_t nvars, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix scaled(const Scalar& s) const;
  Matrix eval(const Vec& point) const;

 private:
  Field field_;
  std::size_t nvars_ = 0, rows_ = 0, cols_ = 0;
  std::vector<MPoly> data_;
};

/// Symbolic determinant by expansion over column subsets. Returns nullopt if
/// the matrix exceeds `max_dim` or an intermediate exceeds `max_terms`.
std::optional<MPoly> symbolic_determinant(const PolyMatrix& m, std::size_t max_dim = 12,
                                          std::size_t max_terms = 200000);

}  // namespace qmod
