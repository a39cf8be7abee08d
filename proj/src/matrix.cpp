#include "qmod/matrix.hpp"

#include <cassert>

#include "qmod/error.hpp"

namespace qmod {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "append_row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Echelon row_echelon(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, cols), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  Echelon e = row_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(m.field(), 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.field(), n, free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    out.append_row(v);
  }
  if (out.rows() == 0) out = Matrix(m.field(), 0, n);
  return out;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return m.field().zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Echelon e = row_echelon(hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Echelon e = row_echelon(aug);
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref(r, m.cols());
  }
  return x;
}

Subspace::Subspace(const Field& f, std::size_t ambient) : ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(f, ambient);
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.field(), m.cols());
  if (m.rows() == 0) return s;
  Echelon e = row_echelon(m);
  s.basis_ = std::move(e.rref);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  return row_space(Matrix::identity(f, ambient));
}

Vec Subspace::reduce(const Vec& v) const {
  Vec out = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(r, j).is_zero()) out[j] -= c * basis_(r, j);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.dim() == 0) return *this;
  if (dim() == 0) return o;
  return row_space(vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // x = a B = b B'  <=>  (a, -b) in ker [B; -B']^T
  if (dim() == 0 || o.dim() == 0) return Subspace(field(), ambient_);
  Matrix stacked = vstack(basis_, o.basis_.scaled(-field().one()));
  Matrix k = kernel(stacked.transpose());
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vec x = zero_vec(field(), ambient_);
    for (std::size_t r = 0; r < dim(); ++r) axpy(x, k(i, r), basis_.row(r));
    vecs.push_back(std::move(x));
  }
  return span(field(), ambient_, vecs);
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < dim(); ++i) vecs.push_back(m.apply(vector(i)));
  return span(field(), m.rows(), vecs);
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient_) + ":";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
      k += basis_(i, j).to_string();
      k += ',';
    }
    k += ';';
  }
  return k;
}

}  // namespace qmod
