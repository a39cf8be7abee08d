#include "qmod/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "qmod/error.hpp"

namespace qmod {

UPoly::UPoly(const Field& f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v.back() = c;
  return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(-field_.one()); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(field_);
  std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> v = coeffs_;
  for (auto& c : v) c *= s;
  return UPoly(field_, std::move(v));
}

UPoly UPoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Scalar> v(static_cast<std::size_t>(k), field_.zero());
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(field_, std::move(v));
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> v;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * field_.from_int(static_cast<long long>(k)));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  UPoly q(field_), r = *this;
  const Scalar inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    UPoly t = UPoly::monomial(r.leading() * inv, r.degree() - d.degree());
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

UPoly characteristic_polynomial(const Matrix& a) {
  // Berkowitz: division free, valid in every characteristic.
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial of non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<Scalar> v{f.one()};  // highest degree first
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Scalar> c{f.one(), -a(r, r)};
    if (r > 0) {
      Vec s(r, f.zero());
      for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
      Matrix ar = a.block(0, 0, r, r);
      for (std::size_t k = 0; k < r; ++k) {
        Scalar dot = f.zero();
        for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * s[i];
        c.push_back(-dot);
        s = ar.apply(s);
      }
    }
    std::vector<Scalar> next(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += c[i - j] * v[j];
    v = std::move(next);
  }
  std::reverse(v.begin(), v.end());
  return UPoly(f, std::move(v));
}

MPoly MPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
  MPoly p(f, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const Field& f, std::size_t nvars, std::size_t index) {
  MPoly p(f, nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, f.one());
  return p;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first)
    if (e) return false;
  return true;
}

std::size_t MPoly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::size_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) {
    field_ = o.field_;
    nvars_ = o.nvars_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(-o.field_.one()); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(field_, std::max(nvars_, o.nvars_));
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(r.nvars_, 0);
      for (std::size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
      for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

MPoly MPoly::scaled(const Scalar& s) const {
  MPoly r(field_, nvars_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Scalar MPoly::eval(const Vec& point) const {
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= point.at(i).pow(m[i]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.rbegin()->second.inverse());
}

bool operator<(const MPoly& a, const MPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return less(ia->second, ib->second);
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

PolyMatrix::PolyMatrix(const Field& f, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, MPoly(f, nvars)) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix product");
  PolyMatrix r(field_, nvars_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const MPoly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

PolyMatrix PolyMatrix::scaled(const Scalar& s) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p.scaled(s);
  return r;
}

Matrix PolyMatrix::eval(const Vec& point) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
  return m;
}

std::optional<MPoly> symbolic_determinant(const PolyMatrix& m, std::size_t max_dim, std::size_t max_terms) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  if (n > max_dim) return std::nullopt;
  const Field f = n ? m(0, 0).field() : Field::rationals();
  const std::size_t nvars = n ? m(0, 0).nvars() : 0;
  if (n == 0) return MPoly::constant(f, nvars, f.one());
  // minors[S] = det of rows 0..|S|-1 against the column set S.
  std::unordered_map<std::uint32_t, MPoly> minors;
  minors.emplace(0u, MPoly::constant(f, nvars, f.one()));
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, MPoly> next;
    for (const auto& [set, minor] : minors) {
      if (minor.is_zero()) continue;
      int sign_count = 0;
      for (std::size_t col = n; col-- > 0;) {
        if (set & (1u << col)) {
          ++sign_count;
          continue;
        }
        const MPoly& entry = m(row, col);
        if (entry.is_zero()) continue;
        // Laplace sign: number of chosen columns to the right of col.
        MPoly term = minor * entry;
        if (sign_count % 2) term = term.scaled(-f.one());
        auto& slot = next[set | (1u << col)];
        slot += term;
        if (slot.terms().size() > max_terms) return std::nullopt;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((n == 32) ? 0xffffffffu : ((1u << n) - 1));
  if (it == minors.end()) return MPoly(f, nvars);
  return it->second;
}

}  // namespace qmod
