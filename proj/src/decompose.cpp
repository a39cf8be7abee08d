// Splitting modules into direct summands via endomorphisms (Fitting's lemma).
#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "qmod/poly.hpp"
#include "qmod/rep.hpp"

namespace qmod {

const char* decomposition_kind_name(Decomposition::Kind k) {
  switch (k) {
    case Decomposition::Kind::Locals: return "locals";
    case Decomposition::Kind::NotSumOfLocals: return "not-sum-of-locals";
    default: return "unknown";
  }
}

namespace {

constexpr std::uint64_t kExhaustiveEnd = 1u << 14;

Matrix power(Matrix m, std::size_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  while (e) {
    if (e & 1) r = r * m;
    m = m * m;
    e >>= 1;
  }
  return r;
}

// Fitting decomposition of g: (ker g^n, im g^n).
std::pair<Subspace, Subspace> fitting(const Matrix& g) {
  Matrix gn = power(g, g.rows());
  Subspace ker = gn.rows() ? Subspace::row_space(kernel(gn)) : Subspace(g.field(), 0);
  if (ker.ambient() != g.rows()) ker = Subspace(g.field(), g.rows());
  Subspace im = Subspace::row_space(gn.transpose());
  return {ker, im};
}

// Action of an endomorphism (total matrix) on N/JN, in the non-pivot
// coordinates of the radical.
Matrix top_action(const Subspace& rad, const Matrix& f) {
  const auto np = rad.non_pivots();
  Matrix t(f.field(), np.size(), np.size());
  for (std::size_t j = 0; j < np.size(); ++j) {
    Vec w = rad.reduce(f.col(np[j]));
    for (std::size_t i = 0; i < np.size(); ++i) t(i, j) = w[np[i]];
  }
  return t;
}

// Best rational approximation by continued fractions.
std::pair<long long, long long> rationalize(double x, long long max_den) {
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::fabs(a) > 1e12) break;
    const auto ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::fabs(r - a) < 1e-12) break;
    r = 1.0 / (r - a);
  }
  return {h1, k1};
}

// Roots of p in the field (exact; rational roots located numerically first).
std::vector<Scalar> field_roots(const UPoly& p) {
  const Field& f = p.field();
  std::vector<Scalar> roots;
  if (p.degree() < 1) return roots;
  if (f.is_finite()) {
    if (f.order() > 65536) return roots;
    for (std::uint64_t i = 0; i < f.order(); ++i)
      if (p.eval(f.element(i)).is_zero()) roots.push_back(f.element(i));
    return roots;
  }
  UPoly sq = p.divmod(gcd(p, p.derivative())).first.monic();
  const int n = sq.degree();
  if (n < 1) return roots;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -sq.coeff(i).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (int i = 0; i < n; ++i) {
    const auto z = es.eigenvalues()[i];
    if (std::fabs(z.imag()) > 1e-6 * (1.0 + std::fabs(z.real()))) continue;
    auto [num, den] = rationalize(z.real(), 1000000);
    if (den == 0) continue;
    Scalar cand = f.from_ratio(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    if (sq.eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
  }
  return roots;
}

struct Piece {
  Rep rep;
  enum class State { Local, Indecomposable, Unresolved } state;
  std::string note;
};

bool is_nilpotent(const Matrix& m) { return power(m, m.rows()).is_zero(); }

// Tries to split n along an endomorphism; on success returns the two summands.
std::optional<std::pair<Rep, Rep>> try_split(const Rep& n, const Matrix& f, const Subspace& rad) {
  const Field& fld = n.field();
  std::vector<Scalar> lambdas = field_roots(characteristic_polynomial(top_action(rad, f)));
  for (const Scalar& l : lambdas) {
    Matrix g = f - Matrix::identity(fld, n.total()).scaled(l);
    auto [ker, im] = fitting(g);
    if (ker.dim() == 0 || ker.dim() == n.total()) continue;
    return std::make_pair(sub_rep(n, ker), sub_rep(n, im));
  }
  return std::nullopt;
}

// End/rad End is one-dimensional: certifies indecomposability. Uses the
// image of End in End(top); its radical is read off the trace form in
// characteristic 0.
bool trace_form_local(const Rep& n, const std::vector<VertexMaps>& end, const Subspace& rad) {
  if (n.field().is_finite()) return false;
  std::vector<Matrix> images;
  std::vector<Vec> flat;
  for (const auto& e : end) {
    Matrix t = top_action(rad, total_matrix(n, n, e));
    Vec v;
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) v.push_back(t(i, j));
    flat.push_back(v);
    images.push_back(t);
  }
  if (flat.empty() || flat[0].empty()) return false;
  Subspace span = Subspace::span(n.field(), flat[0].size(), flat);
  const std::size_t k = span.dim();
  const std::size_t side = images[0].rows();
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < k; ++r) {
    Matrix b(n.field(), side, side);
    Vec v = span.vector(r);
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) b(i, j) = v[i * side + j];
    basis.push_back(b);
  }
  Matrix gram(n.field(), k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Matrix p = basis[a] * basis[b];
      Scalar tr = n.field().zero();
      for (std::size_t i = 0; i < side; ++i) tr += p(i, i);
      gram(a, b) = tr;
    }
  return k - rank(gram) == 1;
}

void split_recursive(const Rep& n, std::mt19937_64& rng, std::vector<Piece>& out, int depth) {
  const DimVector top = top_dims(n);
  if (total(top) == 1) {
    out.push_back({n, Piece::State::Local, "simple top"});
    return;
  }
  const Field& f = n.field();
  const Subspace rad = radical(n);
  const auto end = hom_basis(n, n);
  auto recurse = [&](std::pair<Rep, Rep> parts) {
    split_recursive(parts.first, rng, out, depth + 1);
    split_recursive(parts.second, rng, out, depth + 1);
  };
  if (depth < 64) {
    for (const auto& e : end)
      if (auto parts = try_split(n, total_matrix(n, n, e), rad)) return recurse(std::move(*parts));
    for (int t = 0; t < 16; ++t) {
      Vec c(end.size());
      for (auto& x : c) x = f.random(rng, 7);
      Matrix m(f, n.total(), n.total());
      for (std::size_t k = 0; k < end.size(); ++k) m = m + total_matrix(n, n, end[k]).scaled(c[k]);
      if (auto parts = try_split(n, m, rad)) return recurse(std::move(*parts));
    }
  }
  const std::size_t into_rad = hom_dim(n, sub_rep(n, rad));
  if (end.size() - into_rad == 1) {
    out.push_back({n, Piece::State::Indecomposable, "dim End - dim Hom(M,JM) = 1"});
    return;
  }
  if (trace_form_local(n, end, rad)) {
    out.push_back({n, Piece::State::Indecomposable, "End modulo its radical is the ground field"});
    return;
  }
  if (f.is_finite() && power_saturating(f.order(), end.size()) <= kExhaustiveEnd) {
    const std::uint64_t count = power_saturating(f.order(), end.size());
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      Vec c = vector_from_index(f, end.size(), idx);
      Matrix m(f, n.total(), n.total());
      for (std::size_t k = 0; k < end.size(); ++k) m = m + total_matrix(n, n, end[k]).scaled(c[k]);
      if (is_nilpotent(m) || !determinant(m).is_zero()) continue;
      auto [ker, im] = fitting(m);
      return recurse({sub_rep(n, ker), sub_rep(n, im)});
    }
    out.push_back({n, Piece::State::Indecomposable, "every endomorphism is nilpotent or invertible"});
    return;
  }
  out.push_back({n, Piece::State::Unresolved, "no splitting endomorphism found"});
}

}  // namespace

Decomposition decompose_local(const Rep& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Piece> pieces;
  if (m.total() > 0) split_recursive(m, rng, pieces, 0);
  Decomposition d;
  bool unresolved = false, nonlocal = false;
  for (auto& p : pieces) {
    unresolved |= p.state == Piece::State::Unresolved;
    nonlocal |= p.state != Piece::State::Local;
    d.pieces.push_back(p.rep);
    d.notes.push_back(p.note);
  }
  d.kind = unresolved ? Decomposition::Kind::Unknown
                      : (nonlocal ? Decomposition::Kind::NotSumOfLocals : Decomposition::Kind::Locals);
  return d;
}

}  // namespace qmod
