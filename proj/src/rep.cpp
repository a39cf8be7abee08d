#include "qmod/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qmod/poly.hpp"

namespace qmod {

int total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

std::string dim_string(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

Rep::Rep(const Algebra& alg, DimVector d) : alg_(&alg), dims_(std::move(d)) {
  const Quiver& q = alg.quiver();
  if (dims_.size() != static_cast<std::size_t>(q.vertex_count()))
    throw Error(ErrorKind::ShapeMismatch, "dimension vector has the wrong length");
  for (int x : dims_) {
    if (x < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(x));
  }
  for (const auto& a : q.arrows()) maps_.emplace_back(field(), dim(a.to), dim(a.from));
  for (std::size_t a = 0; a < maps_.size(); ++a) total_.emplace_back(field(), total(), total());
}

Rep::Rep(const Algebra& alg, DimVector d, std::vector<Matrix> maps) : Rep(alg, std::move(d)) {
  const Quiver& q = alg.quiver();
  if (maps.size() != maps_.size()) throw Error(ErrorKind::ShapeMismatch, "one matrix per arrow expected");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = maps[static_cast<std::size_t>(a)];
    const Arrow& ar = q.arrow(a);
    if (x.rows() != static_cast<std::size_t>(dim(ar.to)) || x.cols() != static_cast<std::size_t>(dim(ar.from)))
      throw Error(ErrorKind::ShapeMismatch, "matrix for arrow '" + ar.label + "' must be " +
                                                std::to_string(dim(ar.to)) + "x" + std::to_string(dim(ar.from)));
    if (x.rows() && x.cols() && x.field() != field())
      throw Error(ErrorKind::ShapeMismatch, "matrix for arrow '" + ar.label + "' is over the wrong field");
    maps_[static_cast<std::size_t>(a)] = x.rows() && x.cols() ? x : Matrix(field(), x.rows(), x.cols());
    total_[static_cast<std::size_t>(a)].set_block(offset(ar.to), offset(ar.from), maps_[static_cast<std::size_t>(a)]);
  }
}

int Rep::vertex_of(std::size_t coord) const {
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    if (coord < offsets_[v + 1]) return static_cast<int>(v);
  throw Error(ErrorKind::ShapeMismatch, "coordinate out of range");
}

Matrix Rep::path_action(const Path& p) const {
  Matrix e(field(), total(), total());
  for (std::size_t i = offset(p.start); i < offset(p.start) + static_cast<std::size_t>(dim(p.start)); ++i)
    e(i, i) = field().one();
  for (int a : p.arrows) e = total_map(a) * e;
  return e;
}

Matrix Rep::element_action(const Vec& coords) const {
  Matrix out(field(), total(), total());
  for (std::size_t b = 0; b < coords.size(); ++b)
    if (!coords[b].is_zero()) out = out + path_action(alg_->basis_path(b)).scaled(coords[b]);
  return out;
}

bool rep_validate(const Rep& m) {
  for (const auto& r : m.algebra().relations()) {
    Matrix sum(m.field(), m.total(), m.total());
    for (const auto& [p, c] : r.terms()) sum = sum + m.path_action(p).scaled(c);
    if (!sum.is_zero()) return false;
  }
  return true;
}

Rep base_change(const Rep& m, const GroupElement& g) {
  const Quiver& q = m.algebra().quiver();
  if (g.size() != m.dims().size()) throw Error(ErrorKind::ShapeMismatch, "one block per vertex expected");
  std::vector<Matrix> inv;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Matrix& b = g[static_cast<std::size_t>(v)];
    if (b.rows() != static_cast<std::size_t>(m.dim(v)) || b.cols() != b.rows())
      throw Error(ErrorKind::ShapeMismatch, "group element block has the wrong size");
    if (b.rows() == 0) {
      inv.emplace_back(m.field(), 0, 0);
      continue;
    }
    auto i = inverse(b);
    if (!i) throw Error(ErrorKind::NotInvertible, "group element block is singular");
    inv.push_back(*i);
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& x = m.map(a);
    if (x.rows() == 0 || x.cols() == 0)
      maps.push_back(x);
    else
      maps.push_back(g[static_cast<std::size_t>(ar.to)] * x * inv[static_cast<std::size_t>(ar.from)]);
  }
  return Rep(m.algebra(), m.dims(), maps);
}

Rep simple_rep(const Algebra& alg, int vertex) {
  DimVector d(static_cast<std::size_t>(alg.quiver().vertex_count()), 0);
  d[static_cast<std::size_t>(vertex)] = 1;
  return Rep(alg, d);
}

Rep projective_rep(const Algebra& alg, int vertex) {
  const Quiver& q = alg.quiver();
  DimVector d(static_cast<std::size_t>(q.vertex_count()), 0);
  std::map<std::size_t, std::size_t> local;  // basis index -> index within its end vertex
  for (std::size_t b : alg.paths_from(vertex)) local[b] = static_cast<std::size_t>(d[static_cast<std::size_t>(alg.basis_path(b).end(q))]++);
  Rep shape(alg, d);
  std::vector<Matrix> maps = shape.maps();
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t b : alg.paths_from(vertex)) {
      if (alg.basis_path(b).end(q) != q.arrow(a).from) continue;
      for (const auto& [t, c] : alg.left_arrow(a, b)) maps[static_cast<std::size_t>(a)](local.at(t), local.at(b)) = c;
    }
  return Rep(alg, d, maps);
}

Rep direct_sum(const Rep& a, const Rep& b) {
  const Quiver& q = a.algebra().quiver();
  DimVector d = a.dims();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.dims()[i];
  std::vector<Matrix> maps;
  for (int x = 0; x < q.arrow_count(); ++x) {
    const Arrow& ar = q.arrow(x);
    Matrix m(a.field(), static_cast<std::size_t>(d[static_cast<std::size_t>(ar.to)]),
             static_cast<std::size_t>(d[static_cast<std::size_t>(ar.from)]));
    m.set_block(0, 0, a.map(x));
    m.set_block(static_cast<std::size_t>(a.dim(ar.to)), static_cast<std::size_t>(a.dim(ar.from)), b.map(x));
    maps.push_back(m);
  }
  return Rep(a.algebra(), d, maps);
}

GroupElement random_group_element(const Field& f, const DimVector& d, std::mt19937_64& rng) {
  GroupElement g;
  for (int n : d) {
    const auto sz = static_cast<std::size_t>(n);
    for (;;) {
      Matrix m(f, sz, sz);
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) m(i, j) = f.random(rng, 5);
      if (sz == 0 || !determinant(m).is_zero()) {
        g.push_back(m);
        break;
      }
    }
  }
  return g;
}

DimVector graded_dims(const Rep& m, const Subspace& s) {
  DimVector d(m.dims().size(), 0);
  for (std::size_t p : s.pivots()) ++d[static_cast<std::size_t>(m.vertex_of(p))];
  return d;
}

bool is_graded(const Rep& m, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const int v = m.vertex_of(s.pivots()[r]);
    const std::size_t lo = m.offset(v), hi = lo + static_cast<std::size_t>(m.dim(v));
    for (std::size_t c = 0; c < s.ambient(); ++c)
      if ((c < lo || c >= hi) && !s.basis()(r, c).is_zero()) return false;
  }
  return true;
}

bool is_submodule(const Rep& m, const Subspace& s) {
  if (!is_graded(m, s)) return false;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec v = s.vector(r);
    for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a)
      if (!s.contains(m.act(a, v))) return false;
  }
  return true;
}

Subspace generated_submodule(const Rep& m, const std::vector<Vec>& vectors) {
  // Split into vertex components first: submodules are e_i-stable.
  std::vector<Vec> queue;
  for (const Vec& v : vectors)
    for (int i = 0; i < static_cast<int>(m.dims().size()); ++i) {
      Vec c = zero_vec(m.field(), m.total());
      bool nz = false;
      for (std::size_t k = m.offset(i); k < m.offset(i) + static_cast<std::size_t>(m.dim(i)); ++k)
        if (!v[k].is_zero()) {
          c[k] = v[k];
          nz = true;
        }
      if (nz) queue.push_back(std::move(c));
    }
  Subspace s(m.field(), m.total());
  std::vector<Vec> kept;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vec r = s.reduce(queue[head]);
    if (is_zero(r)) continue;
    kept.push_back(queue[head]);
    s = Subspace::span(m.field(), m.total(), kept);
    for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a) {
      Vec w = m.act(a, queue[head]);
      if (!is_zero(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

Subspace radical(const Rep& m) {
  std::vector<Vec> images;
  for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a)
    for (std::size_t j = 0; j < m.total(); ++j) {
      Vec c = m.total_map(a).col(j);
      if (!is_zero(c)) images.push_back(std::move(c));
    }
  return Subspace::span(m.field(), m.total(), images);
}

Rep sub_rep(const Rep& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw Error(ErrorKind::NotSubmodule, "subspace is not a submodule");
  const Quiver& q = m.algebra().quiver();
  DimVector d = graded_dims(m, s);
  std::vector<std::size_t> first(d.size(), 0), local(s.dim());
  {
    std::vector<int> seen(d.size(), 0);
    for (std::size_t r = 0; r < s.dim(); ++r) local[r] = static_cast<std::size_t>(seen[static_cast<std::size_t>(m.vertex_of(s.pivots()[r]))]++);
  }
  Rep shape(m.algebra(), d);
  std::vector<Matrix> maps = shape.maps();
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t r = 0; r < s.dim(); ++r) {
      if (m.vertex_of(s.pivots()[r]) != q.arrow(a).from) continue;
      Vec c = s.coordinates(m.act(a, s.vector(r)));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) maps[static_cast<std::size_t>(a)](local[k], local[r]) = c[k];
    }
  return Rep(m.algebra(), d, maps);
}

Rep quotient_rep(const Rep& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw Error(ErrorKind::NotSubmodule, "subspace is not a submodule");
  const Quiver& q = m.algebra().quiver();
  DimVector d = m.dims();
  DimVector sd = graded_dims(m, s);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= sd[i];
  const auto np = s.non_pivots();
  std::vector<long> local(m.total(), -1);
  {
    std::vector<int> seen(d.size(), 0);
    for (std::size_t j : np) local[j] = seen[static_cast<std::size_t>(m.vertex_of(j))]++;
  }
  Rep shape(m.algebra(), d);
  std::vector<Matrix> maps = shape.maps();
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t j : np) {
      if (m.vertex_of(j) != q.arrow(a).from) continue;
      Vec w = s.reduce(m.total_map(a).col(j));
      for (std::size_t k = 0; k < w.size(); ++k)
        if (!w[k].is_zero())
          maps[static_cast<std::size_t>(a)](static_cast<std::size_t>(local[k]), static_cast<std::size_t>(local[j])) = w[k];
    }
  return Rep(m.algebra(), d, maps);
}

SemisimpleSequence radical_layering(const Rep& m) {
  SemisimpleSequence layers;
  Subspace cur = Subspace::whole(m.field(), m.total());
  while (cur.dim() > 0) {
    std::vector<Vec> images;
    for (std::size_t r = 0; r < cur.dim(); ++r)
      for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a) {
        Vec w = m.act(a, cur.vector(r));
        if (!is_zero(w)) images.push_back(std::move(w));
      }
    Subspace next = Subspace::span(m.field(), m.total(), images);
    DimVector hi = graded_dims(m, cur), lo = graded_dims(m, next);
    for (std::size_t i = 0; i < hi.size(); ++i) hi[i] -= lo[i];
    layers.push_back(hi);
    cur = next;
  }
  return layers;
}

DimVector top_dims(const Rep& m) {
  DimVector d = m.dims(), r = graded_dims(m, radical(m));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= r[i];
  return d;
}

std::string layering_string(const Quiver& q, const SemisimpleSequence& s) {
  std::string out = "(";
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (l) out += ", ";
    std::string layer;
    for (std::size_t i = 0; i < s[l].size(); ++i) {
      if (!s[l][i]) continue;
      if (!layer.empty()) layer += "+";
      layer += "S" + q.vertex_labels()[i];
      if (s[l][i] > 1) layer += "^" + std::to_string(s[l][i]);
    }
    out += layer.empty() ? "0" : layer;
  }
  return out + ")";
}

std::vector<VertexMaps> hom_basis(const Rep& m, const Rep& n) {
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  const std::size_t nv = m.dims().size();
  std::vector<std::size_t> base(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i)
    base[i + 1] = base[i] + static_cast<std::size_t>(n.dims()[i]) * static_cast<std::size_t>(m.dims()[i]);
  const std::size_t unknowns = base[nv];
  auto var = [&](int v, std::size_t r, std::size_t c) {
    return base[static_cast<std::size_t>(v)] + r * static_cast<std::size_t>(m.dim(v)) + c;
  };
  Matrix eqs(f, 0, unknowns);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& xm = m.map(a);
    const Matrix& xn = n.map(a);
    // (f_to X^M - X^N f_from)(r, c) = 0
    for (std::size_t r = 0; r < static_cast<std::size_t>(n.dim(ar.to)); ++r)
      for (std::size_t c = 0; c < static_cast<std::size_t>(m.dim(ar.from)); ++c) {
        Vec row = zero_vec(f, unknowns);
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.dim(ar.to)); ++k)
          if (!xm(k, c).is_zero()) row[var(ar.to, r, k)] += xm(k, c);
        for (std::size_t k = 0; k < static_cast<std::size_t>(n.dim(ar.from)); ++k)
          if (!xn(r, k).is_zero()) row[var(ar.from, k, c)] -= xn(r, k);
        if (!is_zero(row)) eqs.append_row(row);
      }
  }
  Matrix ker = eqs.rows() ? kernel(eqs) : Matrix::identity(f, unknowns);
  std::vector<VertexMaps> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    VertexMaps fm;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(f, static_cast<std::size_t>(n.dims()[v]), static_cast<std::size_t>(m.dims()[v]));
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = ker(k, var(static_cast<int>(v), r, c));
      fm.push_back(b);
    }
    out.push_back(fm);
  }
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) { return hom_basis(m, n).size(); }

Matrix total_matrix(const Rep& m, const Rep& n, const VertexMaps& f) {
  Matrix t(m.field(), n.total(), m.total());
  for (std::size_t v = 0; v < f.size(); ++v) t.set_block(n.offset(static_cast<int>(v)), m.offset(static_cast<int>(v)), f[v]);
  return t;
}

namespace {

VertexMaps combine(const std::vector<VertexMaps>& basis, const Vec& coeffs, const Rep& m, const Rep& n) {
  VertexMaps out;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    out.emplace_back(m.field(), static_cast<std::size_t>(n.dims()[v]), static_cast<std::size_t>(m.dims()[v]));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + basis[k][v].scaled(coeffs[k]);
  }
  return out;
}

bool blocks_invertible(const VertexMaps& f) {
  for (const auto& b : f)
    if (b.rows() && determinant(b).is_zero()) return false;
  return true;
}

}  // namespace

Tri is_isomorphic(const Rep& m, const Rep& n, const IsoOptions& opts) {
  if (m.dims() != n.dims()) return Tri::False;
  if (radical_layering(m) != radical_layering(n)) return Tri::False;
  const auto basis = hom_basis(m, n);
  const std::size_t h = basis.size();
  if (h != hom_dim(n, m) || h != hom_dim(m, m) || h != hom_dim(n, n)) return Tri::False;
  if (m.total() == 0) return Tri::True;
  if (h == 0) return Tri::False;
  const Field& f = m.field();
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.random_attempts; ++t) {
    Vec c(h);
    for (auto& x : c) x = f.random(rng, 9);
    if (blocks_invertible(combine(basis, c, m, n))) return Tri::True;
  }
  if (f.is_finite() && power_saturating(f.order(), h) <= opts.max_exhaustive) {
    const std::uint64_t count = power_saturating(f.order(), h);
    for (std::uint64_t idx = 1; idx < count; ++idx)
      if (blocks_invertible(combine(basis, vector_from_index(f, h, idx), m, n))) return Tri::True;
    return Tri::False;
  }
  // Generic element: an invertible one exists over the closure iff every
  // block determinant is a nonzero polynomial, and isomorphism descends.
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const std::size_t sz = static_cast<std::size_t>(m.dims()[v]);
    if (sz == 0) continue;
    PolyMatrix g(f, h, sz, sz);
    for (std::size_t k = 0; k < h; ++k) {
      MPoly t = MPoly::variable(f, h, k);
      for (std::size_t r = 0; r < sz; ++r)
        for (std::size_t c = 0; c < sz; ++c)
          if (!basis[k][v](r, c).is_zero()) g(r, c) += t.scaled(basis[k][v](r, c));
    }
    auto det = symbolic_determinant(g, opts.max_symbolic_dim);
    if (!det) return Tri::Unknown;
    if (det->is_zero()) return Tri::False;
  }
  return Tri::True;
}

std::vector<Subspace> enumerate_submodules(const Rep& m, const SweepLimits& limits, bool serial) {
  const Field& f = m.field();
  if (!f.is_finite()) throw Error(ErrorKind::FieldNotFinite, "submodule enumeration needs a finite field");
  std::uint64_t points = 0;
  for (int d : m.dims()) {
    const std::uint64_t p = power_saturating(f.order(), static_cast<std::size_t>(d));
    points = p > limits.max_points ? limits.max_points + 1 : points + p;
    if (points > limits.max_points)
      throw Error(ErrorKind::SearchTooLarge, "too many generator vectors for dimension vector " + dim_string(m.dims()));
  }
  // Cyclic submodules generated by vertex-homogeneous vectors.
  std::vector<Vec> gens;
  for (int v = 0; v < static_cast<int>(m.dims().size()); ++v)
    for (const Vec& p : projective_points(f, static_cast<std::size_t>(m.dim(v)))) {
      Vec g = zero_vec(f, m.total());
      for (std::size_t k = 0; k < p.size(); ++k) g[m.offset(v) + k] = p[k];
      gens.push_back(std::move(g));
    }
  std::vector<Subspace> cyclic_slots(gens.size());
  for_each_index(gens.size(), serial, [&](std::uint64_t i) { cyclic_slots[i] = generated_submodule(m, {gens[i]}); });

  std::map<std::string, Subspace> known;
  known.emplace(Subspace(f, m.total()).key(), Subspace(f, m.total()));
  std::vector<Subspace> cyclic, frontier;
  for (auto& s : cyclic_slots) {
    auto key = s.key();
    if (known.emplace(key, s).second) {
      cyclic.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    const std::uint64_t count = static_cast<std::uint64_t>(frontier.size()) * cyclic.size();
    std::vector<Subspace> sums(count);
    std::vector<std::string> keys(count);
    for_each_index(count, serial, [&](std::uint64_t idx) {
      const Subspace& a = frontier[idx / cyclic.size()];
      const Subspace& b = cyclic[idx % cyclic.size()];
      if (a.contains(b)) return;
      sums[idx] = a + b;
      keys[idx] = sums[idx].key();
    });
    std::vector<Subspace> next;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (keys[idx].empty()) continue;
      if (known.emplace(keys[idx], sums[idx]).second) {
        next.push_back(std::move(sums[idx]));
        if (known.size() > limits.max_results)
          throw Error(ErrorKind::SearchTooLarge, "more than " + std::to_string(limits.max_results) + " submodules");
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [k, s] : known) order.emplace_back(s.dim(), k);
  std::sort(order.begin(), order.end());
  std::vector<Subspace> out;
  for (const auto& [d, k] : order) out.push_back(known.at(k));
  return out;
}

std::vector<DimVector> submodule_dim_vectors(const Rep& m, const SweepLimits& limits, bool serial) {
  std::set<DimVector> dims;
  for (const auto& s : enumerate_submodules(m, limits, serial)) dims.insert(graded_dims(m, s));
  return {dims.begin(), dims.end()};
}

Subspace two_sided_ideal(const Algebra& alg, const std::vector<AlgebraElement>& gens) {
  const Field& f = alg.field();
  const Quiver& q = alg.quiver();
  const std::size_t n = alg.dim();
  std::vector<Vec> queue;
  auto push_components = [&](const Vec& v) {
    std::map<std::pair<int, int>, Vec> parts;
    for (std::size_t b = 0; b < n; ++b) {
      if (v[b].is_zero()) continue;
      const Path& p = alg.basis_path(b);
      auto [it, fresh] = parts.try_emplace({p.start, p.end(q)}, zero_vec(f, n));
      it->second[b] = v[b];
    }
    for (auto& [k, part] : parts) queue.push_back(std::move(part));
  };
  for (const auto& g : gens) push_components(alg.reduce(g));
  Subspace s(f, n);
  std::vector<Vec> kept;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (s.contains(queue[head])) continue;
    kept.push_back(queue[head]);
    s = Subspace::span(f, n, kept);
    const Vec v = queue[head];
    for (int a = 0; a < q.arrow_count(); ++a) {
      Vec l = zero_vec(f, n), r = zero_vec(f, n);
      for (std::size_t b = 0; b < n; ++b) {
        if (v[b].is_zero()) continue;
        for (const auto& [t, c] : alg.left_arrow(a, b)) l[t] += v[b] * c;
        for (const auto& [t, c] : alg.right_arrow(a, b)) r[t] += v[b] * c;
      }
      if (!is_zero(l)) queue.push_back(std::move(l));
      if (!is_zero(r)) queue.push_back(std::move(r));
    }
  }
  return s;
}

std::size_t annihilator_dim(const Rep& m, const std::vector<AlgebraElement>& gens) {
  Subspace ideal = two_sided_ideal(m.algebra(), gens);
  if (ideal.dim() == 0) return m.total();
  Matrix stacked(m.field(), 0, m.total());
  for (std::size_t r = 0; r < ideal.dim(); ++r) stacked = vstack(stacked, m.element_action(ideal.vector(r)));
  return m.total() - rank(stacked);
}

}  // namespace qmod
