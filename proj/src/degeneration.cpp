#include "qmod/degeneration.hpp"

#include <algorithm>

namespace qmod {

namespace {

// Kernel of Λe_i → N, b ↦ b·v, for a top generator v of the local module N
// at vertex i; coordinates follow alg.paths_from(i).
Subspace local_kernel(const Rep& n, int vertex) {
  const Algebra& alg = n.algebra();
  const Subspace rad = radical(n);
  std::size_t gen = n.total();
  for (std::size_t k : rad.non_pivots())
    if (n.vertex_of(k) == vertex) gen = k;
  const auto& paths = alg.paths_from(vertex);
  Matrix m(n.field(), n.total(), paths.size());
  const Vec v = unit_vec(n.field(), n.total(), gen);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    const Vec w = n.path_action(alg.basis_path(paths[j])).apply(v);
    for (std::size_t i = 0; i < n.total(); ++i) m(i, j) = w[i];
  }
  return Subspace::row_space(kernel(m)).dim() ? Subspace::row_space(kernel(m)) : Subspace(n.field(), paths.size());
}

bool comparable(const Subspace& a, const Subspace& b) {
  const std::size_t s = (a + b).dim();
  return s == a.dim() || s == b.dim();
}

}  // namespace

DegenerationTest no_proper_topstable_deg(const ProjectiveCover& p, const SubmodulePoint& c, std::uint64_t seed) {
  const Rep m = coker_rep(p, c);
  if (top_dims(m) != p.top()) throw Error(ErrorKind::TopMismatch, "top of P/C differs from the top of P");
  DegenerationTest t;
  t.decomposition = decompose_local(m, seed);
  if (t.decomposition.kind == Decomposition::Kind::Unknown) {
    t.reason = "decomposition into local summands inconclusive";
    return t;
  }
  if (t.decomposition.kind == Decomposition::Kind::NotSumOfLocals) {
    t.result = Tri::False;
    t.reason = "not a direct sum of local modules";
    return t;
  }
  // Hom(P, JM) = ⊕ e_i JM^{t_i} since P is projective.
  const Subspace rad = radical(m);
  const DimVector jm = graded_dims(m, rad);
  for (std::size_t i = 0; i < jm.size(); ++i) t.hom_p_jm += static_cast<std::size_t>(p.top()[i] * jm[i]);
  t.hom_m_jm = hom_dim(m, sub_rep(m, rad));
  if (t.hom_p_jm != t.hom_m_jm) {
    t.result = Tri::False;
    t.reason = "hom-dimension mismatch: dim Hom(P,JM) = " + std::to_string(t.hom_p_jm) +
               ", dim Hom(M,JM) = " + std::to_string(t.hom_m_jm);
    return t;
  }
  // With the hom condition in force each kernel is independent of the
  // chosen top generator, so a single choice decides comparability.
  const int nv = p.algebra().quiver().vertex_count();
  std::vector<std::vector<Subspace>> kernels(static_cast<std::size_t>(nv));
  for (const auto& piece : t.decomposition.pieces) {
    const DimVector top = top_dims(piece);
    const auto v = static_cast<int>(std::find(top.begin(), top.end(), 1) - top.begin());
    kernels[static_cast<std::size_t>(v)].push_back(local_kernel(piece, v));
  }
  for (int v = 0; v < nv; ++v) {
    const auto& ks = kernels[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = a + 1; b < ks.size(); ++b)
        if (!comparable(ks[a], ks[b])) {
          t.result = Tri::False;
          t.reason = "kernels not comparable at vertex " + p.algebra().quiver().vertex_labels()[static_cast<std::size_t>(v)];
          return t;
        }
  }
  t.result = Tri::True;
  t.reason = "local summands: " + std::to_string(t.decomposition.pieces.size()) +
             ", kernels linearly ordered, dim Hom(P,JM) = dim Hom(M,JM) = " +
             std::to_string(t.hom_m_jm);
  return t;
}

SubmodulePoint one_param_limit(const ProjectiveCover& p, const SubmodulePoint& c, const Matrix& h) {
  if (!raises_length(p, h)) throw Error(ErrorKind::NotNilpotentDirection, "h does not map P into JP");
  const Field& f = p.field();
  const std::size_t n = p.dim();
  // Basis of (id + τh)(C) with polynomial entries.
  std::vector<std::vector<UPoly>> vecs;
  for (std::size_t j = 0; j < c.space.dim(); ++j) {
    const Vec v = c.space.vector(j), hv = h.apply(v);
    std::vector<UPoly> pv;
    for (std::size_t i = 0; i < n; ++i) pv.emplace_back(f, std::vector<Scalar>{v[i], hv[i]});
    vecs.push_back(std::move(pv));
  }
  auto degree = [](const std::vector<UPoly>& v) {
    int d = -1;
    for (const auto& x : v) d = std::max(d, x.degree());
    return d;
  };
  // Reduce until the leading coefficient vectors are independent; each step
  // lowers the degree of one vector, and the span over K(τ) is unchanged.
  for (;;) {
    const std::size_t k = vecs.size();
    std::vector<int> deg(k);
    Matrix lead(f, n, k);
    for (std::size_t j = 0; j < k; ++j) {
      deg[j] = degree(vecs[j]);
      for (std::size_t i = 0; i < n; ++i) lead(i, j) = vecs[j][i].coeff(deg[j]);
    }
    const Matrix rel = k ? kernel(lead) : Matrix(f, 0, 0);
    if (rel.rows() == 0) {
      std::vector<Vec> out;
      for (std::size_t j = 0; j < k; ++j) out.push_back(lead.col(j));
      const Subspace lim = Subspace::span(f, n, out);
      if (!is_submodule(p.rep(), lim)) throw Error(ErrorKind::NotSubmodule, "limit is not a submodule");
      return point_from_subspace(p, lim);
    }
    const Vec a = rel.row(0);
    std::size_t top = k;
    for (std::size_t j = 0; j < k; ++j)
      if (!a[j].is_zero() && (top == k || deg[j] > deg[top])) top = j;
    std::vector<UPoly> nv(n, UPoly(f));
    for (std::size_t j = 0; j < k; ++j) {
      if (a[j].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) nv[i] = nv[i] + vecs[j][i].scaled(a[j]).shifted(deg[top] - deg[j]);
    }
    vecs[top] = std::move(nv);
  }
}

bool hom_order_leq(const Rep& m, const Rep& n, const std::vector<Rep>& tests) {
  if (m.dims() != n.dims()) throw Error(ErrorKind::DimensionMismatch, "modules have different dimension vectors");
  std::vector<Rep> xs = tests;
  if (xs.empty()) {
    const Algebra& alg = m.algebra();
    for (int i = 0; i < alg.quiver().vertex_count(); ++i) {
      xs.push_back(projective_rep(alg, i));
      xs.push_back(simple_rep(alg, i));
    }
    xs.push_back(m);
    xs.push_back(n);
  }
  for (const auto& x : xs)
    if (hom_dim(x, m) > hom_dim(x, n)) return false;
  return true;
}

TopdegResult maximal_topdeg_candidates(const ProjectiveCover& p, const DimVector& d,
                                       const std::optional<SubmodulePoint>& source,
                                       const std::optional<std::vector<SubmodulePoint>>& candidates,
                                       const TopdegOptions& opts) {
  TopdegResult res;
  std::vector<SubmodulePoint> pts;
  if (candidates) {
    pts = *candidates;
  } else {
    pts = grass_points(p, d, opts.sweep, opts.serial);
    res.complete = true;
  }
  res.examined = pts.size();
  std::vector<DegenerationTest> tests(pts.size());
  for_each_index(pts.size(), opts.serial,
                 [&](std::uint64_t i) { tests[i] = no_proper_topstable_deg(p, pts[i], opts.seed); });

  std::vector<SubmodulePoint> limits;
  std::vector<std::string> limit_desc;
  std::optional<Rep> m;
  if (source) {
    m = coker_rep(p, *source);
    EndoSpace e(p);
    for (std::size_t k : e.unipotent()) {
      limits.push_back(one_param_limit(p, *source, e.matrix(k)));
      limit_desc.push_back("limit of (id + τ·(" + e.describe(p, k) + "))·C as τ → ∞");
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (tests[i].result != Tri::True) continue;
    if (m && !hom_order_leq(*m, coker_rep(p, pts[i]))) continue;
    TopdegCandidate cand{pts[i], tests[i].reason, std::nullopt};
    for (std::size_t k = 0; k < limits.size(); ++k)
      if (limits[k].space == pts[i].space) {
        cand.degeneration = limit_desc[k];
        break;
      }
    res.survivors.push_back(std::move(cand));
  }
  return res;
}

}  // namespace qmod
