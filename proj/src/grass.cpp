#include "qmod/grass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace qmod {

// ---------------------------------------------------------------------------
// Projective cover

ProjectiveCover::ProjectiveCover(const Algebra& alg, TopSpec top) : alg_(&alg), top_(std::move(top)) {
  const Quiver& q = alg.quiver();
  if (top_.size() != static_cast<std::size_t>(q.vertex_count()))
    throw Error(ErrorKind::InvalidArgument, "top has the wrong number of entries");
  for (std::size_t i = 0; i < top_.size(); ++i) {
    if (top_[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity in top");
    for (int k = 0; k < top_[i]; ++k) gen_vertex_.push_back(static_cast<int>(i));
  }
  if (gen_vertex_.empty()) throw Error(ErrorKind::InvalidArgument, "top must be nonzero");

  lookup_.assign(gen_vertex_.size(), std::vector<long>(alg.dim(), -1));
  DimVector d(top_.size(), 0);
  for (int v = 0; v < q.vertex_count(); ++v)
    for (int r = 0; r < generators(); ++r)
      for (std::size_t b : alg.paths_from(generator_vertex(r))) {
        if (alg.basis_path(b).end(q) != v) continue;
        lookup_[static_cast<std::size_t>(r)][b] = static_cast<long>(coords_.size());
        coords_.push_back({r, b});
        ++d[static_cast<std::size_t>(v)];
      }
  Rep shape(alg, d);
  std::vector<Matrix> maps = shape.maps();
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (end_vertex(i) != q.arrow(a).from) continue;
      for (const auto& [t, c] : alg.left_arrow(a, coords_[i].path)) {
        const auto j = static_cast<std::size_t>(index(coords_[i].r, t));
        maps[static_cast<std::size_t>(a)](j - shape.offset(q.arrow(a).to), i - shape.offset(q.arrow(a).from)) = c;
      }
    }
  rep_ = Rep(alg, d, maps);
}

long ProjectiveCover::index(int r, std::size_t path) const {
  if (r < 0 || r >= generators() || path >= alg_->dim()) return -1;
  return lookup_[static_cast<std::size_t>(r)][path];
}

int ProjectiveCover::end_vertex(std::size_t i) const { return alg_->basis_path(coords_[i].path).end(alg_->quiver()); }

long ProjectiveCover::parent(std::size_t i) const {
  const Path& p = alg_->basis_path(coords_[i].path);
  if (p.length() == 0) return -1;
  const long b = alg_->basis_index(p.parent());
  return b < 0 ? -1 : index(coords_[i].r, static_cast<std::size_t>(b));
}

int ProjectiveCover::last_arrow(std::size_t i) const {
  const Path& p = alg_->basis_path(coords_[i].path);
  return p.arrows.empty() ? -1 : p.arrows.back();
}

std::string ProjectiveCover::label(std::size_t i) const {
  const Path& p = alg_->basis_path(coords_[i].path);
  const std::string z = "z" + std::to_string(coords_[i].r + 1);
  return p.length() == 0 ? z : p.to_string(alg_->quiver()) + "." + z;
}

Vec ProjectiveCover::element_at(const Vec& coords, int r) const {
  Vec v = zero_vec(field(), dim());
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b].is_zero()) continue;
    const long i = index(r, b);
    if (i >= 0) v[static_cast<std::size_t>(i)] += coords[b];
  }
  return v;
}

Vec ProjectiveCover::element_at(const AlgebraElement& x, int r) const { return element_at(alg_->reduce(x), r); }

std::string ProjectiveCover::vector_string(const Vec& v) const {
  std::string out;
  for (int r = 0; r < generators(); ++r) {
    AlgebraElement part(field());
    for (std::size_t i = 0; i < dim(); ++i)
      if (coords_[i].r == r && !v[i].is_zero()) part.add(alg_->basis_path(coords_[i].path), v[i]);
    if (part.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + part.to_string(alg_->quiver()) + ").z" + std::to_string(r + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Points

SubmodulePoint point_from_subspace(const ProjectiveCover& p, const Subspace& s) {
  DimVector d = p.dims(), c = graded_dims(p.rep(), s);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= c[i];
  return {s, d};
}

SubmodulePoint make_point(const ProjectiveCover& p, const std::vector<Vec>& generators) {
  return point_from_subspace(p, generated_submodule(p.rep(), generators));
}

bool is_grass_point(const ProjectiveCover& p, const SubmodulePoint& c, const DimVector& d) {
  if (c.space.ambient() != p.dim()) return false;
  for (std::size_t r = 0; r < c.space.dim(); ++r)
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (p.length(i) == 0 && !c.space.basis()(r, i).is_zero()) return false;
  if (!is_submodule(p.rep(), c.space)) return false;
  return point_from_subspace(p, c.space).quotient_dims == d;
}

Rep coker_rep(const ProjectiveCover& p, const SubmodulePoint& c) { return quotient_rep(p.rep(), c.space); }

std::string point_string(const ProjectiveCover& p, const SubmodulePoint& c) {
  // Each generator is scaled so its deglex-largest term has coefficient 1.
  std::string out = "span{";
  for (std::size_t r = 0; r < c.space.dim(); ++r) {
    Vec v = c.space.vector(r);
    std::size_t lead = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero() && (v[lead].is_zero() || p.coord(lead).r > p.coord(i).r ||
                              (p.coord(lead).r == p.coord(i).r &&
                               p.algebra().basis_path(p.coord(lead).path) < p.algebra().basis_path(p.coord(i).path))))
        lead = i;
    const Scalar inv = p.field().one() / v[lead];
    for (auto& x : v) x = x * inv;
    out += (r ? ", " : "") + p.vector_string(v);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Skeleta

namespace {

SemisimpleSequence layering_of(const ProjectiveCover& p, const std::vector<std::size_t>& coords) {
  SemisimpleSequence s;
  for (std::size_t i : coords) {
    const std::size_t l = p.length(i);
    if (s.size() <= l) s.resize(l + 1, DimVector(p.top().size(), 0));
    ++s[l][static_cast<std::size_t>(p.end_vertex(i))];
  }
  return s;
}

Skeleton make_skeleton(const ProjectiveCover& p, std::vector<std::size_t> coords) {
  std::sort(coords.begin(), coords.end());
  Skeleton s{coords, {}};
  s.layering = layering_of(p, s.coords);
  return s;
}

std::vector<std::size_t> generator_coords(const ProjectiveCover& p) {
  std::vector<std::size_t> g;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.length(i) == 0) g.push_back(i);
  return g;
}

std::vector<std::size_t> children(const ProjectiveCover& p, const std::vector<std::size_t>& layer) {
  std::set<std::size_t> in(layer.begin(), layer.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const long par = p.parent(i);
    if (par >= 0 && in.count(static_cast<std::size_t>(par))) out.push_back(i);
  }
  return out;
}

// Calls emit for every subset of `cands` meeting the per-vertex `need` exactly.
void choose_exact(const ProjectiveCover& p, const std::vector<std::size_t>& cands, std::size_t pos, DimVector& need,
                  std::vector<std::size_t>& pick, const std::function<void()>& emit) {
  if (pos == cands.size()) {
    for (int x : need)
      if (x) return;
    emit();
    return;
  }
  int remaining_same = 0;
  const int v = p.end_vertex(cands[pos]);
  for (std::size_t k = pos; k < cands.size(); ++k)
    if (p.end_vertex(cands[k]) == v) ++remaining_same;
  auto& slot = need[static_cast<std::size_t>(v)];
  if (slot > 0) {
    --slot;
    pick.push_back(cands[pos]);
    choose_exact(p, cands, pos + 1, need, pick, emit);
    pick.pop_back();
    ++slot;
  }
  if (remaining_same > slot) choose_exact(p, cands, pos + 1, need, pick, emit);
}

// Every subset of `cands` within the per-vertex (or total) budget.
void choose_within(const ProjectiveCover& p, const std::vector<std::size_t>& cands, std::size_t pos, DimVector& budget,
                   int& total_budget, bool by_total, std::vector<std::size_t>& pick,
                   const std::function<void()>& emit) {
  if (pos == cands.size()) {
    emit();
    return;
  }
  choose_within(p, cands, pos + 1, budget, total_budget, by_total, pick, emit);
  int& slot = by_total ? total_budget : budget[static_cast<std::size_t>(p.end_vertex(cands[pos]))];
  if (slot > 0) {
    --slot;
    pick.push_back(cands[pos]);
    choose_within(p, cands, pos + 1, budget, total_budget, by_total, pick, emit);
    pick.pop_back();
    ++slot;
  }
}

void sort_skeleta(std::vector<Skeleton>& v) {
  std::sort(v.begin(), v.end(), [](const Skeleton& a, const Skeleton& b) { return a.coords < b.coords; });
}

std::vector<Skeleton> skeleta_with_budget(const ProjectiveCover& p, DimVector budget, int total_budget, bool by_total) {
  std::vector<Skeleton> out;
  const auto gens = generator_coords(p);
  for (std::size_t g : gens) {
    if (by_total)
      --total_budget;
    else
      --budget[static_cast<std::size_t>(p.end_vertex(g))];
  }
  if (total_budget < 0) return out;
  for (int x : budget)
    if (!by_total && x < 0) return out;
  std::vector<std::size_t> chosen = gens;
  std::function<void(const std::vector<std::size_t>&)> layer = [&](const std::vector<std::size_t>& prev) {
    const bool done = by_total ? total_budget == 0
                               : std::all_of(budget.begin(), budget.end(), [](int x) { return x == 0; });
    auto cands = children(p, prev);
    if (cands.empty() || done) {
      if (done) out.push_back(make_skeleton(p, chosen));
      return;
    }
    std::vector<std::size_t> pick;
    choose_within(p, cands, 0, budget, total_budget, by_total, pick, [&]() {
      if (pick.empty()) {
        const bool ok = by_total ? total_budget == 0
                                 : std::all_of(budget.begin(), budget.end(), [](int x) { return x == 0; });
        if (ok) out.push_back(make_skeleton(p, chosen));
        return;
      }
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), pick.begin(), pick.end());
      const auto snapshot = pick;
      layer(snapshot);
      chosen.resize(mark);
    });
  };
  layer(gens);
  sort_skeleta(out);
  return out;
}

}  // namespace

Skeleton skeleton_from_coords(const ProjectiveCover& p, std::vector<std::size_t> coords) {
  return make_skeleton(p, std::move(coords));
}

std::vector<std::size_t> display_order(const ProjectiveCover& p, const Skeleton& s) {
  std::vector<std::size_t> v = s.coords;
  std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
    if (p.coord(a).r != p.coord(b).r) return p.coord(a).r < p.coord(b).r;
    return p.algebra().basis_path(p.coord(a).path) < p.algebra().basis_path(p.coord(b).path);
  });
  return v;
}

std::string skeleton_string(const ProjectiveCover& p, const Skeleton& s) {
  std::string out = "{";
  const auto order = display_order(p, s);
  for (std::size_t k = 0; k < order.size(); ++k) out += (k ? ", " : "") + p.label(order[k]);
  return out + "}";
}

bool skeleton_valid(const ProjectiveCover& p, const Skeleton& s) {
  std::set<std::size_t> in(s.coords.begin(), s.coords.end());
  for (std::size_t g : generator_coords(p))
    if (!in.count(g)) return false;
  for (std::size_t i : s.coords) {
    const long par = p.parent(i);
    if (p.length(i) > 0 && (par < 0 || !in.count(static_cast<std::size_t>(par)))) return false;
  }
  return layering_of(p, s.coords) == s.layering;
}

std::vector<Skeleton> enumerate_skeleta(const ProjectiveCover& p, const SemisimpleSequence& s) {
  std::vector<Skeleton> out;
  if (s.empty() || s[0] != p.top()) return out;
  std::vector<std::size_t> chosen = generator_coords(p);
  std::function<void(std::size_t, const std::vector<std::size_t>&)> layer = [&](std::size_t l,
                                                                                const std::vector<std::size_t>& prev) {
    if (l == s.size()) {
      out.push_back(make_skeleton(p, chosen));
      return;
    }
    auto cands = children(p, prev);
    DimVector need = s[l];
    std::vector<std::size_t> pick;
    choose_exact(p, cands, 0, need, pick, [&]() {
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), pick.begin(), pick.end());
      const auto snapshot = pick;
      layer(l + 1, snapshot);
      chosen.resize(mark);
    });
  };
  layer(1, chosen);
  sort_skeleta(out);
  return out;
}

std::vector<Skeleton> skeleta_with_dims(const ProjectiveCover& p, const DimVector& d) {
  if (d.size() != p.top().size()) throw Error(ErrorKind::ShapeMismatch, "dimension vector has the wrong length");
  return skeleta_with_budget(p, d, 0, false);
}

std::vector<Skeleton> skeleta_with_total(const ProjectiveCover& p, int total_dim) {
  return skeleta_with_budget(p, DimVector(p.top().size(), 0), total_dim, true);
}

bool complementary(const ProjectiveCover& p, const SubmodulePoint& c, const Skeleton& s) {
  if (c.space.dim() + s.coords.size() != p.dim()) return false;
  Matrix m = c.space.basis();
  if (m.rows() == 0) m = Matrix(p.field(), 0, p.dim());
  for (std::size_t i : s.coords) m.append_row(unit_vec(p.field(), p.dim(), i));
  return rank(m) == p.dim();
}

std::vector<Skeleton> skeleta_of_point(const ProjectiveCover& p, const SubmodulePoint& c) {
  std::vector<Skeleton> out;
  for (auto& s : enumerate_skeleta(p, radical_layering(coker_rep(p, c))))
    if (complementary(p, c, s)) out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------
// Charts

std::vector<std::string> ChartPresentation::var_names() const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars.size(); ++k) names.push_back("c" + std::to_string(k + 1));
  return names;
}

std::string ChartPresentation::var_description(const ProjectiveCover& p, std::size_t k) const {
  const auto& v = vars[k];
  return p.algebra().quiver().arrow(v.arrow).label + "·" + p.label(v.source) + " -> " + p.label(v.target);
}

namespace {

using PolyVec = std::vector<MPoly>;

struct ChartBuilder {
  const ProjectiveCover& p;
  ChartPresentation& pres;
  std::map<std::size_t, std::size_t> pos;  // P coordinate -> position in σ
  std::size_t n = 0, nv = 0;
  // 0 unset, 1 in progress, 2 done, per (arrow, σ position)
  std::vector<std::vector<int>> state;
  std::map<std::size_t, PolyVec> pi_memo;
  std::set<std::size_t> pi_busy;

  PolyVec zero() const { return PolyVec(n, MPoly(p.field(), nv)); }

  PolyVec unit(std::size_t k) const {
    PolyVec v = zero();
    v[k] = MPoly::constant(p.field(), nv, p.field().one());
    return v;
  }

  PolyVec apply(int a, const PolyVec& v) {
    PolyVec out = zero();
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k].is_zero()) continue;
      const PolyVec col = column(a, k);
      for (std::size_t i = 0; i < n; ++i)
        if (!col[i].is_zero()) out[i] += v[k] * col[i];
    }
    return out;
  }

  // Image in the generic module of a P coordinate.
  PolyVec pi(std::size_t coord) {
    if (auto it = pos.find(coord); it != pos.end()) return unit(it->second);
    if (auto it = pi_memo.find(coord); it != pi_memo.end()) return it->second;
    if (!pi_busy.insert(coord).second)
      throw Error(ErrorKind::Unsupported, "cyclic normal-form expansion while building a chart");
    const long par = p.parent(coord);
    if (par < 0) throw Error(ErrorKind::Unsupported, "generator outside the skeleton");
    PolyVec v = apply(p.last_arrow(coord), pi(static_cast<std::size_t>(par)));
    pi_busy.erase(coord);
    return pi_memo[coord] = v;
  }

  PolyVec column(int a, std::size_t k) {
    auto& st = state[static_cast<std::size_t>(a)][k];
    PolyMatrix& x = pres.action[static_cast<std::size_t>(a)];
    auto read = [&]() {
      PolyVec v = zero();
      for (std::size_t i = 0; i < n; ++i) v[i] = x(i, k);
      return v;
    };
    if (st == 2) return read();
    if (st == 1) throw Error(ErrorKind::Unsupported, "cyclic normal-form expansion while building a chart");
    st = 1;
    const std::size_t b = pres.sigma.coords[k];
    const auto& coord = p.coord(b);
    PolyVec v = zero();
    for (const auto& [t, c] : p.algebra().left_arrow(a, coord.path)) {
      PolyVec w = pi(static_cast<std::size_t>(p.index(coord.r, t)));
      for (std::size_t i = 0; i < n; ++i)
        if (!w[i].is_zero()) v[i] += w[i].scaled(c);
    }
    for (std::size_t i = 0; i < n; ++i) x(i, k) = v[i];
    st = 2;
    return v;
  }
};

}  // namespace

ChartPresentation chart_equations(const ProjectiveCover& p, const Skeleton& s) {
  const Algebra& alg = p.algebra();
  const Quiver& q = alg.quiver();
  const Field& f = p.field();
  ChartPresentation pres;
  pres.sigma = s;
  ChartBuilder cb{p, pres, {}, s.coords.size(), 0, {}, {}, {}};
  for (std::size_t k = 0; k < s.coords.size(); ++k) cb.pos[s.coords[k]] = k;
  const std::size_t n = cb.n;

  // Pass 1: which columns are units, which get fresh variables.
  enum class Kind { None, Unit, Fresh, Combination };
  std::vector<std::vector<Kind>> kind(static_cast<std::size_t>(q.arrow_count()), std::vector<Kind>(n, Kind::None));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fresh_range(
      static_cast<std::size_t>(q.arrow_count()), std::vector<std::pair<std::size_t, std::size_t>>(n));
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t b = s.coords[k];
      if (p.end_vertex(b) != q.arrow(a).from) continue;
      const auto& coord = p.coord(b);
      const long ab = alg.basis_index(alg.basis_path(coord.path).then(a));
      auto& kd = kind[static_cast<std::size_t>(a)][k];
      if (ab < 0) {
        kd = alg.left_arrow(a, coord.path).empty() ? Kind::None : Kind::Combination;
        continue;
      }
      const auto t = static_cast<std::size_t>(p.index(coord.r, static_cast<std::size_t>(ab)));
      if (cb.pos.count(t)) {
        kd = Kind::Unit;
        continue;
      }
      kd = Kind::Fresh;
      const std::size_t first = pres.vars.size();
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t b2 = s.coords[j];
        if (p.end_vertex(b2) == q.arrow(a).to && p.length(b2) >= p.length(b) + 1) pres.vars.push_back({a, b, b2});
      }
      fresh_range[static_cast<std::size_t>(a)][k] = {first, pres.vars.size()};
    }
  const std::size_t nv = pres.vars.size();
  cb.nv = nv;

  // Pass 2: fill the generic action.
  pres.action.assign(static_cast<std::size_t>(q.arrow_count()), PolyMatrix(f, nv, n, n));
  cb.state.assign(static_cast<std::size_t>(q.arrow_count()), std::vector<int>(n, 0));
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t k = 0; k < n; ++k) {
      auto& x = pres.action[static_cast<std::size_t>(a)];
      switch (kind[static_cast<std::size_t>(a)][k]) {
        case Kind::None: cb.state[static_cast<std::size_t>(a)][k] = 2; break;
        case Kind::Unit: {
          const auto& coord = p.coord(s.coords[k]);
          const long ab = alg.basis_index(alg.basis_path(coord.path).then(a));
          x(cb.pos.at(static_cast<std::size_t>(p.index(coord.r, static_cast<std::size_t>(ab)))), k) =
              MPoly::constant(f, nv, f.one());
          cb.state[static_cast<std::size_t>(a)][k] = 2;
          break;
        }
        case Kind::Fresh: {
          auto [lo, hi] = fresh_range[static_cast<std::size_t>(a)][k];
          for (std::size_t v = lo; v < hi; ++v) x(cb.pos.at(pres.vars[v].target), k) = MPoly::variable(f, nv, v);
          cb.state[static_cast<std::size_t>(a)][k] = 2;
          break;
        }
        case Kind::Combination: break;
      }
    }
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t k = 0; k < n; ++k)
      if (kind[static_cast<std::size_t>(a)][k] == Kind::Combination) cb.column(a, k);

  // Relations evaluated on the generic action.
  std::vector<MPoly> eqs;
  for (const auto& r : alg.relations()) {
    const int start = r.terms().begin()->first.start;
    for (std::size_t k = 0; k < n; ++k) {
      if (p.end_vertex(s.coords[k]) != start) continue;
      PolyVec sum = cb.zero();
      for (const auto& [path, c] : r.terms()) {
        PolyVec v = cb.unit(k);
        for (int a : path.arrows) v = cb.apply(a, v);
        for (std::size_t i = 0; i < n; ++i)
          if (!v[i].is_zero()) sum[i] += v[i].scaled(c);
      }
      for (auto& e : sum)
        if (!e.is_zero()) eqs.push_back(e.monic());
    }
  }
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  pres.equations = std::move(eqs);
  return pres;
}

bool satisfies(const ChartPresentation& pres, const Vec& values) {
  for (const auto& e : pres.equations)
    if (!e.eval(values).is_zero()) return false;
  return true;
}

SubmodulePoint coords_to_point(const ProjectiveCover& p, const ChartPresentation& pres, const Vec& values) {
  if (values.size() != pres.vars.size())
    throw Error(ErrorKind::InvalidArgument, "chart has " + std::to_string(pres.vars.size()) + " coordinates, got " +
                                                std::to_string(values.size()));
  if (!satisfies(pres, values)) throw Error(ErrorKind::EquationsViolated, "values do not satisfy the chart equations");
  const std::size_t n = pres.sigma.coords.size();
  std::vector<Matrix> x;
  for (const auto& a : pres.action) x.push_back(a.eval(values));
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos[pres.sigma.coords[k]] = k;
  Matrix pi(p.field(), n, p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const auto& coord = p.coord(i);
    const long z = p.index(coord.r, static_cast<std::size_t>(p.algebra().basis_index(
                                        Path{p.generator_vertex(coord.r), {}})));
    Vec v = unit_vec(p.field(), n, pos.at(static_cast<std::size_t>(z)));
    for (int a : p.algebra().basis_path(coord.path).arrows) v = x[static_cast<std::size_t>(a)].apply(v);
    for (std::size_t k = 0; k < n; ++k) pi(k, i) = v[k];
  }
  return point_from_subspace(p, Subspace::row_space(kernel(pi)));
}

Vec point_to_coords(const ProjectiveCover& p, const ChartPresentation& pres, const SubmodulePoint& c) {
  if (!complementary(p, c, pres.sigma)) throw Error(ErrorKind::NotOnChart, "P is not C ⊕ span(σ)");
  const Field& f = p.field();
  const std::size_t n = pres.sigma.coords.size(), m = c.space.dim();
  Matrix sys(f, p.dim(), m + n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < p.dim(); ++i) sys(i, j) = c.space.basis()(j, i);
  for (std::size_t k = 0; k < n; ++k) sys(pres.sigma.coords[k], m + k) = f.one();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos[pres.sigma.coords[k]] = k;

  Vec values = zero_vec(f, pres.vars.size());
  std::size_t v = 0;
  while (v < pres.vars.size()) {
    const int a = pres.vars[v].arrow;
    const std::size_t b = pres.vars[v].source;
    const auto& coord = p.coord(b);
    const long ab = p.algebra().basis_index(p.algebra().basis_path(coord.path).then(a));
    const auto t = static_cast<std::size_t>(p.index(coord.r, static_cast<std::size_t>(ab)));
    auto mu = solve(sys, unit_vec(f, p.dim(), t));
    if (!mu) throw Error(ErrorKind::NotOnChart, "residue not expressible over σ");
    std::set<std::size_t> allowed;
    for (; v < pres.vars.size() && pres.vars[v].arrow == a && pres.vars[v].source == b; ++v) {
      values[v] = (*mu)[m + pos.at(pres.vars[v].target)];
      allowed.insert(pos.at(pres.vars[v].target));
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!allowed.count(k) && !(*mu)[m + k].is_zero())
        throw Error(ErrorKind::NotOnChart, "residue of " + p.algebra().quiver().arrow(a).label + "·" + p.label(b) +
                                               " leaves the admissible range");
  }
  return values;
}

std::vector<Vec> chart_points(const ChartPresentation& pres, const Field& f, const SweepLimits& limits, bool serial) {
  if (!f.is_finite()) throw Error(ErrorKind::FieldNotFinite, "chart sweeps need a finite field");
  const std::uint64_t count = power_saturating(f.order(), pres.vars.size());
  if (count > limits.max_points)
    throw Error(ErrorKind::SearchTooLarge, "chart has " + std::to_string(pres.vars.size()) + " coordinates over " +
                                               f.name());
  std::vector<char> ok(count, 0);
  for_each_index(count, serial, [&](std::uint64_t i) { ok[i] = satisfies(pres, vector_from_index(f, pres.vars.size(), i)); });
  std::vector<Vec> out;
  for (std::uint64_t i = 0; i < count; ++i)
    if (ok[i]) out.push_back(vector_from_index(f, pres.vars.size(), i));
  return out;
}

std::vector<SubmodulePoint> grass_points(const ProjectiveCover& p, const DimVector& d, const SweepLimits& limits,
                                         bool serial) {
  const Field& f = p.field();
  std::vector<std::pair<std::size_t, Vec>> jobs;
  std::vector<ChartPresentation> charts;
  std::uint64_t budget = 0;
  for (const auto& s : skeleta_with_dims(p, d)) {
    charts.push_back(chart_equations(p, s));
    budget += power_saturating(f.order(), charts.back().vars.size());
    if (budget > limits.max_points) throw Error(ErrorKind::SearchTooLarge, "Grass sweep exceeds the point budget");
    for (auto& v : chart_points(charts.back(), f, limits, serial)) jobs.emplace_back(charts.size() - 1, std::move(v));
  }
  std::vector<SubmodulePoint> pts(jobs.size());
  for_each_index(jobs.size(), serial, [&](std::uint64_t i) { pts[i] = coords_to_point(p, charts[jobs[i].first], jobs[i].second); });
  std::set<std::string> seen;
  std::vector<SubmodulePoint> out;
  for (auto& pt : pts)
    if (seen.insert(pt.space.key()).second) out.push_back(std::move(pt));
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms

EndoSpace::EndoSpace(const ProjectiveCover& p) {
  const Algebra& alg = p.algebra();
  const Quiver& q = alg.quiver();
  for (int r = 0; r < p.generators(); ++r)
    for (int s = 0; s < p.generators(); ++s)
      for (std::size_t b : alg.paths_from(p.generator_vertex(s))) {
        const Path& bp = alg.basis_path(b);
        if (bp.end(q) != p.generator_vertex(r)) continue;
        Matrix m(p.field(), p.dim(), p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j) {
          if (p.coord(j).r != r) continue;
          for (const auto& [t, c] : alg.reduce_path(bp.then(alg.basis_path(p.coord(j).path))))
            m(static_cast<std::size_t>(p.index(s, t)), j) = c;
        }
        const std::size_t k = elems_.size();
        elems_.push_back({r, s, b});
        mats_.push_back(std::move(m));
        if (bp.length() >= 1) {
          unipotent_.push_back(k);
        } else {
          graded_.push_back(k);
          if (r == s) torus_.push_back(k);
        }
      }
}

std::string EndoSpace::describe(const ProjectiveCover& p, std::size_t k) const {
  const auto& e = elems_[k];
  const Path& bp = p.algebra().basis_path(e.path);
  const std::string target = bp.length() == 0 ? "z" + std::to_string(e.s + 1)
                                              : bp.to_string(p.algebra().quiver()) + ".z" + std::to_string(e.s + 1);
  std::string out = "z" + std::to_string(e.r + 1) + " -> " + target;
  if (p.generators() > 1) out += ", other generators -> 0";
  return out;
}

Matrix endo_from_images(const ProjectiveCover& p, const std::vector<Vec>& images) {
  if (images.size() != static_cast<std::size_t>(p.generators()))
    throw Error(ErrorKind::ShapeMismatch, "one image per generator expected");
  for (int r = 0; r < p.generators(); ++r)
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (!images[static_cast<std::size_t>(r)][i].is_zero() && p.end_vertex(i) != p.generator_vertex(r))
        throw Error(ErrorKind::InvalidArgument, "image of z" + std::to_string(r + 1) + " is not in e(r)P");
  Matrix m(p.field(), p.dim(), p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) {
    const auto& c = p.coord(j);
    Vec col = p.rep().path_action(p.algebra().basis_path(c.path)).apply(images[static_cast<std::size_t>(c.r)]);
    for (std::size_t i = 0; i < p.dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

bool raises_length(const ProjectiveCover& p, const Matrix& f) {
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (p.length(j) != 0) continue;
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (p.length(i) == 0 && !f(i, j).is_zero()) return false;
  }
  return true;
}

SubmodulePoint apply_auto(const ProjectiveCover& p, const Matrix& f, const SubmodulePoint& c) {
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.length(i) == 0) gens.push_back(i);
  Matrix topblock(p.field(), gens.size(), gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) topblock(a, b) = f(gens[a], gens[b]);
  if (determinant(topblock).is_zero()) throw Error(ErrorKind::NotInvertible, "endomorphism is not invertible on P/JP");
  std::vector<Vec> imgs;
  for (std::size_t r = 0; r < c.space.dim(); ++r) imgs.push_back(f.apply(c.space.vector(r)));
  return point_from_subspace(p, Subspace::span(p.field(), p.dim(), imgs));
}

namespace {

std::size_t family_orbit_rank(const EndoSpace& e, const std::vector<std::size_t>& family, const SubmodulePoint& c) {
  if (family.empty() || c.space.dim() == 0) return 0;
  const std::size_t amb = c.space.ambient();
  Matrix m(c.space.field(), c.space.dim() * amb, family.size());
  for (std::size_t k = 0; k < family.size(); ++k)
    for (std::size_t j = 0; j < c.space.dim(); ++j) {
      Vec w = c.space.reduce(e.matrix(family[k]).apply(c.space.vector(j)));
      for (std::size_t i = 0; i < amb; ++i) m(j * amb + i, k) = w[i];
    }
  return rank(m);
}

}  // namespace

OrbitDims orbit_dims(const ProjectiveCover& p, const EndoSpace& e, const SubmodulePoint& c) {
  OrbitDims o;
  std::vector<std::size_t> all(e.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  o.aut = family_orbit_rank(e, all, c);
  o.unipotent = family_orbit_rank(e, e.unipotent(), c);
  o.graded = family_orbit_rank(e, e.graded(), c);
  o.end_dim = e.size();
  o.unipotent_dim = e.unipotent().size();
  o.graded_dim = e.graded().size();
  o.tangent_bound = p.field().is_finite();
  return o;
}

std::optional<std::size_t> endo_invariance_witness(const ProjectiveCover&, const EndoSpace& e, const SubmodulePoint& c) {
  for (std::size_t k = 0; k < e.size(); ++k)
    for (std::size_t j = 0; j < c.space.dim(); ++j)
      if (!c.space.contains(e.matrix(k).apply(c.space.vector(j)))) return k;
  return std::nullopt;
}

bool endo_invariant(const ProjectiveCover& p, const EndoSpace& e, const SubmodulePoint& c) {
  return !endo_invariance_witness(p, e, c).has_value();
}

bool is_homogeneous_point(const ProjectiveCover& p, const SubmodulePoint& c) {
  if (!p.algebra().is_homogeneous_ideal())
    throw Error(ErrorKind::IdealNotGraded, "the ideal is not homogeneous for the path-length grading");
  std::map<std::size_t, std::vector<Vec>> by_len;
  for (std::size_t i = 0; i < p.dim(); ++i) by_len[p.length(i)].push_back(unit_vec(p.field(), p.dim(), i));
  std::size_t sum = 0;
  for (const auto& [l, units] : by_len) sum += c.space.intersect(Subspace::span(p.field(), p.dim(), units)).dim();
  return sum == c.space.dim();
}

bool top_only_in_socle(const ProjectiveCover& p, int vertex) {
  const Quiver& q = p.algebra().quiver();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.length(i) == 0 || p.end_vertex(i) != vertex) continue;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (!p.algebra().left_arrow(a, p.coord(i).path).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Moduli verdicts

const char* verdict_name(ModuliVerdict::Kind k) {
  switch (k) {
    case ModuliVerdict::Kind::Fine: return "Fine";
    case ModuliVerdict::Kind::GradedFine: return "GradedFine";
    case ModuliVerdict::Kind::NoCoarse: return "NoCoarse";
    case ModuliVerdict::Kind::UnknownLeaningFine: return "UnknownLeaningFine";
    default: return "Unknown";
  }
}

ModuliVerdict moduli_report(const ProjectiveCover& p, const DimVector& d, const ModuliOptions& opts) {
  ModuliVerdict v;
  const Quiver& q = p.algebra().quiver();
  const Field& f = p.field();
  const TopSpec& t = p.top();
  const bool simple = total(t) == 1;
  const bool squarefree = std::all_of(t.begin(), t.end(), [](int x) { return x <= 1; });
  int top_vertex = -1;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i]) top_vertex = static_cast<int>(i);

  if (simple && top_only_in_socle(p, top_vertex)) {
    v.kind = ModuliVerdict::Kind::Fine;
    v.certificate = "T = S" + q.vertex_labels()[static_cast<std::size_t>(top_vertex)] +
                    " is simple and occurs in JP only inside the socle, so Grass^T_d is a fine moduli space";
    return v;
  }

  bool all_invariant = true;
  if (squarefree) {
    EndoSpace e(p);
    auto check = [&](const SubmodulePoint& c) {
      ++v.points_checked;
      if (auto w = endo_invariance_witness(p, e, c)) {
        v.witness = c;
        v.witness_endo = w;
        return false;
      }
      return true;
    };
    bool swept = false;
    if (f.is_finite()) {
      try {
        auto pts = grass_points(p, d, opts.sweep);
        swept = true;
        v.exhaustive = true;
        for (const auto& c : pts)
          if (!check(c)) {
            all_invariant = false;
            break;
          }
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::SearchTooLarge) throw;
        v.notes.push_back("exhaustive sweep skipped: " + std::string(err.what()));
      }
    }
    if (!swept) {
      std::mt19937_64 rng(opts.seed);
      for (const auto& s : skeleta_with_dims(p, d)) {
        const auto pres = chart_equations(p, s);
        std::vector<Vec> samples{zero_vec(f, pres.vars.size())};
        for (int k = 0; k < opts.random_samples; ++k) {
          Vec x(pres.vars.size());
          for (auto& y : x) y = f.random(rng, 3);
          samples.push_back(x);
        }
        for (const auto& x : samples) {
          if (!satisfies(pres, x)) continue;
          if (!check(coords_to_point(p, pres, x))) {
            all_invariant = false;
            break;
          }
        }
        if (!all_invariant) break;
      }
    }
    if (!all_invariant) {
      v.kind = ModuliVerdict::Kind::NoCoarse;
      v.certificate = "T is squarefree and C = " + point_string(p, *v.witness) + " is not invariant under " +
                      e.describe(p, *v.witness_endo) + ", so no coarse moduli space exists";
      return v;
    }
    if (v.exhaustive) {
      v.kind = ModuliVerdict::Kind::Fine;
      v.certificate = "T is squarefree and all " + std::to_string(v.points_checked) + " points of Grass^T_d over " +
                      f.name() + " are invariant under End(P)";
      return v;
    }
  }
  if (simple && p.algebra().is_homogeneous_ideal()) {
    v.kind = ModuliVerdict::Kind::GradedFine;
    v.certificate = "T is simple and I is homogeneous, so grad-Grass^T_d is a fine moduli space for graded modules";
    return v;
  }
  if (squarefree && v.points_checked > 0) {
    v.kind = ModuliVerdict::Kind::UnknownLeaningFine;
    v.certificate = "all " + std::to_string(v.points_checked) + " sampled points are End(P)-invariant";
    return v;
  }
  v.kind = ModuliVerdict::Kind::Unknown;
  v.certificate = "no criterion applies";
  return v;
}

std::vector<Stratum> strata_by_total(const ProjectiveCover& p, int total_dim) {
  std::map<DimVector, Stratum> by_d;
  for (auto& s : skeleta_with_total(p, total_dim)) {
    DimVector d(p.top().size(), 0);
    for (const auto& layer : s.layering)
      for (std::size_t i = 0; i < d.size(); ++i) d[i] += layer[i];
    auto& st = by_d[d];
    st.d = d;
    const auto pres = chart_equations(p, s);
    st.chart_vars.push_back(pres.vars.size());
    st.chart_equations.push_back(pres.equations.size());
    st.skeleta.push_back(std::move(s));
  }
  std::vector<Stratum> out;
  for (auto& [d, st] : by_d) out.push_back(std::move(st));
  return out;
}

}  // namespace qmod
