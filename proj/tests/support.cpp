#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef QMOD_SAMPLES_DIR
#define QMOD_SAMPLES_DIR "samples"
#endif

namespace qmod::test {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unique_ptr<World> load(const std::string& text, const std::string& field) {
  auto w = std::make_unique<World>();
  w->doc = parse_input(text);
  w->alg = std::make_unique<Algebra>(doc_algebra(w->doc, field));
  if (w->doc.top) w->p = std::make_unique<ProjectiveCover>(*w->alg, *w->doc.top);
  return w;
}

std::unique_ptr<World> load_sample(const std::string& name, const std::string& field) {
  return load(read_file(std::string(QMOD_SAMPLES_DIR) + "/" + name), field);
}

std::unique_ptr<World> with_top(const World& w, const TopSpec& top) {
  InputDocument d = w.doc;
  d.top = top;
  d.points.clear();
  d.endo.reset();
  d.skeleton.reset();
  d.coords.reset();
  auto out = std::make_unique<World>();
  out->doc = d;
  out->alg = std::make_unique<Algebra>(doc_algebra(d, w.alg->field().name()));
  out->p = std::make_unique<ProjectiveCover>(*out->alg, top);
  return out;
}

SubmodulePoint World::point_from(const std::string& gens) const {
  InputDocument d = doc;
  d.points.clear();
  d.endo.reset();
  const InputDocument parsed = parse_input(render_document(d) + "point { " + gens + " }\n");
  return doc_point(*p, parsed.points.at(0));
}

// ---------------------------------------------------------------------------
// Oracles

std::vector<Subspace> all_subspaces(const Field& f, std::size_t n) {
  const std::uint64_t count = power_saturating(f.order(), n);
  std::vector<Vec> vectors;
  for (std::uint64_t i = 1; i < count; ++i) vectors.push_back(vector_from_index(f, n, i));
  std::map<std::string, Subspace> seen;
  std::vector<Subspace> frontier{Subspace(f, n)};
  seen.emplace(frontier[0].key(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier)
      for (const auto& v : vectors) {
        if (s.contains(v)) continue;
        Subspace t = s + Subspace::span(f, n, {v});
        if (seen.emplace(t.key(), t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  for (auto& [k, s] : seen) out.push_back(s);
  return out;
}

std::vector<DimVector> brute_submodule_dims(const Rep& m) {
  const Quiver& q = m.algebra().quiver();
  std::set<DimVector> dims;
  for (const auto& s : all_subspaces(m.field(), m.total())) {
    bool closed = true;
    for (std::size_t j = 0; j < s.dim() && closed; ++j) {
      const Vec v = s.vector(j);
      for (int a = 0; a < q.arrow_count() && closed; ++a) closed = s.contains(m.act(a, v));
      // closure under the vertex idempotents
      for (int i = 0; i < q.vertex_count() && closed; ++i) {
        Vec part = zero_vec(m.field(), m.total());
        for (std::size_t c = m.offset(i); c < m.offset(i) + static_cast<std::size_t>(m.dim(i)); ++c) part[c] = v[c];
        closed = s.contains(part);
      }
    }
    if (!closed) continue;
    DimVector d(static_cast<std::size_t>(q.vertex_count()));
    for (int i = 0; i < q.vertex_count(); ++i) {
      std::vector<Vec> proj;
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Vec v = s.vector(j), part = zero_vec(m.field(), m.total());
        for (std::size_t c = m.offset(i); c < m.offset(i) + static_cast<std::size_t>(m.dim(i)); ++c) part[c] = v[c];
        proj.push_back(part);
      }
      d[static_cast<std::size_t>(i)] = static_cast<int>(Subspace::span(m.field(), m.total(), proj).dim());
    }
    dims.insert(d);
  }
  return {dims.begin(), dims.end()};
}

std::vector<Rep> all_reps(const Algebra& alg, const DimVector& d) {
  const Quiver& q = alg.quiver();
  const Field& f = alg.field();
  std::size_t entries = 0;
  for (const auto& a : q.arrows())
    entries += static_cast<std::size_t>(d[static_cast<std::size_t>(a.to)] * d[static_cast<std::size_t>(a.from)]);
  const std::uint64_t count = power_saturating(f.order(), entries);
  std::vector<Rep> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vec v = vector_from_index(f, entries, idx);
    std::vector<Matrix> maps;
    std::size_t k = 0;
    for (const auto& a : q.arrows()) {
      Matrix mat(f, static_cast<std::size_t>(d[static_cast<std::size_t>(a.to)]),
                 static_cast<std::size_t>(d[static_cast<std::size_t>(a.from)]));
      for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = v[k++];
      maps.push_back(mat);
    }
    Rep m(alg, d, maps);
    if (rep_validate(m)) out.push_back(std::move(m));
  }
  return out;
}

Rep random_rep(const Algebra& alg, const DimVector& d, std::mt19937_64& rng, int attempts) {
  const Quiver& q = alg.quiver();
  const Field& f = alg.field();
  for (int t = 0; t < attempts; ++t) {
    // Sparser matrices on later attempts make relations easier to satisfy.
    const int zero_odds = 1 + t / 20;
    std::vector<Matrix> maps;
    for (const auto& a : q.arrows()) {
      Matrix mat(f, static_cast<std::size_t>(d[static_cast<std::size_t>(a.to)]),
                 static_cast<std::size_t>(d[static_cast<std::size_t>(a.from)]));
      for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
          if (std::uniform_int_distribution<int>(0, zero_odds)(rng) == 0) mat(i, j) = f.random(rng, 3);
      maps.push_back(mat);
    }
    Rep m(alg, d, maps);
    if (rep_validate(m)) return m;
  }
  return Rep(alg, d);
}

std::vector<std::string> small_algebras() {
  return {
      "quiver { vertices: 1 2; arrows: a1: 1 -> 2, a2: 1 -> 2; }\n"
      "algebra { field: Q; max_len: 2; relations: none; }\n",
      "quiver { vertices: 1 2; arrows: a: 1 -> 1, b: 1 -> 2; }\n"
      "algebra { field: Q; max_len: 4; relations: [a*a]; }\n",
      "quiver { vertices: 1 2 3; arrows: a1: 1 -> 2, a2: 1 -> 2, c: 1 -> 3; }\n"
      "algebra { field: Q; max_len: 3; relations: [J^2]; }\n",
      "quiver { vertices: 1 2; arrows: a1: 1 -> 2, a2: 1 -> 2, b: 2 -> 1; }\n"
      "algebra { field: Q; max_len: 4; relations: [J^3]; }\n",
      "quiver { vertices: 1 2 3 4; arrows: a: 1 -> 2, b: 2 -> 4, c: 1 -> 3, d: 3 -> 4; }\n"
      "algebra { field: Q; max_len: 3; relations: [b*a - d*c]; }\n",
      "quiver { vertices: 1 2; arrows: w1: 1 -> 1, w2: 1 -> 1, a1: 1 -> 2, a2: 1 -> 2; }\n"
      "algebra { field: Q; max_len: 4; relations: [w1*w1, w1*w2, w2*w1, w2*w2, a1*w2, a2*w1]; }\n",
  };
}

// ---------------------------------------------------------------------------
// Property suites

namespace {

DimVector column_sums(const SemisimpleSequence& s, std::size_t n) {
  DimVector d(n, 0);
  for (const auto& layer : s)
    for (std::size_t i = 0; i < n; ++i) d[i] += layer[i];
  return d;
}

// Satisfying points of a chart over the world's finite field, at most `cap`,
// chosen deterministically from the exhaustive list.
std::vector<Vec> some_chart_points(const ChartPresentation& pres, const Field& f, std::size_t cap,
                                   std::mt19937_64& rng) {
  SweepLimits lim;
  lim.max_points = 1u << 14;
  std::vector<Vec> pts;
  try {
    pts = chart_points(pres, f, lim, true);
  } catch (const Error&) {
    // too many variables for a sweep: random sampling instead
    for (int t = 0; t < 400 && pts.size() < cap; ++t) {
      Vec v;
      for (std::size_t k = 0; k < pres.vars.size(); ++k) v.push_back(f.random(rng));
      if (satisfies(pres, v)) pts.push_back(v);
    }
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  if (pts.size() > cap) pts.resize(cap);
  return pts;
}

std::vector<TopSpec> tops_for(const Algebra& alg) {
  const int n = alg.quiver().vertex_count();
  std::vector<TopSpec> tops;
  for (int i = 0; i < n; ++i) {
    TopSpec t(static_cast<std::size_t>(n), 0);
    t[static_cast<std::size_t>(i)] = 1;
    if (!alg.paths_from(i).empty() && alg.projective_dim_vector(i) != t) tops.push_back(t);
  }
  TopSpec first(static_cast<std::size_t>(n), 0);
  first[0] = 2;
  tops.push_back(first);
  return tops;
}

}  // namespace

void chart_layering_property(PropertyStats& s, std::uint64_t seed, std::size_t min_points) {
  std::mt19937_64 rng(seed);
  std::size_t algebras_used = 0;
  for (const auto& text : small_algebras()) {
    auto w = load(text, "F3");
    const std::size_t before = s.checked;
    for (const auto& top : tops_for(*w->alg)) {
      ProjectiveCover p(*w->alg, top);
      const int base = total(top);
      for (int extra = 1; extra <= 2; ++extra)
        for (const auto& sigma : skeleta_with_total(p, base + extra)) {
          ChartPresentation pres;
          try {
            pres = chart_equations(p, sigma);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::Unsupported) continue;
            throw;
          }
          const DimVector d = column_sums(sigma.layering, static_cast<std::size_t>(w->alg->quiver().vertex_count()));
          for (const auto& v : some_chart_points(pres, p.field(), 4, rng)) {
            ++s.checked;
            const std::string where = text.substr(0, 40) + " " + skeleton_string(p, sigma);
            const SubmodulePoint c = coords_to_point(p, pres, v);
            if (!is_grass_point(p, c, d)) {
              s.fail("not a grass point: " + where);
              continue;
            }
            if (radical_layering(coker_rep(p, c)) != sigma.layering) s.fail("layering differs: " + where);
            if (!complementary(p, c, sigma)) s.fail("not complementary: " + where);
            if (point_to_coords(p, pres, c) != v) s.fail("coordinates do not round-trip: " + where);
            const auto sk = skeleta_of_point(p, c);
            if (std::find(sk.begin(), sk.end(), sigma) == sk.end()) s.fail("chart skeleton missing: " + where);
          }
        }
    }
    if (s.checked > before) ++algebras_used;
  }
  if (algebras_used < 5) s.fail("only " + std::to_string(algebras_used) + " algebras produced chart points");
  if (s.checked < min_points) s.fail("only " + std::to_string(s.checked) + " chart points checked");
}

void submodule_oracle_property(PropertyStats& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const std::string field : {"F2", "F3"})
    for (const auto& text : small_algebras()) {
      auto w = load(text, field);
      const int n = w->alg->quiver().vertex_count();
      for (int t = 0; t < 4; ++t) {
        DimVector d(static_cast<std::size_t>(n), 0);
        const int size = std::uniform_int_distribution<int>(1, field == "F2" ? 4 : 3)(rng);
        for (int k = 0; k < size; ++k) ++d[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))];
        const Rep m = random_rep(*w->alg, d, rng);
        ++s.checked;
        const auto fast = submodule_dim_vectors(m);
        const auto serial = submodule_dim_vectors(m, {}, true);
        std::set<DimVector> fast_set(fast.begin(), fast.end());
        const auto brute = brute_submodule_dims(m);
        if (std::vector<DimVector>(fast_set.begin(), fast_set.end()) != brute)
          s.fail("submodule dims differ from the oracle over " + field + " for d = " + dim_string(d));
        if (fast != serial) s.fail("parallel and serial enumeration differ for d = " + dim_string(d));
      }
    }
}

void base_change_property(PropertyStats& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const auto& text : small_algebras()) {
    auto w = load(text, "F5");
    const int n = w->alg->quiver().vertex_count();
    for (int t = 0; t < 3; ++t) {
      DimVector d(static_cast<std::size_t>(n), 0);
      d[0] = 1;
      for (int k = 0; k < 2; ++k) ++d[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))];
      const Rep m = random_rep(*w->alg, d, rng);
      const Rep other = random_rep(*w->alg, d, rng);
      const Rep g_m = base_change(m, random_group_element(w->alg->field(), d, rng));
      ++s.checked;
      const std::string where = text.substr(0, 40) + " d = " + dim_string(d);
      if (radical_layering(m) != radical_layering(g_m)) s.fail("layering changed: " + where);
      if (hom_dim(m, other) != hom_dim(g_m, other) || hom_dim(other, m) != hom_dim(other, g_m))
        s.fail("hom_dim changed: " + where);
      if (submodule_dim_vectors(m) != submodule_dim_vectors(g_m)) s.fail("submodule dims changed: " + where);
      const Weight theta = local_top_weight(0, d);
      if (classify_stability(m, theta) != classify_stability(g_m, theta)) s.fail("stability changed: " + where);
      if (is_isomorphic(m, g_m) != Tri::True) s.fail("base change not recognised as isomorphic: " + where);
    }
  }
}

void chart_stability_property(PropertyStats& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const auto& text : small_algebras()) {
    auto w = load(text, "F3");
    for (const auto& top : tops_for(*w->alg)) {
      ProjectiveCover p(*w->alg, top);
      const bool squarefree = std::all_of(top.begin(), top.end(), [](int t) { return t <= 1; });
      const EndoSpace e(p);
      for (const auto& sigma : skeleta_with_total(p, total(top) + 2)) {
        ChartPresentation pres;
        try {
          pres = chart_equations(p, sigma);
        } catch (const Error& err) {
          if (err.kind() == ErrorKind::Unsupported) continue;
          throw;
        }
        for (const auto& v : some_chart_points(pres, p.field(), 2, rng)) {
          const SubmodulePoint c = coords_to_point(p, pres, v);
          for (int t = 0; t < 3; ++t) {
            // Squarefree tops: all of Aut(P). Otherwise torus times unipotent.
            Matrix f(p.field(), p.dim(), p.dim());
            const auto& family = squarefree ? std::vector<std::size_t>{} : e.torus();
            if (squarefree) {
              for (std::size_t k = 0; k < e.size(); ++k) f = f + e.matrix(k).scaled(p.field().random(rng));
            } else {
              for (std::size_t k : family) {
                Scalar a = p.field().random(rng);
                while (a.is_zero()) a = p.field().random(rng);
                f = f + e.matrix(k).scaled(a);
              }
              for (std::size_t k : e.unipotent()) f = f + e.matrix(k).scaled(p.field().random(rng));
            }
            SubmodulePoint fc;
            try {
              fc = apply_auto(p, f, c);
            } catch (const Error& err) {
              if (err.kind() == ErrorKind::NotInvertible) continue;
              throw;
            }
            ++s.checked;
            if (!complementary(p, fc, sigma))
              s.fail("automorphism leaves the chart: " + text.substr(0, 40) + " top " + dim_string(top) + " " +
                     skeleton_string(p, sigma));
          }
        }
      }
    }
  }
}

}  // namespace qmod::test
