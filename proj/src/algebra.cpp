#include "qmod/algebra.hpp"

#include <algorithm>
#include <set>

#include "qmod/error.hpp"

namespace qmod {

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
    : vertices_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + v + "'");
  seen.clear();
  for (const auto& a : arrows_) {
    if (a.from < 0 || a.to < 0 || a.from >= vertex_count() || a.to >= vertex_count())
      throw Error(ErrorKind::InvalidArgument, "arrow '" + a.label + "' has an invalid endpoint");
    if (!seen.insert(a.label).second) throw Error(ErrorKind::InvalidArgument, "duplicate arrow label '" + a.label + "'");
  }
}

int Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return static_cast<int>(i);
  return -1;
}

Path Path::then(const Path& after) const {
  Path p = *this;
  p.arrows.insert(p.arrows.end(), after.arrows.begin(), after.arrows.end());
  return p;
}

Path Path::then(int arrow) const {
  Path p = *this;
  p.arrows.push_back(arrow);
  return p;
}

Path Path::parent() const {
  Path p = *this;
  if (!p.arrows.empty()) p.arrows.pop_back();
  return p;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e" + q.vertex_labels()[static_cast<std::size_t>(start)];
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrow(*it).label;
  }
  return s;
}

bool operator<(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.start < b.start;
}

AlgebraElement AlgebraElement::path(const Field& f, const Path& p, const Scalar& c) {
  AlgebraElement e(f);
  e.add(p, c);
  return e;
}

void AlgebraElement::add(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scaled(-o.field_.one()); }

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement r(field_);
  for (const auto& [p, c] : terms_) r.add(p, c * s);
  return r;
}

bool AlgebraElement::is_parallel(const Quiver& q) const {
  if (terms_.empty()) return true;
  const Path& first = terms_.begin()->first;
  for (const auto& [p, c] : terms_)
    if (p.start != first.start || p.end(q) != first.end(q)) return false;
  return true;
}

std::size_t AlgebraElement::min_length() const {
  std::size_t m = SIZE_MAX;
  for (const auto& [p, c] : terms_) m = std::min(m, p.length());
  return terms_.empty() ? 0 : m;
}

std::size_t AlgebraElement::max_length() const {
  std::size_t m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

std::string AlgebraElement::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string cs = it->second.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (cs != "1") out += cs + "*";
    out += it->first.to_string(q);
  }
  return out;
}

namespace {

bool composable(const Quiver& q, const Path& p) {
  int v = p.start;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.arrow_count() || q.arrow(a).from != v) return false;
    v = q.arrow(a).to;
  }
  return p.start >= 0 && p.start < q.vertex_count();
}

bool has_subword(const std::vector<int>& word, const std::vector<std::vector<int>>& monomials) {
  for (const auto& m : monomials) {
    if (m.size() > word.size()) continue;
    if (std::search(word.begin(), word.end(), m.begin(), m.end()) != word.end()) return true;
  }
  return false;
}

bool has_suffix(const std::vector<int>& word, const std::vector<std::vector<int>>& monomials) {
  for (const auto& m : monomials)
    if (m.size() <= word.size() && std::equal(m.begin(), m.end(), word.end() - static_cast<std::ptrdiff_t>(m.size())))
      return true;
  return false;
}

// Non-zero paths of KQ modulo the monomial relations, layered by length.
std::vector<std::vector<Path>> surviving_layers(const Quiver& q, const std::vector<std::vector<int>>& monomials,
                                                std::size_t max_len) {
  std::vector<std::vector<Path>> layers(1);
  for (int v = 0; v < q.vertex_count(); ++v) layers[0].push_back(Path{v, {}});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : layers[len - 1])
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).from != p.end(q)) continue;
        Path np = p.then(a);
        if (!has_suffix(np.arrows, monomials)) next.push_back(std::move(np));
      }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
    if (layers.back().empty()) break;
  }
  return layers;
}

// Row-reduces the ideal generated by `relations` inside the span of surviving
// paths of length < bound (columns in descending deglex order). With
// `truncate`, components of length >= bound are dropped; otherwise elements
// with such components are skipped.
Echelon ideal_echelon(const Quiver& q, const Field& f, const std::vector<AlgebraElement>& relations,
                      const std::vector<std::vector<int>>& monomials, const std::vector<std::vector<Path>>& layers,
                      std::size_t bound, bool truncate, const std::map<Path, std::size_t>& column) {
  std::vector<Path> paths;
  for (std::size_t l = 0; l < layers.size() && l < bound; ++l)
    paths.insert(paths.end(), layers[l].begin(), layers[l].end());
  Matrix rows(f, 0, column.size());
  for (const auto& r : relations) {
    const Path& lead = r.terms().begin()->first;
    const int s = lead.start, t = lead.end(q);
    const std::size_t rmin = r.min_length();
    for (const Path& pre : paths) {  // applied first, ends at s
      if (pre.end(q) != s || pre.length() + rmin >= bound) continue;
      for (const Path& post : paths) {  // applied last, starts at t
        if (post.start != t || pre.length() + rmin + post.length() >= bound) continue;
        Vec row = zero_vec(f, column.size());
        bool keep = true, nonzero = false;
        for (const auto& [w, c] : r.terms()) {
          Path full{pre.start, pre.arrows};
          full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
          full.arrows.insert(full.arrows.end(), post.arrows.begin(), post.arrows.end());
          if (has_subword(full.arrows, monomials)) continue;
          if (full.length() >= bound) {
            if (truncate) continue;
            keep = false;
            break;
          }
          row[column.at(full)] += c;
          nonzero = true;
        }
        if (keep && nonzero) rows.append_row(row);
      }
    }
  }
  return row_echelon(rows);
}

}  // namespace

Algebra build_algebra(const Quiver& q, const std::vector<AlgebraElement>& relations, const Field& f,
                      std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorKind::InvalidArgument, "max_len must be positive");
  Algebra alg;
  alg.quiver_ = q;
  alg.field_ = f;
  alg.relations_ = relations;
  alg.max_len_ = max_len;

  std::vector<AlgebraElement> mixed;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& [p, c] : r.terms())
      if (!composable(q, p)) throw Error(ErrorKind::BadRelation, "relation contains a non-path");
    if (!r.is_parallel(q)) throw Error(ErrorKind::BadRelation, "relation " + r.to_string(q) + " is not parallel");
    if (r.min_length() < 2)
      throw Error(ErrorKind::BadRelation, "relation " + r.to_string(q) + " has a component of length < 2");
    if (r.field() != f) throw Error(ErrorKind::BadRelation, "relation over the wrong field");
    if (r.terms().size() == 1)
      alg.monomials_.push_back(r.terms().begin()->first.arrows);
    else
      mixed.push_back(r);
  }

  auto layers = surviving_layers(q, alg.monomials_, max_len);

  std::size_t witness = 0;
  if (mixed.empty()) {
    for (std::size_t l = 1; l < layers.size(); ++l)
      if (layers[l].empty()) {
        witness = l;
        break;
      }
    if (q.arrow_count() == 0) witness = 1;
  } else {
    std::map<Path, std::size_t> column;
    std::vector<Path> all;
    for (const auto& layer : layers) all.insert(all.end(), layer.begin(), layer.end());
    for (std::size_t i = 0; i < all.size(); ++i) column[all[all.size() - 1 - i]] = i;
    Echelon e = ideal_echelon(q, f, mixed, alg.monomials_, layers, max_len + 1, false, column);
    Subspace ideal = Subspace::row_space(e.rref);
    if (e.rref.rows() == 0) ideal = Subspace(f, column.size());
    for (std::size_t l = 1; l < layers.size() && l <= max_len; ++l) {
      bool all_in = true;
      for (const Path& p : layers[l])
        if (!ideal.contains(unit_vec(f, column.size(), column.at(p)))) {
          all_in = false;
          break;
        }
      if (all_in) {
        witness = l;
        break;
      }
    }
  }
  if (witness == 0 || witness > max_len)
    throw Error(ErrorKind::NotAdmissible,
                "no length <= " + std::to_string(max_len) + " has all its paths in the ideal");
  alg.witness_ = witness;
  layers.resize(witness);

  std::vector<Path> below;
  for (const auto& layer : layers) below.insert(below.end(), layer.begin(), layer.end());
  std::map<Path, std::size_t> column;
  for (std::size_t i = 0; i < below.size(); ++i) column[below[below.size() - 1 - i]] = i;
  auto path_of_column = [&](std::size_t c) -> const Path& { return below[below.size() - 1 - c]; };

  std::set<std::size_t> pivot_cols;
  Echelon e;
  if (!mixed.empty()) {
    e = ideal_echelon(q, f, mixed, alg.monomials_, layers, witness, true, column);
    pivot_cols.insert(e.pivots.begin(), e.pivots.end());
  }
  for (const Path& p : below)
    if (!pivot_cols.count(column.at(p))) {
      alg.index_[p] = alg.basis_.size();
      alg.basis_.push_back(p);
    }
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Sparse red;
    for (std::size_t c = 0; c < e.rref.cols(); ++c) {
      if (c == e.pivots[r] || e.rref(r, c).is_zero()) continue;
      red.emplace_back(alg.index_.at(path_of_column(c)), -e.rref(r, c));
    }
    std::sort(red.begin(), red.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    alg.reductions_[path_of_column(e.pivots[r])] = std::move(red);
  }

  alg.loewy_ = witness;
  for (std::size_t m = 1; m < witness; ++m) {
    bool zero = true;
    for (const Path& p : layers[m])
      if (!alg.reduce_path(p).empty()) {
        zero = false;
        break;
      }
    if (zero) {
      alg.loewy_ = m;
      break;
    }
  }
  if (q.arrow_count() == 0) alg.loewy_ = 1;

  const std::size_t n = alg.basis_.size();
  alg.from_.assign(static_cast<std::size_t>(q.vertex_count()), {});
  for (std::size_t i = 0; i < n; ++i) alg.from_[static_cast<std::size_t>(alg.basis_[i].start)].push_back(i);
  alg.left_.assign(static_cast<std::size_t>(q.arrow_count()), std::vector<Sparse>(n));
  alg.right_.assign(static_cast<std::size_t>(q.arrow_count()), std::vector<Sparse>(n));
  for (int a = 0; a < q.arrow_count(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const Path& b = alg.basis_[i];
      if (b.end(q) == q.arrow(a).from) alg.left_[static_cast<std::size_t>(a)][i] = alg.reduce_path(b.then(a));
      if (b.start == q.arrow(a).to)
        alg.right_[static_cast<std::size_t>(a)][i] = alg.reduce_path(Path{q.arrow(a).from, {a}}.then(b));
    }
  return alg;
}

long Algebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Sparse Algebra::reduce_path(const Path& p) const {
  if (!composable(quiver_, p)) throw Error(ErrorKind::InvalidArgument, "not a path of the quiver");
  if (p.length() >= witness_ || has_subword(p.arrows, monomials_)) return {};
  if (auto it = index_.find(p); it != index_.end()) return {{it->second, field_.one()}};
  if (auto it = reductions_.find(p); it != reductions_.end()) return it->second;
  throw Error(ErrorKind::InvalidArgument, "path " + p.to_string(quiver_) + " missing from reduction table");
}

Vec Algebra::reduce(const AlgebraElement& x) const {
  Vec v = zero_vec(field_, dim());
  for (const auto& [p, c] : x.terms())
    for (const auto& [i, s] : reduce_path(p)) v[i] += c * s;
  return v;
}

AlgebraElement Algebra::normal_form(const AlgebraElement& x) const { return element(reduce(x)); }

AlgebraElement Algebra::element(const Vec& coords) const {
  AlgebraElement e(field_);
  for (std::size_t i = 0; i < coords.size(); ++i) e.add(basis_[i], coords[i]);
  return e;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero_vec(field_, dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero() || basis_[j].end(quiver_) != basis_[i].start) continue;
      for (const auto& [k, s] : reduce_path(basis_[j].then(basis_[i]))) out[k] += a[i] * b[j] * s;
    }
  }
  return out;
}

std::vector<std::vector<int>> Algebra::projective_layer_dims(int i) const {
  std::vector<std::vector<int>> layers;
  for (std::size_t idx : paths_from(i)) {
    const Path& p = basis_[idx];
    if (layers.size() <= p.length()) layers.resize(p.length() + 1, std::vector<int>(quiver_.vertex_count(), 0));
    ++layers[p.length()][static_cast<std::size_t>(p.end(quiver_))];
  }
  return layers;
}

std::vector<int> Algebra::projective_dim_vector(int i) const {
  std::vector<int> d(static_cast<std::size_t>(quiver_.vertex_count()), 0);
  for (std::size_t idx : paths_from(i)) ++d[static_cast<std::size_t>(basis_[idx].end(quiver_))];
  return d;
}

bool Algebra::is_nakayama() const {
  std::vector<int> out(static_cast<std::size_t>(quiver_.vertex_count()), 0), in = out;
  for (const auto& a : quiver_.arrows()) {
    ++out[static_cast<std::size_t>(a.from)];
    ++in[static_cast<std::size_t>(a.to)];
  }
  for (std::size_t v = 0; v < out.size(); ++v)
    if (out[v] > 1 || in[v] > 1) return false;
  return true;
}

bool Algebra::is_homogeneous_ideal() const {
  for (const auto& r : relations_)
    if (r.min_length() != r.max_length()) return false;
  return true;
}

bool Algebra::is_monomial() const {
  for (const auto& r : relations_)
    if (r.terms().size() > 1) return false;
  return true;
}

std::vector<Path> all_paths_of_length(const Quiver& q, std::size_t length) {
  auto layers = surviving_layers(q, {}, length);
  return layers.size() == length + 1 ? layers.back() : std::vector<Path>{};
}

}  // namespace qmod
