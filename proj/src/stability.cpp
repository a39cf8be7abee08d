#include "qmod/stability.hpp"

#include <algorithm>

namespace qmod {

long theta_of(const Weight& theta, const DimVector& d) {
  if (theta.size() != d.size()) throw Error(ErrorKind::ShapeMismatch, "weight and dimension vector differ in length");
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += theta[i] * d[i];
  return s;
}

Scalar character_value(const Field& f, const Weight& theta, const GroupElement& g) {
  if (theta.size() != g.size()) throw Error(ErrorKind::ShapeMismatch, "weight and group element differ in length");
  Scalar v = f.one();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Scalar det = g[i].rows() ? determinant(g[i]) : f.one();
    if (det.is_zero()) throw Error(ErrorKind::SingularBlock, "block " + std::to_string(i + 1) + " is singular");
    const Scalar base = theta[i] < 0 ? det.inverse() : det;
    for (long k = 0; k < std::abs(theta[i]); ++k) v = v * base;
  }
  return v;
}

Weight local_top_weight(int vertex, const DimVector& d) {
  Weight w(d.size(), 1);
  long rest = 0;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (static_cast<int>(j) != vertex) rest += d[j];
  w[static_cast<std::size_t>(vertex)] = -rest;
  return w;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::SemistableNotStable: return "semistable-not-stable";
    default: return "unstable";
  }
}

Stability classify_stability(const Rep& m, const Weight& theta, const SweepLimits& limits) {
  if (!m.field().is_finite()) throw Error(ErrorKind::FieldNotFinite, "stability is decided over finite fields only");
  const DimVector& d = m.dims();
  if (theta_of(theta, d) != 0) return Stability::Unstable;
  bool zero_proper = false;
  for (const auto& e : submodule_dim_vectors(m, limits)) {
    if (total(e) == 0 || e == d) continue;
    const long t = theta_of(theta, e);
    if (t < 0) return Stability::Unstable;
    zero_proper |= t == 0;
  }
  return zero_proper ? Stability::SemistableNotStable : Stability::Stable;
}

std::vector<Rep> stable_factors(const Rep& m, const Weight& theta, const SweepLimits& limits) {
  const Stability s = classify_stability(m, theta, limits);
  if (s == Stability::Unstable) throw Error(ErrorKind::NotSemistable, "module is not θ-semistable");
  if (s == Stability::Stable) return {m};
  // enumerate_submodules sorts by dimension then key; pick the smallest
  // dimension, then the lex-smallest dimension vector.
  std::optional<Subspace> best;
  DimVector best_d;
  for (const auto& sub : enumerate_submodules(m, limits)) {
    const DimVector e = graded_dims(m, sub);
    if (total(e) == 0 || e == m.dims() || theta_of(theta, e) != 0) continue;
    if (!best || sub.dim() < best->dim() || (sub.dim() == best->dim() && e < best_d)) {
      best = sub;
      best_d = e;
    }
  }
  std::vector<Rep> out{sub_rep(m, *best)};
  for (auto& r : stable_factors(quotient_rep(m, *best), theta, limits)) out.push_back(std::move(r));
  return out;
}

Tri s_equivalent(const Rep& m, const Rep& n, const Weight& theta, const SweepLimits& limits) {
  auto a = stable_factors(m, theta, limits), b = stable_factors(n, theta, limits);
  if (a.size() != b.size()) return Tri::False;
  std::vector<bool> used(b.size(), false);
  bool unknown = false;
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (used[j]) continue;
      const Tri t = is_isomorphic(x, b[j]);
      if (t == Tri::True) used[j] = matched = true;
      unknown |= t == Tri::Unknown;
    }
    if (!matched && !unknown) return Tri::False;
    if (!matched) return Tri::Unknown;
  }
  return Tri::True;
}

}  // namespace qmod
