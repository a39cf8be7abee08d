// Top-stable degenerations: the local-summand criterion, limits along
// one-parameter curves and the hom order.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/grass.hpp"

namespace qmod {

struct DegenerationTest {
  Tri result = Tri::Unknown;
  std::string reason;  // failed clause, certificate, or why the test was inconclusive
  Decomposition decomposition;
  std::size_t hom_p_jm = 0, hom_m_jm = 0;
};

/// Does P/C have no proper top-stable degeneration? Requires top(P/C) = top(P)
/// (TopMismatch otherwise).
DegenerationTest no_proper_topstable_deg(const ProjectiveCover& p, const SubmodulePoint& c, std::uint64_t seed = 1);

/// lim_{τ→∞} (id + τh)(C); h must map P into JP (NotNilpotentDirection).
SubmodulePoint one_param_limit(const ProjectiveCover& p, const SubmodulePoint& c, const Matrix& h);

/// dim Hom(X, M) ≤ dim Hom(X, N) for every test module X. With no tests, uses
/// the indecomposable projectives, the simples, M and N.
bool hom_order_leq(const Rep& m, const Rep& n, const std::vector<Rep>& tests = {});

struct TopdegCandidate {
  SubmodulePoint point;
  std::string certificate;
  std::optional<std::string> degeneration;  // curve exhibiting source ≤deg P/C
};

struct TopdegOptions {
  std::uint64_t seed = 1;
  SweepLimits sweep;
  bool serial = false;
};

struct TopdegResult {
  std::vector<TopdegCandidate> survivors;
  std::size_t examined = 0;
  bool complete = false;  // the full Grass^T_d sweep ran
};

/// Candidates C (supplied, or all of Grass^T_d over a finite field) with no
/// proper top-stable degeneration. With a source point, keeps only those
/// above P/source in the hom order and tries the curves (id + τh)·source
/// along the Hom(P, JP) basis as degeneration certificates.
TopdegResult maximal_topdeg_candidates(const ProjectiveCover& p, const DimVector& d,
                                       const std::optional<SubmodulePoint>& source,
                                       const std::optional<std::vector<SubmodulePoint>>& candidates,
                                       const TopdegOptions& opts = {});

}  // namespace qmod
