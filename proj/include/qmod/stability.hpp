// King θ-stability for representations of a bound quiver.
#pragma once

#include <vector>

#include "qmod/rep.hpp"

namespace qmod {

using Weight = std::vector<long>;

long theta_of(const Weight& theta, const DimVector& d);
/// χ_θ(g) = ∏ det(g_i)^θ(i); throws SingularBlock.
Scalar character_value(const Field& f, const Weight& theta, const GroupElement& g);
/// θ(j) = 1 for j ≠ i and θ(i) = -Σ_{j≠i} d_j, so θ(d) = 0 when d_i = 1.
Weight local_top_weight(int vertex, const DimVector& d);

enum class Stability { Stable, SemistableNotStable, Unstable };
const char* stability_name(Stability s);

/// Decided from the exact set of submodule dimension vectors, so finite
/// fields only (FieldNotFinite otherwise).
Stability classify_stability(const Rep& m, const Weight& theta, const SweepLimits& limits = {});

/// θ-stable composition factors of a semistable module, extracted smallest
/// (then lex-smallest) dimension vector first. Throws NotSemistable.
std::vector<Rep> stable_factors(const Rep& m, const Weight& theta, const SweepLimits& limits = {});

/// Same stable factors up to isomorphism (Unknown if an isomorphism test is).
Tri s_equivalent(const Rep& m, const Rep& n, const Weight& theta, const SweepLimits& limits = {});

}  // namespace qmod
