// Enumeration helpers over finite fields, with OpenMP kernels and the serial
// reference implementations they are tested against.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qmod/matrix.hpp"

namespace qmod {

/// Budget for exhaustive finite-field enumerations.
struct SweepLimits {
  std::uint64_t max_points = 1u << 16;  // vectors / chart points visited
  std::size_t max_results = 100000;     // distinct subspaces kept
};

/// q^n, saturating at UINT64_MAX.
std::uint64_t power_saturating(std::uint64_t q, std::size_t n);

/// The index-th vector of F_q^n (base-q digits, first coordinate least significant).
Vec vector_from_index(const Field& f, std::size_t n, std::uint64_t index);

/// Representatives of the projective points of F_q^n: first nonzero entry 1,
/// in increasing index order.
std::vector<Vec> projective_points(const Field& f, std::size_t n);

/// Runs body(i) for i in [0, count); parallel unless `serial`. The body must
/// write only to slot i of caller-owned storage.
void for_each_index(std::uint64_t count, bool serial, const std::function<void(std::uint64_t)>& body);

}  // namespace qmod
