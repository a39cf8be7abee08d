#include "qmod/sweep.hpp"

#include <exception>
#include <limits>

#include "qmod/error.hpp"

namespace qmod {

std::uint64_t power_saturating(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

Vec vector_from_index(const Field& f, std::size_t n, std::uint64_t index) {
  const std::uint64_t q = f.order();
  Vec v = zero_vec(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = f.element(index % q);
    index /= q;
  }
  return v;
}

std::vector<Vec> projective_points(const Field& f, std::size_t n) {
  if (!f.is_finite()) throw Error(ErrorKind::FieldNotFinite, "projective points need a finite field");
  std::vector<Vec> out;
  const std::uint64_t total = power_saturating(f.order(), n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec v = vector_from_index(f, n, idx);
    for (const auto& x : v)
      if (!x.is_zero()) {
        if (x.is_one()) out.push_back(std::move(v));
        break;
      }
  }
  return out;
}

void for_each_index(std::uint64_t count, bool serial, const std::function<void(std::uint64_t)>& body) {
  if (serial) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  // Exceptions may not cross the parallel region; keep the first and rethrow.
  std::exception_ptr failure;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(qmod_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qmod
