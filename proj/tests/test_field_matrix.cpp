#include <random>

#include "doctest.h"
#include "qmod/error.hpp"
#include "qmod/matrix.hpp"
#include "qmod/sweep.hpp"

using namespace qmod;

TEST_CASE("prime field arithmetic agrees with integer residues") {
  const Field f = Field::prime(7);
  for (long long a = 0; a < 7; ++a)
    for (long long b = 0; b < 7; ++b) {
      CHECK((f.from_int(a) + f.from_int(b)).residue() == (a + b) % 7);
      CHECK((f.from_int(a) * f.from_int(b)).residue() == (a * b) % 7);
      CHECK((f.from_int(a) - f.from_int(b)).residue() == ((a - b) % 7 + 7) % 7);
      if (b != 0) CHECK(((f.from_int(a) / f.from_int(b)) * f.from_int(b)).residue() == a);
    }
  CHECK(f.from_int(-1).residue() == 6);
  CHECK(f.from_ratio(1, 2).residue() == 4);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("F5").characteristic() == 5);
  CHECK_THROWS_AS(Field::parse("F6"), Error);
  CHECK_THROWS_AS(Field::parse("R"), Error);
}

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const Scalar third = q.from_ratio(1, 3);
  CHECK((third + third + third).is_one());
  CHECK((third * q.from_int(3)).is_one());
  CHECK(third.to_string() == "1/3");
}

namespace {

// Number of solutions of m x = 0 over F_p, by brute force.
std::uint64_t kernel_size(const Matrix& m) {
  std::uint64_t count = 0;
  const std::uint64_t total = power_saturating(m.field().order(), m.cols());
  for (std::uint64_t i = 0; i < total; ++i)
    if (is_zero(m.apply(vector_from_index(m.field(), m.cols(), i)))) ++count;
  return count;
}

}  // namespace

TEST_CASE("rank and kernel agree with solution counting over small fields") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.random(rng);
      const std::size_t k = c - rank(m);
      CHECK(kernel(m).rows() == k);
      CHECK(kernel_size(m) == power_saturating(p, k));
      const Matrix ker = kernel(m);
      for (std::size_t i = 0; i < ker.rows(); ++i) CHECK(is_zero(m.apply(ker.row(i))));
    }
  }
}

TEST_CASE("inverse and determinant over Q") {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_ints(q, {{2, 1}, {5, 3}});
  CHECK(determinant(m).is_one());
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(q, 2));
  CHECK_FALSE(inverse(Matrix::from_ints(q, {{1, 2}, {2, 4}})));
}

TEST_CASE("subspaces are canonical") {
  const Field q = Field::rationals();
  const auto a = Subspace::span(q, 3, {{q.from_int(1), q.from_int(1), q.zero()}, {q.zero(), q.from_int(1), q.from_int(1)}});
  const auto b = Subspace::span(q, 3, {{q.from_int(1), q.zero(), q.from_int(-1)}, {q.from_int(2), q.from_int(3), q.from_int(1)}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.intersect(Subspace::span(q, 3, {unit_vec(q, 3, 0)})).dim() == 0);
}

TEST_CASE("projective points of F_q^n") {
  const Field f = Field::prime(3);
  CHECK(projective_points(f, 2).size() == 4);
  CHECK(projective_points(f, 3).size() == 13);
}

TEST_CASE("parallel index loop matches serial") {
  std::vector<std::uint64_t> a(1000), b(1000);
  for_each_index(1000, false, [&](std::uint64_t i) { a[i] = i * i % 97; });
  for_each_index(1000, true, [&](std::uint64_t i) { b[i] = i * i % 97; });
  CHECK(a == b);
}
