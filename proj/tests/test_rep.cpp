#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qmod;
using qmod::test::load;

namespace {

Rep kronecker_rep(const Algebra& alg, DimVector d, std::vector<std::vector<long long>> a1,
                  std::vector<std::vector<long long>> a2) {
  return Rep(alg, std::move(d), {Matrix::from_ints(alg.field(), a1), Matrix::from_ints(alg.field(), a2)});
}

void check_properties(const test::PropertyStats& s) {
  for (const auto& m : s.log) INFO(m);
  CHECK(s.failures == 0);
  CHECK(s.checked > 0);
}

}  // namespace

TEST_CASE("submodule dimension vectors agree with the all-subspace oracle") {
  test::PropertyStats s;
  test::submodule_oracle_property(s, 17);
  check_properties(s);
}

TEST_CASE("invariants survive base change") {
  test::PropertyStats s;
  test::base_change_property(s, 23);
  check_properties(s);
}

TEST_CASE("hom from an indecomposable projective counts the vertex dimension") {
  std::mt19937_64 rng(7);
  for (const auto& text : test::small_algebras()) {
    auto w = load(text, "F5");
    const int n = w->alg->quiver().vertex_count();
    for (int t = 0; t < 3; ++t) {
      DimVector d(static_cast<std::size_t>(n));
      for (auto& x : d) x = std::uniform_int_distribution<int>(0, 2)(rng);
      const Rep m = test::random_rep(*w->alg, d, rng);
      for (int i = 0; i < n; ++i) CHECK(hom_dim(projective_rep(*w->alg, i), m) == static_cast<std::size_t>(d[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("radical layering") {
  auto w = load(test::small_algebras()[1]);
  const auto layers = radical_layering(projective_rep(*w->alg, 0));
  CHECK(layers == SemisimpleSequence{{1, 0}, {1, 1}, {0, 1}});
  CHECK(layering_string(w->alg->quiver(), layers) == "(S1, S1+S2, S2)");
  const Rep semisimple(*w->alg, {2, 3});
  CHECK(radical_layering(semisimple) == SemisimpleSequence{{2, 3}});
  CHECK(top_dims(projective_rep(*w->alg, 0)) == DimVector{1, 0});
}

TEST_CASE("validation and sub/quotient representations") {
  auto w = load(test::small_algebras()[1]);
  const Field& f = w->alg->field();
  // a*a = 0 fails for a nilpotent of order 3
  Rep bad(*w->alg, {3, 0}, {Matrix::from_ints(f, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), Matrix(f, 0, 3)});
  CHECK_FALSE(rep_validate(bad));
  const Rep p1 = projective_rep(*w->alg, 0);
  CHECK(rep_validate(p1));
  const Subspace rad = radical(p1);
  CHECK(graded_dims(p1, rad) == DimVector{1, 2});
  CHECK(quotient_rep(p1, rad).dims() == DimVector{1, 0});
  CHECK(sub_rep(p1, rad).dims() == DimVector{1, 2});
  const Subspace not_sub = Subspace::span(f, p1.total(), {unit_vec(f, p1.total(), 0)});
  CHECK_THROWS_AS(sub_rep(p1, not_sub), Error);
}

TEST_CASE("submodule enumeration refuses the rationals") {
  auto w = load(test::small_algebras()[0]);
  try {
    enumerate_submodules(projective_rep(*w->alg, 0));
    FAIL("expected FieldNotFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldNotFinite);
  }
}

TEST_CASE("isomorphism tests on Kronecker modules") {
  auto w = load(test::small_algebras()[0]);
  const Algebra& alg = *w->alg;
  const Rep m = kronecker_rep(alg, {1, 1}, {{1}}, {{2}});
  const Rep n = kronecker_rep(alg, {1, 1}, {{3}}, {{6}});
  const Rep o = kronecker_rep(alg, {1, 1}, {{1}}, {{3}});
  CHECK(is_isomorphic(m, n) == Tri::True);
  CHECK(is_isomorphic(m, o) == Tri::False);
  CHECK(is_isomorphic(m, Rep(alg, {1, 2})) == Tri::False);
}

TEST_CASE("local decomposition") {
  auto w = load(test::small_algebras()[0]);
  const Algebra& alg = *w->alg;
  const Rep sum = direct_sum(projective_rep(alg, 0), simple_rep(alg, 0));
  const Decomposition d = decompose_local(sum);
  REQUIRE(d.kind == Decomposition::Kind::Locals);
  CHECK(d.pieces.size() == 2);
  CHECK(d.notes.size() == d.pieces.size());
  Rep rebuilt = d.pieces[0];
  for (std::size_t i = 1; i < d.pieces.size(); ++i) rebuilt = direct_sum(rebuilt, d.pieces[i]);
  CHECK(is_isomorphic(rebuilt, sum) == Tri::True);
  for (const auto& piece : d.pieces) CHECK(total(top_dims(piece)) == 1);

  // indecomposable with top S1^2
  const Rep wide = kronecker_rep(alg, {2, 1}, {{1, 0}}, {{0, 1}});
  CHECK(decompose_local(wide).kind == Decomposition::Kind::NotSumOfLocals);
}

TEST_CASE("annihilators of two-sided ideals") {
  auto w = load(test::small_algebras()[1]);
  const Algebra& alg = *w->alg;
  const Rep p1 = projective_rep(alg, 0);
  // the ideal generated by a is spanned by a and b*a; it kills e2 P1 and a, b*a
  const auto a = AlgebraElement::path(alg.field(), Path{0, {0}}, alg.field().one());
  CHECK(two_sided_ideal(alg, {a}).dim() == 2);
  CHECK(annihilator_dim(p1, {a}) == 3);
}

TEST_CASE("parallel and serial submodule enumeration coincide") {
  auto w = load(test::small_algebras()[0], "F3");
  std::mt19937_64 rng(1);
  const Rep m = test::random_rep(*w->alg, {2, 2}, rng);
  const auto a = enumerate_submodules(m);
  const auto b = enumerate_submodules(m, {}, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
