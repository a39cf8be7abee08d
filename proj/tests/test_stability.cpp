#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qmod;
using qmod::test::load;

namespace {

// Local with top at vertex `top`: every other vertex is covered by arrow
// images, judged by ranks alone.
bool local_at(const Rep& m, int top) {
  const Quiver& q = m.algebra().quiver();
  for (int i = 0; i < q.vertex_count(); ++i) {
    std::vector<Vec> cols;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).to == i)
        for (std::size_t j = 0; j < m.map(a).cols(); ++j) cols.push_back(m.map(a).col(j));
    const std::size_t covered = cols.empty() ? 0 : Subspace::span(m.field(), static_cast<std::size_t>(m.dim(i)), cols).dim();
    const int top_mult = m.dim(i) - static_cast<int>(covered);
    if (top_mult != (i == top ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("weights and characters") {
  const Weight theta = local_top_weight(0, {1, 2, 1});
  CHECK(theta == Weight{-3, 1, 1});
  CHECK(theta_of(theta, {1, 2, 1}) == 0);
  const Field f = Field::prime(7);
  GroupElement g{Matrix::from_ints(f, {{2}}), Matrix::from_ints(f, {{1, 1}, {0, 3}}), Matrix::from_ints(f, {{5}})};
  // det(g1)^-3 det(g2) det(g3) = 2^-3 · 3 · 5
  CHECK(character_value(f, theta, g) == f.from_int(2).pow(-3) * f.from_int(15));
  g[1] = Matrix::from_ints(f, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(character_value(f, theta, g), Error);
}

TEST_CASE("local modules are exactly the stable ones (exhaustive over F2)") {
  struct Case {
    std::string text;
    DimVector d;
  };
  const std::vector<Case> cases = {
      {test::small_algebras()[0], {1, 1}},
      {test::small_algebras()[0], {1, 2}},
      {test::small_algebras()[0], {1, 3}},
      {test::small_algebras()[2], {1, 1, 1}},
      {test::small_algebras()[2], {1, 2, 1}},
  };
  for (const auto& c : cases) {
    auto w = load(c.text, "F2");
    const Weight theta = local_top_weight(0, c.d);
    std::size_t stable = 0;
    const auto reps = test::all_reps(*w->alg, c.d);
    CHECK(!reps.empty());
    for (const auto& m : reps) {
      const bool is_stable = classify_stability(m, theta) == Stability::Stable;
      CHECK(is_stable == local_at(m, 0));
      stable += is_stable;
    }
    // d = (1,3) admits no local module
    CHECK((stable > 0) == (c.d != DimVector{1, 3}));
  }
}

TEST_CASE("positive scaling of the weight keeps verdicts") {
  auto w = load(test::small_algebras()[0], "F3");
  const Weight theta{-2, 1}, scaled{-6, 3};
  for (const auto& m : test::all_reps(*w->alg, {1, 2})) CHECK(classify_stability(m, theta) == classify_stability(m, scaled));
}

TEST_CASE("stability needs a finite field") {
  auto w = load(test::small_algebras()[0]);
  try {
    classify_stability(projective_rep(*w->alg, 0), {-2, 1});
    FAIL("expected FieldNotFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldNotFinite);
  }
}

TEST_CASE("stable factors and S-equivalence") {
  auto w = load(test::small_algebras()[0], "F3");
  const Algebra& alg = *w->alg;
  const Field& f = alg.field();
  const Weight theta{-1, 1};
  // two non-isomorphic extensions of the same pair of stable modules
  const Rep m(alg, {2, 2}, {Matrix::from_ints(f, {{1, 0}, {0, 1}}), Matrix::from_ints(f, {{0, 0}, {0, 1}})});
  const Rep n(alg, {2, 2}, {Matrix::from_ints(f, {{1, 0}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {0, 0}})});
  REQUIRE(classify_stability(m, theta) != Stability::Unstable);
  REQUIRE(classify_stability(n, theta) != Stability::Unstable);
  const auto factors = stable_factors(m, theta);
  DimVector sum{0, 0};
  for (const auto& x : factors) {
    CHECK(classify_stability(x, theta) == Stability::Stable);
    sum[0] += x.dim(0);
    sum[1] += x.dim(1);
  }
  CHECK(sum == DimVector{2, 2});
  CHECK(s_equivalent(m, m, theta) == Tri::True);
  // m has factors with a2 = 0 and a2 = 1, n only a2 = 0 (nilpotent)
  CHECK(s_equivalent(m, n, theta) == Tri::False);

  const Rep unstable = simple_rep(alg, 0);
  CHECK(classify_stability(direct_sum(unstable, simple_rep(alg, 1)), theta) == Stability::Unstable);
  const Rep line(alg, {1, 1}, {Matrix::from_ints(f, {{1}}), Matrix::from_ints(f, {{2}})});
  CHECK(classify_stability(line, theta) == Stability::Stable);
  CHECK(classify_stability(direct_sum(line, line), theta) == Stability::SemistableNotStable);
  try {
    stable_factors(direct_sum(unstable, unstable), theta);
    FAIL("expected NotSemistable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemistable);
  }
}
