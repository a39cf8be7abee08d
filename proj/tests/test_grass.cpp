#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qmod;
using qmod::test::load;
using qmod::test::load_sample;

namespace {

std::vector<std::string> rendered(const ProjectiveCover& p, const std::vector<Skeleton>& sk) {
  std::vector<std::string> out;
  for (const auto& s : sk) out.push_back(skeleton_string(p, s));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Kronecker charts") {
  auto w = load_sample("kronecker.qm");
  const ProjectiveCover& p = *w->p;
  const auto sk = skeleta_with_dims(p, {1, 1});
  REQUIRE(sk.size() == 2);
  for (const auto& s : sk) {
    const ChartPresentation pres = chart_equations(p, s);
    CHECK(pres.vars.size() == 1);
    CHECK(pres.equations.empty());
  }
  const SubmodulePoint c = w->point();
  CHECK(is_grass_point(p, c, {1, 1}));
  CHECK(skeleta_of_point(p, c).size() == 2);
  // α1 ≡ α2 mod C: both skeleta; C = Λα2z1: only {z1, α1z1}
  CHECK(skeleta_of_point(p, w->point_from("(a1 - a2).z1;")).size() == 2);
  const auto only = skeleta_of_point(p, w->point_from("a2.z1;"));
  REQUIRE(only.size() == 1);
  CHECK(skeleton_string(p, only[0]) == "{z1, a1.z1}");
  // round trip through the chart containing the point
  for (const auto& s : sk) {
    const ChartPresentation pres = chart_equations(p, s);
    if (!complementary(p, c, s)) continue;
    const Vec coords = point_to_coords(p, pres, c);
    CHECK(coords_to_point(p, pres, coords).space == c.space);
  }
}

TEST_CASE("flag example: skeleton count") {
  auto w = load_sample("flag.qm");
  const ProjectiveCover& p = *w->p;
  const auto sk = enumerate_skeleta(p, *w->doc.layering);
  // choose 3 of the 4 arrows, then 2 of those to continue, then 1 of those
  CHECK(static_cast<long>(sk.size()) == binom(4, 3) * binom(3, 2) * binom(2, 1));
  for (const auto& s : sk) CHECK(skeleton_valid(p, s));
  CHECK(top_only_in_socle(p, 0));
}

TEST_CASE("tree example: layering and skeleta") {
  auto w = load_sample("tree.qm");
  const ProjectiveCover& p = *w->p;
  const SubmodulePoint c = w->point();
  CHECK(is_grass_point(p, c, {6, 5}));
  CHECK(radical_layering(coker_rep(p, c)) == SemisimpleSequence{{3, 0}, {2, 1}, {1, 2}, {0, 2}});
  const auto sk = rendered(p, skeleta_of_point(p, c));
  CHECK(contains(sk, "{z1, a.z1, b.z1, b*a.z1, c*b.z1, c*b*a.z1, d*c*b.z1, z2, c.z2, d*c.z2, z3}"));
  CHECK(contains(sk, "{z1, a.z1, b.z1, a*b.z1, c*b.z1, c*a*b.z1, d*c*b.z1, z2, c.z2, d*c.z2, z3}"));
  CHECK_FALSE(is_homogeneous_point(p, c));
  // skeleta of a point are skeleta of its layering
  const auto all = enumerate_skeleta(p, radical_layering(coker_rep(p, c)));
  for (const auto& s : skeleta_of_point(p, c)) CHECK(std::find(all.begin(), all.end(), s) != all.end());
}

TEST_CASE("tree example: the printed generators alone") {
  auto w = load_sample("tree.qm");
  const SubmodulePoint literal = w->point_from(
      "c.z1; c*a.z1; a*a.z1; b*b.z1; (b*a - a*b).z1; a.z2; b.z2; a.z3; b.z3; (c).z3 - (d*c*b).z1 - (d*c).z2;");
  // α²βz1, β²αz1 and δ²γz2 survive in the quotient
  CHECK(literal.quotient_dims == DimVector{8, 6});
}

TEST_CASE("monomial algebras: P has exactly one skeleton") {
  auto base = load_sample("tree.qm");
  auto w = test::with_top(*base, {1, 0});
  const ProjectiveCover& p = *w->p;
  const auto sk = enumerate_skeleta(p, radical_layering(p.rep()));
  REQUIRE(sk.size() == 1);
  CHECK(sk[0].coords.size() == p.dim());
}

TEST_CASE("loop example: charts, orbits, limits") {
  auto w = load_sample("loop_arrow.qm");
  const ProjectiveCover& p = *w->p;
  const auto sk = skeleta_with_dims(p, {2, 1});
  REQUIRE(sk.size() == 2);
  std::vector<std::size_t> vars;
  for (const auto& s : sk) vars.push_back(chart_equations(p, s).vars.size());
  std::sort(vars.begin(), vars.end());
  CHECK(vars == std::vector<std::size_t>{0, 1});
  // over F3 the chart A¹ has 3 points and there is one more point
  CHECK(grass_points(p, {2, 1}, {}).size() == 4);

  const EndoSpace e(p);
  const SubmodulePoint beta = w->point();
  CHECK(orbit_dims(p, e, beta).unipotent == 1);
  CHECK(orbit_dims(p, e, w->point_from("b*a.z1;")).aut == 0);
  const auto witness = endo_invariance_witness(p, e, beta);
  REQUIRE(witness);
  CHECK(e.describe(p, *witness) == "z1 -> a.z1");
}

TEST_CASE("unipotent orbit dimension agrees with a brute-force stabilizer") {
  auto base = load_sample("loop_arrow.qm");
  auto w = test::with_top(*base, {2, 0});
  const ProjectiveCover& p = *w->p;
  const EndoSpace e(p);
  const auto& uni = e.unipotent();
  std::mt19937_64 rng(9);
  const auto points = grass_points(p, {3, 2}, {});
  REQUIRE(!points.empty());
  for (int t = 0; t < 5; ++t) {
    const SubmodulePoint& c = points[rng() % points.size()];
    // count f in span(unipotent) with f(C) ⊆ C
    std::uint64_t stab = 0;
    const std::uint64_t count = power_saturating(3, uni.size());
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vec coeff = vector_from_index(p.field(), uni.size(), i);
      Matrix f(p.field(), p.dim(), p.dim());
      for (std::size_t k = 0; k < uni.size(); ++k) f = f + e.matrix(uni[k]).scaled(coeff[k]);
      bool keeps = true;
      for (std::size_t j = 0; j < c.space.dim() && keeps; ++j) keeps = c.space.contains(f.apply(c.space.vector(j)));
      stab += keeps;
    }
    const OrbitDims o = orbit_dims(p, e, c);
    CHECK(power_saturating(3, uni.size() - o.unipotent) == stab);
    CHECK(o.unipotent_dim == uni.size());
  }
}

TEST_CASE("two-cycle example: invariance witness") {
  auto w = load_sample("two_cycle.qm");
  const ProjectiveCover& p = *w->p;
  const SubmodulePoint c = w->point();
  CHECK(is_grass_point(p, c, {2, 2}));
  const EndoSpace e(p);
  const auto witness = endo_invariance_witness(p, e, c);
  REQUIRE(witness);
  // the witness really moves C
  bool moved = false;
  for (std::size_t j = 0; j < c.space.dim(); ++j) moved |= !c.space.contains(e.matrix(*witness).apply(c.space.vector(j)));
  CHECK(moved);
}

TEST_CASE("chart points have the layering of their skeleton") {
  test::PropertyStats s;
  test::chart_layering_property(s, 3, 100);
  for (const auto& m : s.log) INFO(m);
  CHECK(s.failures == 0);
  CHECK(s.checked >= 100);
}

TEST_CASE("charts are stable under automorphisms") {
  test::PropertyStats s;
  test::chart_stability_property(s, 4);
  for (const auto& m : s.log) INFO(m);
  CHECK(s.failures == 0);
  CHECK(s.checked > 0);
}

TEST_CASE("moduli verdicts") {
  CHECK(moduli_report(*load_sample("kronecker.qm")->p, {1, 1}).kind == ModuliVerdict::Kind::Fine);
  auto flag = load_sample("flag.qm");
  CHECK(moduli_report(*flag->p, {2, 3, 2}).kind == ModuliVerdict::Kind::Fine);
  auto loop = load_sample("loop_arrow.qm");
  const ModuliVerdict v = moduli_report(*loop->p, {2, 1});
  CHECK(v.kind == ModuliVerdict::Kind::NoCoarse);
  REQUIRE(v.witness);
  CHECK(v.witness->space == loop->point().space);
}

TEST_CASE("star quiver strata") {
  auto w = load(
      "quiver { vertices: 1 2 3; arrows: a1: 1 -> 2, a2: 1 -> 2, c: 1 -> 3; }\n"
      "algebra { field: Q; max_len: 3; relations: [J^2]; }\ntop: (1,0,0);\n");
  const auto strata = strata_by_total(*w->p, 3);
  std::map<DimVector, std::vector<std::size_t>> vars;
  for (const auto& s : strata) {
    for (std::size_t k = 0; k < s.skeleta.size(); ++k) CHECK(s.chart_equations[k] == 0);
    vars[s.d] = s.chart_vars;
  }
  // Gr(1, K²) covered by two lines, and a point
  CHECK(vars.at({1, 1, 1}) == std::vector<std::size_t>{1, 1});
  CHECK(vars.at({1, 2, 0}) == std::vector<std::size_t>{0});
}

TEST_CASE("homogeneity of points") {
  auto w = load_sample("loops_two_arrows.qm");
  CHECK(is_homogeneous_point(*w->p, w->point()));
  auto mixed = load(
      "quiver { vertices: 1; arrows: a: 1 -> 1, b: 1 -> 1, c: 1 -> 1; }\n"
      "algebra { field: Q; max_len: 6; relations: [a*a - c*b*a, J^4]; }\ntop: (1);\n");
  try {
    is_homogeneous_point(*mixed->p, make_point(*mixed->p, {}));
    FAIL("expected IdealNotGraded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdealNotGraded);
  }
}
