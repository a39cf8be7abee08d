#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qmod;
using qmod::test::load;
using qmod::test::load_sample;

namespace {

// " + c*path" with the sign folded in
std::string term(long c, const std::string& path) {
  return (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c) + "*" + path;
}

// The hypergraph example: L z2 plus the C1 or C2 generator.
std::string family_one(long c1, long c3) {
  return "(0" + term(c1, "a*w1") + term(2 * c1, "a*w2") + term(c3, "b*w3") + term(3 * c3, "b*w4") +
         ").z1; (a*w1 + 2*a*w2).z2; (b*w3 + 3*b*w4).z2;";
}
std::string family_two(long c1, long c2) {
  return "(a*w1 + 2*a*w2).z2; (b*w3 + 3*b*w4).z2; (0" + term(c1, "a*w1") + term(c2, "b*w4") + ").z2;";
}

}  // namespace

TEST_CASE("loop example: degenerations") {
  auto w = load_sample("loop_arrow.qm");
  const ProjectiveCover& p = *w->p;
  const SubmodulePoint beta = w->point();
  const DegenerationTest t = no_proper_topstable_deg(p, beta);
  CHECK(t.result == Tri::False);
  CHECK(t.reason.find("hom-dimension mismatch") != std::string::npos);
  const SubmodulePoint top = w->point_from("b*a.z1;");
  CHECK(no_proper_topstable_deg(p, top).result == Tri::True);

  const Matrix h = doc_endo(p, *w->doc.endo);
  const SubmodulePoint lim = one_param_limit(p, beta, h);
  CHECK(lim.space == top.space);
  CHECK(is_grass_point(p, lim, {2, 1}));
  CHECK(one_param_limit(p, lim, h).space == lim.space);
  CHECK(hom_order_leq(coker_rep(p, beta), coker_rep(p, lim)));

  const TopdegResult r = maximal_topdeg_candidates(p, {2, 1}, beta, std::nullopt);
  CHECK(r.complete);
  REQUIRE(r.survivors.size() == 1);
  CHECK(r.survivors[0].point.space == top.space);
  CHECK(r.survivors[0].degeneration.has_value());
}

TEST_CASE("degeneration errors") {
  auto w = load_sample("loop_arrow.qm");
  const ProjectiveCover& p = *w->p;
  try {
    one_param_limit(p, w->point(), Matrix::identity(p.field(), p.dim()));
    FAIL("expected NotNilpotentDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNilpotentDirection);
  }
  try {
    no_proper_topstable_deg(p, w->point_from("z1;"));
    FAIL("expected TopMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TopMismatch);
  }
  try {
    hom_order_leq(simple_rep(*w->alg, 0), simple_rep(*w->alg, 1));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("hypergraph example") {
  auto w = load_sample("hypergraph.qm");
  const ProjectiveCover& p = *w->p;
  const Algebra& alg = *w->alg;
  const SubmodulePoint c = w->point();
  REQUIRE(is_grass_point(p, c, {10, 9}));
  const Rep m = coker_rep(p, c);

  const Field& f = alg.field();
  auto path = [&](std::vector<int> arrows, long k) {
    return AlgebraElement::path(f, Path{0, std::move(arrows)}, f.from_int(k));
  };
  const AlgebraElement l1 = path({0, 4}, 1) + path({1, 4}, 2);  // a*w1 + 2 a*w2
  const AlgebraElement l2 = path({2, 5}, 1) + path({3, 5}, 3);  // b*w3 + 3 b*w4
  CHECK(annihilator_dim(m, {l1, l2}) == 18);

  const DegenerationTest t = no_proper_topstable_deg(p, c);
  CHECK(t.decomposition.kind == Decomposition::Kind::Locals);
  CHECK(t.decomposition.pieces.size() == 2);
  CHECK(t.result == Tri::False);
  CHECK(t.reason.find("hom-dimension mismatch") != std::string::npos);

  for (auto [c1, c3] : std::vector<std::pair<long, long>>{{1, 1}, {2, -1}, {3, 5}}) {
    const SubmodulePoint d = w->point_from(family_one(c1, c3));
    REQUIRE(is_grass_point(p, d, {10, 9}));
    CHECK(no_proper_topstable_deg(p, d).result == Tri::True);
  }
  for (auto [c1, c2] : std::vector<std::pair<long, long>>{{1, 1}, {1, -2}, {4, 3}}) {
    const SubmodulePoint d = w->point_from(family_two(c1, c2));
    REQUIRE(is_grass_point(p, d, {10, 9}));
    CHECK(no_proper_topstable_deg(p, d).result == Tri::True);
    // z2 -> (c1 w1 + c2 w4) z2 carries (a + b) z2 towards (c1 a w1 + c2 b w4) z2
    std::vector<Vec> images{zero_vec(f, p.dim()), p.element_at(path({0}, c1) + path({3}, c2), 1)};
    const SubmodulePoint lim = one_param_limit(p, c, endo_from_images(p, images));
    CHECK(lim.space == d.space);
    CHECK(hom_order_leq(m, coker_rep(p, lim)));
  }
}

TEST_CASE("degeneration test is invariant under automorphisms") {
  auto w = load_sample("loop_arrow.qm");
  auto big = test::with_top(*w, {2, 0});
  const ProjectiveCover& p = *big->p;
  const EndoSpace e(p);
  std::mt19937_64 rng(12);
  const auto points = grass_points(p, {3, 2}, {});
  for (int t = 0; t < 10; ++t) {
    const SubmodulePoint& c = points[rng() % points.size()];
    Matrix f(p.field(), p.dim(), p.dim());
    for (std::size_t k = 0; k < e.size(); ++k) f = f + e.matrix(k).scaled(p.field().random(rng));
    SubmodulePoint fc;
    try {
      fc = apply_auto(p, f, c);
    } catch (const Error&) {
      continue;
    }
    CHECK(no_proper_topstable_deg(p, c).result == no_proper_topstable_deg(p, fc).result);
  }
}

TEST_CASE("Nakayama algebras: failures are hom mismatches with a maximal degeneration above") {
  // Kernels of uniserial projectives are always comparable, so only the hom
  // condition can fail; when it does, some top-stable degeneration survives.
  const std::vector<std::string> algebras = {
      "quiver { vertices: 1 2 3; arrows: a: 1 -> 2, b: 2 -> 3; }\nalgebra { field: F2; max_len: 3; relations: none; }\n",
      "quiver { vertices: 1 2; arrows: a: 1 -> 2, b: 2 -> 1; }\nalgebra { field: F3; max_len: 5; relations: [J^4]; }\n",
      "quiver { vertices: 1; arrows: a: 1 -> 1; }\nalgebra { field: F3; max_len: 5; relations: [a*a*a]; }\n",
  };
  for (const auto& text : algebras) {
    auto base = load(text);
    REQUIRE(base->alg->is_nakayama());
    TopSpec top(static_cast<std::size_t>(base->alg->quiver().vertex_count()), 0);
    top[0] = 2;
    if (top.size() > 1) top[1] = 1;
    auto w = test::with_top(*base, top);
    std::size_t trues = 0, falses = 0;
    for (int extra = 1; extra <= 3; ++extra)
      for (const auto& s : strata_by_total(*w->p, total(top) + extra))
        for (const auto& c : grass_points(*w->p, s.d, {})) {
          const DegenerationTest t = no_proper_topstable_deg(*w->p, c);
          REQUIRE(t.result != Tri::Unknown);
          if (t.result == Tri::True) {
            ++trues;
            continue;
          }
          ++falses;
          CHECK(t.reason.find("hom-dimension mismatch") == 0);
          if (extra <= 2) CHECK(!maximal_topdeg_candidates(*w->p, s.d, c, std::nullopt).survivors.empty());
        }
    CHECK(trues > 0);
    CHECK(falses > 0);
  }
}

TEST_CASE("two arrows out of a vertex: incomparable kernels") {
  auto base = load(test::small_algebras()[0], "F3");
  auto w = test::with_top(*base, {2, 0});
  const SubmodulePoint c = w->point_from("a2.z1; a1.z2;");
  REQUIRE(is_grass_point(*w->p, c, {2, 2}));
  const DegenerationTest t = no_proper_topstable_deg(*w->p, c);
  CHECK(t.result == Tri::False);
  CHECK(t.reason.find("kernels not comparable") == 0);
}

TEST_CASE("two arrows into a vertex: not a sum of local modules") {
  auto w = load(
      "quiver { vertices: 1 2 3; arrows: a: 1 -> 3, b: 2 -> 3; }\n"
      "algebra { field: Q; max_len: 2; relations: none; }\ntop: (1,1,0);\n");
  const SubmodulePoint c = w->point_from("(a).z1 - (b).z2;");
  REQUIRE(is_grass_point(*w->p, c, {1, 1, 1}));
  const DegenerationTest t = no_proper_topstable_deg(*w->p, c);
  CHECK(t.result == Tri::False);
  CHECK(t.reason == "not a direct sum of local modules");
}
