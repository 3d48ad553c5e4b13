#include <doctest.h>

#include "design_curves/hybrid.hpp"
#include "design_curves/io.hpp"

using namespace design_curves;

namespace {

Vec e3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

/// Ehler's first worked triple: the south pole with the height-1/3 circle.
HybridDesign ehler_triple_one() {
  HybridDesign h;
  h.points.emplace_back(e3(0, 0, -1));
  CircleSpec circ{e3(0, 0, 1.0 / 3), e3(1, 0, 0), e3(0, 1, 0)};
  h.curve = circ.curve();
  h.rho = 0.25;
  h.claimed_strength = 2;
  return h;
}

/// Ehler's second worked triple: both poles with the equator.
HybridDesign ehler_triple_two() {
  HybridDesign h;
  h.points.emplace_back(e3(0, 0, 1));
  h.points.emplace_back(e3(0, 0, -1));
  CircleSpec circ{Vec(Vec::Zero(3)), e3(1, 0, 0), e3(0, 1, 0)};
  h.curve = circ.curve();
  h.rho = 1.0 / 3;
  h.claimed_strength = 3;
  return h;
}

}  // namespace

TEST_CASE("Ehler's worked hybrid triples") {
  auto h1 = ehler_triple_one();
  auto rep1 = verify_hybrid(h1, 2);
  CHECK(rep1.pass);
  CHECK(rep1.max_defect < 1e-10);
  CHECK_FALSE(verify_hybrid(h1, 3).pass);

  auto h2 = ehler_triple_two();
  auto rep2 = verify_hybrid(h2, 3);
  CHECK(rep2.pass);
  CHECK(rep2.max_defect < 1e-10);
  CHECK_FALSE(verify_hybrid(h2, 4).pass);
}

TEST_CASE("konig_hybrid from the octahedron image") {
  ProjectiveDesignSet octa = cp1_octahedron();
  HybridDesign h = konig_hybrid(octa, 0, 7);
  CHECK(h.points.size() == 40);  // 5 fibers x 8 vertices
  CHECK(h.rho == doctest::Approx(5.0 / 6).epsilon(1e-15));
  auto rep = verify_hybrid(h, 7);
  CHECK(rep.pass);
  CHECK(rep.max_defect < 1e-9);

  HybridDesign h8 = konig_hybrid(octa, 0, 8);
  CHECK_FALSE(verify_hybrid(h8, 8).pass);

  // |Y| = 1 cannot work for t > 1
  std::vector<ProjPoint> one = {octa.points[0]};
  ProjectiveDesignSet y1(one, 0);
  try {
    konig_hybrid(y1, 0, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StrengthViolation);
  }
}

TEST_CASE("konig_hybrid works for every builtin CP^1 set at its strength") {
  struct Case {
    ProjectiveDesignSet y;
    std::vector<int> ts;
  };
  std::vector<Case> cases;
  cases.push_back({cp1_octahedron(), {6, 7}});
  cases.push_back({cp_basis_lines(1), {2, 3}});
  for (const auto& c : cases)
    for (int t : c.ts) {
      HybridDesign h = konig_hybrid(c.y, 0, t);
      CHECK(verify_hybrid(h, t).max_defect < 1e-9);
    }
}

TEST_CASE("gon_split_hybrid reproduces Ehler's triples") {
  // tetrahedron with apex at the south pole; removing the top 3-gon leaves
  // exactly Ehler's first triple
  auto tetra = builtin_set("tetrahedron");
  CircleSpec circ{e3(0, 0, 1.0 / 3), e3(1, 0, 0), e3(0, 1, 0)};
  HybridDesign h = gon_split_hybrid(tetra, circ, {1, 2, 3}, 2);
  CHECK(h.rho == doctest::Approx(0.25).epsilon(1e-15));
  REQUIRE(h.points.size() == 1);
  CHECK((h.points[0].coords - e3(0, 0, -1)).norm() < 1e-12);
  CHECK(verify_hybrid(h, 2).pass);

  // cross-polytope on S^2 with the equator square removed: rho = 1/3
  auto cross = builtin_set("cross_polytope", 2);  // order e1,e2,e3,-e1,-e2,-e3
  CircleSpec equator{Vec(Vec::Zero(3)), e3(1, 0, 0), e3(0, 1, 0)};
  HybridDesign h2 = gon_split_hybrid(cross, equator, {0, 1, 3, 4}, 3);
  CHECK(h2.rho == doctest::Approx(1.0 / 3).epsilon(1e-15));
  REQUIRE(h2.points.size() == 2);
  auto rep = verify_hybrid(h2, 3);
  CHECK(rep.pass);
  CHECK(rep.max_defect < 1e-10);
}

TEST_CASE("gon_split_hybrid rejections") {
  auto cross = builtin_set("cross_polytope", 2);
  CircleSpec equator{Vec(Vec::Zero(3)), e3(1, 0, 0), e3(0, 1, 0)};
  // s = 4 <= t = 4
  CHECK_THROWS_AS(gon_split_hybrid(cross, equator, {0, 1, 3, 4}, 4), Error);
  // e3 does not lie on the equator
  try {
    gon_split_hybrid(cross, equator, {0, 1, 2, 3}, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GonNotSubset);
  }
  // irregular subset of a hexagonal configuration
  auto v6 = builtin_set("polygon", 6);
  std::vector<Point> pts3;
  for (const auto& p : v6.points) {
    Vec v(3);
    v << p[0], p[1], 0.0;
    pts3.emplace_back(v);
  }
  WeightedDesignSet hex(pts3, std::vector<double>(6, 1.0 / 6), 1);
  try {
    gon_split_hybrid(hex, equator, {0, 1, 3}, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GonNotSubset);
  }
}

TEST_CASE("hybrid reductions: pure-curve and pure-set limits") {
  // rho = 0, empty set: agrees with empirical_defect at c = 1/l per monomial
  CircleSpec equator{Vec(Vec::Zero(3)), e3(1, 0, 0), e3(0, 1, 0)};
  HybridDesign curve_only;
  curve_only.curve = equator.curve();
  curve_only.rho = 0.0;
  curve_only.claimed_strength = 1;
  auto repC = verify_hybrid(curve_only, 2);
  double len = curve_length(curve_only.curve);
  auto repE = empirical_defect(curve_only.curve, 2, 1.0 / len);
  REQUIRE(repC.defects.size() == repE.defects.size());
  for (size_t i = 0; i < repC.defects.size(); ++i)
    CHECK(std::abs(repC.defects[i] - repE.defects[i] * monomial_sup(repC.basis[i])) < 1e-12);

  // rho = 1: agrees with the set verification defects
  auto octa = builtin_set("octahedron");
  HybridDesign set_only;
  set_only.points = octa.points;
  set_only.curve = equator.curve();
  set_only.rho = 1.0;
  set_only.claimed_strength = 3;
  auto repS = verify_hybrid(set_only, 4);
  auto repV = verify_weighted_design_set(octa, 4);
  REQUIRE(repS.defects.size() == repV.defects.size());
  for (size_t i = 0; i < repS.defects.size(); ++i)
    CHECK(std::abs(repS.defects[i] - repV.defects[i]) < 1e-12);
}

TEST_CASE("hybrid JSON round trip") {
  auto h = ehler_triple_two();
  json j = hybrid_to_json(h);
  HybridDesign back = hybrid_from_json(j);
  CHECK(back.rho == doctest::Approx(h.rho));
  REQUIRE(back.points.size() == h.points.size());
  auto r1 = verify_hybrid(h, 3);
  auto r2 = verify_hybrid(back, 3);
  CHECK(std::abs(r1.max_defect - r2.max_defect) < 1e-12);
  CHECK(r2.pass);
}
