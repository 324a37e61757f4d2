#include <doctest.h>

#include <random>

#include "bicrossed/lie.hpp"

using namespace bicrossed;

namespace {

Scalar q(int n, int d = 1) { return Field().from_rational(Rational(n, d)); }

LinearMap column_map(std::size_t rows, std::vector<Vec> cols) {
  const std::size_t c = cols.size();
  return LinearMap{rows, c, std::move(cols)};
}

Vec random_vec(std::size_t dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Term> t;
  for (std::size_t i = 0; i < dim; ++i) t.push_back({i, q(d(rng))});
  return Vec::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("sl2 and small Lie algebras satisfy the axioms") {
  CHECK(verify_lie(sl2()).passed());
  CHECK(verify_lie(nonabelian2()).passed());
  CHECK(verify_lie(abelian_lie(4)).passed());
  LieAlgebra bad = sl2();
  bad.bracket[0 * 3 + 1] = Vec::basis(1, q(3));
  bad.bracket[1 * 3 + 0] = Vec::basis(1, q(-3));
  VerificationReport rep = verify_lie(bad);
  CHECK_FALSE(rep.passed());
  CHECK(rep.violations.front().axiom == "Jacobi identity");
  LieAlgebra skew = sl2();
  skew.bracket[1 * 3 + 1] = Vec::basis(0);
  CHECK_FALSE(verify_lie(skew).passed());
  CHECK(verify_lie(bad, Exec::serial).summary(1000) == rep.summary(1000));
}

TEST_CASE("sl2 borel pair matches the hand-derived action table") {
  LieAlgebra xi = sl2();  // h, e, f
  MatchedPairLie mp = canonical_matched_pair_lie(xi, {0, 1}, {2});
  // [f, h] = 2f lies in span{f}; [f, e] = -h lies in span{h, e}.
  CHECK(mp.left_at(0, 0).is_zero());                // f |> h = 0
  CHECK(mp.right_at(0, 0) == Vec::basis(0, q(2)));  // f <| h = 2f
  CHECK(mp.left_at(0, 1) == Vec::basis(0, q(-1)));  // f |> e = -h
  CHECK(mp.right_at(0, 1).is_zero());               // f <| e = 0
  CHECK(verify_matched_pair_lie(mp).passed());
  CHECK(mp.left == sl2_borel_pair().left);
  CHECK(mp.right == sl2_borel_pair().right);
}

TEST_CASE("canonical pair and bicrossed product round trip") {
  MatchedPairLie mp = sl2_borel_pair();
  BicrossedLie bl = bicrossed_lie(mp);
  CHECK(verify_lie(bl.product).passed());
  // Basis g first, then h: (h, e, f) is sl2 in its own order.
  CHECK(bl.product.bracket == sl2().bracket);
  MatchedPairLie back = canonical_matched_pair_lie(bl.product, {0, 1}, {2});
  CHECK(back.left == mp.left);
  CHECK(back.right == mp.right);

  MatchedPairLie zero = zero_matched_pair_lie(nonabelian2(), abelian_lie(2));
  CHECK(verify_matched_pair_lie(zero).passed());
  BicrossedLie sum = bicrossed_lie(zero);
  MatchedPairLie zb = canonical_matched_pair_lie(sum.product, {0, 1}, {2, 3});
  CHECK(zb.left == zero.left);
  CHECK(zb.right == zero.right);
}

TEST_CASE("non-complementary index sets are rejected") {
  CHECK_THROWS_AS(canonical_matched_pair_lie(sl2(), {1}, {2}), Error);     // no partition
  CHECK_THROWS_AS(canonical_matched_pair_lie(sl2(), {1, 2}, {0}), Error);  // [e,f] = h
}

TEST_CASE("the zero map leaves the bracket unchanged") {
  for (const MatchedPairLie& mp : {sl2_borel_pair(), scalar_action_pair(3, q(2))}) {
    LinearMap r0{mp.g.dim, mp.h.dim, std::vector<Vec>(mp.h.dim)};
    CHECK(is_deformation_map_lie(mp, r0).passed());
    CHECK(deformed_bracket(mp, r0).bracket == mp.h.bracket);
  }
}

TEST_CASE("deformed action for r(f) = h") {
  MatchedPairLie mp = sl2_borel_pair();
  LinearMap r = column_map(2, {Vec::basis(0)});
  DeformedPairLie dp = deform_matched_pair_lie(mp, r);
  // f |>^r e = [h, e] + f |> e - r(f <| e) = 2e - h.
  CHECK(dp.pair.left_at(0, 1) == Vec::from_terms({{0, q(-1)}, {1, q(2)}}));
  CHECK(dp.passed());
}

TEST_CASE("every map out of a one-dimensional complement is a deformation map") {
  LieDeformationFamily fam = enumerate_deformation_maps_lie(sl2_borel_pair());
  CHECK(fam.exhaustive);
  CHECK(fam.basis.size() == 2);
  for (const auto& r : fam.maps) CHECK(is_deformation_map_lie(sl2_borel_pair(), r).passed());
}

TEST_CASE("scalar action family") {
  // r(x_i) = phi_i a; the identity holds for every phi and
  // [x_i, x_j]_r = lambda (phi_j x_i - phi_i x_j).
  const Scalar lambda = q(3, 2);
  for (std::size_t m : {1u, 2u, 3u}) {
    MatchedPairLie mp = scalar_action_pair(m, lambda);
    CHECK(verify_matched_pair_lie(mp).passed());
    LieDeformationFamily fam = enumerate_deformation_maps_lie(mp);
    CHECK(fam.exhaustive);
    CHECK(fam.basis.size() == m);
    std::mt19937 rng(static_cast<unsigned>(m));
    for (int rep = 0; rep < 5; ++rep) {
      Vec phi = random_vec(m, rng);
      std::vector<Vec> cols;
      for (std::size_t i = 0; i < m; ++i) cols.push_back(Vec::basis(0, phi.at(i)));
      LinearMap r = column_map(1, cols);
      CHECK(is_deformation_map_lie(mp, r).passed());
      LieAlgebra d = deformed_bracket(mp, r);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Vec expect = Vec::basis(i, lambda * phi.at(j)) - Vec::basis(j, lambda * phi.at(i));
          CHECK(d.at(i, j) == expect);
        }
    }
  }
}

TEST_CASE("phi is a bracket-preserving bijection with closed graph") {
  std::mt19937 rng(19);
  MatchedPairLie mp = sl2_borel_pair();
  for (int rep = 0; rep < 10; ++rep) {
    LinearMap r = column_map(2, {random_vec(2, rng)});
    DeformedPairLie dp = deform_matched_pair_lie(mp, r);
    CHECK(dp.phi_bijective);
    CHECK(dp.phi_bracket);
    CHECK(dp.graph_closed);
    CHECK(dp.pair_report.passed());
  }
}

TEST_CASE("non-deformation maps are rejected") {
  // With zero actions the identity reduces to r([x,y]) = [r x, r y].
  MatchedPairLie mp = zero_matched_pair_lie(nonabelian2(), abelian_lie(2));
  LinearMap hom = column_map(2, {Vec::basis(1), Vec()});
  CHECK(is_deformation_map_lie(mp, hom).passed());
  LinearMap bad = column_map(2, {Vec::basis(0), Vec::basis(1)});  // [a, b] = b != 0
  CHECK_FALSE(is_deformation_map_lie(mp, bad).passed());
  CHECK_THROWS_AS(deform_lie(mp, bad), VerificationFailure);
}

TEST_CASE("Lie isomorphism search and invariants") {
  LieAlgebra a = nonabelian2();
  LieAlgebra b = abelian_lie(2);
  CHECK_FALSE(lie_invariants(a) == lie_invariants(b));
  IsoSearch none = lie_iso_search(a, b);
  CHECK_FALSE(none.map);
  CHECK(none.exhaustive);
  // [a', b'] = 5b' with a' = a/5 ... relabelled: [x, y] = 5y.
  LieAlgebra c = a;
  c.bracket[0 * 2 + 1] = Vec::basis(1, q(5));
  c.bracket[1 * 2 + 0] = Vec::basis(1, q(-5));
  IsoSearch found = lie_iso_search(a, c);
  REQUIRE(found.map);
  CHECK(is_lie_map(*found.map, a, c));
}

TEST_CASE("classification of the sl2 borel pair") {
  LieClassificationResult res =
      classify_complements_lie(sl2_borel_pair(), {}, LieStrategy::exhaustive_1dim);
  CHECK(res.exhaustive);
  CHECK(res.factorization_index == 1);
  CHECK(res.bijection_consistent);
}

TEST_CASE("classification of supplied scalar-family maps") {
  MatchedPairLie mp = scalar_action_pair(2, q(1));
  LinearMap zero{1, 2, std::vector<Vec>(2)};
  LinearMap r1 = column_map(1, {Vec::basis(0), Vec()});
  LinearMap r2 = column_map(1, {Vec::basis(0, q(2)), Vec::basis(0, q(-1))});
  LieClassificationResult res = classify_complements_lie(mp, {zero, r1, r2});
  CHECK(res.factorization_index == 2);
  CHECK(res.bijection_consistent);
  CHECK(res.iso_types == 2);
  CHECK_FALSE(res.exhaustive);
}
