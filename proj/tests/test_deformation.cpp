#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "bicrossed/deformation.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;

namespace {

FamilyParams params(unsigned n, int t, int l, int p = 0) {
  FamilyParams f;
  f.n = n;
  f.t = t;
  f.l = l;
  f.p = p;
  f.field = Field::cyclotomic(n);
  return f;
}

std::size_t idx(const Vec& v) { return v.terms().front().index; }

struct S4Pair {
  SymmetricGroupCase sg = symmetric_group_case();
  MatchedPairHopf mp =
      canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.c4.hopf, sg.embed_s3, sg.embed_c4);
};

LinearMap map_from_function(const std::vector<std::size_t>& f, std::size_t rows) {
  LinearMap r{rows, f.size(), {}};
  for (std::size_t v : f) r.columns.push_back(Vec::basis(v));
  return r;
}

}  // namespace

TEST_CASE("S4: deformation maps by brute force over all unitary group maps") {
  S4Pair s;
  const MatchedPairHopf& mp = s.mp;
  const std::size_t one_A = idx(mp.A.unit), one_H = idx(mp.H.unit);
  std::vector<LinearMap> oracle;
  std::size_t candidates = 0;
  std::vector<std::size_t> f(4, one_A);
  std::vector<std::size_t> free;
  for (std::size_t h = 0; h < 4; ++h)
    if (h != one_H) free.push_back(h);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == free.size()) {
      ++candidates;
      // r((h <| r(g)) g) = r(h) (h |> r(g)) on group elements.
      bool ok = true;
      for (std::size_t h = 0; h < 4 && ok; ++h)
        for (std::size_t g = 0; g < 4 && ok; ++g) {
          std::size_t hg = idx(mp.right_at(h, f[g]));
          std::size_t lhs = f[idx(mp.H.product(hg, g))];
          std::size_t rhs = idx(mp.A.product(f[h], idx(mp.left_at(h, f[g]))));
          ok = lhs == rhs;
        }
      LinearMap r = map_from_function(f, 6);
      CHECK(is_deformation_map(mp, r).passed() == ok);
      if (ok) oracle.push_back(r);
      return;
    }
    for (std::size_t a = 0; a < 6; ++a) {
      f[free[k]] = a;
      rec(k + 1);
    }
  };
  rec(0);
  CHECK(candidates == 216);
  std::sort(oracle.begin(), oracle.end(),
            [](const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; });
  DeformationEnumeration en = enumerate_deformation_maps(mp, s.sg.c4.cert, s.sg.s3.cert);
  CHECK(en.exhaustive);
  CHECK(en.maps == oracle);
  CHECK(oracle.size() == 4);
}

TEST_CASE("enumeration on the right action pairs returns exactly the r_p") {
  for (unsigned n : {2u, 3u, 4u}) {
    for (int l = 0; l < static_cast<int>(n); ++l) {
      FamilyParams f = params(n, 1, l);
      MatchedPairHopf mp = cn_h4n_matched_pair(f);
      DeformationEnumeration en =
          enumerate_deformation_maps(mp, h4n(f).cert, cn_certificate(n));
      CHECK(en.exhaustive);
      std::vector<LinearMap> expect;
      for (int p = 0; p < static_cast<int>(n); ++p) expect.push_back(rp_map(params(n, 1, l, p)));
      std::sort(expect.begin(), expect.end(),
                [](const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; });
      CHECK(en.maps == expect);
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  FamilyParams f = params(4, 3, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  auto a = enumerate_deformation_maps(mp, h4n(f).cert, cn_certificate(4), Exec::serial);
  auto b = enumerate_deformation_maps(mp, h4n(f).cert, cn_certificate(4), Exec::parallel);
  CHECK(a.maps == b.maps);
  LinearMap bad = rp_map(params(4, 3, 1, 1));
  bad.columns[2] = Vec::basis(1);
  VerificationReport s = is_deformation_map(mp, bad, Exec::serial);
  VerificationReport q = is_deformation_map(mp, bad, Exec::parallel);
  CHECK_FALSE(s.passed());
  CHECK(s.summary(1000) == q.summary(1000));
}

TEST_CASE("perturbed maps are not deformation maps") {
  FamilyParams f = params(3, 2, 1, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  LinearMap r = rp_map(f);
  CHECK(is_deformation_map(mp, r).passed());
  LinearMap r2 = r;
  r2.columns[4] = Vec::basis(2);  // c -> d^2 instead of d
  CHECK_FALSE(is_deformation_map(mp, r2).passed());
  LinearMap r3 = r;
  r3.columns[0] = Vec::basis(1);  // not unitary
  CHECK_FALSE(is_deformation_map(mp, r3).passed());
}

TEST_CASE("the trivial map deforms nothing") {
  FamilyParams f = params(5, 4, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  LinearMap r0 = trivial_deformation_map(mp);
  CHECK(r0 == rp_map(params(5, 4, 1, 0)));
  CHECK(same_structure_constants(deform_hopf(mp, r0).hopf, mp.H));
  DeformedPair dp = deform_matched_pair(mp, r0);
  CHECK(dp.passed());
  CHECK(dp.psi == Matrix::identity(mp.A.dim * mp.H.dim));
}

TEST_CASE("psi is a left A-linear bialgebra isomorphism for every enumerated map") {
  for (unsigned n : {2u, 3u, 4u}) {
    FamilyParams f = params(n, 1, 1);
    MatchedPairHopf mp = cn_h4n_matched_pair(f);
    for (const LinearMap& r : enumerate_deformation_maps(mp, h4n(f).cert, cn_certificate(n)).maps) {
      DeformedPair dp = deform_matched_pair(mp, r);
      CHECK(dp.psi_bijective);
      CHECK(dp.psi_checks.algebra_map);
      CHECK(dp.psi_checks.coalgebra_map);
      CHECK(dp.psi_checks.left_linear);
      CHECK(dp.pair_report.passed());
    }
  }
}

TEST_CASE("deforming by a non-deformation map throws") {
  FamilyParams f = params(3, 1, 1, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  LinearMap bad = rp_map(f);
  bad.columns[4] = Vec::basis(0);
  CHECK_THROWS_AS(deform_hopf(mp, bad), VerificationFailure);
  CHECK_THROWS_AS(deform_matched_pair(mp, bad), VerificationFailure);
}

TEST_CASE("equivalence witnesses satisfy the defining relation") {
  FamilyParams f = params(5, 4, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  PointedCertificate cert = h4n(f).cert;
  std::vector<LinearMap> maps;
  for (int p = 0; p < 5; ++p) maps.push_back(rp_map(params(5, 4, 1, p)));
  // r_p deforms to omega = xi^{4 - p}: p = 0..3 give primitive roots, p = 4
  // gives omega = 1.
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      IsoSearch eq = are_equivalent(mp, cert, maps[p], maps[q]);
      CHECK(eq.exhaustive);
      REQUIRE(eq.map);
      CHECK(is_equivalence_witness(mp, maps[p], maps[q], *eq.map));
    }
  IsoSearch none = are_equivalent(mp, cert, maps[0], maps[4]);
  CHECK_FALSE(none.map.has_value());
  CHECK(none.exhaustive);
  CHECK(is_equivalence_witness(mp, maps[2], maps[2], Matrix::identity(20)));
}

TEST_CASE("Hopf isomorphism search") {
  PointedHopf h4 = sweedler_h4();
  PointedHopf c4 = cyclic_group_algebra(4);
  CayleyTable klein;
  klein.order = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    klein.names.push_back("k" + std::to_string(i));
    for (std::size_t j = 0; j < 4; ++j) klein.table.push_back(i ^ j);
  }
  PointedHopf k = group_algebra(klein);
  IsoSearch self = hopf_iso_search(h4.hopf, h4.hopf, h4.cert, h4.cert);
  REQUIRE(self.map);
  CHECK(is_algebra_map(*self.map, h4.hopf, h4.hopf));
  CHECK_FALSE(hopf_iso_search(c4.hopf, k.hopf, c4.cert, k.cert).map);
  CHECK_FALSE(hopf_iso_search(h4.hopf, c4.hopf, h4.cert, c4.cert).map);
  // Relabelled copies are found.
  HopfStructure perm = permute_basis(c4.hopf, {0, 3, 2, 1});
  PointedCertificate pc{{0, 1, 2, 3}, {}};
  CHECK(hopf_iso_search(c4.hopf, perm, c4.cert, pc).map);
}

TEST_CASE("classification counts on small pairs") {
  struct Case {
    unsigned n;
    int t, l;
    std::size_t index;
  };
  for (Case c : {Case{2, 1, 1, 1}, Case{3, 2, 1, 2}, Case{4, 3, 1, 2}, Case{5, 4, 1, 2}}) {
    CAPTURE(c.n);
    FamilyParams f = params(c.n, c.t, c.l);
    ClassificationResult res =
        classify_complements(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(c.n));
    CHECK(res.exhaustive);
    CHECK(res.bijection_consistent);
    CHECK(res.factorization_index == c.index);
    CHECK(res.factorization_index == res.iso_types);
    std::size_t members = 0;
    for (const auto& cl : res.classes) members += cl.members.size();
    CHECK(members == res.maps.size());
  }
}

TEST_CASE("unsupported shapes are flagged, not guessed") {
  FamilyParams f = params(3, 1, 1, 1);
  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  PointedCertificate partial = h4n(f).cert;
  partial.skew_primitives.pop_back();
  CHECK_THROWS_AS(enumerate_deformation_maps(mp, partial, cn_certificate(3)), Error);
  ClassificationResult res = classify_complements(mp, partial, cn_certificate(3), {rp_map(f)});
  CHECK_FALSE(res.exhaustive);
  CHECK(res.maps.size() == 2);
}
