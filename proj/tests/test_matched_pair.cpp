#include <doctest.h>

#include "bicrossed/hopf.hpp"
#include "bicrossed/matched_pair.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;

namespace {

std::size_t basis_index(const Vec& v) {
  REQUIRE(v.size() == 1);
  REQUIRE(v.terms().front().coeff.is_one());
  return v.terms().front().index;
}

}  // namespace

TEST_CASE("trivial pair gives the tensor product algebra") {
  HopfStructure A = sweedler_h4().hopf;
  HopfStructure H = cyclic_group_algebra(3).hopf;
  MatchedPairHopf mp = trivial_matched_pair(A, H);
  CHECK(verify_matched_pair(mp).passed());
  BicrossedProduct bp = bicrossed_product(mp);
  CHECK(verify_axioms(bp.product, Level::hopf).passed());
  // (a (x) h)(b (x) k) = ab (x) hk on basis index a * 3 + h.
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t h = 0; h < 3; ++h)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(bp.product.product(a * 3 + h, b * 3 + k) ==
                tensor(A.product(a, b), H.product(h, k), 3));
}

TEST_CASE("H4n bicrossed products match the direct construction") {
  for (unsigned n = 2; n <= 6; ++n) {
    Field f = Field::cyclotomic(n);
    for (int t = 0; t < static_cast<int>(n); ++t) {
      FamilyParams p;
      p.n = n;
      p.t = t;
      p.field = f;
      MatchedPairHopf mp = h4n_matched_pair(p);
      CHECK(verify_matched_pair(mp).passed());
      PointedHopf viaproduct = h4n(p);
      PointedHopf direct = h4n_direct(f, n, family_xi(p).pow(t));
      CHECK(same_structure_constants(viaproduct.hopf, direct.hopf));
    }
  }
}

TEST_CASE("perturbed actions are rejected") {
  FamilyParams p;
  p.n = 3;
  p.t = 1;
  p.field = Field::cyclotomic(3);
  MatchedPairHopf mp = h4n_matched_pair(p);
  MatchedPairHopf bad = mp;
  // c |> x = 2x is not a coalgebra-compatible module action.
  bad.left[1 * mp.A.dim + 2] = Vec::basis(2, p.field.from_int(2));
  VerificationReport rep = verify_matched_pair(bad);
  CHECK_FALSE(rep.passed());
  CHECK_THROWS_AS(bicrossed_product(bad), VerificationFailure);

  MatchedPairHopf bad2 = mp;
  bad2.right[1 * mp.A.dim + 1] = Vec::basis(2);
  CHECK_FALSE(verify_matched_pair(bad2).passed());
}

TEST_CASE("serial and parallel matched pair checks agree") {
  FamilyParams p;
  p.n = 4;
  p.t = 1;
  p.l = 1;
  p.field = Field::cyclotomic(4);
  MatchedPairHopf mp = cn_h4n_matched_pair(p);
  MatchedPairHopf bad = mp;
  bad.right[2 * mp.A.dim + 1] = Vec::basis(0);  // x <| d = 1
  for (const MatchedPairHopf* q : {&mp, &bad}) {
    VerificationReport a = verify_matched_pair(*q, Exec::serial);
    VerificationReport b = verify_matched_pair(*q, Exec::parallel);
    CHECK(a.summary(1000) == b.summary(1000));
    CHECK(a.instances == b.instances);
  }
  CHECK(verify_matched_pair(mp).passed());
  CHECK_FALSE(verify_matched_pair(bad).passed());
}

TEST_CASE("canonical pair of a bicrossed product recovers the actions") {
  for (unsigned n : {2u, 3u, 4u}) {
    FamilyParams p;
    p.n = n;
    p.t = 1;
    p.l = 1;
    p.field = Field::cyclotomic(n);
    MatchedPairHopf mp = cn_h4n_matched_pair(p);
    BicrossedProduct bp = bicrossed_product(mp);
    CHECK(verify_axioms(bp.product, Level::hopf).passed());
    MatchedPairHopf back =
        canonical_matched_pair(bp.product, mp.A, mp.H, bp.embed_A, bp.embed_H);
    CHECK(back.left == mp.left);
    CHECK(back.right == mp.right);
  }
}

TEST_CASE("S4 = S3 C4 actions from the group factorization") {
  SymmetricGroupCase sg = symmetric_group_case();
  const HopfStructure& E = sg.s4.hopf;
  MatchedPairHopf mp =
      canonical_matched_pair(E, sg.s3.hopf, sg.c4.hopf, sg.embed_s3, sg.embed_c4);
  CHECK(verify_matched_pair(mp).passed());
  // Independent oracle: for h a in S4 find the unique a' h' with the same
  // value, by search over the 24 products.
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t a = 0; a < 6; ++a) {
      std::size_t ha = basis_index(
          E.multiply(sg.embed_c4.columns[h], sg.embed_s3.columns[a]));
      int found = 0;
      for (std::size_t a2 = 0; a2 < 6; ++a2)
        for (std::size_t h2 = 0; h2 < 4; ++h2)
          if (basis_index(E.multiply(sg.embed_s3.columns[a2], sg.embed_c4.columns[h2])) == ha) {
            ++found;
            CHECK(mp.left_at(h, a) == Vec::basis(a2));
            CHECK(mp.right_at(h, a) == Vec::basis(h2));
          }
      CHECK(found == 1);
    }
  BicrossedProduct bp = bicrossed_product(mp);
  CHECK(bp.product.dim == 24);
  CHECK(verify_axioms(bp.product, Level::hopf).passed());
}

TEST_CASE("overlapping subalgebras are not complements") {
  SymmetricGroupCase sg = symmetric_group_case();
  CHECK_THROWS_AS(
      canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.s3.hopf, sg.embed_s3, sg.embed_s3),
      Error);
}

TEST_CASE("smash product of H4 by a cyclic group") {
  for (unsigned n : {2u, 4u, 6u}) {
    Field f = Field::cyclotomic(n);
    FamilyParams p;
    p.n = n;
    p.t = 1;
    p.field = f;
    MatchedPairHopf mp = h4n_matched_pair(p);
    BicrossedProduct s = smash_product(mp.A, mp.H, mp.left);
    CHECK(verify_axioms(s.product, Level::hopf).passed());
    CHECK(same_structure_constants(s.product, bicrossed_product(mp).product));
  }
}

TEST_CASE("bicrossed products built from examples pass the Hopf axioms") {
  for (unsigned n : {2u, 3u, 5u}) {
    for (int l = 0; l < static_cast<int>(n); ++l) {
      FamilyParams p;
      p.n = n;
      p.t = static_cast<int>(n) - 1;
      p.l = l;
      p.field = Field::cyclotomic(n);
      BicrossedProduct bp = bicrossed_product(cn_h4n_matched_pair(p), false);
      CHECK(verify_axioms(bp.product, Level::hopf).passed());
    }
  }
}
