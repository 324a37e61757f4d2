#include <doctest.h>

#include <vector>

#include "bicrossed/deformation.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;

namespace {

FamilyParams params(unsigned n, int t = 0, int l = 0, int p = 0) {
  FamilyParams f;
  f.n = n;
  f.t = t;
  f.l = l;
  f.p = p;
  f.field = Field::cyclotomic(n);
  return f;
}

// Iso classes of H_{4n,omega}, omega over U_n, by pairwise search.
unsigned iso_classes_by_search(unsigned n) {
  Field f = Field::cyclotomic(n);
  std::vector<PointedHopf> algs;
  for (unsigned k = 0; k < unit_group_order(f, n); ++k)
    algs.push_back(h4n_direct(f, n, root_of_unity(f, unit_group_order(f, n)).pow(k)));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    bool found = false;
    for (std::size_t r : reps) {
      IsoSearch s = hopf_iso_search(algs[r].hopf, algs[i].hopf, algs[r].cert, algs[i].cert);
      REQUIRE(s.exhaustive);
      if (s.map) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(i);
  }
  return static_cast<unsigned>(reps.size());
}

}  // namespace

TEST_CASE("H4n over every n-th root of unity passes the axioms") {
  for (unsigned n = 1; n <= 6; ++n) {
    Field f = Field::cyclotomic(n);
    for (unsigned k = 0; k < n; ++k) {
      PointedHopf h = h4n_direct(f, n, root_of_unity(f, n).pow(k));
      CHECK(h.hopf.dim == 4 * n);
      CHECK(verify_axioms(h.hopf, Level::hopf).passed());
      CHECK(check_certificate(h.hopf, h.cert).passed());
    }
  }
}

TEST_CASE("H4n relations") {
  const unsigned n = 4;
  FamilyParams p = params(n, 1);
  PointedHopf h = h4n(p);
  const HopfStructure& H = h.hopf;
  const Vec c = Vec::basis(4), g = Vec::basis(1), x = Vec::basis(2);
  const Scalar w = family_xi(p);
  CHECK(H.multiply(c, x) == H.multiply(x, c) * w);
  CHECK(H.multiply(c, g) == H.multiply(g, c));
  CHECK(H.multiply(x, g) == -H.multiply(g, x));
  Vec cn = H.unit;
  for (unsigned i = 0; i < n; ++i) cn = H.multiply(cn, c);
  CHECK(cn == H.unit);
}

TEST_CASE("family generator overrides are validated") {
  FamilyParams p = params(6);
  CHECK(family_nu(p) == 6);
  p.xi = root_of_unity(p.field, 6).pow(5);
  CHECK(family_xi(p) == *p.xi);
  p.xi = root_of_unity(p.field, 6).pow(2);
  CHECK_THROWS_AS(family_xi(p), Error);
  CHECK(family_nu(params(5)) == 5);
  FamilyParams q = params(4);
  q.field = Field();
  CHECK(family_nu(q) == 2);
}

TEST_CASE("the right action pairs are matched pairs") {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    for (int l = 0; l < static_cast<int>(n); ++l)
      for (int t = 0; t < static_cast<int>(n); ++t)
        CHECK(verify_matched_pair(cn_h4n_matched_pair(params(n, t, l))).passed());
  }
}

TEST_CASE("every r_p is a deformation map") {
  for (unsigned n : {2u, 3u, 4u, 5u})
    for (int p = 0; p < static_cast<int>(n); ++p) {
      FamilyParams f = params(n, 1, 1, p);
      CHECK(is_deformation_map(cn_h4n_matched_pair(f), rp_map(f)).passed());
    }
}

TEST_CASE("iso class count agrees with pairwise search") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u}) {
    CAPTURE(n);
    CHECK(h4n_iso_class_count(n, Field::cyclotomic(n)) == iso_classes_by_search(n));
  }
}

TEST_CASE("monomial basis of the direct construction is the identity") {
  for (unsigned n : {2u, 3u}) {
    PointedHopf h = h4n(params(n, 1));
    CHECK(h4n_monomial_basis(h.hopf, n) == Matrix::identity(4 * n));
  }
}

TEST_CASE("symmetric group case") {
  SymmetricGroupCase sg = symmetric_group_case();
  CHECK(sg.s4.hopf.dim == 24);
  CHECK(sg.s3.hopf.dim == 6);
  CHECK(sg.c4.hopf.dim == 4);
  CHECK(verify_axioms(sg.s4.hopf, Level::hopf).passed());
  CHECK(is_algebra_map(sg.embed_s3, sg.s3.hopf, sg.s4.hopf));
  CHECK(is_algebra_map(sg.embed_c4, sg.c4.hopf, sg.s4.hopf));
  CHECK(rank(multiplication_map(sg.s4.hopf, sg.embed_s3, sg.embed_c4)) == 24);
  // The C4 generator is the 4-cycle 0 -> 1 -> 2 -> 3 -> 0 and S3 fixes 3.
  std::size_t gen = sg.embed_c4.columns[1].terms().front().index;
  CHECK(sg.elements[gen] == std::array<int, 4>{1, 2, 3, 0});
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(sg.elements[sg.embed_s3.columns[a].terms().front().index][3] == 3);
}
