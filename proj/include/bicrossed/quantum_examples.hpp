#pragma once

// Concrete Hopf algebras and matched pairs: Sweedler's algebra, cyclic group
// algebras, the H_{4n,omega} family, and the S3 / C4 factorization of S4.

#include <array>
#include <optional>
#include <vector>

#include "bicrossed/hopf.hpp"
#include "bicrossed/matched_pair.hpp"

namespace bicrossed {

struct FamilyParams {
  unsigned n = 1;
  int t = 0;
  int l = 0;
  int p = 0;
  Field field;
  /// Overrides the default generator root_of_unity(field, nu(n)).
  std::optional<Scalar> xi;
};

/// nu(n) for the params' field.
unsigned family_nu(const FamilyParams& params);
/// The chosen generator xi of U_n(field). Throws Error{invalid_input} when an
/// override is not a generator of that group.
Scalar family_xi(const FamilyParams& params);

/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
PointedHopf sweedler_h4(Field field = Field());

/// k[C_n] on the basis 1, c, ..., c^{n-1} (generator name configurable).
PointedHopf cyclic_group_algebra(unsigned n, Field field = Field(),
                                 const std::string& gen = "c");

/// H_{4n,omega} built from its relations, basis {c^i, gc^i, xc^i, gxc^i}
/// ordered i-major. No check that omega is an n-th root of unity.
PointedHopf h4n_direct(Field field, unsigned n, const Scalar& omega);

/// Pair (H4, k[C_n]) with c^i |> x = omega^i x and trivial right action.
/// No check on omega.
MatchedPairHopf h4n_matched_pair_with(Field field, unsigned n,
                                      const Scalar& omega);
/// The same pair with omega = xi^t.
MatchedPairHopf h4n_matched_pair(const FamilyParams& params);
/// Bicrossed product of h4n_matched_pair, re-indexed to the i-major basis
/// {c^i, gc^i, xc^i, gxc^i}, with its certificate.
PointedHopf h4n(const FamilyParams& params);
/// Position of a |x| c^i (a in 1, g, x, gx) in the a-major product basis.
std::vector<std::size_t> h4n_product_to_direct(unsigned n);

/// Pair (k[C_n] = <d>, H_{4n, xi^t}) with (xc^i) <| d^k = xi^{lk} xc^i, the
/// same on gxc^i, trivial on grouplikes, and trivial left action.
MatchedPairHopf cn_h4n_matched_pair(const FamilyParams& params);
PointedCertificate cn_certificate(unsigned n);

/// r_p : H_{4n, xi^t} -> k[C_n], c^i, gc^i -> d^{ip}, x-types -> 0.
LinearMap rp_map(const FamilyParams& params);

/// Columns g^a x^b c^i (index 4i + 2b + a), each product taken in h itself.
/// For any multiplication on the H_{4n} index set this is the monomial basis
/// in which the direct construction is written.
Matrix h4n_monomial_basis(const HopfStructure& h, unsigned n);

/// Number of isomorphism types among H_{4n,omega}, omega in U_n(field).
unsigned h4n_iso_class_count(unsigned n, Field field);

struct SymmetricGroupCase {
  PointedHopf s4;
  PointedHopf s3;
  PointedHopf c4;
  LinearMap embed_s3;
  LinearMap embed_c4;
  /// Permutations in one-line notation (images of 0..3), indexed like s4.
  std::vector<std::array<int, 4>> elements;
};

/// k[S4] with S3 fixing the last point and C4 generated by the 4-cycle
/// 1 -> 2 -> 3 -> 4 -> 1. Throws Error{not_complement} if the product map
/// were not bijective.
SymmetricGroupCase symmetric_group_case(Field field = Field());

}  // namespace bicrossed
