#pragma once

// Deformation maps of a matched pair (A, H), the deformed Hopf algebras H_r,
// equivalence of deformation maps and the classification of complements.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicrossed/hopf.hpp"
#include "bicrossed/matched_pair.hpp"

namespace bicrossed {

/// r : H -> A for a fixed matched pair; the pair is kept by the caller.
struct DeformationMapHopf {
  LinearMap r;
};

/// Lexicographic order on columns, used for canonical ordering of maps.
int compare_maps(const LinearMap& a, const LinearMap& b);

/// r(h) = eps(h) 1_A.
LinearMap trivial_deformation_map(const MatchedPairHopf& mp);

/// Checks r(1) = 1, that r is a coalgebra map, cocentrality and
/// r((h <| r(g_(1))) g_(2)) = r(h_(1)) (h_(2) |> r(g)) on all basis pairs.
VerificationReport is_deformation_map(const MatchedPairHopf& mp,
                                      const LinearMap& r,
                                      Exec exec = Exec::parallel);

/// H with product h.g = (h <| r(g_(1))) g_(2) and antipode
/// S(h) = S_H(h_(2)) <| S_A(r(h_(1))). No checks.
HopfStructure deformed_structure(const MatchedPairHopf& mp, const LinearMap& r);

/// Checked version: throws VerificationFailure unless r is a deformation map
/// and H_r passes the Hopf axioms. The certificate of H is carried over.
PointedHopf deform_hopf(const MatchedPairHopf& mp, const LinearMap& r,
                        const PointedCertificate& cert_H = {});

struct DeformedPair {
  /// (A, H_r) with h |>^r a = r(h_(1)) (h_(2) |> a_(1)) S_A(r(h_(3) <| a_(2))).
  MatchedPairHopf pair;
  /// psi : A bicrossed_r H_r -> A bicrossed H, a (x) h -> a r(h_(1)) (x) h_(2).
  LinearMap psi;
  bool psi_bijective = false;
  MapPredicates psi_checks;
  VerificationReport pair_report;

  bool passed() const {
    return psi_bijective && psi_checks.algebra_map &&
           psi_checks.coalgebra_map && psi_checks.unitary &&
           psi_checks.left_linear && pair_report.passed();
  }
};

/// Builds the deformed pair and psi and evaluates every predicate. Throws
/// VerificationFailure when r is not a deformation map.
DeformedPair deform_matched_pair(const MatchedPairHopf& mp, const LinearMap& r);

struct DeformationEnumeration {
  std::vector<LinearMap> maps;  // sorted by compare_maps
  bool exhaustive = true;
};

/// All deformation maps, relative to pointed certificates whose grouplikes
/// and skew-primitives together form the bases of H and of A. Throws
/// Error{unsupported_shape} otherwise.
DeformationEnumeration enumerate_deformation_maps(
    const MatchedPairHopf& mp, const PointedCertificate& cert_H,
    const PointedCertificate& cert_A, Exec exec = Exec::parallel);

struct IsoSearch {
  std::optional<LinearMap> map;
  bool exhaustive = true;
};

/// A unitary coalgebra isomorphism H1 -> H2 that is also an algebra map,
/// found through grouplike group isomorphisms and skew-primitive blocks.
/// extra_check filters candidate witnesses. Throws Error{unsupported_shape}
/// when a certificate does not span its algebra.
IsoSearch hopf_iso_search(
    const HopfStructure& H1, const HopfStructure& H2,
    const PointedCertificate& cert1, const PointedCertificate& cert2,
    const std::function<bool(const LinearMap&)>& extra_check = {});

/// sigma((h <| r(g_(1))) g_(2)) = (sigma(h) <| R(sigma(g_(1)))) sigma(g_(2))
/// on all basis pairs, checked literally.
bool satisfies_equivalence(const MatchedPairHopf& mp, const LinearMap& r,
                           const LinearMap& R, const LinearMap& sigma);

/// Full witness check: unitary coalgebra automorphism of H plus the
/// relation above.
bool is_equivalence_witness(const MatchedPairHopf& mp, const LinearMap& r,
                            const LinearMap& R, const LinearMap& sigma);

/// Searches for sigma with r ~ R. The witness is also an algebra map
/// H_r -> H_R, which the search exploits.
IsoSearch are_equivalent(const MatchedPairHopf& mp,
                         const PointedCertificate& cert_H, const LinearMap& r,
                         const LinearMap& R);

struct ComplementClass {
  LinearMap r;           // smallest map of the class
  PointedHopf deformed;  // H_r
  std::vector<std::size_t> members;  // indices into ClassificationResult::maps
};

struct ClassificationResult {
  std::vector<LinearMap> maps;
  std::vector<ComplementClass> classes;
  /// Number of classes; exact only when exhaustive.
  std::size_t factorization_index = 0;
  bool exhaustive = true;
  /// Pairwise iso-search on the deformed algebras of all maps yields as many
  /// isomorphism types as there are classes, and representatives are
  /// pairwise non-isomorphic.
  bool bijection_consistent = false;
  std::size_t iso_types = 0;
  double seconds = 0;
};

/// Enumerates deformation maps, partitions them by equivalence and
/// cross-checks against isomorphism of the deformed Hopf algebras. When the
/// shape is unsupported the result is flagged non-exhaustive and only the
/// supplied maps (plus the trivial one) are classified.
ClassificationResult classify_complements(
    const MatchedPairHopf& mp, const PointedCertificate& cert_H,
    const PointedCertificate& cert_A,
    const std::vector<LinearMap>& supplied = {});

}  // namespace bicrossed
