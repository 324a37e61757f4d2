#pragma once

// Lie algebras by structure constants, their matched pairs, bicrossed
// products, deformation maps and the classification of complements.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicrossed/deformation.hpp"
#include "bicrossed/hopf.hpp"

namespace bicrossed {

struct LieAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Vec> bracket;  // [e_i, e_j] at i*dim + j

  const Vec& at(std::size_t i, std::size_t j) const {
    return bracket[i * dim + j];
  }
  Vec apply(const Vec& x, const Vec& y) const;
  std::string name(std::size_t i) const;
  std::string render(const Vec& v) const { return v.to_string(&basis_names); }
};

LieAlgebra abelian_lie(std::size_t dim, Field field = Field(),
                       const std::string& prefix = "x");
/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2(Field field = Field());
/// Basis a, b with [a,b] = b.
LieAlgebra nonabelian2(Field field = Field());

/// Antisymmetry (including [x,x] = 0) and Jacobi on every basis triple.
VerificationReport verify_lie(const LieAlgebra& g, Exec exec = Exec::parallel);

/// (g, h) with a left action of h on g and a right action of g on h, both
/// keyed by x * g.dim + a.
struct MatchedPairLie {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Vec> left;   // x |> a, in g
  std::vector<Vec> right;  // x <| a, in h

  const Vec& left_at(std::size_t x, std::size_t a) const {
    return left[x * g.dim + a];
  }
  const Vec& right_at(std::size_t x, std::size_t a) const {
    return right[x * g.dim + a];
  }
  Vec act_left(const Vec& x, const Vec& a) const;
  Vec act_right(const Vec& x, const Vec& a) const;
};

MatchedPairLie zero_matched_pair_lie(const LieAlgebra& g, const LieAlgebra& h);

/// Both module conditions and the two compatibilities on all basis tuples.
VerificationReport verify_matched_pair_lie(const MatchedPairLie& mp,
                                           Exec exec = Exec::parallel);

struct BicrossedLie {
  LieAlgebra product;  // basis: g first, then h
  MatchedPairLie pair;
  LinearMap embed_g;
  LinearMap embed_h;
};

/// [a + x, b + y] = ([a,b] + x|>b - y|>a) + ([x,y] + x<|b - y<|a). With
/// verify set, throws VerificationFailure unless pair and result check out.
BicrossedLie bicrossed_lie(const MatchedPairLie& mp, bool verify = true);

/// Actions read off [x, a] = x|>a + x<|a for subalgebras spanned by the
/// given basis vectors of xi. Throws Error{not_complement} unless both index
/// sets are closed under the bracket and partition the basis.
MatchedPairLie canonical_matched_pair_lie(const LieAlgebra& xi,
                                          const std::vector<std::size_t>& g_indices,
                                          const std::vector<std::size_t>& h_indices);

/// r([x,y]) - [r(x),r(y)] = r(y<|r(x) - x<|r(y)) + x|>r(y) - y|>r(x).
VerificationReport is_deformation_map_lie(const MatchedPairLie& mp,
                                          const LinearMap& r);

/// h with [x,y]_r = [x,y] + x<|r(y) - y<|r(x). No checks.
LieAlgebra deformed_bracket(const MatchedPairLie& mp, const LinearMap& r);
/// Checked: throws VerificationFailure unless r is a deformation map and the
/// result is a Lie algebra.
LieAlgebra deform_lie(const MatchedPairLie& mp, const LinearMap& r);

struct DeformedPairLie {
  /// (g, h_r) with x |>^r a = [r(x), a] + x|>a - r(x<|a).
  MatchedPairLie pair;
  /// phi(a + x) = (a + r(x)) + x, from the new bicrossed product to the old.
  LinearMap phi;
  bool phi_bijective = false;
  bool phi_bracket = false;
  /// {r(x) + x} is a subalgebra of the original bicrossed product.
  bool graph_closed = false;
  VerificationReport pair_report;

  bool passed() const {
    return phi_bijective && phi_bracket && graph_closed && pair_report.passed();
  }
};

DeformedPairLie deform_matched_pair_lie(const MatchedPairLie& mp,
                                        const LinearMap& r);

struct LieDeformationFamily {
  /// When exhaustive and linear, every deformation map is a combination of
  /// these (the set is a subspace).
  std::vector<LinearMap> basis;
  /// Explicit members: 0, the basis and surviving grid candidates.
  std::vector<LinearMap> maps;
  bool exhaustive = false;
};

/// Exact when the defining equations are linear in r after cancellation
/// (always so when dim h = 1); otherwise only grid candidates that pass the
/// check are returned and the family is flagged non-exhaustive.
LieDeformationFamily enumerate_deformation_maps_lie(
    const MatchedPairLie& mp, const std::vector<LinearMap>& grid = {});

/// Derived algebra dimension and center dimension.
struct LieInvariants {
  std::vector<std::size_t> derived_series;
  std::size_t center = 0;
  friend bool operator==(const LieInvariants&, const LieInvariants&) = default;
};
LieInvariants lie_invariants(const LieAlgebra& g);

/// A linear isomorphism preserving brackets. Candidates are tried first;
/// then the bracket condition is solved as a quadratic system.
IsoSearch lie_iso_search(const LieAlgebra& a, const LieAlgebra& b,
                         const std::vector<LinearMap>& candidates = {});

bool is_lie_map(const LinearMap& f, const LieAlgebra& a, const LieAlgebra& b);

/// sigma in GL(h) that is a Lie map h_r -> h_R.
IsoSearch are_equivalent_lie(const MatchedPairLie& mp, const LinearMap& r,
                             const LinearMap& R,
                             const std::vector<LinearMap>& candidates = {});

enum class LieStrategy {
  supplied,        // classify the given maps only
  exhaustive_1dim  // complete answer when the family is fully known
};

struct LieComplementClass {
  LinearMap r;
  LieAlgebra deformed;
  std::vector<std::size_t> members;
};

struct LieClassificationResult {
  std::vector<LinearMap> maps;
  std::vector<LieComplementClass> classes;
  std::size_t factorization_index = 0;
  bool exhaustive = false;
  bool bijection_consistent = false;
  std::size_t iso_types = 0;
};

/// Partitions maps by equivalence and cross-checks with isomorphism of the
/// deformed algebras. exhaustive_1dim adds the enumerated family and is
/// exact when dim h = 1 or the only deformation map is 0.
LieClassificationResult classify_complements_lie(
    const MatchedPairLie& mp, const std::vector<LinearMap>& maps,
    LieStrategy strategy = LieStrategy::supplied);

/// sl2 with g = span{h, e} and h = span{f}.
MatchedPairLie sl2_borel_pair(Field field = Field());
/// g = <a> abelian, h = k^m abelian, x <| a = lambda x, trivial |>.
MatchedPairLie scalar_action_pair(std::size_t m, const Scalar& lambda);

}  // namespace bicrossed
