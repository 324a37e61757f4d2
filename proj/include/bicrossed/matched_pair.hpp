#pragma once

// Matched pairs of Hopf algebras and the products built from them.

#include <vector>

#include "bicrossed/hopf.hpp"

namespace bicrossed {

/// (A, H) with a left action of H on A and a right action of A on H.
/// Both tensors are keyed by h * A.dim + a.
struct MatchedPairHopf {
  HopfStructure A;
  HopfStructure H;
  std::vector<Vec> left;   // h |> a, in A
  std::vector<Vec> right;  // h <| a, in H

  const Vec& left_at(std::size_t h, std::size_t a) const {
    return left[h * A.dim + a];
  }
  const Vec& right_at(std::size_t h, std::size_t a) const {
    return right[h * A.dim + a];
  }
  Vec act_left(const Vec& h, const Vec& a) const;
  Vec act_right(const Vec& h, const Vec& a) const;
};

/// h |> a = eps(h) a and h <| a = eps(a) h.
MatchedPairHopf trivial_matched_pair(const HopfStructure& A,
                                     const HopfStructure& H);

/// Checks that both actions are coalgebra maps and module actions, the
/// normalization conditions, and the three compatibility identities, on
/// every basis tuple.
VerificationReport verify_matched_pair(const MatchedPairHopf& mp,
                                       Exec exec = Exec::parallel);

struct BicrossedProduct {
  HopfStructure product;   // basis a * H.dim + h
  MatchedPairHopf pair;
  LinearMap embed_A;
  LinearMap embed_H;
};

/// Product structure on A (x) H. With verify set, the pair and the result are
/// checked and VerificationFailure is thrown on any violation.
BicrossedProduct bicrossed_product(const MatchedPairHopf& mp,
                                   bool verify = true);

/// Smash product for a left H-module algebra A with trivial right action.
/// Throws VerificationFailure when the legs of Delta(g) do not commute past
/// the action or the pair is otherwise invalid.
BicrossedProduct smash_product(const HopfStructure& A, const HopfStructure& H,
                               const std::vector<Vec>& left_action);

/// The unique actions with h a = (h_(1) |> a_(1)) (h_(2) <| a_(2)) inside E.
/// Throws Error{not_complement} if a (x) h -> a h is not bijective.
MatchedPairHopf canonical_matched_pair(const HopfStructure& E,
                                       const HopfStructure& A,
                                       const HopfStructure& H,
                                       const LinearMap& embed_A,
                                       const LinearMap& embed_H);

/// The linear map A (x) H -> E, a (x) h -> i_A(a) i_H(h).
LinearMap multiplication_map(const HopfStructure& E, const LinearMap& embed_A,
                             const LinearMap& embed_H);

/// D(H) = (H*)^cop bicrossed with H.
BicrossedProduct drinfeld_double(const HopfStructure& H);

}  // namespace bicrossed
