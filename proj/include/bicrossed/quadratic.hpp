#pragma once

// Systems of polynomial equations of degree at most two over the field.
//
// Used by the automorphism searches: unknown structure maps enter the
// algebra-map condition bilinearly, so each basis pair yields one such
// equation per output coordinate.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bicrossed/linalg.hpp"

namespace bicrossed {

/// Sparse polynomial of degree <= 2 in variables 0..n-1. The key (a, b) with
/// a <= b stands for t_a t_b; the index n plays the role of the constant 1,
/// so (a, n) is a linear term and (n, n) the constant.
class Poly2 {
 public:
  explicit Poly2(std::size_t num_vars = 0) : n_(num_vars) {}

  std::size_t num_vars() const { return n_; }
  void add(std::size_t a, std::size_t b, const Scalar& c);
  void add_constant(const Scalar& c) { add(n_, n_, c); }
  void add_linear(std::size_t a, const Scalar& c) { add(a, n_, c); }
  bool is_zero() const { return terms_.empty(); }
  bool has_quadratic() const;
  /// Linear part with the constant at index num_vars (as solve_equations
  /// expects). Only meaningful when has_quadratic() is false.
  Vec linear_part() const;
  Scalar evaluate(const Vec& point) const;
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& terms() const {
    return terms_;
  }

  /// Substitutes t_i = subst[i], each an affine form over m new variables
  /// (constant at index m).
  Poly2 substitute(const std::vector<Vec>& subst, std::size_t m) const;

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> terms_;
};

struct QuadraticSearch {
  /// First accepted solution found, if any.
  std::optional<Vec> solution;
  /// False when some branch could be neither solved nor refuted.
  bool exhaustive = true;
};

/// Searches the common zero set of eqs for a point accepted by the
/// predicate. Linear equations are eliminated first; residual equations that
/// factor through a single variable are split into branches; anything else is
/// probed at deterministic sample points and, failing that, reported as
/// non-exhaustive. When every equation vanishes on an affine family the
/// family is probed at sample points (acceptance is assumed to be a
/// Zariski-open condition such as invertibility).
QuadraticSearch solve_quadratic(
    const std::vector<Poly2>& eqs, std::size_t num_vars, Field field,
    const std::function<bool(const Vec&)>& accept);

}  // namespace bicrossed
