#pragma once

// Sparse exact vectors and the elimination routines built on them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicrossed/scalar.hpp"

namespace bicrossed {

struct Term {
  std::size_t index;
  Scalar coeff;
};

/// Sparse vector: terms sorted by index, no zero coefficients.
class Vec {
 public:
  Vec() = default;
  static Vec basis(std::size_t i, const Scalar& c);
  static Vec basis(std::size_t i) { return basis(i, Field().one()); }
  /// Builds from arbitrary (index, coeff) pairs, merging duplicates.
  static Vec from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const& { return terms_; }
  // Temporaries hand their terms over so range-for over f().terms() is safe.
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar at(std::size_t i) const;
  /// Largest index present plus one (0 for the zero vector).
  std::size_t support_end() const {
    return terms_.empty() ? 0 : terms_.back().index + 1;
  }

  Vec& operator+=(const Vec& o) { return add_scaled(o, Field().one()); }
  Vec& operator-=(const Vec& o) { return add_scaled(o, Field().from_int(-1)); }
  /// *this += c * o
  Vec& add_scaled(const Vec& o, const Scalar& c);
  Vec& operator*=(const Scalar& c);
  Vec operator-() const;

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, const Scalar& c) { return a *= c; }
  friend Vec operator*(const Scalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b);
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  /// Lexicographic order on (index, coefficient) sequences.
  friend int compare(const Vec& a, const Vec& b);

  /// Renders with basis names, e.g. "2*x + g"; index names default to e<i>.
  std::string to_string(const std::vector<std::string>* names = nullptr) const;

 private:
  std::vector<Term> terms_;
  friend class Accumulator;
};

/// Dense scratch space for summing many sparse contributions.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim = 0) { resize(dim); }
  void resize(std::size_t dim);
  std::size_t dim() const { return slots_.size(); }
  void add(std::size_t i, const Scalar& c);
  void add(const Vec& v, const Scalar& c);
  void add(const Vec& v);
  /// Emits the sorted nonzero content and clears the accumulator.
  Vec take();

 private:
  std::vector<Scalar> slots_;
  std::vector<unsigned char> used_;
  std::vector<std::size_t> touched_;
};

/// a (x) b in the tensor basis index i*dim_b + j.
Vec tensor(const Vec& a, const Vec& b, std::size_t dim_b);

/// Incremental row echelon form. Rows are normalized so their leading
/// coefficient is 1; only indices below pivot_limit may serve as pivots,
/// which leaves the tail of each vector free to carry bookkeeping tags.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t pivot_limit = static_cast<std::size_t>(-1))
      : limit_(pivot_limit) {}

  /// Subtracts multiples of existing rows until no term below the pivot
  /// limit sits on a pivot column.
  Vec reduce(Vec v) const;
  /// Reduces v; if a pivot-eligible term survives, stores the remainder as a
  /// new row and returns true. Otherwise returns false and leaves the
  /// remainder in *rest when given.
  bool insert(Vec v, Vec* rest = nullptr);
  std::size_t rank() const { return rows_.size(); }
  /// Back-substitutes so every pivot column has a single nonzero entry.
  void make_reduced();
  const std::map<std::size_t, Vec>& rows() const { return rows_; }

 private:
  std::size_t limit_;
  std::map<std::size_t, Vec> rows_;  // keyed by pivot index
};

/// Column-major matrix of sparse columns.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Vec> columns;

  static Matrix identity(std::size_t n);
  Vec apply(const Vec& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
  }
};

std::size_t rank(const Matrix& m);
/// Exact inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
Matrix compose(const Matrix& outer, const Matrix& inner);

/// Solution set of a linear system written as equations
/// sum_i a_i x_i + c = 0, where index num_vars carries the constant c.
struct AffineSolution {
  bool consistent = false;
  Vec particular;             // free variables set to 0
  std::vector<Vec> kernel;    // one basis vector per free variable
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_vars;
};
AffineSolution solve_equations(const std::vector<Vec>& equations,
                               std::size_t num_vars);

}  // namespace bicrossed
