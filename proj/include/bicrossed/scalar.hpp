#pragma once

// Exact scalars over Q or a cyclotomic field Q(zeta_n).
//
// An element of Q(zeta_n) is stored as its residue modulo the n-th
// cyclotomic polynomial, i.e. a dense coefficient vector of length
// deg(Phi_n) = phi(n) in the power basis 1, z, ..., z^{phi(n)-1}. Residues
// are unique, so equality is coefficient-wise equality.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bicrossed/rational.hpp"

namespace bicrossed {

namespace detail {
struct FieldData;
}

class Scalar;

/// Handle to an interned field descriptor. Cheap to copy; two handles
/// compare equal iff they denote the same field. Q(zeta_1) is identified
/// with Q.
class Field {
 public:
  enum class Kind { rationals, cyclotomic };

  /// The rationals.
  Field();
  static Field rationals() { return Field(); }
  /// Q(zeta_n); throws std::invalid_argument for n == 0.
  static Field cyclotomic(unsigned n);
  /// Parses "rationals" or "cyclotomic:<n>".
  static Field parse(std::string_view spec);

  Kind kind() const;
  /// 1 for Q, otherwise the n the field was created with. No folding of
  /// Q(zeta_{2m}) onto Q(zeta_m) happens: z keeps meaning zeta_n.
  unsigned conductor() const;
  unsigned degree() const;
  /// Order of the (finite cyclic) group of all roots of unity in the field.
  unsigned roots_of_unity_count() const;
  /// Coefficients of the minimal polynomial of z, lowest degree first.
  const std::vector<std::int64_t>& minimal_polynomial() const;
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const Rational& q) const;
  /// The generator z of the power basis (a primitive conductor-th root).
  Scalar generator() const;
  /// Parses a polynomial string in z such as "1/2 + 3*z^2" or "-z".
  Scalar parse_scalar(std::string_view text) const;

  const detail::FieldData* data() const noexcept { return data_; }
  friend bool operator==(Field a, Field b) noexcept {
    return a.data_ == b.data_;
  }
  friend bool operator!=(Field a, Field b) noexcept { return !(a == b); }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class Scalar;
};

/// nu(n) = |U_n(F)|, the number of n-th roots of unity in F.
unsigned unit_group_order(Field field, unsigned n);

/// A primitive m-th root of unity in F. Throws std::domain_error if F has
/// none.
Scalar root_of_unity(Field field, unsigned m);

class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  /// Rational zero.
  Scalar();
  /// Takes an already reduced residue; coeffs.size() must equal the degree.
  Scalar(Field f, Coeffs coeffs);

  Field field() const { return Field(field_); }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q.
  bool is_rational() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality; a rational scalar equals its image in any field.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }
  /// Total order on coefficient vectors (used for canonical sorting only).
  friend int compare(const Scalar& a, const Scalar& b);

  /// Canonical text form in the variable z, e.g. "1/2 + 3*z^2".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  const detail::FieldData* field_;
  Coeffs c_;

  // Brings a rational operand into the field of the other operand.
  void promote_to(const detail::FieldData* f);
  friend class Field;
};

}  // namespace bicrossed
