#pragma once

// Exact rational numbers. Values whose numerator and denominator fit in a
// signed 64-bit word are stored inline; anything larger spills to a GMP
// mpq_t. Results are always demoted back to the inline form when they fit,
// so two equal values always share the same representation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bicrossed {

class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept : num_(other.num_), den_(other.den_) {
    other.den_ = 1;
    other.num_ = 0;
  }
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational() { release(); }

  // Parses "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return den_ == 1 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_small() const noexcept { return den_ != 0; }
  int sign() const noexcept;

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational inverse() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  // Total order by numeric value.
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) {
    return compare(a, b) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  // den_ == 0 marks the spilled representation; big_ is then live.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;

  void release() noexcept;
  void assign_big(const mpq_class& q);
  void set_from_i128(__int128 n, __int128 d);
};

}  // namespace bicrossed
