#include "bicrossed/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace bicrossed {

namespace {

using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  // Most operands fit in 64 bits; take the hardware path when they do.
  while (b != 0) {
    if (a <= kMax64 && b <= kMax64) {
      auto x = static_cast<std::uint64_t>(a);
      auto y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
      }
      return static_cast<i128>(x);
    }
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  set_from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) { assign_big(q); }

Rational::Rational(const Rational& other) : num_(0), den_(other.den_) {
  if (other.den_ == 0)
    big_ = new mpq_class(*other.big_);
  else
    num_ = other.num_;
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.den_ == 0) {
    if (den_ == 0) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
      den_ = 0;
    }
  } else {
    release();
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this == &other) return *this;
  release();
  den_ = other.den_;
  if (den_ == 0)
    big_ = other.big_;
  else
    num_ = other.num_;
  other.den_ = 1;
  other.num_ = 0;
  return *this;
}

void Rational::release() noexcept {
  if (den_ == 0) {
    delete big_;
    den_ = 1;
    num_ = 0;
  }
}

void Rational::assign_big(const mpq_class& q) {
  // q is canonical (GMP keeps mpq_class normalized after arithmetic).
  if (fits64(q.get_num()) && fits64(q.get_den())) {
    release();
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    return;
  }
  if (den_ == 0) {
    *big_ = q;
  } else {
    big_ = new mpq_class(q);
    den_ = 0;
  }
}

void Rational::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    release();
    num_ = 0;
    den_ = 1;
    return;
  }
  i128 g = gcd128(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    release();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  assign_big(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

int Rational::sign() const noexcept {
  if (den_ == 0) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)),
              mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 0) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (den_ != 0 && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    set_from_i128(static_cast<i128>(num_) * o.den_ +
                      static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    set_from_i128(static_cast<i128>(num_) * o.den_ -
                      static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    set_from_i128(static_cast<i128>(num_) * o.num_,
                  static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (den_ != 0 && o.den_ != 0) {
    set_from_i128(static_cast<i128>(num_) * o.den_,
                  static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

Rational Rational::inverse() const {
  Rational one(1);
  return one /= *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ == 0 && b.den_ == 0) return *a.big_ == *b.big_;
  return false;  // canonical forms differ
}

int compare(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

}  // namespace bicrossed
