#include "bicrossed/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bicrossed {

namespace detail {

struct FieldData {
  unsigned n = 1;
  unsigned deg = 1;
  std::vector<std::int64_t> phi;                   // monic, length deg+1
  std::vector<std::vector<std::int64_t>> reduce;   // z^k mod phi, k in [deg, 2deg-2]
};

}  // namespace detail

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

// Exact division of integer polynomials by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  Poly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i)
      num[k - dd + i] = checked_sub(num[k - dd + i], checked_mul(c, den[i]));
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0)
      throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

Poly cyclotomic_polynomial(unsigned n, std::map<unsigned, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<detail::FieldData> make_field(unsigned n) {
  auto f = std::make_unique<detail::FieldData>();
  std::map<unsigned, Poly> memo;
  f->n = n;
  f->phi = cyclotomic_polynomial(n, memo);
  f->deg = static_cast<unsigned>(f->phi.size() - 1);
  const unsigned d = f->deg;
  if (d >= 2) {
    // z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
    Poly cur(d, 0);
    for (unsigned i = 0; i < d; ++i) cur[i] = -f->phi[i];
    f->reduce.push_back(cur);
    for (unsigned k = d + 1; k <= 2 * d - 2; ++k) {
      Poly next(d, 0);
      std::int64_t top = cur[d - 1];
      for (unsigned i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < d; ++i)
          next[i] = checked_sub(next[i], checked_mul(top, f->phi[i]));
      f->reduce.push_back(next);
      cur = std::move(next);
    }
  }
  return f;
}

const detail::FieldData* intern_field(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<detail::FieldData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot = make_field(n);
  return slot.get();
}

const detail::FieldData* rationals_data() {
  static const detail::FieldData* q = intern_field(1);
  return q;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field() : data_(rationals_data()) {}

Field Field::cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic field needs n >= 1");
  if (n == 1) return Field();
  return Field(intern_field(n));
}

Field Field::parse(std::string_view spec) {
  if (spec == "rationals" || spec == "Q") return Field();
  constexpr std::string_view prefix = "cyclotomic:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string rest(spec.substr(prefix.size()));
    if (rest.empty() ||
        rest.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field spec '" + std::string(spec) +
                                  "'");
    unsigned long n = std::stoul(rest);
    if (n == 0 || n > 100000)
      throw std::invalid_argument("cyclotomic conductor out of range");
    return cyclotomic(static_cast<unsigned>(n));
  }
  throw std::invalid_argument("bad field spec '" + std::string(spec) + "'");
}

Field::Kind Field::kind() const {
  return data_->n == 1 ? Kind::rationals : Kind::cyclotomic;
}
unsigned Field::conductor() const { return data_->n; }
unsigned Field::degree() const { return data_->deg; }
unsigned Field::roots_of_unity_count() const {
  return data_->n % 2 == 0 ? data_->n : 2 * data_->n;
}
const std::vector<std::int64_t>& Field::minimal_polynomial() const {
  return data_->phi;
}
std::string Field::to_string() const {
  if (data_->n == 1) return "rationals";
  return "cyclotomic:" + std::to_string(data_->n);
}

Scalar Field::zero() const { return Scalar(*this, Scalar::Coeffs(data_->deg)); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(std::int64_t v) const {
  return from_rational(Rational(v));
}
Scalar Field::from_rational(const Rational& q) const {
  Scalar::Coeffs c(data_->deg);
  c[0] = q;
  return Scalar(*this, std::move(c));
}

Scalar Field::generator() const {
  Scalar::Coeffs c(data_->deg);
  if (data_->deg == 1) {
    // z is the root of phi_n = z - r
    c[0] = Rational(-data_->phi[0]);
  } else {
    c[1] = Rational(1);
  }
  return Scalar(*this, std::move(c));
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  const Scalar z = generator();
  Scalar total = zero();
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse scalar '") +
                                std::string(text) + "': " + why);
  };
  auto read_uint = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    out = s.substr(start, pos - start);
    return !out.empty();
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    std::string digits;
    if (read_uint(digits)) {
      std::string lit = digits;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        if (!read_uint(den)) fail("missing denominator");
        lit += "/" + den;
      }
      coef = Rational::parse(lit);
      have_coef = true;
    }
    std::int64_t power = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
      if (s[pos] == '*') {
        if (!have_coef) fail("dangling '*'");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'z') fail("expected 'z'");
      if (data_->n == 1) fail("'z' is not available over the rationals");
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        if (!read_uint(e)) fail("missing exponent");
        power = std::stoll(e);
      }
    } else if (!have_coef) {
      fail("expected a coefficient or 'z'");
    }
    Scalar term = from_rational(sign < 0 ? -coef : coef);
    if (power != 0) term *= z.pow(power);
    total += term;
  }
  return total;
}

unsigned unit_group_order(Field field, unsigned n) {
  if (n == 0) throw std::invalid_argument("unit_group_order needs n >= 1");
  return std::gcd(n, field.roots_of_unity_count());
}

Scalar root_of_unity(Field field, unsigned m) {
  if (m == 0) throw std::invalid_argument("root_of_unity needs m >= 1");
  const unsigned w = field.roots_of_unity_count();
  if (w % m != 0)
    throw std::domain_error("no primitive " + std::to_string(m) +
                            "-th root of unity in " + field.to_string());
  Scalar gen = field.generator();
  if (field.conductor() % 2 == 1) gen = -gen;  // -z has order 2n for odd n
  return gen.pow(w / m);
}

// --------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(rationals_data()), c_(1) {}

Scalar::Scalar(Field f, Coeffs coeffs) : field_(f.data_), c_(std::move(coeffs)) {
  if (c_.size() != field_->deg)
    throw std::invalid_argument("scalar coefficient count != field degree");
}

bool Scalar::is_zero() const noexcept {
  for (const auto& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const noexcept {
  if (!c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

void Scalar::promote_to(const detail::FieldData* f) {
  if (f == field_) return;
  if (!is_rational())
    throw std::invalid_argument("scalars from different fields");
  Rational q = c_[0];
  c_.assign(f->deg, Rational());
  c_[0] = std::move(q);
  field_ = f;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.field_ != field_) {
    if (o.is_rational()) {
      c_[0] += o.c_[0];
      return *this;
    }
    promote_to(o.field_);  // throws unless *this is rational
  }
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const detail::FieldData* f = a.field_;
  if (a.field_ != b.field_) {
    if (a.is_rational()) {
      Scalar r(b);
      const Rational& q = a.c_[0];
      for (auto& c : r.c_) c *= q;
      return r;
    }
    if (b.is_rational()) {
      Scalar r(a);
      const Rational& q = b.c_[0];
      for (auto& c : r.c_) c *= q;
      return r;
    }
    throw std::invalid_argument("scalars from different fields");
  }
  const unsigned d = f->deg;
  if (d == 1) {
    Scalar r(a);
    r.c_[0] *= b.c_[0];
    return r;
  }
  Scalar::Coeffs out(d);
  // product coefficients above d-1 are folded through the reduction table
  boost::container::small_vector<Rational, 8> high(d > 1 ? d - 1 : 0);
  for (unsigned i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      Rational p = a.c_[i] * b.c_[j];
      unsigned k = i + j;
      if (k < d)
        out[k] += p;
      else
        high[k - d] += p;
    }
  }
  for (unsigned k = 0; k + 1 < d; ++k) {
    if (high[k].is_zero()) continue;
    const auto& row = f->reduce[k];
    for (unsigned i = 0; i < d; ++i)
      if (row[i] != 0) out[i] += high[k] * Rational(row[i]);
  }
  Scalar r;
  r.field_ = f;
  r.c_ = std::move(out);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  const unsigned d = field_->deg;
  if (is_rational()) {
    Scalar r(*this);
    r.c_[0] = c_[0].inverse();
    return r;
  }
  // Solve (a * y) = 1 using the multiplication-by-a matrix.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  Scalar basis = Field(field_).one();
  const Scalar z = Field(field_).generator();
  for (unsigned j = 0; j < d; ++j) {
    Scalar col = *this * basis;
    for (unsigned i = 0; i < d; ++i) m[i][j] = col.c_[i];
    basis *= z;
  }
  m[0][d] = Rational(1);
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw std::logic_error("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational inv = m[col][col].inverse();
    for (unsigned k = col; k <= d; ++k) m[col][k] *= inv;
    for (unsigned r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (unsigned k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
    }
  }
  Coeffs out(d);
  for (unsigned i = 0; i < d; ++i) out[i] = m[i][d];
  return Scalar(Field(field_), std::move(out));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this = *this * o.inverse();
  return *this;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Field(field_).one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (!a.is_rational() || !b.is_rational()) return false;
  return a.c_[0] == b.c_[0];
}

int compare(const Scalar& a, const Scalar& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  static const Rational kZero;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = i < a.c_.size() ? a.c_[i] : kZero;
    const Rational& y = i < b.c_.size() ? b.c_[i] : kZero;
    if (int c = compare(x, y); c != 0) return c;
  }
  return 0;
}

std::string Scalar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q.is_zero()) continue;
    bool neg = q.sign() < 0;
    Rational mag = neg ? -q : q;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace bicrossed
