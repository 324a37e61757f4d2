#include "pointed_shape.hpp"

namespace bicrossed::detail {

long grouplike_of(const PointedShape& s, const Vec& v) {
  if (v.size() != 1 || !v.terms().front().coeff.is_one()) return -1;
  std::size_t i = v.terms().front().index;
  return i < s.ordinal.size() ? s.ordinal[i] : -1;
}

PointedShape pointed_shape(const HopfStructure& h,
                           const PointedCertificate& cert, const char* which) {
  auto unsupported = [&](const std::string& why) {
    return Error(ErrorKind::unsupported_shape,
                 std::string(which) + ": " + why);
  };
  VerificationReport rep = check_certificate(h, cert);
  if (!rep.passed()) throw unsupported("certificate rejected: " + rep.summary(3));
  PointedShape s;
  s.grouplikes = cert.grouplikes;
  s.skews = cert.skew_primitives;
  s.ordinal.assign(h.dim, -1);
  std::vector<int> seen(h.dim, 0);
  for (std::size_t k = 0; k < s.grouplikes.size(); ++k) {
    s.ordinal[s.grouplikes[k]] = static_cast<long>(k);
    ++seen[s.grouplikes[k]];
  }
  for (const auto& x : s.skews) ++seen[x.x];
  for (std::size_t i = 0; i < h.dim; ++i)
    if (seen[i] != 1)
      throw unsupported("basis element " + h.name(i) +
                        " is not exactly one grouplike or skew-primitive");
  const std::size_t m = s.grouplikes.size();
  s.mult.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      long p = grouplike_of(s, h.product(s.grouplikes[a], s.grouplikes[b]));
      if (p < 0) throw unsupported("grouplikes not closed under product");
      s.mult[a * m + b] = static_cast<std::size_t>(p);
    }
  long u = grouplike_of(s, h.unit);
  if (u < 0) throw unsupported("unit is not a listed grouplike");
  s.unit = static_cast<std::size_t>(u);
  return s;
}

std::vector<Vec> skew_space(const HopfStructure& h, std::size_t u,
                            std::size_t v) {
  const std::size_t d = h.dim;
  Matrix m;
  m.rows = d * d;
  m.cols = d;
  const Scalar minus = h.field.from_int(-1);
  for (std::size_t y = 0; y < d; ++y) {
    Vec c = h.comult[y];
    c.add_scaled(Vec::basis(y * d + v), minus);
    c.add_scaled(Vec::basis(u * d + y), minus);
    m.columns.push_back(std::move(c));
  }
  return nullspace(m);
}

std::vector<std::size_t> element_orders(const PointedShape& s) {
  std::vector<std::size_t> out(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::size_t k = 1, cur = a;
    while (cur != s.unit) {
      cur = s.product(cur, a);
      ++k;
    }
    out[a] = k;
  }
  return out;
}

}  // namespace bicrossed::detail
