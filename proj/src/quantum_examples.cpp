#include "bicrossed/quantum_examples.hpp"

#include <algorithm>
#include <map>

namespace bicrossed {

namespace {

std::string power_name(const std::string& prefix, const std::string& gen,
                       unsigned i) {
  if (i == 0) return prefix.empty() ? "1" : prefix;
  std::string p = gen + (i == 1 ? "" : "^" + std::to_string(i));
  return prefix + p;
}

PointedCertificate h4n_certificate(unsigned n) {
  PointedCertificate cert;
  for (unsigned i = 0; i < n; ++i) {
    cert.grouplikes.push_back(4 * i);
    cert.grouplikes.push_back(4 * i + 1);
  }
  for (unsigned i = 0; i < n; ++i) {
    cert.skew_primitives.push_back({4 * i + 2, 4 * i + 1, 4 * i});
    cert.skew_primitives.push_back({4 * i + 3, 4 * i, 4 * i + 1});
  }
  return cert;
}

std::vector<unsigned> prime_factors(unsigned v) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

unsigned family_nu(const FamilyParams& params) {
  return unit_group_order(params.field, params.n);
}

Scalar family_xi(const FamilyParams& params) {
  const unsigned nu = family_nu(params);
  if (!params.xi) return root_of_unity(params.field, nu);
  const Scalar& xi = *params.xi;
  bool ok = xi.pow(nu).is_one();
  for (unsigned q : prime_factors(nu))
    if (xi.pow(nu / q).is_one()) ok = false;
  if (!ok)
    throw Error(ErrorKind::invalid_input,
                "xi = " + xi.to_string() + " does not generate the " +
                    std::to_string(nu) + " roots of unity of order dividing " +
                    std::to_string(params.n));
  return xi;
}

PointedHopf sweedler_h4(Field field) {
  return h4n_direct(field, 1, field.one());
}

PointedHopf cyclic_group_algebra(unsigned n, Field field,
                                 const std::string& gen) {
  return group_algebra(cyclic_group(n, gen), field);
}

PointedHopf h4n_direct(Field field, unsigned n, const Scalar& omega) {
  if (n == 0) throw Error(ErrorKind::invalid_input, "n must be positive");
  const std::size_t d = 4 * n;
  PointedHopf out;
  HopfStructure& h = out.hopf;
  h.field = field;
  h.dim = d;
  h.level = Level::hopf;
  auto idx = [n](unsigned a, unsigned b, unsigned i) -> std::size_t {
    return 4 * (i % n) + 2 * b + a;
  };
  const char* prefix[4] = {"", "g", "x", "gx"};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned t = 0; t < 4; ++t) h.basis_names.push_back(power_name(prefix[t], "c", i));

  std::vector<Scalar> wpow(n);
  wpow[0] = field.one();
  for (unsigned i = 1; i < n; ++i) wpow[i] = wpow[i - 1] * omega;
  const Scalar one = field.one();
  const Scalar minus = field.from_int(-1);

  // (g^a x^b c^i)(g^a' x^b' c^j) = omega^{ib'} (-1)^{ba'} g^{a+a'} x^{b+b'} c^{i+j}
  h.mult.resize(d * d);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 2; ++b)
        for (unsigned j = 0; j < n; ++j)
          for (unsigned a2 = 0; a2 < 2; ++a2)
            for (unsigned b2 = 0; b2 < 2; ++b2) {
              if (b + b2 >= 2) continue;
              Scalar c = b2 ? wpow[i] : one;
              if (b && a2) c = -c;
              h.mult[idx(a, b, i) * d + idx(a2, b2, j)] =
                  Vec::basis(idx((a + a2) % 2, b + b2, i + j), c);
            }
  h.unit = Vec::basis(0, one);

  Matrix s;
  s.rows = s.cols = d;
  s.columns.resize(d);
  h.comult.resize(d);
  h.counit.resize(d);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned a = 0; a < 2; ++a) {
      std::size_t gl = idx(a, 0, i);
      std::size_t sk = idx(a, 1, i);
      h.comult[gl] = Vec::basis(gl * d + gl, one);
      h.counit[gl] = one;
      s.columns[gl] = Vec::basis(idx(a, 0, n - i), one);
      // Delta(g^a x c^i) = g^a x c^i (x) g^a c^i + g^{a+1} c^i (x) g^a x c^i
      h.comult[sk] = Vec::basis(sk * d + gl, one) +
                     Vec::basis(idx((a + 1) % 2, 0, i) * d + sk, one);
      h.counit[sk] = field.zero();
      // S(g^a x c^i) = -(-1)^a omega^{-i} g^{a+1} x c^{-i}
      Scalar c = (a ? one : minus) * wpow[(n - i) % n];
      s.columns[sk] = Vec::basis(idx((a + 1) % 2, 1, n - i), c);
    }
  h.antipode = std::move(s);
  out.cert = h4n_certificate(n);
  return out;
}

MatchedPairHopf h4n_matched_pair_with(Field field, unsigned n,
                                      const Scalar& omega) {
  PointedHopf h4 = sweedler_h4(field);
  PointedHopf cn = cyclic_group_algebra(n, field, "c");
  MatchedPairHopf mp = trivial_matched_pair(h4.hopf, cn.hopf);
  Scalar w = field.one();
  for (unsigned i = 0; i < n; ++i) {
    // c^i |> g^a x^b = omega^{ib} g^a x^b
    for (std::size_t a = 0; a < 4; ++a)
      mp.left[i * 4 + a] = Vec::basis(a, a >= 2 ? w : field.one());
    w *= omega;
  }
  return mp;
}

MatchedPairHopf h4n_matched_pair(const FamilyParams& params) {
  Scalar omega = family_xi(params).pow(params.t);
  return h4n_matched_pair_with(params.field, params.n, omega);
}

std::vector<std::size_t> h4n_product_to_direct(unsigned n) {
  std::vector<std::size_t> perm(4 * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned t = 0; t < 4; ++t) perm[4 * i + t] = t * n + i;
  return perm;
}

PointedHopf h4n(const FamilyParams& params) {
  BicrossedProduct bp = bicrossed_product(h4n_matched_pair(params));
  PointedHopf out;
  out.hopf = permute_basis(bp.product, h4n_product_to_direct(params.n));
  const char* prefix[4] = {"", "g", "x", "gx"};
  for (unsigned i = 0; i < params.n; ++i)
    for (unsigned t = 0; t < 4; ++t)
      out.hopf.basis_names[4 * i + t] = power_name(prefix[t], "c", i);
  out.cert = h4n_certificate(params.n);
  return out;
}

PointedCertificate cn_certificate(unsigned n) {
  PointedCertificate c;
  for (unsigned i = 0; i < n; ++i) c.grouplikes.push_back(i);
  return c;
}

MatchedPairHopf cn_h4n_matched_pair(const FamilyParams& params) {
  const unsigned n = params.n;
  const Scalar xi = family_xi(params);
  PointedHopf A = cyclic_group_algebra(n, params.field, "d");
  PointedHopf H = h4n_direct(params.field, n, xi.pow(params.t));
  MatchedPairHopf mp = trivial_matched_pair(A.hopf, H.hopf);
  const Scalar xl = xi.pow(params.l);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned a = 0; a < 2; ++a) {
        if (!b) continue;
        std::size_t h = 4 * i + 2 * b + a;
        Scalar c = params.field.one();
        for (unsigned k = 0; k < n; ++k) {
          mp.right[h * n + k] = Vec::basis(h, c);
          c *= xl;
        }
      }
  return mp;
}

LinearMap rp_map(const FamilyParams& params) {
  const unsigned n = params.n;
  LinearMap r;
  r.rows = n;
  r.cols = 4 * n;
  r.columns.resize(4 * n);
  const int p = ((params.p % static_cast<int>(n)) + static_cast<int>(n)) %
                static_cast<int>(n);
  for (unsigned i = 0; i < n; ++i) {
    std::size_t target = (static_cast<std::size_t>(i) * p) % n;
    r.columns[4 * i] = Vec::basis(target, params.field.one());
    r.columns[4 * i + 1] = Vec::basis(target, params.field.one());
  }
  return r;
}

Matrix h4n_monomial_basis(const HopfStructure& h, unsigned n) {
  Matrix m{h.dim, h.dim, std::vector<Vec>(h.dim)};
  const Vec g = Vec::basis(1), x = Vec::basis(2), c = Vec::basis(4 % h.dim);
  Vec ci = h.unit;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned a = 0; a < 2; ++a) {
        Vec v = a ? g : h.unit;
        if (b) v = h.multiply(v, x);
        m.columns[4 * i + 2 * b + a] = h.multiply(v, ci);
      }
    ci = h.multiply(ci, c);
  }
  return m;
}

unsigned h4n_iso_class_count(unsigned n, Field field) {
  unsigned nu = unit_group_order(field, n);
  std::vector<unsigned> alphas;
  for (unsigned p : prime_factors(nu)) {
    unsigned a = 0;
    while (nu % p == 0) {
      nu /= p;
      ++a;
    }
    alphas.push_back(a);
  }
  // prime_factors lists 2 first when it divides
  unsigned count = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i == 0 && unit_group_order(field, n) % 2 == 0)
      count *= alphas[0];
    else
      count *= alphas[i] + 1;
  }
  return count;
}

SymmetricGroupCase symmetric_group_case(Field field) {
  using Perm = std::array<int, 4>;
  std::vector<Perm> perms;
  Perm p{0, 1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  auto compose = [](const Perm& s, const Perm& t) {
    Perm r{};
    for (int x = 0; x < 4; ++x) r[x] = s[t[x]];
    return r;
  };
  CayleyTable table;
  table.order = perms.size();
  for (const auto& s : perms) {
    std::string nm;
    for (int v : s) nm += static_cast<char>('1' + v);
    table.names.push_back(nm);
    for (const auto& t : perms) table.table.push_back(index[compose(s, t)]);
  }
  SymmetricGroupCase out;
  out.elements = perms;
  out.s4 = group_algebra(table, field);

  std::vector<std::size_t> s3_members;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (perms[i][3] == 3) s3_members.push_back(i);
  CayleyTable s3;
  s3.order = s3_members.size();
  for (std::size_t a : s3_members) {
    s3.names.push_back(table.names[a]);
    for (std::size_t b : s3_members) {
      std::size_t prod = table.at(a, b);
      auto it = std::find(s3_members.begin(), s3_members.end(), prod);
      s3.table.push_back(static_cast<std::size_t>(it - s3_members.begin()));
    }
  }
  out.s3 = group_algebra(s3, field);
  out.c4 = cyclic_group_algebra(4, field, "c");

  const Scalar one = field.one();
  out.embed_s3 = Matrix{perms.size(), s3_members.size(), {}};
  for (std::size_t a : s3_members) out.embed_s3.columns.push_back(Vec::basis(a, one));
  const Perm cycle{1, 2, 3, 0};
  Perm cur{0, 1, 2, 3};
  out.embed_c4 = Matrix{perms.size(), 4, {}};
  for (int k = 0; k < 4; ++k) {
    out.embed_c4.columns.push_back(Vec::basis(index[cur], one));
    cur = compose(cycle, cur);
  }
  LinearMap mu = multiplication_map(out.s4.hopf, out.embed_s3, out.embed_c4);
  if (rank(mu) != perms.size())
    throw Error(ErrorKind::not_complement, "S3 C4 does not factor S4");
  return out;
}

}  // namespace bicrossed
