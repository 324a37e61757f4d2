#include "bicrossed/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace bicrossed {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::missing_structure: return "missing structure";
    case ErrorKind::not_coalgebra_map: return "not a coalgebra map";
    case ErrorKind::not_complement: return "not a complement";
    case ErrorKind::singular: return "singular";
    case ErrorKind::unsupported_shape: return "unsupported shape";
    case ErrorKind::verification_failed: return "verification failed";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

Level parse_level(const std::string& s) {
  if (s == "coalgebra") return Level::coalgebra;
  if (s == "algebra") return Level::algebra;
  if (s == "bialgebra") return Level::bialgebra;
  if (s == "hopf") return Level::hopf;
  throw Error(ErrorKind::invalid_input, "unknown level '" + s + "'");
}

std::string to_string(Level level) {
  switch (level) {
    case Level::coalgebra: return "coalgebra";
    case Level::algebra: return "algebra";
    case Level::bialgebra: return "bialgebra";
    case Level::hopf: return "hopf";
  }
  return "hopf";
}

// ------------------------------------------------------- HopfStructure

Vec HopfStructure::multiply(const Vec& a, const Vec& b) const {
  if (a.size() == 1 && b.size() == 1) {
    const Term& x = a.terms().front();
    const Term& y = b.terms().front();
    return product(x.index, y.index) * (x.coeff * y.coeff);
  }
  Accumulator acc(dim);
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      acc.add(product(x.index, y.index), x.coeff * y.coeff);
  return acc.take();
}

Vec HopfStructure::coproduct(const Vec& a) const {
  if (a.size() == 1)
    return comult[a.terms().front().index] * a.terms().front().coeff;
  std::vector<Term> out;
  for (const auto& x : a.terms())
    for (const auto& t : comult[x.index].terms())
      out.push_back({t.index, t.coeff * x.coeff});
  return Vec::from_terms(std::move(out));
}

Scalar HopfStructure::epsilon(const Vec& a) const {
  Scalar s = field.zero();
  for (const auto& x : a.terms()) s += counit[x.index] * x.coeff;
  return s;
}

Vec HopfStructure::apply_antipode(const Vec& a) const {
  if (!antipode) throw Error(ErrorKind::missing_structure, "no antipode");
  return antipode->apply(a);
}

std::vector<Split> HopfStructure::splits(std::size_t i) const {
  std::vector<Split> out;
  out.reserve(comult[i].size());
  for (const auto& t : comult[i].terms())
    out.push_back({t.index / dim, t.index % dim, t.coeff});
  return out;
}

std::vector<Split3> HopfStructure::splits3(std::size_t i) const {
  std::vector<Split3> out;
  for (const auto& s : splits(i))
    for (const auto& t : comult[s.left].terms())
      out.push_back({t.index / dim, t.index % dim, s.right, t.coeff * s.coeff});
  return out;
}

std::optional<std::size_t> HopfStructure::unit_index() const {
  if (unit.size() == 1 && unit.terms().front().coeff.is_one())
    return unit.terms().front().index;
  return std::nullopt;
}

std::string HopfStructure::name(std::size_t i) const {
  if (i < basis_names.size()) return basis_names[i];
  return "e" + std::to_string(i);
}

// --------------------------------------------------------------- report

void VerificationReport::fail(std::string axiom,
                              std::vector<std::size_t> witness,
                              std::string lhs, std::string rhs) {
  violations.push_back(
      {std::move(axiom), std::move(witness), std::move(lhs), std::move(rhs)});
}

void VerificationReport::merge(const VerificationReport& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  for (const auto& [k, v] : other.instances) instances[k] += v;
}

void VerificationReport::sort() {
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.axiom, a.witness, a.lhs, a.rhs) <
                     std::tie(b.axiom, b.witness, b.lhs, b.rhs);
            });
}

std::string VerificationReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  if (passed()) {
    os << "passed";
    return os.str();
  }
  os << violations.size() << " violation(s)";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_lines) {
      os << "\n  ...";
      break;
    }
    os << "\n  " << v.axiom << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << "]: " << v.lhs << " != " << v.rhs;
  }
  return os.str();
}

// ---------------------------------------------------------- certificate

VerificationReport check_certificate(const HopfStructure& h,
                                     const PointedCertificate& cert) {
  VerificationReport rep;
  const std::size_t d = h.dim;
  auto in_range = [&](std::size_t i) { return i < d; };
  std::set<std::size_t> group(cert.grouplikes.begin(), cert.grouplikes.end());
  for (std::size_t g : cert.grouplikes) {
    if (!in_range(g)) {
      rep.fail("index out of range", {g}, "", "");
      continue;
    }
    Vec want = Vec::basis(g * d + g);
    if (h.comult[g] != want)
      rep.fail("grouplike comultiplication", {g},
               h.coproduct(Vec::basis(g)).to_string(), want.to_string());
    if (!h.counit[g].is_one())
      rep.fail("grouplike counit", {g}, h.counit[g].to_string(), "1");
  }
  rep.count("grouplike", cert.grouplikes.size());
  if (!rep.passed()) {
    rep.sort();
    return rep;
  }
  auto u = h.unit_index();
  if (!u || !group.count(*u))
    rep.fail("unit among grouplikes", {}, h.render(h.unit), "grouplike");
  if (!h.mult.empty()) {
    for (std::size_t a : cert.grouplikes)
      for (std::size_t b : cert.grouplikes) {
        const Vec& p = h.product(a, b);
        bool ok = p.size() == 1 && p.terms().front().coeff.is_one() &&
                  group.count(p.terms().front().index);
        if (!ok)
          rep.fail("grouplikes closed under multiplication", {a, b},
                   h.render(p), "grouplike");
      }
  }
  for (const auto& s : cert.skew_primitives) {
    if (!in_range(s.x) || !in_range(s.left) || !in_range(s.right)) {
      rep.fail("index out of range", {s.x, s.left, s.right}, "", "");
      continue;
    }
    if (!group.count(s.left) || !group.count(s.right))
      rep.fail("skew-primitive over non-grouplikes", {s.x, s.left, s.right},
               "", "");
    Vec want = Vec::basis(s.x * d + s.right) + Vec::basis(s.left * d + s.x);
    if (h.comult[s.x] != want)
      rep.fail("skew-primitive comultiplication", {s.x, s.left, s.right},
               h.comult[s.x].to_string(), want.to_string());
    if (!h.counit[s.x].is_zero())
      rep.fail("skew-primitive counit", {s.x}, h.counit[s.x].to_string(),
               "0");
  }
  rep.count("skew-primitive", cert.skew_primitives.size());
  rep.sort();
  return rep;
}

// ------------------------------------------------------- linear maps

LinearMap convolution(const LinearMap& f, const LinearMap& g,
                      const HopfStructure& source,
                      const HopfStructure& target) {
  if (f.cols != source.dim || g.cols != source.dim || f.rows != target.dim ||
      g.rows != target.dim)
    throw Error(ErrorKind::invalid_input, "convolution: mismatched maps");
  LinearMap out;
  out.rows = target.dim;
  out.cols = source.dim;
  Accumulator acc(target.dim);
  for (std::size_t i = 0; i < source.dim; ++i) {
    for (const auto& s : source.splits(i))
      acc.add(target.multiply(f.columns[s.left], g.columns[s.right]), s.coeff);
    out.columns.push_back(acc.take());
  }
  return out;
}

LinearMap unit_counit(const HopfStructure& source,
                      const HopfStructure& target) {
  LinearMap out;
  out.rows = target.dim;
  out.cols = source.dim;
  for (std::size_t i = 0; i < source.dim; ++i)
    out.columns.push_back(target.unit * source.counit[i]);
  return out;
}

namespace {

void check_dims(const LinearMap& f, const HopfStructure& s,
                const HopfStructure& t) {
  if (f.cols != s.dim || f.rows != t.dim || f.columns.size() != s.dim)
    throw Error(ErrorKind::invalid_input, "map dimensions do not match");
}

// (f (x) f)(v) for v in the source tensor square.
Vec tensor_apply(const LinearMap& f, const Vec& v, std::size_t src_dim,
                 std::size_t tgt_dim) {
  std::vector<Term> out;
  for (const auto& t : v.terms()) {
    const Vec& a = f.columns[t.index / src_dim];
    const Vec& b = f.columns[t.index % src_dim];
    for (const auto& x : a.terms())
      for (const auto& y : b.terms())
        out.push_back({x.index * tgt_dim + y.index, t.coeff * x.coeff * y.coeff});
  }
  return Vec::from_terms(std::move(out));
}

}  // namespace

bool is_coalgebra_map(const LinearMap& f, const HopfStructure& source,
                      const HopfStructure& target) {
  check_dims(f, source, target);
  for (std::size_t i = 0; i < source.dim; ++i) {
    if (target.coproduct(f.columns[i]) !=
        tensor_apply(f, source.comult[i], source.dim, target.dim))
      return false;
    if (target.epsilon(f.columns[i]) != source.counit[i]) return false;
  }
  return true;
}

bool is_algebra_map(const LinearMap& f, const HopfStructure& source,
                    const HopfStructure& target) {
  check_dims(f, source, target);
  if (!is_unitary(f, source, target)) return false;
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j)
      if (f.apply(source.product(i, j)) !=
          target.multiply(f.columns[i], f.columns[j]))
        return false;
  return true;
}

bool is_unitary(const LinearMap& f, const HopfStructure& source,
                const HopfStructure& target) {
  check_dims(f, source, target);
  return f.apply(source.unit) == target.unit;
}

bool is_cocentral(const LinearMap& r, const HopfStructure& source,
                  const HopfStructure& target) {
  if (!is_coalgebra_map(r, source, target))
    throw Error(ErrorKind::not_coalgebra_map,
                "cocentrality requires a coalgebra map");
  const std::size_t hd = source.dim;
  for (std::size_t i = 0; i < hd; ++i) {
    std::vector<Term> l, rr;
    for (const auto& s : source.splits(i)) {
      for (const auto& t : r.columns[s.left].terms())
        l.push_back({t.index * hd + s.right, t.coeff * s.coeff});
      for (const auto& t : r.columns[s.right].terms())
        rr.push_back({t.index * hd + s.left, t.coeff * s.coeff});
    }
    if (Vec::from_terms(std::move(l)) != Vec::from_terms(std::move(rr)))
      return false;
  }
  return true;
}

bool is_left_linear(const LinearMap& f, const HopfStructure& source,
                    const HopfStructure& target, const LinearMap& embed_src,
                    const LinearMap& embed_tgt) {
  check_dims(f, source, target);
  if (embed_src.cols != embed_tgt.cols)
    throw Error(ErrorKind::invalid_input, "embeddings of different algebras");
  for (std::size_t a = 0; a < embed_src.cols; ++a)
    for (std::size_t x = 0; x < source.dim; ++x) {
      Vec l = f.apply(source.multiply(embed_src.columns[a], Vec::basis(x)));
      Vec r = target.multiply(embed_tgt.columns[a], f.columns[x]);
      if (l != r) return false;
    }
  return true;
}

MapPredicates map_predicates(const LinearMap& f, const HopfStructure& source,
                             const HopfStructure& target,
                             const LinearMap* embed_src,
                             const LinearMap* embed_tgt) {
  MapPredicates p;
  p.unitary = is_unitary(f, source, target);
  p.algebra_map = is_algebra_map(f, source, target);
  p.coalgebra_map = is_coalgebra_map(f, source, target);
  if (embed_src && embed_tgt)
    p.left_linear = is_left_linear(f, source, target, *embed_src, *embed_tgt);
  return p;
}

// ----------------------------------------------------------------- dual

HopfStructure dual_hopf(const HopfStructure& h, bool co_opposite) {
  const std::size_t d = h.dim;
  HopfStructure out;
  out.field = h.field;
  out.dim = d;
  out.level = h.level;
  for (std::size_t i = 0; i < d; ++i) out.basis_names.push_back(h.name(i) + "*");

  // (f_i f_j)(e_k) = coefficient of e_i (x) e_j in Delta(e_k)
  std::vector<std::vector<Term>> mult(d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& t : h.comult[k].terms())
      mult[t.index].push_back({k, t.coeff});
  for (auto& m : mult) out.mult.push_back(Vec::from_terms(std::move(m)));

  std::vector<Term> unit;
  for (std::size_t k = 0; k < d; ++k) unit.push_back({k, h.counit[k]});
  out.unit = Vec::from_terms(std::move(unit));

  // Delta(f_k) = sum_{i,j} (e_i e_j)_k f_i (x) f_j, legs swapped for cop
  std::vector<std::vector<Term>> comult(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : h.product(i, j).terms()) {
        std::size_t idx = co_opposite ? j * d + i : i * d + j;
        comult[t.index].push_back({idx, t.coeff});
      }
  for (auto& c : comult) out.comult.push_back(Vec::from_terms(std::move(c)));

  for (std::size_t k = 0; k < d; ++k) out.counit.push_back(h.unit.at(k));

  if (h.antipode) {
    Matrix s = *h.antipode;
    if (co_opposite) {
      auto inv = inverse(s);
      if (!inv) throw Error(ErrorKind::singular, "antipode is not invertible");
      s = *inv;
    }
    // S*(f_k) = sum_i S(e_i)_k f_i
    std::vector<std::vector<Term>> cols(d);
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& t : s.columns[i].terms())
        cols[t.index].push_back({i, t.coeff});
    Matrix st;
    st.rows = st.cols = d;
    for (auto& c : cols) st.columns.push_back(Vec::from_terms(std::move(c)));
    out.antipode = std::move(st);
  }
  return out;
}

// ---------------------------------------------------------- rebasing

HopfStructure rebase(const HopfStructure& h, const Matrix& change) {
  const std::size_t d = h.dim;
  auto inv = inverse(change);
  if (!inv) throw Error(ErrorKind::singular, "change of basis is singular");
  HopfStructure out;
  out.field = h.field;
  out.dim = d;
  out.level = h.level;
  for (std::size_t j = 0; j < d; ++j)
    out.basis_names.push_back(change.columns[j].to_string(&h.basis_names));
  if (!h.mult.empty()) {
    out.mult.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out.mult.push_back(
            inv->apply(h.multiply(change.columns[i], change.columns[j])));
    out.unit = inv->apply(h.unit);
  }
  if (!h.comult.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      Vec c = h.coproduct(change.columns[i]);
      std::vector<Term> t;
      for (const auto& x : c.terms()) {
        const Vec& a = inv->columns[x.index / d];
        const Vec& b = inv->columns[x.index % d];
        for (const auto& p : a.terms())
          for (const auto& q : b.terms())
            t.push_back({p.index * d + q.index, x.coeff * p.coeff * q.coeff});
      }
      out.comult.push_back(Vec::from_terms(std::move(t)));
      out.counit.push_back(h.epsilon(change.columns[i]));
    }
  }
  if (h.antipode) out.antipode = compose(*inv, compose(*h.antipode, change));
  return out;
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
  Matrix m;
  m.rows = m.cols = perm.size();
  for (std::size_t j : perm) m.columns.push_back(Vec::basis(j));
  return m;
}

HopfStructure permute_basis(const HopfStructure& h,
                            const std::vector<std::size_t>& perm) {
  HopfStructure out = rebase(h, permutation_matrix(perm));
  for (std::size_t j = 0; j < perm.size(); ++j)
    out.basis_names[j] = h.name(perm[j]);
  return out;
}

bool same_structure_constants(const HopfStructure& a, const HopfStructure& b) {
  return a.dim == b.dim && a.mult == b.mult && a.unit == b.unit &&
         a.comult == b.comult && a.counit == b.counit &&
         a.antipode.has_value() == b.antipode.has_value() &&
         (!a.antipode || *a.antipode == *b.antipode);
}

// --------------------------------------------------------------- groups

std::size_t CayleyTable::identity() const {
  for (std::size_t e = 0; e < order; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok) return e;
  }
  throw Error(ErrorKind::invalid_input, "Cayley table has no identity");
}

void CayleyTable::validate() const {
  if (order == 0 || table.size() != order * order)
    throw Error(ErrorKind::invalid_input, "Cayley table has wrong size");
  for (std::size_t v : table)
    if (v >= order) throw Error(ErrorKind::invalid_input, "entry out of range");
  identity();
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(ErrorKind::invalid_input,
                      "Cayley table is not associative");
  for (std::size_t a = 0; a < order; ++a) inverse_of(a);
}

std::size_t CayleyTable::inverse_of(std::size_t i) const {
  std::size_t e = identity();
  for (std::size_t j = 0; j < order; ++j)
    if (at(i, j) == e && at(j, i) == e) return j;
  throw Error(ErrorKind::invalid_input, "element without inverse");
}

CayleyTable cyclic_group(std::size_t n, const std::string& gen) {
  CayleyTable t;
  t.order = n;
  t.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(i == 0 ? "1" : i == 1 ? gen : gen + "^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t.table[i * n + j] = (i + j) % n;
  }
  return t;
}

PointedHopf group_algebra(const CayleyTable& table, Field field) {
  table.validate();
  const std::size_t d = table.order;
  PointedHopf ga;
  HopfStructure& h = ga.hopf;
  h.field = field;
  h.dim = d;
  h.level = Level::hopf;
  for (std::size_t i = 0; i < d; ++i)
    h.basis_names.push_back(i < table.names.size() ? table.names[i]
                                                   : "g" + std::to_string(i));
  const Scalar one = field.one();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      h.mult.push_back(Vec::basis(table.at(i, j), one));
  h.unit = Vec::basis(table.identity(), one);
  Matrix s;
  s.rows = s.cols = d;
  for (std::size_t i = 0; i < d; ++i) {
    h.comult.push_back(Vec::basis(i * d + i, one));
    h.counit.push_back(one);
    s.columns.push_back(Vec::basis(table.inverse_of(i), one));
    ga.cert.grouplikes.push_back(i);
  }
  h.antipode = std::move(s);
  return ga;
}

}  // namespace bicrossed
