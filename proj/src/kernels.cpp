#include "bicrossed/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace bicrossed {

namespace {

int g_jobs = 0;

// sum_k coeff_k * table[k*stride + col] over the terms of v, or
// sum_k coeff_k * table[row*stride + k] when left is false.
Vec contract(const Vec& v, const std::vector<Vec>& table, std::size_t stride,
             std::size_t fixed, bool v_on_left, Accumulator& acc) {
  const auto& terms = v.terms();
  if (terms.size() == 1) {
    const Term& t = terms.front();
    const Vec& src = v_on_left ? table[t.index * stride + fixed]
                               : table[fixed * stride + t.index];
    return src * t.coeff;
  }
  for (const auto& t : terms) {
    const Vec& src = v_on_left ? table[t.index * stride + fixed]
                               : table[fixed * stride + t.index];
    acc.add(src, t.coeff);
  }
  return acc.take();
}

void assoc_row(const HopfStructure& h, std::size_t i, Accumulator& acc,
               VerificationReport& rep) {
  const std::size_t d = h.dim;
  for (std::size_t j = 0; j < d; ++j) {
    const Vec& ij = h.product(i, j);
    for (std::size_t k = 0; k < d; ++k) {
      Vec lhs = contract(ij, h.mult, d, k, true, acc);
      Vec rhs = contract(h.product(j, k), h.mult, d, i, false, acc);
      if (lhs != rhs)
        rep.fail("associativity", {i, j, k}, h.render(lhs), h.render(rhs));
    }
  }
}

Vec coassoc_left(const HopfStructure& h, std::size_t i) {
  const std::size_t d = h.dim;
  std::vector<Term> out;
  for (const auto& s : h.splits(i))
    for (const auto& t : h.comult[s.left].terms())
      out.push_back({t.index * d + s.right, t.coeff * s.coeff});
  return Vec::from_terms(std::move(out));
}

Vec coassoc_right(const HopfStructure& h, std::size_t i) {
  const std::size_t d = h.dim;
  std::vector<Term> out;
  for (const auto& s : h.splits(i))
    for (const auto& t : h.comult[s.right].terms())
      out.push_back({s.left * d * d + t.index, t.coeff * s.coeff});
  return Vec::from_terms(std::move(out));
}

std::string render_tensor(const HopfStructure& h, const Vec& v,
                          std::size_t legs) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& t : v.terms()) {
    std::vector<std::size_t> idx(legs);
    std::size_t rest = t.index;
    for (std::size_t l = legs; l-- > 0;) {
      idx[l] = rest % h.dim;
      rest /= h.dim;
    }
    if (!out.empty()) out += " + ";
    if (!t.coeff.is_one()) out += "(" + t.coeff.to_string() + ")*";
    for (std::size_t l = 0; l < legs; ++l)
      out += (l ? "(x)" : "") + h.name(idx[l]);
  }
  return out;
}

void coassoc_one(const HopfStructure& h, std::size_t i,
                 VerificationReport& rep) {
  Vec l = coassoc_left(h, i);
  Vec r = coassoc_right(h, i);
  if (l != r)
    rep.fail("coassociativity", {i}, render_tensor(h, l, 3),
             render_tensor(h, r, 3));
}

// Delta(e_i) Delta(e_j) in H (x) H.
Vec comult_product(const HopfStructure& h, std::size_t i, std::size_t j) {
  const std::size_t d = h.dim;
  std::vector<Term> out;
  for (const auto& x : h.splits(i))
    for (const auto& y : h.splits(j)) {
      Scalar c = x.coeff * y.coeff;
      const Vec& l = h.product(x.left, y.left);
      const Vec& r = h.product(x.right, y.right);
      for (const auto& a : l.terms())
        for (const auto& b : r.terms())
          out.push_back({a.index * d + b.index, c * a.coeff * b.coeff});
    }
  return Vec::from_terms(std::move(out));
}

void bialgebra_row(const HopfStructure& h, std::size_t i,
                   VerificationReport& rep) {
  for (std::size_t j = 0; j < h.dim; ++j) {
    Vec l = h.coproduct(h.product(i, j));
    Vec r = comult_product(h, i, j);
    if (l != r)
      rep.fail("comultiplication is multiplicative", {i, j},
               render_tensor(h, l, 2), render_tensor(h, r, 2));
    Scalar el = h.epsilon(h.product(i, j));
    Scalar er = h.counit[i] * h.counit[j];
    if (el != er)
      rep.fail("counit is multiplicative", {i, j}, el.to_string(),
               er.to_string());
  }
}

void antipode_one(const HopfStructure& h, std::size_t i, Accumulator& acc,
                  VerificationReport& rep) {
  const Matrix& s = *h.antipode;
  Vec expect = h.unit * h.counit[i];
  for (const auto& sp : h.splits(i))
    acc.add(h.multiply(s.columns[sp.left], Vec::basis(sp.right)), sp.coeff);
  Vec left = acc.take();
  for (const auto& sp : h.splits(i))
    acc.add(h.multiply(Vec::basis(sp.left), s.columns[sp.right]), sp.coeff);
  Vec right = acc.take();
  if (left != expect)
    rep.fail("antipode S*id", {i}, h.render(left), h.render(expect));
  if (right != expect)
    rep.fail("antipode id*S", {i}, h.render(right), h.render(expect));
}

}  // namespace

void set_max_jobs(int jobs) { g_jobs = jobs < 0 ? 0 : jobs; }
int max_jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }

VerificationReport check_associativity(const HopfStructure& h, Exec exec) {
  auto rep = run_rows(h.dim, exec, [&](std::size_t i, VerificationReport& r) {
    Accumulator acc(h.dim);
    assoc_row(h, i, acc, r);
  });
  rep.count("associativity", h.dim * h.dim * h.dim);
  return rep;
}

VerificationReport check_unit_law(const HopfStructure& h) {
  VerificationReport rep;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec e = Vec::basis(i);
    Vec l = h.multiply(h.unit, e);
    Vec r = h.multiply(e, h.unit);
    if (l != e) rep.fail("left unit", {i}, h.render(l), h.render(e));
    if (r != e) rep.fail("right unit", {i}, h.render(r), h.render(e));
  }
  rep.count("unit", h.dim);
  rep.sort();
  return rep;
}

VerificationReport check_coassociativity(const HopfStructure& h, Exec exec) {
  auto rep = run_rows(h.dim, exec, [&](std::size_t i, VerificationReport& r) {
    coassoc_one(h, i, r);
  });
  rep.count("coassociativity", h.dim);
  return rep;
}

VerificationReport check_counit_law(const HopfStructure& h) {
  VerificationReport rep;
  for (std::size_t i = 0; i < h.dim; ++i) {
    std::vector<Term> l, r;
    for (const auto& s : h.splits(i)) {
      l.push_back({s.right, h.counit[s.left] * s.coeff});
      r.push_back({s.left, h.counit[s.right] * s.coeff});
    }
    Vec lv = Vec::from_terms(std::move(l));
    Vec rv = Vec::from_terms(std::move(r));
    Vec e = Vec::basis(i);
    if (lv != e) rep.fail("left counit", {i}, h.render(lv), h.render(e));
    if (rv != e) rep.fail("right counit", {i}, h.render(rv), h.render(e));
  }
  rep.count("counit", h.dim);
  rep.sort();
  return rep;
}

VerificationReport check_bialgebra(const HopfStructure& h, Exec exec) {
  auto rep = run_rows(h.dim, exec, [&](std::size_t i, VerificationReport& r) {
    bialgebra_row(h, i, r);
  });
  rep.count("bialgebra compatibility", h.dim * h.dim);
  Vec du = h.coproduct(h.unit);
  Vec uu = tensor(h.unit, h.unit, h.dim);
  if (du != uu)
    rep.fail("comultiplication is unital", {}, render_tensor(h, du, 2),
             render_tensor(h, uu, 2));
  Scalar eu = h.epsilon(h.unit);
  if (!eu.is_one())
    rep.fail("counit is unital", {}, eu.to_string(), "1");
  rep.sort();
  return rep;
}

VerificationReport check_antipode(const HopfStructure& h, Exec exec) {
  if (!h.antipode)
    throw Error(ErrorKind::missing_structure, "antipode missing at level hopf");
  auto rep = run_rows(h.dim, exec, [&](std::size_t i, VerificationReport& r) {
    Accumulator acc(h.dim);
    antipode_one(h, i, acc, r);
  });
  rep.count("antipode", h.dim);
  return rep;
}

VerificationReport verify_axioms(const HopfStructure& h, Level level,
                                 Exec exec) {
  VerificationReport rep;
  const bool algebra = level != Level::coalgebra;
  const bool coalgebra = level != Level::algebra;
  if (algebra && h.mult.size() != h.dim * h.dim)
    throw Error(ErrorKind::missing_structure, "multiplication table missing");
  if (coalgebra && h.comult.size() != h.dim)
    throw Error(ErrorKind::missing_structure, "comultiplication missing");
  if (level == Level::hopf && !h.antipode)
    throw Error(ErrorKind::missing_structure, "antipode missing at level hopf");
  if (algebra) {
    rep.merge(check_associativity(h, exec));
    rep.merge(check_unit_law(h));
  }
  if (coalgebra) {
    rep.merge(check_coassociativity(h, exec));
    rep.merge(check_counit_law(h));
  }
  if (level == Level::bialgebra || level == Level::hopf)
    rep.merge(check_bialgebra(h, exec));
  if (level == Level::hopf) rep.merge(check_antipode(h, exec));
  rep.sort();
  return rep;
}

}  // namespace bicrossed
