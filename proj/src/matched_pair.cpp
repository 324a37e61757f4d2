#include "bicrossed/matched_pair.hpp"

#include "bicrossed/kernels.hpp"

namespace bicrossed {

Vec MatchedPairHopf::act_left(const Vec& h, const Vec& a) const {
  if (h.size() == 1 && a.size() == 1) {
    const Term& x = h.terms().front();
    const Term& y = a.terms().front();
    return left_at(x.index, y.index) * (x.coeff * y.coeff);
  }
  Accumulator acc(A.dim);
  for (const auto& x : h.terms())
    for (const auto& y : a.terms())
      acc.add(left_at(x.index, y.index), x.coeff * y.coeff);
  return acc.take();
}

Vec MatchedPairHopf::act_right(const Vec& h, const Vec& a) const {
  if (h.size() == 1 && a.size() == 1) {
    const Term& x = h.terms().front();
    const Term& y = a.terms().front();
    return right_at(x.index, y.index) * (x.coeff * y.coeff);
  }
  Accumulator acc(H.dim);
  for (const auto& x : h.terms())
    for (const auto& y : a.terms())
      acc.add(right_at(x.index, y.index), x.coeff * y.coeff);
  return acc.take();
}

MatchedPairHopf trivial_matched_pair(const HopfStructure& A,
                                     const HopfStructure& H) {
  MatchedPairHopf mp{A, H, {}, {}};
  mp.left.reserve(H.dim * A.dim);
  mp.right.reserve(H.dim * A.dim);
  for (std::size_t h = 0; h < H.dim; ++h)
    for (std::size_t a = 0; a < A.dim; ++a) {
      mp.left.push_back(Vec::basis(a, H.counit[h]));
      mp.right.push_back(Vec::basis(h, A.counit[a]));
    }
  return mp;
}

namespace {

// sum (h_(1) |> a_(1)) (x) (h_(2) <| a_(2)) in A (x) H, keyed by h*dA + a.
std::vector<Vec> cross_table(const MatchedPairHopf& mp) {
  const std::size_t dA = mp.A.dim, dH = mp.H.dim;
  std::vector<Vec> out(dH * dA);
  parallel_for(dH, Exec::parallel, [&](std::size_t h) {
    auto hs = mp.H.splits(h);
    for (std::size_t a = 0; a < dA; ++a) {
      std::vector<Term> terms;
      for (const auto& x : hs)
        for (const auto& y : mp.A.splits(a)) {
          Scalar c = x.coeff * y.coeff;
          const Vec& u = mp.left_at(x.left, y.left);
          const Vec& v = mp.right_at(x.right, y.right);
          for (const auto& p : u.terms())
            for (const auto& q : v.terms())
              terms.push_back({p.index * dH + q.index, c * p.coeff * q.coeff});
        }
      out[h * dA + a] = Vec::from_terms(std::move(terms));
    }
  });
  return out;
}

std::string vs(const HopfStructure& s, const Vec& v) { return s.render(v); }

void check_row(const MatchedPairHopf& mp, const std::vector<Vec>& cross,
               std::size_t i, VerificationReport& rep) {
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t dA = A.dim, dH = H.dim;
  const Vec hi = Vec::basis(i);

  Vec n1 = mp.act_left(hi, A.unit);
  Vec n1w = A.unit * H.counit[i];
  if (n1 != n1w) rep.fail("normalization h|>1", {i}, vs(A, n1), vs(A, n1w));
  Vec n4 = mp.act_right(hi, A.unit);
  if (n4 != hi) rep.fail("normalization h<|1", {i}, vs(H, n4), vs(H, hi));

  auto hs = H.splits(i);
  for (std::size_t a = 0; a < dA; ++a) {
    const Vec ea = Vec::basis(a);
    auto as = A.splits(a);
    // coalgebra maps
    {
      std::vector<Term> l, r;
      for (const auto& x : hs)
        for (const auto& y : as) {
          Scalar c = x.coeff * y.coeff;
          Vec u = mp.left_at(x.left, y.left);
          Vec v = mp.left_at(x.right, y.right);
          for (const auto& t : tensor(u, v, dA).terms())
            l.push_back({t.index, t.coeff * c});
          Vec u2 = mp.right_at(x.left, y.left);
          Vec v2 = mp.right_at(x.right, y.right);
          for (const auto& t : tensor(u2, v2, dH).terms())
            r.push_back({t.index, t.coeff * c});
        }
      Vec dl = A.coproduct(mp.left_at(i, a));
      Vec want_l = Vec::from_terms(std::move(l));
      if (dl != want_l)
        rep.fail("left action is comultiplicative", {i, a}, dl.to_string(),
                 want_l.to_string());
      Vec dr = H.coproduct(mp.right_at(i, a));
      Vec want_r = Vec::from_terms(std::move(r));
      if (dr != want_r)
        rep.fail("right action is comultiplicative", {i, a}, dr.to_string(),
                 want_r.to_string());
      Scalar e = H.counit[i] * A.counit[a];
      if (A.epsilon(mp.left_at(i, a)) != e)
        rep.fail("left action preserves counit", {i, a},
                 A.epsilon(mp.left_at(i, a)).to_string(), e.to_string());
      if (H.epsilon(mp.right_at(i, a)) != e)
        rep.fail("right action preserves counit", {i, a},
                 H.epsilon(mp.right_at(i, a)).to_string(), e.to_string());
    }
    // left module: (i j) |> a = i |> (j |> a)
    for (std::size_t j = 0; j < dH; ++j) {
      Vec l = mp.act_left(H.product(i, j), ea);
      Vec r = mp.act_left(hi, mp.left_at(j, a));
      if (l != r) rep.fail("left module", {i, j, a}, vs(A, l), vs(A, r));
    }
    for (std::size_t b = 0; b < dA; ++b) {
      const Vec eb = Vec::basis(b);
      // right module: i <| (ab) = (i <| a) <| b
      Vec l = mp.act_right(hi, A.product(a, b));
      Vec r = mp.act_right(mp.right_at(i, a), eb);
      if (l != r) rep.fail("right module", {i, a, b}, vs(H, l), vs(H, r));
      // i |> (ab) = (i_(1) |> a_(1)) ((i_(2) <| a_(2)) |> b)
      Vec l2 = mp.act_left(hi, A.product(a, b));
      Accumulator acc(dA);
      for (const auto& t : cross[i * dA + a].terms()) {
        Vec u = Vec::basis(t.index / dH);
        Vec v = Vec::basis(t.index % dH);
        acc.add(A.multiply(u, mp.act_left(v, eb)), t.coeff);
      }
      Vec r2 = acc.take();
      if (l2 != r2)
        rep.fail("compatibility h|>(ab)", {i, a, b}, vs(A, l2), vs(A, r2));
    }
    // (i j) <| a = (i <| (j_(1) |> a_(1))) (j_(2) <| a_(2))
    for (std::size_t j = 0; j < dH; ++j) {
      Vec l = mp.act_right(H.product(i, j), ea);
      Accumulator acc(dH);
      for (const auto& t : cross[j * dA + a].terms()) {
        Vec u = Vec::basis(t.index / dH);
        Vec v = Vec::basis(t.index % dH);
        acc.add(H.multiply(mp.act_right(hi, u), v), t.coeff);
      }
      Vec r = acc.take();
      if (l != r)
        rep.fail("compatibility (gh)<|a", {i, j, a}, vs(H, l), vs(H, r));
    }
    // (i_(1) <| a_(1)) (x) (i_(2) |> a_(2)) symmetric in the legs
    {
      std::vector<Term> l, r;
      for (const auto& x : hs)
        for (const auto& y : as) {
          Scalar c = x.coeff * y.coeff;
          for (const auto& t :
               tensor(mp.right_at(x.left, y.left), mp.left_at(x.right, y.right),
                      dA)
                   .terms())
            l.push_back({t.index, t.coeff * c});
          for (const auto& t :
               tensor(mp.right_at(x.right, y.right), mp.left_at(x.left, y.left),
                      dA)
                   .terms())
            r.push_back({t.index, t.coeff * c});
        }
      Vec lv = Vec::from_terms(std::move(l));
      Vec rv = Vec::from_terms(std::move(r));
      if (lv != rv)
        rep.fail("compatibility of legs", {i, a}, lv.to_string(),
                 rv.to_string());
    }
  }
}

std::string pair_name(const HopfStructure& A, const HopfStructure& H,
                      std::size_t a, std::size_t h) {
  std::string an = A.name(a), hn = H.name(h);
  if (an == "1") return hn;
  if (hn == "1") return an;
  return an + " " + hn;
}

// Fills everything except the multiplication table.
HopfStructure assemble(const MatchedPairHopf& mp) {
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t dA = A.dim, dH = H.dim, d = dA * dH;
  HopfStructure E;
  E.field = A.field.degree() >= H.field.degree() ? A.field : H.field;
  E.dim = d;
  E.level = Level::hopf;
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t h = 0; h < dH; ++h)
      E.basis_names.push_back(pair_name(A, H, a, h));
  E.unit = tensor(A.unit, H.unit, dH);
  E.comult.resize(d);
  E.counit.resize(d);
  for (std::size_t a = 0; a < dA; ++a) {
    auto as = A.splits(a);
    for (std::size_t h = 0; h < dH; ++h) {
      std::vector<Term> t;
      for (const auto& x : as)
        for (const auto& y : H.splits(h))
          t.push_back({(x.left * dH + y.left) * d + (x.right * dH + y.right),
                       x.coeff * y.coeff});
      E.comult[a * dH + h] = Vec::from_terms(std::move(t));
      E.counit[a * dH + h] = A.counit[a] * H.counit[h];
    }
  }
  if (A.antipode && H.antipode) {
    Matrix s;
    s.rows = s.cols = d;
    s.columns.resize(d);
    for (std::size_t a = 0; a < dA; ++a) {
      auto as = A.splits(a);
      for (std::size_t h = 0; h < dH; ++h) {
        std::vector<Term> t;
        for (const auto& x : as)
          for (const auto& y : H.splits(h)) {
            Scalar c = x.coeff * y.coeff;
            Vec sa1 = A.antipode->columns[x.left];
            Vec sa2 = A.antipode->columns[x.right];
            Vec sh1 = H.antipode->columns[y.left];
            Vec sh2 = H.antipode->columns[y.right];
            Vec u = mp.act_left(sh2, sa2);
            Vec v = mp.act_right(sh1, sa1);
            for (const auto& p : tensor(u, v, dH).terms())
              t.push_back({p.index, p.coeff * c});
          }
        s.columns[a * dH + h] = Vec::from_terms(std::move(t));
      }
    }
    E.antipode = std::move(s);
  }
  return E;
}

void fill_embeddings(BicrossedProduct& bp) {
  const HopfStructure& A = bp.pair.A;
  const HopfStructure& H = bp.pair.H;
  const std::size_t dH = H.dim, d = A.dim * dH;
  bp.embed_A = Matrix{d, A.dim, {}};
  bp.embed_H = Matrix{d, dH, {}};
  for (std::size_t a = 0; a < A.dim; ++a)
    bp.embed_A.columns.push_back(tensor(Vec::basis(a), H.unit, dH));
  for (std::size_t h = 0; h < dH; ++h)
    bp.embed_H.columns.push_back(tensor(A.unit, Vec::basis(h), dH));
}

void verify_product(const BicrossedProduct& bp) {
  VerificationReport rep = verify_axioms(bp.product, Level::hopf);
  if (!rep.passed()) throw VerificationFailure("product is not a Hopf algebra", rep);
}

}  // namespace

VerificationReport verify_matched_pair(const MatchedPairHopf& mp, Exec exec) {
  const std::size_t dA = mp.A.dim, dH = mp.H.dim;
  if (mp.left.size() != dA * dH || mp.right.size() != dA * dH)
    throw Error(ErrorKind::invalid_input, "action tensors have wrong size");
  std::vector<Vec> cross = cross_table(mp);
  VerificationReport rep = run_rows(
      dH, exec, [&](std::size_t i, VerificationReport& r) {
        check_row(mp, cross, i, r);
      });
  for (std::size_t a = 0; a < dA; ++a) {
    Vec ea = Vec::basis(a);
    Vec l = mp.act_left(mp.H.unit, ea);
    if (l != ea)
      rep.fail("normalization 1|>a", {a}, mp.A.render(l), mp.A.render(ea));
    Vec r = mp.act_right(mp.H.unit, ea);
    Vec want = mp.H.unit * mp.A.counit[a];
    if (r != want)
      rep.fail("normalization 1<|a", {a}, mp.H.render(r), mp.H.render(want));
  }
  rep.count("matched pair (h,a) pairs", dA * dH);
  rep.count("matched pair triples", dH * dA * (dA + 2 * dH));
  rep.sort();
  return rep;
}

BicrossedProduct bicrossed_product(const MatchedPairHopf& mp, bool verify) {
  if (verify) {
    VerificationReport rep = verify_matched_pair(mp);
    if (!rep.passed()) throw VerificationFailure("not a matched pair", rep);
  }
  BicrossedProduct bp;
  bp.pair = mp;
  bp.product = assemble(mp);
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t dA = A.dim, dH = H.dim, d = dA * dH;
  std::vector<Vec> cross = cross_table(mp);
  bp.product.mult.resize(d * d);
  // (a h)(c g) = sum a u (x) v g over u (x) v in cross(h, c)
  parallel_for(d, Exec::parallel, [&](std::size_t x) {
    const std::size_t a = x / dH, h = x % dH;
    Accumulator acc(d);
    for (std::size_t c = 0; c < dA; ++c) {
      const Vec& cr = cross[h * dA + c];
      for (std::size_t g = 0; g < dH; ++g) {
        for (const auto& t : cr.terms()) {
          const Vec& au = A.product(a, t.index / dH);
          const Vec& vg = H.product(t.index % dH, g);
          for (const auto& p : au.terms())
            for (const auto& q : vg.terms())
              acc.add(p.index * dH + q.index, t.coeff * p.coeff * q.coeff);
        }
        bp.product.mult[x * d + c * dH + g] = acc.take();
      }
    }
  });
  fill_embeddings(bp);
  if (verify) verify_product(bp);
  return bp;
}

BicrossedProduct smash_product(const HopfStructure& A, const HopfStructure& H,
                               const std::vector<Vec>& left_action) {
  MatchedPairHopf mp = trivial_matched_pair(A, H);
  if (left_action.size() != mp.left.size())
    throw Error(ErrorKind::invalid_input, "action tensor has wrong size");
  mp.left = left_action;
  const std::size_t dA = A.dim, dH = H.dim, d = dA * dH;

  VerificationReport rep;
  for (std::size_t g = 0; g < dH; ++g)
    for (std::size_t a = 0; a < dA; ++a) {
      std::vector<Term> l, r;
      for (const auto& s : H.splits(g)) {
        for (const auto& t : mp.left_at(s.right, a).terms())
          l.push_back({s.left * dA + t.index, t.coeff * s.coeff});
        for (const auto& t : mp.left_at(s.left, a).terms())
          r.push_back({s.right * dA + t.index, t.coeff * s.coeff});
      }
      Vec lv = Vec::from_terms(std::move(l)), rv = Vec::from_terms(std::move(r));
      if (lv != rv)
        rep.fail("smash leg symmetry", {g, a}, lv.to_string(), rv.to_string());
    }
  rep.merge(verify_matched_pair(mp));
  rep.sort();
  if (!rep.passed()) throw VerificationFailure("not a smash product datum", rep);

  BicrossedProduct bp;
  bp.pair = mp;
  bp.product = assemble(mp);
  bp.product.mult.resize(d * d);
  // (a # h)(c # g) = a (h_(1) |> c) # h_(2) g
  parallel_for(d, Exec::parallel, [&](std::size_t x) {
    const std::size_t a = x / dH, h = x % dH;
    auto hs = H.splits(h);
    Accumulator acc(d);
    for (std::size_t c = 0; c < dA; ++c)
      for (std::size_t g = 0; g < dH; ++g) {
        for (const auto& s : hs) {
          Vec u = A.multiply(Vec::basis(a), mp.left_at(s.left, c));
          const Vec& v = H.product(s.right, g);
          for (const auto& p : u.terms())
            for (const auto& q : v.terms())
              acc.add(p.index * dH + q.index, s.coeff * p.coeff * q.coeff);
        }
        bp.product.mult[x * d + c * dH + g] = acc.take();
      }
  });
  fill_embeddings(bp);
  verify_product(bp);
  return bp;
}

LinearMap multiplication_map(const HopfStructure& E, const LinearMap& embed_A,
                             const LinearMap& embed_H) {
  LinearMap m;
  m.rows = E.dim;
  m.cols = embed_A.cols * embed_H.cols;
  for (std::size_t a = 0; a < embed_A.cols; ++a)
    for (std::size_t h = 0; h < embed_H.cols; ++h)
      m.columns.push_back(E.multiply(embed_A.columns[a], embed_H.columns[h]));
  return m;
}

MatchedPairHopf canonical_matched_pair(const HopfStructure& E,
                                       const HopfStructure& A,
                                       const HopfStructure& H,
                                       const LinearMap& embed_A,
                                       const LinearMap& embed_H) {
  for (const auto* m : {&embed_A, &embed_H}) {
    const HopfStructure& src = m == &embed_A ? A : H;
    auto p = map_predicates(*m, src, E);
    if (!p.algebra_map || !p.coalgebra_map || rank(*m) != src.dim)
      throw Error(ErrorKind::invalid_input,
                  "embedding is not an injective Hopf algebra map");
  }
  LinearMap mu = multiplication_map(E, embed_A, embed_H);
  auto inv = inverse(mu);
  if (!inv)
    throw Error(ErrorKind::not_complement,
                "not a complement: multiplication map is not bijective");
  const std::size_t dA = A.dim, dH = H.dim;
  MatchedPairHopf mp{A, H, std::vector<Vec>(dA * dH), std::vector<Vec>(dA * dH)};
  parallel_for(dH, Exec::parallel, [&](std::size_t h) {
    for (std::size_t a = 0; a < dA; ++a) {
      Vec ha = E.multiply(embed_H.columns[h], embed_A.columns[a]);
      Vec w = inv->apply(ha);
      std::vector<Term> l, r;
      for (const auto& t : w.terms()) {
        std::size_t ai = t.index / dH, hi = t.index % dH;
        if (!H.counit[hi].is_zero()) l.push_back({ai, t.coeff * H.counit[hi]});
        if (!A.counit[ai].is_zero()) r.push_back({hi, t.coeff * A.counit[ai]});
      }
      mp.left[h * dA + a] = Vec::from_terms(std::move(l));
      mp.right[h * dA + a] = Vec::from_terms(std::move(r));
    }
  });
  VerificationReport rep = verify_matched_pair(mp);
  if (!rep.passed())
    throw VerificationFailure("extracted actions are not a matched pair", rep);
  BicrossedProduct bp = bicrossed_product(mp, false);
  auto p = map_predicates(mu, bp.product, E);
  if (!p.algebra_map || !p.coalgebra_map)
    throw Error(ErrorKind::verification_failed,
                "multiplication map is not a Hopf isomorphism");
  return mp;
}

BicrossedProduct drinfeld_double(const HopfStructure& H) {
  if (!H.antipode) throw Error(ErrorKind::missing_structure, "no antipode");
  auto sinv = inverse(*H.antipode);
  if (!sinv) throw Error(ErrorKind::singular, "antipode is not invertible");
  const std::size_t d = H.dim;
  HopfStructure dual = dual_hopf(H, true);
  MatchedPairHopf mp{dual, H, std::vector<Vec>(d * d), std::vector<Vec>(d * d)};
  for (std::size_t i = 0; i < d; ++i) {
    // e_i <| f_k = sum <f_k, S^-1(e_c) e_a> e_b over Delta^2(e_i)
    std::vector<std::vector<Term>> right(d);
    for (const auto& s : H.splits3(i)) {
      Vec p = H.multiply(sinv->columns[s.c], Vec::basis(s.a));
      for (const auto& t : p.terms())
        right[t.index].push_back({s.b, t.coeff * s.coeff});
    }
    // (e_i |> f_k)(e_y) = sum <f_k, S^-1(e_r) e_y e_l> over Delta(e_i)
    std::vector<std::vector<Term>> left(d);
    for (const auto& s : H.splits(i))
      for (std::size_t y = 0; y < d; ++y) {
        Vec p = H.multiply(H.multiply(sinv->columns[s.right], Vec::basis(y)),
                           Vec::basis(s.left));
        for (const auto& t : p.terms())
          left[t.index].push_back({y, t.coeff * s.coeff});
      }
    for (std::size_t k = 0; k < d; ++k) {
      mp.right[i * d + k] = Vec::from_terms(std::move(right[k]));
      mp.left[i * d + k] = Vec::from_terms(std::move(left[k]));
    }
  }
  return bicrossed_product(mp, true);
}

}  // namespace bicrossed
