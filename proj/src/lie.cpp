#include "bicrossed/lie.hpp"

#include <algorithm>

#include "bicrossed/kernels.hpp"
#include "bicrossed/quadratic.hpp"

namespace bicrossed {

Vec LieAlgebra::apply(const Vec& x, const Vec& y) const {
  Accumulator acc(dim);
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) acc.add(at(s.index, t.index), s.coeff * t.coeff);
  return acc.take();
}

std::string LieAlgebra::name(std::size_t i) const {
  return i < basis_names.size() ? basis_names[i] : "e" + std::to_string(i);
}

LieAlgebra abelian_lie(std::size_t dim, Field field, const std::string& prefix) {
  LieAlgebra g{field, dim, {}, std::vector<Vec>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i)
    g.basis_names.push_back(dim == 1 ? prefix : prefix + std::to_string(i + 1));
  return g;
}

namespace {

void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, const Vec& v) {
  g.bracket[i * g.dim + j] = v;
  g.bracket[j * g.dim + i] = -v;
}

}  // namespace

LieAlgebra sl2(Field field) {
  LieAlgebra g{field, 3, {"h", "e", "f"}, std::vector<Vec>(9)};
  set_bracket(g, 0, 1, Vec::basis(1, field.from_int(2)));
  set_bracket(g, 0, 2, Vec::basis(2, field.from_int(-2)));
  set_bracket(g, 1, 2, Vec::basis(0, field.one()));
  return g;
}

LieAlgebra nonabelian2(Field field) {
  LieAlgebra g{field, 2, {"a", "b"}, std::vector<Vec>(4)};
  set_bracket(g, 0, 1, Vec::basis(1, field.one()));
  return g;
}

VerificationReport verify_lie(const LieAlgebra& g, Exec exec) {
  const std::size_t d = g.dim;
  return run_rows(d, exec, [&](std::size_t i, VerificationReport& rep) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec sum = g.at(i, j) + g.at(j, i);
      rep.count("antisymmetry", 1);
      if (!sum.is_zero())
        rep.fail("antisymmetry", {i, j}, g.render(g.at(i, j)), g.render(-g.at(j, i)));
      for (std::size_t k = 0; k < d; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        const Vec ei = Vec::basis(i), ej = Vec::basis(j), ek = Vec::basis(k);
        Vec jac = g.apply(ei, g.at(j, k));
        jac += g.apply(ej, g.at(k, i));
        jac += g.apply(ek, g.at(i, j));
        rep.count("Jacobi identity", 1);
        if (!jac.is_zero()) rep.fail("Jacobi identity", {i, j, k}, g.render(jac), "0");
      }
    }
  });
}

Vec MatchedPairLie::act_left(const Vec& x, const Vec& a) const {
  Accumulator acc(g.dim);
  for (const auto& s : x.terms())
    for (const auto& t : a.terms()) acc.add(left_at(s.index, t.index), s.coeff * t.coeff);
  return acc.take();
}

Vec MatchedPairLie::act_right(const Vec& x, const Vec& a) const {
  Accumulator acc(h.dim);
  for (const auto& s : x.terms())
    for (const auto& t : a.terms()) acc.add(right_at(s.index, t.index), s.coeff * t.coeff);
  return acc.take();
}

MatchedPairLie zero_matched_pair_lie(const LieAlgebra& g, const LieAlgebra& h) {
  return MatchedPairLie{g, h, std::vector<Vec>(h.dim * g.dim),
                        std::vector<Vec>(h.dim * g.dim)};
}

VerificationReport verify_matched_pair_lie(const MatchedPairLie& mp, Exec exec) {
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  const std::size_t dg = g.dim, dh = h.dim;
  return run_rows(dh, exec, [&](std::size_t x, VerificationReport& rep) {
    const Vec ex = Vec::basis(x);
    for (std::size_t y = 0; y < dh; ++y) {
      const Vec ey = Vec::basis(y);
      for (std::size_t a = 0; a < dg; ++a) {
        const Vec ea = Vec::basis(a);
        // [x,y] |> a = x |> (y |> a) - y |> (x |> a)
        Vec l = mp.act_left(h.at(x, y), ea);
        Vec r = mp.act_left(ex, mp.left_at(y, a)) - mp.act_left(ey, mp.left_at(x, a));
        rep.count("left module", 1);
        if (l != r) rep.fail("left module", {x, y, a}, g.render(l), g.render(r));
        // [x,y] <| a = [x, y<|a] + [x<|a, y] + x <| (y|>a) - y <| (x|>a)
        Vec l2 = mp.act_right(h.at(x, y), ea);
        Vec r2 = h.apply(ex, mp.right_at(y, a)) + h.apply(mp.right_at(x, a), ey) +
                 mp.act_right(ex, mp.left_at(y, a)) -
                 mp.act_right(ey, mp.left_at(x, a));
        rep.count("compatibility [x,y]<|a", 1);
        if (l2 != r2)
          rep.fail("compatibility [x,y]<|a", {x, y, a}, h.render(l2), h.render(r2));
      }
    }
    for (std::size_t a = 0; a < dg; ++a) {
      const Vec ea = Vec::basis(a);
      for (std::size_t b = 0; b < dg; ++b) {
        const Vec eb = Vec::basis(b);
        // x <| [a,b] = (x<|a)<|b - (x<|b)<|a
        Vec l = mp.act_right(ex, g.at(a, b));
        Vec r = mp.act_right(mp.right_at(x, a), eb) - mp.act_right(mp.right_at(x, b), ea);
        rep.count("right module", 1);
        if (l != r) rep.fail("right module", {x, a, b}, h.render(l), h.render(r));
        // x |> [a,b] = [x|>a, b] + [a, x|>b] + (x<|a)|>b - (x<|b)|>a
        Vec l2 = mp.act_left(ex, g.at(a, b));
        Vec r2 = g.apply(mp.left_at(x, a), eb) + g.apply(ea, mp.left_at(x, b)) +
                 mp.act_left(mp.right_at(x, a), eb) - mp.act_left(mp.right_at(x, b), ea);
        rep.count("compatibility x|>[a,b]", 1);
        if (l2 != r2)
          rep.fail("compatibility x|>[a,b]", {x, a, b}, g.render(l2), g.render(r2));
      }
    }
  });
}

BicrossedLie bicrossed_lie(const MatchedPairLie& mp, bool verify) {
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  const std::size_t dg = g.dim, dh = h.dim, d = dg + dh;
  if (verify) {
    VerificationReport rep = verify_matched_pair_lie(mp);
    if (!rep.passed()) throw VerificationFailure("not a matched pair", rep);
  }
  BicrossedLie out;
  out.pair = mp;
  LieAlgebra& p = out.product;
  p.field = g.field.degree() >= h.field.degree() ? g.field : h.field;
  p.dim = d;
  for (std::size_t i = 0; i < dg; ++i) p.basis_names.push_back(g.name(i));
  for (std::size_t i = 0; i < dh; ++i) p.basis_names.push_back(h.name(i));
  p.bracket.resize(d * d);
  auto shift = [dg](const Vec& v) {
    std::vector<Term> t;
    for (const auto& term : v.terms()) t.push_back({term.index + dg, term.coeff});
    return Vec::from_terms(std::move(t));
  };
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = 0; b < dg; ++b) p.bracket[a * d + b] = g.at(a, b);
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = 0; y < dh; ++y)
      p.bracket[(dg + x) * d + dg + y] = shift(h.at(x, y));
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t a = 0; a < dg; ++a) {
      // [x, a] = x|>a + x<|a
      Vec v = mp.left_at(x, a) + shift(mp.right_at(x, a));
      p.bracket[(dg + x) * d + a] = v;
      p.bracket[a * d + dg + x] = -v;
    }
  out.embed_g = Matrix{d, dg, {}};
  for (std::size_t a = 0; a < dg; ++a) out.embed_g.columns.push_back(Vec::basis(a));
  out.embed_h = Matrix{d, dh, {}};
  for (std::size_t x = 0; x < dh; ++x) out.embed_h.columns.push_back(Vec::basis(dg + x));
  if (verify) {
    VerificationReport rep = verify_lie(p);
    if (!rep.passed()) throw VerificationFailure("bicrossed product", rep);
  }
  return out;
}

MatchedPairLie canonical_matched_pair_lie(const LieAlgebra& xi,
                                          const std::vector<std::size_t>& g_indices,
                                          const std::vector<std::size_t>& h_indices) {
  const std::size_t d = xi.dim;
  std::vector<long> pos_g(d, -1), pos_h(d, -1);
  for (std::size_t k = 0; k < g_indices.size(); ++k) {
    if (g_indices[k] >= d || pos_g[g_indices[k]] >= 0)
      throw Error(ErrorKind::not_complement, "bad subalgebra index");
    pos_g[g_indices[k]] = static_cast<long>(k);
  }
  for (std::size_t k = 0; k < h_indices.size(); ++k) {
    if (h_indices[k] >= d || pos_h[h_indices[k]] >= 0 || pos_g[h_indices[k]] >= 0)
      throw Error(ErrorKind::not_complement, "index sets overlap or repeat");
    pos_h[h_indices[k]] = static_cast<long>(k);
  }
  if (g_indices.size() + h_indices.size() != d)
    throw Error(ErrorKind::not_complement, "index sets do not cover the basis");

  // Splits a vector of xi into its g and h components.
  auto split = [&](const Vec& v, Vec* in_g, Vec* in_h) {
    std::vector<Term> tg, th;
    for (const auto& t : v.terms()) {
      if (pos_g[t.index] >= 0)
        tg.push_back({static_cast<std::size_t>(pos_g[t.index]), t.coeff});
      else
        th.push_back({static_cast<std::size_t>(pos_h[t.index]), t.coeff});
    }
    *in_g = Vec::from_terms(std::move(tg));
    *in_h = Vec::from_terms(std::move(th));
  };
  auto sub = [&](const std::vector<std::size_t>& idx, bool is_g) {
    LieAlgebra s{xi.field, idx.size(), {}, std::vector<Vec>(idx.size() * idx.size())};
    for (std::size_t i : idx) s.basis_names.push_back(xi.name(i));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Vec vg, vh;
        split(xi.at(idx[i], idx[j]), &vg, &vh);
        if (!(is_g ? vh : vg).is_zero())
          throw Error(ErrorKind::not_complement,
                      std::string(is_g ? "first" : "second") +
                          " index set is not closed under the bracket");
        s.bracket[i * idx.size() + j] = is_g ? vg : vh;
      }
    return s;
  };
  MatchedPairLie mp = zero_matched_pair_lie(sub(g_indices, true), sub(h_indices, false));
  for (std::size_t x = 0; x < h_indices.size(); ++x)
    for (std::size_t a = 0; a < g_indices.size(); ++a) {
      Vec vg, vh;
      split(xi.at(h_indices[x], g_indices[a]), &vg, &vh);
      mp.left[x * g_indices.size() + a] = vg;
      mp.right[x * g_indices.size() + a] = vh;
    }
  VerificationReport rep = verify_matched_pair_lie(mp);
  if (!rep.passed()) throw VerificationFailure("canonical pair", rep);
  return mp;
}

VerificationReport is_deformation_map_lie(const MatchedPairLie& mp,
                                          const LinearMap& r) {
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  VerificationReport rep;
  if (r.rows != g.dim || r.cols != h.dim || r.columns.size() != h.dim) {
    rep.fail("dimensions", {}, std::to_string(r.rows) + "x" + std::to_string(r.cols),
             std::to_string(g.dim) + "x" + std::to_string(h.dim));
    return rep;
  }
  for (std::size_t x = 0; x < h.dim; ++x)
    for (std::size_t y = 0; y < h.dim; ++y) {
      const Vec ex = Vec::basis(x), ey = Vec::basis(y);
      const Vec& rx = r.columns[x];
      const Vec& ry = r.columns[y];
      Vec l = r.apply(h.at(x, y)) - g.apply(rx, ry);
      Vec rr = r.apply(mp.act_right(ey, rx) - mp.act_right(ex, ry)) +
               mp.act_left(ex, ry) - mp.act_left(ey, rx);
      rep.count("deformation identity", 1);
      if (l != rr) rep.fail("deformation identity", {x, y}, g.render(l), g.render(rr));
    }
  return rep;
}

LieAlgebra deformed_bracket(const MatchedPairLie& mp, const LinearMap& r) {
  LieAlgebra out = mp.h;
  const std::size_t d = out.dim;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      out.bracket[x * d + y] = mp.h.at(x, y) +
                               mp.act_right(Vec::basis(x), r.columns[y]) -
                               mp.act_right(Vec::basis(y), r.columns[x]);
  return out;
}

LieAlgebra deform_lie(const MatchedPairLie& mp, const LinearMap& r) {
  VerificationReport rep = is_deformation_map_lie(mp, r);
  if (!rep.passed()) throw VerificationFailure("not a deformation map", rep);
  LieAlgebra out = deformed_bracket(mp, r);
  VerificationReport lie = verify_lie(out);
  if (!lie.passed()) throw VerificationFailure("deformed bracket", lie);
  return out;
}

bool is_lie_map(const LinearMap& f, const LieAlgebra& a, const LieAlgebra& b) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (f.apply(a.at(i, j)) != b.apply(f.columns[i], f.columns[j])) return false;
  return true;
}

DeformedPairLie deform_matched_pair_lie(const MatchedPairLie& mp,
                                        const LinearMap& r) {
  VerificationReport rep = is_deformation_map_lie(mp, r);
  if (!rep.passed()) throw VerificationFailure("not a deformation map", rep);
  const LieAlgebra& g = mp.g;
  const std::size_t dg = g.dim, dh = mp.h.dim, d = dg + dh;
  DeformedPairLie out;
  out.pair = mp;
  out.pair.h = deformed_bracket(mp, r);
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t a = 0; a < dg; ++a) {
      const Vec ea = Vec::basis(a);
      out.pair.left[x * dg + a] = g.apply(r.columns[x], ea) + mp.left_at(x, a) -
                                  r.apply(mp.right_at(x, a));
    }
  out.pair_report = verify_matched_pair_lie(out.pair);

  out.phi = Matrix{d, d, {}};
  for (std::size_t a = 0; a < dg; ++a) out.phi.columns.push_back(Vec::basis(a));
  for (std::size_t x = 0; x < dh; ++x)
    out.phi.columns.push_back(r.columns[x] + Vec::basis(dg + x));
  out.phi_bijective = rank(out.phi) == d;
  BicrossedLie src = bicrossed_lie(out.pair, false);
  BicrossedLie tgt = bicrossed_lie(mp, false);
  out.phi_bracket = true;
  for (std::size_t i = 0; i < d && out.phi_bracket; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (out.phi.apply(src.product.at(i, j)) !=
          tgt.product.apply(out.phi.columns[i], out.phi.columns[j])) {
        out.phi_bracket = false;
        break;
      }
  // [r(x) + x, r(y) + y] must again have the form r(z) + z.
  out.graph_closed = true;
  for (std::size_t x = 0; x < dh && out.graph_closed; ++x)
    for (std::size_t y = 0; y < dh; ++y) {
      Vec v = tgt.product.apply(out.phi.columns[dg + x], out.phi.columns[dg + y]);
      std::vector<Term> gpart, hpart;
      for (const auto& t : v.terms()) {
        if (t.index < dg)
          gpart.push_back(t);
        else
          hpart.push_back({t.index - dg, t.coeff});
      }
      Vec z = Vec::from_terms(std::move(hpart));
      if (r.apply(z) != Vec::from_terms(std::move(gpart))) {
        out.graph_closed = false;
        break;
      }
    }
  return out;
}

namespace {

// Unknowns r_{a,x} at index x*dg + a: the deformation identity as Poly2s.
std::vector<Poly2> deformation_equations(const MatchedPairLie& mp) {
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  const std::size_t dg = g.dim, dh = h.dim, nv = dg * dh;
  auto var = [dg](std::size_t x, std::size_t a) { return x * dg + a; };
  const Scalar minus = g.field.from_int(-1);
  std::vector<Poly2> eqs;
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = x + 1; y < dh; ++y) {
      std::vector<Poly2> row(dg, Poly2(nv));
      // r([x,y])
      for (const auto& t : h.at(x, y).terms())
        for (std::size_t a = 0; a < dg; ++a) row[a].add_linear(var(t.index, a), t.coeff);
      // - [r(x), r(y)]
      for (std::size_t a = 0; a < dg; ++a)
        for (std::size_t b = 0; b < dg; ++b)
          for (const auto& t : g.at(a, b).terms())
            row[t.index].add(var(x, a), var(y, b), minus * t.coeff);
      // - r(y <| r(x)) + r(x <| r(y))
      for (std::size_t a = 0; a < dg; ++a) {
        for (const auto& t : mp.right_at(y, a).terms())
          for (std::size_t c = 0; c < dg; ++c)
            row[c].add(var(x, a), var(t.index, c), minus * t.coeff);
        for (const auto& t : mp.right_at(x, a).terms())
          for (std::size_t c = 0; c < dg; ++c) row[c].add(var(y, a), var(t.index, c), t.coeff);
      }
      // - x |> r(y) + y |> r(x)
      for (std::size_t a = 0; a < dg; ++a) {
        for (const auto& t : mp.left_at(x, a).terms())
          row[t.index].add_linear(var(y, a), minus * t.coeff);
        for (const auto& t : mp.left_at(y, a).terms())
          row[t.index].add_linear(var(x, a), t.coeff);
      }
      for (auto& p : row)
        if (!p.is_zero()) eqs.push_back(std::move(p));
    }
  return eqs;
}

LinearMap map_from_vars(const Vec& v, std::size_t dg, std::size_t dh) {
  LinearMap r{dg, dh, std::vector<Vec>(dh)};
  std::vector<std::vector<Term>> cols(dh);
  for (const auto& t : v.terms()) cols[t.index / dg].push_back({t.index % dg, t.coeff});
  for (std::size_t x = 0; x < dh; ++x) r.columns[x] = Vec::from_terms(std::move(cols[x]));
  return r;
}

void sort_unique(std::vector<LinearMap>& maps) {
  std::sort(maps.begin(), maps.end(),
            [](const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; });
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
}

}  // namespace

LieDeformationFamily enumerate_deformation_maps_lie(const MatchedPairLie& mp,
                                                    const std::vector<LinearMap>& grid) {
  const std::size_t dg = mp.g.dim, dh = mp.h.dim, nv = dg * dh;
  std::vector<Poly2> eqs = deformation_equations(mp);
  LieDeformationFamily out;
  out.maps.push_back(LinearMap{dg, dh, std::vector<Vec>(dh)});
  bool linear = std::none_of(eqs.begin(), eqs.end(),
                             [](const Poly2& p) { return p.has_quadratic(); });
  if (linear) {
    std::vector<Vec> lin;
    for (const auto& p : eqs) lin.push_back(p.linear_part());
    AffineSolution sol = solve_equations(lin, nv);
    for (const auto& k : sol.kernel) {
      out.basis.push_back(map_from_vars(k, dg, dh));
      out.maps.push_back(out.basis.back());
    }
    out.exhaustive = true;
  }
  std::vector<char> keep(grid.size(), 0);
  parallel_for(grid.size(), Exec::parallel, [&](std::size_t i) {
    keep[i] = is_deformation_map_lie(mp, grid[i]).passed();
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (keep[i]) out.maps.push_back(grid[i]);
  sort_unique(out.maps);
  return out;
}

LieInvariants lie_invariants(const LieAlgebra& g) {
  LieInvariants inv;
  const std::size_t d = g.dim;
  std::vector<Vec> span;
  for (std::size_t i = 0; i < d; ++i) span.push_back(Vec::basis(i));
  inv.derived_series.push_back(d);
  for (;;) {
    EchelonBasis next;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j) next.insert(g.apply(span[i], span[j]));
    std::size_t dim = next.rank();
    if (dim == inv.derived_series.back()) break;
    inv.derived_series.push_back(dim);
    if (dim == 0) break;
    span.clear();
    for (const auto& [p, v] : next.rows()) span.push_back(v);
  }
  Matrix ad{d * d, d, {}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Term> t;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& term : g.at(i, j).terms()) t.push_back({j * d + term.index, term.coeff});
    ad.columns.push_back(Vec::from_terms(std::move(t)));
  }
  inv.center = nullspace(ad).size();
  return inv;
}

IsoSearch lie_iso_search(const LieAlgebra& a, const LieAlgebra& b,
                         const std::vector<LinearMap>& candidates) {
  IsoSearch out;
  const std::size_t d = a.dim;
  if (d != b.dim || !(lie_invariants(a) == lie_invariants(b))) return out;
  auto good = [&](const LinearMap& f) {
    return f.rows == d && f.cols == d && rank(f) == d && is_lie_map(f, a, b);
  };
  for (const auto& c : candidates)
    if (good(c)) {
      out.map = c;
      return out;
    }
  if (good(Matrix::identity(d))) {
    out.map = Matrix::identity(d);
    return out;
  }
  // sigma(e_j) = sum_i t_{j*d+i} e_i
  const std::size_t nv = d * d;
  const Scalar minus = b.field.from_int(-1);
  std::vector<Poly2> eqs;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      std::vector<Poly2> row(d, Poly2(nv));
      for (const auto& t : a.at(j, k).terms())
        for (std::size_t i = 0; i < d; ++i) row[i].add_linear(t.index * d + i, t.coeff);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l)
          for (const auto& t : b.at(i, l).terms())
            row[t.index].add(j * d + i, k * d + l, minus * t.coeff);
      for (auto& p : row)
        if (!p.is_zero()) eqs.push_back(std::move(p));
    }
  auto assemble = [d](const Vec& t) {
    LinearMap f{d, d, std::vector<Vec>(d)};
    std::vector<std::vector<Term>> cols(d);
    for (const auto& term : t.terms()) cols[term.index / d].push_back({term.index % d, term.coeff});
    for (std::size_t j = 0; j < d; ++j) f.columns[j] = Vec::from_terms(std::move(cols[j]));
    return f;
  };
  QuadraticSearch q = solve_quadratic(eqs, nv, b.field,
                                      [&](const Vec& t) { return good(assemble(t)); });
  out.exhaustive = q.exhaustive;
  if (q.solution) out.map = assemble(*q.solution);
  return out;
}

IsoSearch are_equivalent_lie(const MatchedPairLie& mp, const LinearMap& r,
                             const LinearMap& R,
                             const std::vector<LinearMap>& candidates) {
  return lie_iso_search(deformed_bracket(mp, r), deformed_bracket(mp, R), candidates);
}

LieClassificationResult classify_complements_lie(const MatchedPairLie& mp,
                                                 const std::vector<LinearMap>& maps,
                                                 LieStrategy strategy) {
  LieClassificationResult out;
  const std::size_t dh = mp.h.dim;
  for (const auto& r : maps)
    if (is_deformation_map_lie(mp, r).passed()) out.maps.push_back(r);
  if (strategy == LieStrategy::exhaustive_1dim) {
    LieDeformationFamily fam = enumerate_deformation_maps_lie(mp);
    for (auto& r : fam.maps) out.maps.push_back(std::move(r));
    // A 1-dimensional h deforms only to the 1-dimensional Lie algebra.
    out.exhaustive = fam.exhaustive && (dh == 1 || fam.basis.empty());
  }
  if (out.maps.empty()) out.maps.push_back(LinearMap{mp.g.dim, dh, std::vector<Vec>(dh)});
  sort_unique(out.maps);

  std::vector<LieAlgebra> deformed;
  for (const auto& r : out.maps) deformed.push_back(deformed_bracket(mp, r));
  std::vector<std::size_t> class_of(out.maps.size());
  for (std::size_t i = 0; i < out.maps.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < out.classes.size() && !placed; ++c) {
      IsoSearch eq = are_equivalent_lie(mp, out.classes[c].r, out.maps[i]);
      if (!eq.map && !eq.exhaustive) out.exhaustive = false;
      if (eq.map) {
        out.classes[c].members.push_back(i);
        class_of[i] = c;
        placed = true;
      }
    }
    if (!placed) {
      class_of[i] = out.classes.size();
      out.classes.push_back({out.maps[i], deform_lie(mp, out.maps[i]), {i}});
    }
  }
  out.factorization_index = out.classes.size();

  // Independent count through invariants plus search on the deformed algebras.
  std::vector<std::size_t> reps, type_of(out.maps.size());
  for (std::size_t i = 0; i < deformed.size(); ++i) {
    bool placed = false;
    for (std::size_t t = 0; t < reps.size() && !placed; ++t) {
      IsoSearch iso = lie_iso_search(deformed[reps[t]], deformed[i]);
      if (!iso.map && !iso.exhaustive) out.exhaustive = false;
      if (iso.map) {
        type_of[i] = t;
        placed = true;
      }
    }
    if (!placed) {
      type_of[i] = reps.size();
      reps.push_back(i);
    }
  }
  out.iso_types = reps.size();
  bool same = out.iso_types == out.classes.size();
  for (std::size_t i = 0; i < out.maps.size() && same; ++i)
    for (std::size_t j = 0; j < i && same; ++j)
      if ((class_of[i] == class_of[j]) != (type_of[i] == type_of[j])) same = false;
  out.bijection_consistent = same;
  return out;
}

MatchedPairLie sl2_borel_pair(Field field) {
  return canonical_matched_pair_lie(sl2(field), {0, 1}, {2});
}

MatchedPairLie scalar_action_pair(std::size_t m, const Scalar& lambda) {
  Field f = lambda.field();
  MatchedPairLie mp = zero_matched_pair_lie(abelian_lie(1, f, "a"), abelian_lie(m, f, "x"));
  for (std::size_t x = 0; x < m; ++x) mp.right[x] = Vec::basis(x, lambda);
  return mp;
}

}  // namespace bicrossed
