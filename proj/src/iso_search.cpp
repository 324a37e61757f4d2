#include <algorithm>
#include <exception>
#include <map>

#include "bicrossed/deformation.hpp"
#include "bicrossed/kernels.hpp"
#include "bicrossed/quadratic.hpp"
#include "pointed_shape.hpp"

namespace bicrossed {

namespace {

using detail::PointedShape;

// Grouplike group isomorphisms pi : G1 -> G2 in lexicographic order of the
// image vector.
class GroupIsoSearch {
 public:
  GroupIsoSearch(const PointedShape& g1, const PointedShape& g2)
      : g1_(g1), g2_(g2), ord1_(detail::element_orders(g1)),
        ord2_(detail::element_orders(g2)) {}

  std::vector<std::vector<std::size_t>> run() {
    std::vector<long> pi(g1_.size(), -1);
    if (g1_.size() != g2_.size()) return {};
    pi[g1_.unit] = static_cast<long>(g2_.unit);
    dfs(pi);
    return std::move(out_);
  }

 private:
  bool propagate(std::vector<long>& pi) const {
    const std::size_t m = g1_.size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < m; ++a) {
        if (pi[a] < 0) continue;
        for (std::size_t b = 0; b < m; ++b) {
          if (pi[b] < 0) continue;
          std::size_t ab = g1_.product(a, b);
          auto v = static_cast<long>(g2_.product(static_cast<std::size_t>(pi[a]),
                                                 static_cast<std::size_t>(pi[b])));
          if (pi[ab] < 0) {
            if (ord1_[ab] != ord2_[static_cast<std::size_t>(v)]) return false;
            pi[ab] = v;
            changed = true;
          } else if (pi[ab] != v) {
            return false;
          }
        }
      }
    }
    std::vector<char> used(m, 0);
    for (long v : pi)
      if (v >= 0) {
        if (used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = 1;
      }
    return true;
  }

  void dfs(std::vector<long> pi) {
    if (!propagate(pi)) return;
    auto next = std::find(pi.begin(), pi.end(), -1L);
    if (next == pi.end()) {
      std::vector<std::size_t> done(pi.begin(), pi.end());
      out_.push_back(std::move(done));
      return;
    }
    const auto pos = static_cast<std::size_t>(next - pi.begin());
    for (std::size_t v = 0; v < g2_.size(); ++v) {
      if (ord2_[v] != ord1_[pos]) continue;
      if (std::find(pi.begin(), pi.end(), static_cast<long>(v)) != pi.end()) continue;
      std::vector<long> trial = pi;
      trial[pos] = static_cast<long>(v);
      dfs(std::move(trial));
    }
  }

  const PointedShape& g1_;
  const PointedShape& g2_;
  std::vector<std::size_t> ord1_, ord2_;
  std::vector<std::vector<std::size_t>> out_;
};

struct SkewSpaces {
  const HopfStructure& h;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vec>> cache;

  const std::vector<Vec>& get(std::size_t u, std::size_t v) {
    auto key = std::make_pair(u, v);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::skew_space(h, u, v)).first;
    return it->second;
  }
};

// sigma(e_i) = constant + sum_k t_k vectors[k].
struct AffineImage {
  Vec constant;
  std::vector<std::pair<std::size_t, Vec>> vars;
};

IsoSearch solve_for(const HopfStructure& H1, const HopfStructure& H2,
                    const PointedShape& s1, const PointedShape& s2,
                    const std::vector<std::size_t>& pi,
                    const std::vector<std::vector<Vec>>& spaces,
                    const std::function<bool(const LinearMap&)>& extra) {
  const std::size_t d = H1.dim;
  std::vector<AffineImage> img(d);
  std::size_t nv = 0;
  for (std::size_t k = 0; k < s1.size(); ++k)
    img[s1.grouplikes[k]].constant =
        Vec::basis(s2.grouplikes[pi[k]], H2.field.one());
  for (std::size_t k = 0; k < s1.skews.size(); ++k)
    for (const Vec& p : spaces[k]) img[s1.skews[k].x].vars.emplace_back(nv++, p);

  // sigma(e_i . e_j) - sigma(e_i) sigma(e_j), coordinate-wise.
  std::vector<Poly2> eqs;
  const Scalar minus = H2.field.from_int(-1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::map<std::size_t, Poly2> rows;
      auto row = [&](std::size_t o) -> Poly2& {
        auto it = rows.find(o);
        if (it == rows.end()) it = rows.emplace(o, Poly2(nv)).first;
        return it->second;
      };
      for (const auto& t : H1.product(i, j).terms()) {
        for (const auto& c : img[t.index].constant.terms())
          row(c.index).add_constant(t.coeff * c.coeff);
        for (const auto& [v, p] : img[t.index].vars)
          for (const auto& c : p.terms()) row(c.index).add_linear(v, t.coeff * c.coeff);
      }
      const AffineImage& a = img[i];
      const AffineImage& b = img[j];
      if (!a.constant.is_zero() && !b.constant.is_zero())
        for (const auto& c : H2.multiply(a.constant, b.constant).terms())
          row(c.index).add_constant(minus * c.coeff);
      if (!a.constant.is_zero())
        for (const auto& [v, q] : b.vars)
          for (const auto& c : H2.multiply(a.constant, q).terms())
            row(c.index).add_linear(v, minus * c.coeff);
      if (!b.constant.is_zero())
        for (const auto& [v, p] : a.vars)
          for (const auto& c : H2.multiply(p, b.constant).terms())
            row(c.index).add_linear(v, minus * c.coeff);
      for (const auto& [v, p] : a.vars)
        for (const auto& [w, q] : b.vars)
          for (const auto& c : H2.multiply(p, q).terms())
            row(c.index).add(v, w, minus * c.coeff);
      for (auto& [o, poly] : rows)
        if (!poly.is_zero()) eqs.push_back(std::move(poly));
    }

  auto assemble = [&](const Vec& t) {
    LinearMap sigma{H2.dim, d, std::vector<Vec>(d)};
    for (std::size_t i = 0; i < d; ++i) {
      Vec col = img[i].constant;
      for (const auto& [v, p] : img[i].vars) {
        Scalar c = t.at(v);
        if (!c.is_zero()) col.add_scaled(p, c);
      }
      sigma.columns[i] = std::move(col);
    }
    return sigma;
  };
  auto accept = [&](const Vec& t) {
    LinearMap sigma = assemble(t);
    if (rank(sigma) != d) return false;
    if (!is_unitary(sigma, H1, H2) || !is_coalgebra_map(sigma, H1, H2) ||
        !is_algebra_map(sigma, H1, H2))
      return false;
    return !extra || extra(sigma);
  };
  QuadraticSearch q = solve_quadratic(eqs, nv, H2.field, accept);
  IsoSearch out;
  out.exhaustive = q.exhaustive;
  if (q.solution) out.map = assemble(*q.solution);
  return out;
}

}  // namespace

IsoSearch hopf_iso_search(const HopfStructure& H1, const HopfStructure& H2,
                          const PointedCertificate& cert1,
                          const PointedCertificate& cert2,
                          const std::function<bool(const LinearMap&)>& extra) {
  IsoSearch out;
  PointedShape s1 = detail::pointed_shape(H1, cert1, "first algebra");
  PointedShape s2 = detail::pointed_shape(H2, cert2, "second algebra");
  if (H1.dim != H2.dim || s1.size() != s2.size() ||
      s1.skews.size() != s2.skews.size())
    return out;

  std::vector<std::vector<std::size_t>> isos = GroupIsoSearch(s1, s2).run();
  SkewSpaces p1{H1, {}}, p2{H2, {}};
  // Skew-primitive blocks must match in dimension; this is cheap and kills
  // most grouplike isomorphisms up front.
  std::vector<std::vector<std::vector<Vec>>> blocks;
  std::vector<std::vector<std::size_t>> viable;
  for (auto& pi : isos) {
    std::vector<std::vector<Vec>> spaces;
    bool ok = true;
    for (const auto& x : s1.skews) {
      std::size_t l = static_cast<std::size_t>(s1.ordinal[x.left]);
      std::size_t r = static_cast<std::size_t>(s1.ordinal[x.right]);
      const auto& src = p1.get(x.left, x.right);
      const auto& tgt = p2.get(s2.grouplikes[pi[l]], s2.grouplikes[pi[r]]);
      if (src.size() != tgt.size()) {
        ok = false;
        break;
      }
      spaces.push_back(tgt);
    }
    if (!ok) continue;
    viable.push_back(std::move(pi));
    blocks.push_back(std::move(spaces));
  }

  // Batches of one candidate per worker; the first witness in candidate
  // order wins.
  const std::size_t batch = static_cast<std::size_t>(std::max(1, max_jobs()));
  for (std::size_t start = 0; start < viable.size(); start += batch) {
    const std::size_t n = std::min(batch, viable.size() - start);
    std::vector<IsoSearch> res(n);
    std::vector<std::exception_ptr> errors(n);
    parallel_for(n, Exec::parallel, [&](std::size_t k) {
      try {
        res[k] = solve_for(H1, H2, s1, s2, viable[start + k], blocks[start + k], extra);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
    for (std::size_t k = 0; k < n; ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      if (!res[k].exhaustive) out.exhaustive = false;
      if (res[k].map) {
        out.map = std::move(res[k].map);
        return out;
      }
    }
  }
  return out;
}

bool satisfies_equivalence(const MatchedPairHopf& mp, const LinearMap& r,
                           const LinearMap& R, const LinearMap& sigma) {
  const HopfStructure& H = mp.H;
  const std::size_t d = H.dim;
  const HopfStructure Hr = deformed_structure(mp, r);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t g = 0; g < d; ++g) {
      Vec lhs = sigma.apply(Hr.product(h, g));
      Accumulator acc(d);
      const Vec& sh = sigma.columns[h];
      for (const auto& s : H.splits(g)) {
        const Vec& s1 = sigma.columns[s.left];
        const Vec& s2 = sigma.columns[s.right];
        acc.add(H.multiply(mp.act_right(sh, R.apply(s1)), s2), s.coeff);
      }
      if (lhs != acc.take()) return false;
    }
  return true;
}

bool is_equivalence_witness(const MatchedPairHopf& mp, const LinearMap& r,
                            const LinearMap& R, const LinearMap& sigma) {
  const HopfStructure& H = mp.H;
  if (sigma.rows != H.dim || sigma.cols != H.dim) return false;
  if (rank(sigma) != H.dim) return false;
  if (!is_unitary(sigma, H, H) || !is_coalgebra_map(sigma, H, H)) return false;
  return satisfies_equivalence(mp, r, R, sigma);
}

IsoSearch are_equivalent(const MatchedPairHopf& mp,
                         const PointedCertificate& cert_H, const LinearMap& r,
                         const LinearMap& R) {
  if (r == R) {
    IsoSearch out;
    out.map = Matrix::identity(mp.H.dim);
    return out;
  }
  HopfStructure Hr = deformed_structure(mp, r);
  HopfStructure HR = deformed_structure(mp, R);
  return hopf_iso_search(Hr, HR, cert_H, cert_H, [&](const LinearMap& sigma) {
    return satisfies_equivalence(mp, r, R, sigma);
  });
}

}  // namespace bicrossed
