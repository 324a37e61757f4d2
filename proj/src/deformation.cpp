#include "bicrossed/deformation.hpp"

#include <algorithm>
#include <chrono>

#include "bicrossed/kernels.hpp"
#include "pointed_shape.hpp"

namespace bicrossed {

int compare_maps(const LinearMap& a, const LinearMap& b) {
  if (a.rows != b.rows) return a.rows < b.rows ? -1 : 1;
  if (a.cols != b.cols) return a.cols < b.cols ? -1 : 1;
  for (std::size_t j = 0; j < a.cols; ++j)
    if (int c = compare(a.columns[j], b.columns[j])) return c;
  return 0;
}

LinearMap trivial_deformation_map(const MatchedPairHopf& mp) {
  LinearMap r{mp.A.dim, mp.H.dim, {}};
  for (std::size_t h = 0; h < mp.H.dim; ++h)
    r.columns.push_back(mp.A.unit * mp.H.counit[h]);
  return r;
}

namespace {

// (e_h <| r(g_(1))) g_(2) in H.
Vec deformed_product(const MatchedPairHopf& mp, const LinearMap& r,
                     std::size_t h, std::size_t g) {
  Accumulator acc(mp.H.dim);
  const Vec eh = Vec::basis(h);
  for (const auto& s : mp.H.splits(g)) {
    Vec moved = mp.act_right(eh, r.columns[s.left]);
    acc.add(mp.H.multiply(moved, Vec::basis(s.right)), s.coeff);
  }
  return acc.take();
}

}  // namespace

VerificationReport is_deformation_map(const MatchedPairHopf& mp,
                                      const LinearMap& r, Exec exec) {
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t dA = A.dim, dH = H.dim;
  if (r.rows != dA || r.cols != dH || r.columns.size() != dH) {
    VerificationReport rep;
    rep.fail("dimensions", {}, std::to_string(r.rows) + "x" + std::to_string(r.cols),
             std::to_string(dA) + "x" + std::to_string(dH));
    return rep;
  }
  VerificationReport rep = run_rows(dH, exec, [&](std::size_t h,
                                                  VerificationReport& out) {
    auto hs = H.splits(h);
    const Vec& rh = r.columns[h];
    // coalgebra map
    Vec lhs = A.coproduct(rh);
    Accumulator acc(dA * dA);
    for (const auto& s : hs)
      acc.add(tensor(r.columns[s.left], r.columns[s.right], dA), s.coeff);
    Vec rhs = acc.take();
    out.count("coalgebra map", 1);
    if (lhs != rhs) out.fail("coalgebra map", {h}, lhs.to_string(), rhs.to_string());
    out.count("counit preserved", 1);
    if (A.epsilon(rh) != H.counit[h])
      out.fail("counit preserved", {h}, A.epsilon(rh).to_string(),
               H.counit[h].to_string());
    // cocentral: r(h_(1)) (x) h_(2) = r(h_(2)) (x) h_(1)
    Accumulator c1(dA * dH), c2(dA * dH);
    for (const auto& s : hs) {
      c1.add(tensor(r.columns[s.left], Vec::basis(s.right), dH), s.coeff);
      c2.add(tensor(r.columns[s.right], Vec::basis(s.left), dH), s.coeff);
    }
    Vec cl = c1.take(), cr = c2.take();
    out.count("cocentral", 1);
    if (cl != cr) out.fail("cocentral", {h}, cl.to_string(), cr.to_string());
    // r(h.g) = r(h_(1)) (h_(2) |> r(g))
    for (std::size_t g = 0; g < dH; ++g) {
      Vec l = r.apply(deformed_product(mp, r, h, g));
      Accumulator racc(dA);
      for (const auto& s : hs)
        racc.add(A.multiply(r.columns[s.left],
                            mp.act_left(Vec::basis(s.right), r.columns[g])),
                 s.coeff);
      Vec rr = racc.take();
      out.count("compatibility r(h.g)", 1);
      if (l != rr)
        out.fail("compatibility r(h.g)", {h, g}, A.render(l), A.render(rr));
    }
  });
  rep.count("unitary", 1);
  Vec r1 = r.apply(H.unit);
  if (r1 != A.unit) rep.fail("unitary", {}, A.render(r1), A.render(A.unit));
  rep.sort();
  return rep;
}

HopfStructure deformed_structure(const MatchedPairHopf& mp,
                                 const LinearMap& r) {
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t d = H.dim;
  HopfStructure out = H;
  parallel_for(d, Exec::parallel, [&](std::size_t h) {
    for (std::size_t g = 0; g < d; ++g)
      out.mult[h * d + g] = deformed_product(mp, r, h, g);
  });
  if (H.antipode && A.antipode) {
    Matrix s{d, d, std::vector<Vec>(d)};
    for (std::size_t h = 0; h < d; ++h) {
      Accumulator acc(d);
      for (const auto& sp : H.splits(h)) {
        Vec sh = H.antipode->columns[sp.right];
        Vec sa = A.antipode->apply(r.columns[sp.left]);
        acc.add(mp.act_right(sh, sa), sp.coeff);
      }
      s.columns[h] = acc.take();
    }
    out.antipode = std::move(s);
  } else {
    out.antipode.reset();
  }
  return out;
}

PointedHopf deform_hopf(const MatchedPairHopf& mp, const LinearMap& r,
                        const PointedCertificate& cert_H) {
  VerificationReport rep = is_deformation_map(mp, r);
  if (!rep.passed()) throw VerificationFailure("not a deformation map", rep);
  PointedHopf out{deformed_structure(mp, r), cert_H};
  VerificationReport ax = verify_axioms(out.hopf, Level::hopf);
  if (!ax.passed()) throw VerificationFailure("deformed algebra", ax);
  return out;
}

DeformedPair deform_matched_pair(const MatchedPairHopf& mp,
                                 const LinearMap& r) {
  VerificationReport rep = is_deformation_map(mp, r);
  if (!rep.passed()) throw VerificationFailure("not a deformation map", rep);
  const HopfStructure& A = mp.A;
  const HopfStructure& H = mp.H;
  const std::size_t dA = A.dim, dH = H.dim;
  if (!A.antipode) throw Error(ErrorKind::missing_structure, "A has no antipode");

  DeformedPair out;
  out.pair = mp;
  out.pair.H = deformed_structure(mp, r);
  parallel_for(dH, Exec::parallel, [&](std::size_t h) {
    auto hs = H.splits3(h);
    for (std::size_t a = 0; a < dA; ++a) {
      Accumulator acc(dA);
      for (const auto& s : hs)
        for (const auto& t : A.splits(a)) {
          Vec left = A.multiply(r.columns[s.a],
                                mp.left_at(s.b, t.left));
          Vec tail = A.antipode->apply(
              r.apply(mp.right_at(s.c, t.right)));
          acc.add(A.multiply(left, tail), s.coeff * t.coeff);
        }
      out.pair.left[h * dA + a] = acc.take();
    }
  });
  out.pair_report = verify_matched_pair(out.pair);

  const std::size_t d = dA * dH;
  out.psi = Matrix{d, d, std::vector<Vec>(d)};
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t h = 0; h < dH; ++h) {
      Accumulator acc(d);
      for (const auto& s : H.splits(h))
        acc.add(tensor(A.multiply(Vec::basis(a), r.columns[s.left]),
                       Vec::basis(s.right), dH),
                s.coeff);
      out.psi.columns[a * dH + h] = acc.take();
    }
  out.psi_bijective = rank(out.psi) == d;
  BicrossedProduct src = bicrossed_product(out.pair, false);
  BicrossedProduct tgt = bicrossed_product(mp, false);
  out.psi_checks = map_predicates(out.psi, src.product, tgt.product,
                                  &src.embed_A, &tgt.embed_A);
  return out;
}

namespace {

struct GrouplikeSkeleton {
  detail::PointedShape H, A;
  std::vector<std::size_t> right;  // h <| gamma as an H ordinal
  std::vector<std::size_t> left;   // h |> gamma as an A ordinal

  std::size_t right_at(std::size_t h, std::size_t g) const {
    return right[h * A.size() + g];
  }
  std::size_t left_at(std::size_t h, std::size_t g) const {
    return left[h * A.size() + g];
  }
};

GrouplikeSkeleton skeleton(const MatchedPairHopf& mp,
                           const PointedCertificate& cert_H,
                           const PointedCertificate& cert_A) {
  GrouplikeSkeleton s{detail::pointed_shape(mp.H, cert_H, "H"),
                      detail::pointed_shape(mp.A, cert_A, "A"),
                      {},
                      {}};
  const std::size_t mH = s.H.size(), mA = s.A.size();
  s.right.resize(mH * mA);
  s.left.resize(mH * mA);
  for (std::size_t h = 0; h < mH; ++h)
    for (std::size_t g = 0; g < mA; ++g) {
      long rr = detail::grouplike_of(
          s.H, mp.right_at(s.H.grouplikes[h], s.A.grouplikes[g]));
      long ll = detail::grouplike_of(
          s.A, mp.left_at(s.H.grouplikes[h], s.A.grouplikes[g]));
      if (rr < 0 || ll < 0)
        throw Error(ErrorKind::unsupported_shape,
                    "actions do not permute grouplikes");
      s.right[h * mA + g] = static_cast<std::size_t>(rr);
      s.left[h * mA + g] = static_cast<std::size_t>(ll);
    }
  return s;
}

// Forces phi((h <| phi(g)) g) = phi(h) (h |> phi(g)) and phi(l) = phi(r) for
// skew-primitives with distinct legs, to a fixpoint.
bool propagate(const GrouplikeSkeleton& s, std::vector<long>& phi) {
  const std::size_t mH = s.H.size();
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  for (const auto& x : s.H.skews)
    if (x.left != x.right)
      ties.emplace_back(static_cast<std::size_t>(s.H.ordinal[x.left]),
                        static_cast<std::size_t>(s.H.ordinal[x.right]));
  auto assign = [&](std::size_t i, long v, bool& changed) {
    if (phi[i] < 0) {
      phi[i] = v;
      changed = true;
      return true;
    }
    return phi[i] == v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : ties) {
      if (phi[a] >= 0 && !assign(b, phi[a], changed)) return false;
      if (phi[b] >= 0 && !assign(a, phi[b], changed)) return false;
    }
    for (std::size_t h = 0; h < mH; ++h) {
      if (phi[h] < 0) continue;
      for (std::size_t g = 0; g < mH; ++g) {
        if (phi[g] < 0) continue;
        const auto pg = static_cast<std::size_t>(phi[g]);
        std::size_t w = s.H.product(s.right_at(h, pg), g);
        std::size_t v = s.A.product(static_cast<std::size_t>(phi[h]),
                                    s.left_at(h, pg));
        if (!assign(w, static_cast<long>(v), changed)) return false;
      }
    }
  }
  return true;
}

void grouplike_search(const GrouplikeSkeleton& s, std::vector<long> phi,
                      std::vector<std::vector<long>>& out) {
  if (!propagate(s, phi)) return;
  auto next = std::find(phi.begin(), phi.end(), -1L);
  if (next == phi.end()) {
    out.push_back(std::move(phi));
    return;
  }
  const auto pos = static_cast<std::size_t>(next - phi.begin());
  for (std::size_t v = 0; v < s.A.size(); ++v) {
    std::vector<long> trial = phi;
    trial[pos] = static_cast<long>(v);
    grouplike_search(s, std::move(trial), out);
  }
}

struct Candidates {
  std::vector<LinearMap> maps;
  bool exhaustive = true;
};

// Skew images from the linear skew-primitive and cocentrality conditions.
Candidates skew_candidates(const MatchedPairHopf& mp, const GrouplikeSkeleton& s,
                           const std::vector<long>& phi) {
  const HopfStructure& A = mp.A;
  const std::size_t dA = A.dim, dH = mp.H.dim;
  const Scalar one = A.field.one(), minus = A.field.from_int(-1);
  auto image = [&](std::size_t basis) {
    return s.A.grouplikes[static_cast<std::size_t>(phi[static_cast<std::size_t>(
        s.H.ordinal[basis])])];
  };
  const std::size_t nsk = s.H.skews.size();
  const std::size_t nv = nsk * dA;
  std::vector<Vec> eqs;
  for (std::size_t k = 0; k < nsk; ++k) {
    const SkewPrimitive& x = s.H.skews[k];
    const std::size_t u = image(x.left), v = image(x.right);
    std::map<std::size_t, std::vector<Term>> rows;
    for (std::size_t a = 0; a < dA; ++a) {
      Vec c = A.comult[a];
      c.add_scaled(Vec::basis(a * dA + v), minus);
      c.add_scaled(Vec::basis(u * dA + a), minus);
      for (const auto& t : c.terms()) rows[t.index].push_back({k * dA + a, t.coeff});
      if (x.left != x.right) eqs.push_back(Vec::basis(k * dA + a, one));
    }
    for (auto& [o, terms] : rows) eqs.push_back(Vec::from_terms(std::move(terms)));
  }
  AffineSolution sol = solve_equations(eqs, nv);
  Candidates out;
  if (!sol.consistent) return out;
  auto build = [&](const Vec& values) {
    LinearMap r{dA, dH, std::vector<Vec>(dH)};
    for (std::size_t i = 0; i < s.H.grouplikes.size(); ++i)
      r.columns[s.H.grouplikes[i]] = Vec::basis(
          s.A.grouplikes[static_cast<std::size_t>(phi[i])], one);
    for (std::size_t k = 0; k < nsk; ++k) {
      std::vector<Term> t;
      for (const auto& term : values.terms())
        if (term.index / dA == k) t.push_back({term.index % dA, term.coeff});
      r.columns[s.H.skews[k].x] = Vec::from_terms(std::move(t));
    }
    return r;
  };
  out.maps.push_back(build(sol.particular));
  if (!sol.kernel.empty()) {
    // A positive-dimensional family; only sample points are examined.
    out.exhaustive = false;
    for (const auto& k : sol.kernel) out.maps.push_back(build(sol.particular + k));
  }
  return out;
}

}  // namespace

DeformationEnumeration enumerate_deformation_maps(
    const MatchedPairHopf& mp, const PointedCertificate& cert_H,
    const PointedCertificate& cert_A, Exec exec) {
  GrouplikeSkeleton s = skeleton(mp, cert_H, cert_A);
  std::vector<long> phi(s.H.size(), -1);
  phi[s.H.unit] = static_cast<long>(s.A.unit);
  std::vector<std::vector<long>> assignments;
  grouplike_search(s, phi, assignments);

  DeformationEnumeration out;
  std::vector<LinearMap> candidates;
  for (const auto& a : assignments) {
    Candidates c = skew_candidates(mp, s, a);
    if (!c.exhaustive) out.exhaustive = false;
    for (auto& m : c.maps) candidates.push_back(std::move(m));
  }
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), exec, [&](std::size_t i) {
    keep[i] = is_deformation_map(mp, candidates[i], Exec::serial).passed();
  });
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.maps.push_back(std::move(candidates[i]));
  std::sort(out.maps.begin(), out.maps.end(),
            [](const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; });
  out.maps.erase(std::unique(out.maps.begin(), out.maps.end()), out.maps.end());
  return out;
}

ClassificationResult classify_complements(
    const MatchedPairHopf& mp, const PointedCertificate& cert_H,
    const PointedCertificate& cert_A, const std::vector<LinearMap>& supplied) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationResult out;
  try {
    DeformationEnumeration e = enumerate_deformation_maps(mp, cert_H, cert_A);
    out.maps = std::move(e.maps);
    out.exhaustive = e.exhaustive;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::unsupported_shape) throw;
    out.exhaustive = false;
    std::vector<LinearMap> pool = supplied;
    pool.push_back(trivial_deformation_map(mp));
    for (auto& r : pool)
      if (is_deformation_map(mp, r).passed()) out.maps.push_back(std::move(r));
    std::sort(out.maps.begin(), out.maps.end(),
              [](const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; });
    out.maps.erase(std::unique(out.maps.begin(), out.maps.end()), out.maps.end());
  }

  // Outside the supported shape only literal coincidences are recognised.
  auto equivalent = [&](const LinearMap& r, const LinearMap& R) {
    try {
      return are_equivalent(mp, cert_H, r, R);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::unsupported_shape) throw;
      IsoSearch res;
      res.exhaustive = false;
      if (r == R) res.map = Matrix::identity(mp.H.dim);
      return res;
    }
  };
  auto isomorphic = [&](const HopfStructure& a, const HopfStructure& b) {
    try {
      return hopf_iso_search(a, b, cert_H, cert_H);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::unsupported_shape) throw;
      IsoSearch res;
      res.exhaustive = false;
      if (same_structure_constants(a, b)) res.map = Matrix::identity(a.dim);
      return res;
    }
  };

  // Partition by equivalence; maps are sorted, so each class starts at its
  // smallest member.
  std::vector<std::size_t> class_of(out.maps.size());
  for (std::size_t i = 0; i < out.maps.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < out.classes.size() && !placed; ++c) {
      IsoSearch eq = equivalent(out.classes[c].r, out.maps[i]);
      if (!eq.map && !eq.exhaustive) out.exhaustive = false;
      if (eq.map) {
        out.classes[c].members.push_back(i);
        class_of[i] = c;
        placed = true;
      }
    }
    if (!placed) {
      class_of[i] = out.classes.size();
      out.classes.push_back({out.maps[i], {}, {i}});
    }
  }
  for (auto& c : out.classes) c.deformed = deform_hopf(mp, c.r, cert_H);
  out.factorization_index = out.classes.size();

  // Independent count: isomorphism types among all deformed algebras.
  std::vector<HopfStructure> deformed;
  for (const auto& r : out.maps) deformed.push_back(deformed_structure(mp, r));
  std::vector<std::size_t> type_reps;
  std::vector<std::size_t> type_of(out.maps.size());
  for (std::size_t i = 0; i < deformed.size(); ++i) {
    bool placed = false;
    for (std::size_t t = 0; t < type_reps.size() && !placed; ++t) {
      IsoSearch iso = isomorphic(deformed[type_reps[t]], deformed[i]);
      if (!iso.map && !iso.exhaustive) out.exhaustive = false;
      if (iso.map) {
        type_of[i] = t;
        placed = true;
      }
    }
    if (!placed) {
      type_of[i] = type_reps.size();
      type_reps.push_back(i);
    }
  }
  out.iso_types = type_reps.size();
  bool same_partition = out.iso_types == out.classes.size();
  for (std::size_t i = 0; i < out.maps.size() && same_partition; ++i)
    for (std::size_t j = 0; j < i && same_partition; ++j)
      if ((class_of[i] == class_of[j]) != (type_of[i] == type_of[j]))
        same_partition = false;
  out.bijection_consistent = same_partition;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

}  // namespace bicrossed
