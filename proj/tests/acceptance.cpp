// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Detail lines for failures are indented below the verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bicrossed/deformation.hpp"
#include "bicrossed/hopf.hpp"
#include "bicrossed/lie.hpp"
#include "bicrossed/matched_pair.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Criterion {
  std::vector<std::string> problems;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int failures = 0;

void run(const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  double secs = since(start);
  std::printf("%s %s (%.2fs)%s%s\n", c.problems.empty() ? "PASS" : "FAIL", name.c_str(), secs,
              c.note.empty() ? "" : " ", c.note.c_str());
  for (std::size_t i = 0; i < c.problems.size() && i < 20; ++i)
    std::printf("    %s\n", c.problems[i].c_str());
  if (!c.problems.empty()) ++failures;
  std::fflush(stdout);
}

FamilyParams params(unsigned n, int t, int l, int p = 0) {
  FamilyParams f;
  f.n = n;
  f.t = t;
  f.l = l;
  f.p = p;
  f.field = Field::cyclotomic(n);
  return f;
}

std::string tag(unsigned n, int t, int l) {
  std::ostringstream s;
  s << "n=" << n << " t=" << t << " l=" << l;
  return s.str();
}

int mod(int a, int m) { return ((a % m) + m) % m; }

bool maps_less(const LinearMap& a, const LinearMap& b) { return compare_maps(a, b) < 0; }

// Checks one Hopf algebra and records how long it took.
void axioms(Criterion& c, const HopfStructure& h, const std::string& what, double& worst) {
  auto start = Clock::now();
  c.expect(verify_axioms(h, Level::hopf).passed(), what + " fails the Hopf axioms");
  double s = since(start);
  worst = std::max(worst, s);
  c.expect(s < 5.0, what + " took longer than 5 s");
}

PointedHopf klein_four(Field f) {
  CayleyTable k;
  k.order = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    k.names.push_back("k" + std::to_string(i));
    for (std::size_t j = 0; j < 4; ++j) k.table.push_back(i ^ j);
  }
  return group_algebra(k, f);
}

struct Exhaustive {
  std::string name;
  std::size_t classes;
  std::size_t iso_types;
  bool consistent;
};
std::vector<Exhaustive> matrix;  // every exhaustive classification run below

void record(const std::string& name, const ClassificationResult& r) {
  if (r.exhaustive) matrix.push_back({name, r.factorization_index, r.iso_types, r.bijection_consistent});
}

}  // namespace

int main() {
  run("criterion 1: axiom suite on H4, k[C_n], H4n, D(H4) and built products", [](Criterion& c) {
    double worst = 0;
    axioms(c, sweedler_h4().hopf, "H4", worst);
    for (unsigned n = 1; n <= 12; ++n)
      axioms(c, cyclic_group_algebra(n).hopf, "k[C" + std::to_string(n) + "]", worst);
    for (unsigned n = 1; n <= 6; ++n) {
      Field f = Field::cyclotomic(n);
      for (unsigned k = 0; k < n; ++k)
        axioms(c, h4n_direct(f, n, root_of_unity(f, n).pow(k)).hopf,
               "H4n n=" + std::to_string(n) + " omega=z^" + std::to_string(k), worst);
    }
    BicrossedProduct d = drinfeld_double(sweedler_h4().hopf);
    c.expect(d.product.dim == 16, "D(H4) is not 16-dimensional");
    axioms(c, d.product, "D(H4)", worst);
    // Products built elsewhere in the suite.
    for (unsigned n = 2; n <= 6; ++n)
      for (int t = 0; t < static_cast<int>(n); ++t) {
        FamilyParams p = params(n, t, 0);
        axioms(c, bicrossed_product(h4n_matched_pair(p), false).product,
               "H4 # k[C_n] " + tag(n, t, 0), worst);
      }
    for (unsigned n : {2u, 3u, 4u, 5u})
      for (int l = 0; l < static_cast<int>(n); ++l) {
        FamilyParams p = params(n, static_cast<int>(n) - 1, l);
        axioms(c, bicrossed_product(cn_h4n_matched_pair(p), false).product,
               "k[C_n] x H4n " + tag(n, p.t, l), worst);
      }
    SymmetricGroupCase sg = symmetric_group_case();
    MatchedPairHopf s4 =
        canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.c4.hopf, sg.embed_s3, sg.embed_c4);
    axioms(c, bicrossed_product(s4, false).product, "k[S3] x k[C4]", worst);
    axioms(c, drinfeld_double(sg.s3.hopf).product, "D(k[S3])", worst);
    char buf[64];
    std::snprintf(buf, sizeof buf, "slowest %.3fs", worst);
    c.note = buf;
  });

  run("criterion 2: deformations of k[C_n] x H4n are exactly r_p and give H4n,xi^(t-lp)",
      [](Criterion& c) {
        double worst = 0;
        std::size_t combos = 0;
        for (unsigned n : {2u, 3u, 4u, 5u, 8u}) {
          const int nu = static_cast<int>(unit_group_order(Field::cyclotomic(n), n));
          for (int l = 0; l < nu; ++l)
            for (int t = 0; t < nu; ++t) {
              auto start = Clock::now();
              FamilyParams f = params(n, t, l);
              MatchedPairHopf mp = cn_h4n_matched_pair(f);
              PointedHopf H = h4n(f);
              DeformationEnumeration en = enumerate_deformation_maps(mp, H.cert, cn_certificate(n));
              std::vector<LinearMap> expect;
              for (int p = 0; p < static_cast<int>(n); ++p) expect.push_back(rp_map(params(n, t, l, p)));
              std::sort(expect.begin(), expect.end(), maps_less);
              c.expect(en.exhaustive, tag(n, t, l) + ": enumeration not exhaustive");
              c.expect(en.maps.size() == n, tag(n, t, l) + ": wrong number of maps");
              c.expect(en.maps == expect, tag(n, t, l) + ": maps differ from r_p");
              const Scalar xi = family_xi(f);
              for (int p = 0; p < static_cast<int>(n); ++p) {
                FamilyParams fp = params(n, t, l, p);
                HopfStructure hr = deform_hopf(mp, rp_map(fp), H.cert).hopf;
                PointedHopf direct = h4n_direct(f.field, n, xi.pow(mod(t - l * p, nu)));
                HopfStructure mono = rebase(hr, h4n_monomial_basis(hr, n));
                c.expect(same_structure_constants(mono, direct.hopf),
                         tag(n, t, l) + " p=" + std::to_string(p) + ": H_r differs from direct");
                if (mod(l * p, nu) == 0)
                  c.expect(same_structure_constants(hr, direct.hopf),
                           tag(n, t, l) + " p=" + std::to_string(p) + ": raw constants differ");
              }
              double s = since(start);
              worst = std::max(worst, s);
              c.expect(s < 30.0, tag(n, t, l) + ": took longer than 30 s");
              ++combos;
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu (n,l,t) cases, slowest %.3fs", combos, worst);
        c.note = buf;
      });

  run("criterion 3: factorization index 2, 3, 3 for n = 5, 8, 9 at omega = xi^(nu-1)",
      [](Criterion& c) {
        struct Case {
          unsigned n;
          std::size_t index;
        };
        std::string note;
        for (Case k : {Case{5, 2}, Case{8, 3}, Case{9, 3}}) {
          auto start = Clock::now();
          const int nu = static_cast<int>(unit_group_order(Field::cyclotomic(k.n), k.n));
          FamilyParams f = params(k.n, nu - 1, 1);
          ClassificationResult r =
              classify_complements(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(k.n));
          record("k[C_n] x H4n " + tag(k.n, nu - 1, 1), r);
          const std::string n = "n=" + std::to_string(k.n);
          c.expect(r.exhaustive, n + ": not exhaustive");
          c.expect(r.factorization_index == k.index,
                   n + ": index " + std::to_string(r.factorization_index));
          c.expect(r.factorization_index == h4n_iso_class_count(k.n, f.field),
                   n + ": index differs from the iso class count");
          c.expect(since(start) < 120.0, n + ": took longer than 120 s");
          note += n + "->" + std::to_string(r.factorization_index) + " ";
        }
        c.note = note;
      });

  run("criterion 4: H4 # k[C_n] is rigid for n <= 6", [](Criterion& c) {
    std::size_t total = 0;
    for (unsigned n = 1; n <= 6; ++n) {
      Field f = Field::cyclotomic(n);
      for (int t = 0; t < static_cast<int>(n); ++t) {
        FamilyParams p = params(n, t, 0);
        MatchedPairHopf mp = h4n_matched_pair(p);
        PointedHopf cn = cyclic_group_algebra(n, f);
        PointedHopf h4 = sweedler_h4(f);
        ClassificationResult r = classify_complements(mp, cn.cert, h4.cert);
        record("H4 # k[C_n] " + tag(n, t, 0), r);
        c.expect(r.exhaustive, tag(n, t, 0) + ": not exhaustive");
        c.expect(r.factorization_index == 1, tag(n, t, 0) + ": index is not 1");
        for (const auto& m : r.maps)
          c.expect(same_structure_constants(deformed_structure(mp, m), mp.H),
                   tag(n, t, 0) + ": a deformation changes the structure");
        total += r.maps.size();
      }
    }
    c.note = std::to_string(total) + " maps checked";
  });

  run("criterion 5: k[S3] in k[S4] has index 2 with classes k[C4] and k[C2 x C2]",
      [](Criterion& c) {
        SymmetricGroupCase sg = symmetric_group_case(Field());
        MatchedPairHopf mp =
            canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.c4.hopf, sg.embed_s3, sg.embed_c4);
        ClassificationResult r = classify_complements(mp, sg.c4.cert, sg.s3.cert);
        record("k[S3] x k[C4]", r);
        c.expect(r.exhaustive, "not exhaustive");
        c.expect(r.factorization_index == 2, "index " + std::to_string(r.factorization_index));
        PointedHopf klein = klein_four(Field());
        int cyclic = 0, four = 0;
        for (const auto& cl : r.classes) {
          IsoSearch a = hopf_iso_search(cl.deformed.hopf, sg.c4.hopf, cl.deformed.cert, sg.c4.cert);
          IsoSearch b = hopf_iso_search(cl.deformed.hopf, klein.hopf, cl.deformed.cert, klein.cert);
          c.expect(a.exhaustive && b.exhaustive, "iso search not exhaustive");
          if (a.map) {
            ++cyclic;
            c.expect(is_algebra_map(*a.map, cl.deformed.hopf, sg.c4.hopf) &&
                         is_coalgebra_map(*a.map, cl.deformed.hopf, sg.c4.hopf),
                     "C4 witness is not a bialgebra map");
          }
          if (b.map) {
            ++four;
            c.expect(is_algebra_map(*b.map, cl.deformed.hopf, klein.hopf) &&
                         is_coalgebra_map(*b.map, cl.deformed.hopf, klein.hopf),
                     "Klein witness is not a bialgebra map");
          }
        }
        c.expect(cyclic == 1 && four == 1, "classes are not one C4 and one Klein four");
        c.note = std::to_string(r.maps.size()) + " maps";
      });

  run("criterion 6: psi and phi properties on every enumerated deformation map", [](Criterion& c) {
    std::size_t hopf_maps = 0, lie_maps = 0;
    auto check_pair = [&](const MatchedPairHopf& mp, const PointedCertificate& cH,
                          const PointedCertificate& cA, const std::string& what) {
      for (const LinearMap& r : enumerate_deformation_maps(mp, cH, cA).maps) {
        DeformedPair dp = deform_matched_pair(mp, r);
        c.expect(dp.psi_bijective, what + ": psi not bijective");
        c.expect(dp.psi_checks.algebra_map, what + ": psi not an algebra map");
        c.expect(dp.psi_checks.coalgebra_map, what + ": psi not a coalgebra map");
        c.expect(dp.psi_checks.left_linear, what + ": psi not left A-linear");
        c.expect(dp.pair_report.passed(), what + ": deformed pair invalid");
        ++hopf_maps;
      }
    };
    for (unsigned n : {2u, 3u, 4u, 5u, 8u, 9u}) {
      const int nu = static_cast<int>(unit_group_order(Field::cyclotomic(n), n));
      for (int l : {0, 1}) {
        FamilyParams f = params(n, nu - 1, l);
        check_pair(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(n), "k[C_n] x H4n " + tag(n, f.t, l));
      }
    }
    for (unsigned n = 2; n <= 6; ++n) {
      FamilyParams f = params(n, 1, 0);
      check_pair(h4n_matched_pair(f), cyclic_group_algebra(n, f.field).cert, sweedler_h4(f.field).cert,
                 "H4 # k[C_n] n=" + std::to_string(n));
    }
    SymmetricGroupCase sg = symmetric_group_case();
    check_pair(canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.c4.hopf, sg.embed_s3, sg.embed_c4),
               sg.c4.cert, sg.s3.cert, "k[S3] x k[C4]");

    std::vector<std::pair<std::string, MatchedPairLie>> lie = {
        {"sl2 borel", sl2_borel_pair()},
        {"sl2 span{h,f} + span{e}", canonical_matched_pair_lie(sl2(), {0, 2}, {1})},
        {"scalar m=2", scalar_action_pair(2, Field().from_int(3))},
        {"scalar m=3", scalar_action_pair(3, Field().from_rational(Rational(-1, 2)))}};
    for (const auto& [what, mp] : lie) {
      LieDeformationFamily fam = enumerate_deformation_maps_lie(mp);
      c.expect(fam.exhaustive, what + ": family not exhaustive");
      for (const LinearMap& r : fam.maps) {
        DeformedPairLie dp = deform_matched_pair_lie(mp, r);
        c.expect(dp.phi_bijective, what + ": phi not bijective");
        c.expect(dp.phi_bracket, what + ": phi does not preserve brackets");
        c.expect(dp.graph_closed, what + ": graph of r not a subalgebra");
        c.expect(dp.pair_report.passed(), what + ": deformed pair invalid");
        ++lie_maps;
      }
    }
    c.note = std::to_string(hopf_maps) + " Hopf maps, " + std::to_string(lie_maps) + " Lie maps";
  });

  run("criterion 7: 100 random Lie deformations satisfy antisymmetry and Jacobi", [](Criterion& c) {
    std::vector<MatchedPairLie> families = {
        sl2_borel_pair(), canonical_matched_pair_lie(sl2(), {0, 2}, {1}),
        scalar_action_pair(1, Field().from_int(2)), scalar_action_pair(2, Field().from_int(-1)),
        scalar_action_pair(3, Field().from_rational(Rational(5, 3)))};
    std::vector<LieDeformationFamily> enumerated;
    for (const auto& mp : families) {
      enumerated.push_back(enumerate_deformation_maps_lie(mp));
      c.expect(enumerated.back().exhaustive, "family not exhaustive");
    }
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-7, 7);
    std::uniform_int_distribution<std::size_t> pick(0, families.size() - 1);
    for (int draw = 0; draw < 100; ++draw) {
      std::size_t k = pick(rng);
      const MatchedPairLie& mp = families[k];
      LinearMap r{mp.g.dim, mp.h.dim, std::vector<Vec>(mp.h.dim)};
      for (const LinearMap& b : enumerated[k].basis) {
        Scalar s = Field().from_rational(Rational(coef(rng), 1 + draw % 3));
        for (std::size_t j = 0; j < r.cols; ++j) r.columns[j].add_scaled(b.columns[j], s);
      }
      const std::string what = "draw " + std::to_string(draw);
      c.expect(is_deformation_map_lie(mp, r).passed(), what + ": not a deformation map");
      LieAlgebra d = deformed_bracket(mp, r);
      VerificationReport rep = verify_lie(d);
      c.expect(rep.passed(), what + ": " + rep.summary(2));
      c.expect(rep.instances.count("Jacobi identity") && rep.instances.count("antisymmetry"),
               what + ": checks did not run");
    }
    c.note = "100 draws over 5 families";
  });

  run("criterion 8: sl2 with its borel subalgebra", [](Criterion& c) {
    auto start = Clock::now();
    MatchedPairLie mp = canonical_matched_pair_lie(sl2(), {0, 1}, {2});
    const Scalar two = Field().from_int(2), minus = Field().from_int(-1);
    // Hand-derived from [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    c.expect(mp.left_at(0, 0).is_zero(), "f |> h should be 0");
    c.expect(mp.right_at(0, 0) == Vec::basis(0, two), "f <| h should be 2f");
    c.expect(mp.left_at(0, 1) == Vec::basis(0, minus), "f |> e should be -h");
    c.expect(mp.right_at(0, 1).is_zero(), "f <| e should be 0");
    LieClassificationResult r = classify_complements_lie(mp, {}, LieStrategy::exhaustive_1dim);
    c.expect(r.exhaustive, "not exhaustive");
    c.expect(r.factorization_index == 1, "index " + std::to_string(r.factorization_index));
    matrix.push_back({"sl2 borel", r.factorization_index, r.iso_types, r.bijection_consistent});
    c.expect(since(start) < 1.0, "took longer than 1 s");
  });

  run("criterion 9: classes match isomorphism types on every exhaustive pair", [](Criterion& c) {
    // Pairs not already classified above.
    for (unsigned n : {2u, 3u, 4u}) {
      const int nu = static_cast<int>(n);
      for (int l = 0; l < nu; ++l)
        for (int t = 0; t < nu; ++t) {
          FamilyParams f = params(n, t, l);
          ClassificationResult r =
              classify_complements(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(n));
          record("k[C_n] x H4n " + tag(n, t, l), r);
        }
    }
    for (const auto& e : matrix) {
      c.expect(e.consistent, e.name + ": classes and iso types disagree member-wise");
      c.expect(e.classes == e.iso_types, e.name + ": " + std::to_string(e.classes) +
                                             " classes vs " + std::to_string(e.iso_types) +
                                             " iso types");
    }
    c.note = std::to_string(matrix.size()) + " exhaustive pairs";
  });

  run("fixture: unsupported coalgebra shape is flagged non-exhaustive", [](Criterion& c) {
    FamilyParams f = params(3, 2, 1, 1);
    MatchedPairHopf mp = cn_h4n_matched_pair(f);
    PointedCertificate partial = h4n(f).cert;
    partial.skew_primitives.pop_back();
    ClassificationResult r = classify_complements(mp, partial, cn_certificate(3), {rp_map(f)});
    c.expect(!r.exhaustive, "result claims to be exhaustive");
    c.expect(r.factorization_index >= 1, "no class reported");
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
