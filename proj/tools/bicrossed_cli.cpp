// bicrossed: verify, build, deform and classify documents from the command
// line. Exit codes: 0 pass, 1 failed check, 2 usage or parse error,
// 3 classification finished but the enumeration was not exhaustive.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicrossed/deformation.hpp"
#include "bicrossed/document.hpp"
#include "bicrossed/kernels.hpp"
#include "bicrossed/lie.hpp"
#include "bicrossed/matched_pair.hpp"
#include "bicrossed/quantum_examples.hpp"

namespace fs = std::filesystem;
using namespace bicrossed;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kNonExhaustive = 3;

struct Options {
  std::string path;
  std::string field;
  unsigned n = 2;
  std::optional<int> t;
  std::optional<int> l;
  int p = 0;
  std::optional<int> xi_power;
  std::string maps;
  std::string out;
  int jobs = 0;
  std::string level;
  std::string of;
  std::string example;
  std::string family;
  bool double_ = false;
  std::vector<std::size_t> g_indices;
  std::vector<std::size_t> h_indices;
  std::vector<std::string> factors;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json job_report(const std::vector<std::string>& argv) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "report"},
              {"tool_version", kToolVersion},
              {"command", argv},
              {"reports", Json::object()},
              {"timings", Json::object()}};
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path.string());
  out << text;
}

fs::path out_dir(const Options& o) { return o.out.empty() ? fs::path(".") : fs::path(o.out); }

Field field_or(const Options& o, Field fallback) {
  if (o.field.empty()) return fallback;
  try {
    return Field::parse(o.field);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
}

FamilyParams family_params(const Options& o, Field field, int default_t, int default_l) {
  FamilyParams p;
  p.n = o.n;
  p.field = field;
  p.t = o.t.value_or(default_t);
  p.l = o.l.value_or(default_l);
  p.p = o.p;
  if (o.xi_power) {
    FamilyParams base = p;
    p.xi = family_xi(base).pow(*o.xi_power);
  }
  return p;
}

void print_report(const std::string& name, const VerificationReport& rep) {
  std::size_t total = 0;
  for (const auto& [k, v] : rep.instances) total += v;
  if (rep.passed()) {
    std::cout << "PASS " << name << " (" << total << " checks)\n";
  } else {
    std::cout << "FAIL " << name << " (" << rep.violations.size() << " violations)\n"
              << rep.summary(20) << "\n";
  }
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& o, const std::vector<std::string>& argv) {
  auto start = Clock::now();
  AlgebraDocument doc = read_document(o.path);
  Json report = job_report(argv);
  std::vector<std::pair<std::string, VerificationReport>> reps;

  auto hopf_level = [&](const HopfStructure& h) {
    if (o.level.empty() || o.level == "matched-pair") return h.level;
    try {
      return parse_level(o.level);
    } catch (const Error& e) {
      throw Usage(e.what());
    }
  };

  switch (doc.kind) {
    case DocKind::hopf:
      if (o.level == "matched-pair" || o.level == "lie")
        throw Usage("level '" + o.level + "' does not apply to a hopf document");
      reps.emplace_back("hopf", verify_axioms(doc.hopf, hopf_level(doc.hopf)));
      if (doc.cert) reps.emplace_back("certificate", check_certificate(doc.hopf, *doc.cert));
      break;
    case DocKind::lie:
      if (!o.level.empty() && o.level != "lie")
        throw Usage("level '" + o.level + "' does not apply to a lie document");
      reps.emplace_back("lie", verify_lie(doc.lie));
      break;
    case DocKind::matched_pair_hopf: {
      const MatchedPairHopf& mp = doc.pair_hopf;
      reps.emplace_back("A", verify_axioms(mp.A, hopf_level(mp.A)));
      reps.emplace_back("H", verify_axioms(mp.H, hopf_level(mp.H)));
      if (o.level.empty() || o.level == "matched-pair")
        reps.emplace_back("matched_pair", verify_matched_pair(mp));
      break;
    }
    case DocKind::matched_pair_lie:
      if (!o.level.empty() && o.level != "matched-pair" && o.level != "lie")
        throw Usage("level '" + o.level + "' does not apply to a lie matched pair");
      reps.emplace_back("g", verify_lie(doc.pair_lie.g));
      reps.emplace_back("h", verify_lie(doc.pair_lie.h));
      reps.emplace_back("matched_pair", verify_matched_pair_lie(doc.pair_lie));
      break;
    case DocKind::linear_map:
    case DocKind::collection:
      throw Usage("nothing to verify in a " + to_string(doc.kind) + " document");
  }

  bool ok = true;
  for (const auto& [name, rep] : reps) {
    print_report(name, rep);
    report["reports"][name] = report_json(rep);
    ok = ok && rep.passed();
  }
  report["passed"] = ok;
  report["timings"]["seconds"] = since(start);

  fs::path in(o.path);
  fs::path dest = o.out.empty() ? fs::path(in).replace_extension(".report")
                                : fs::path(o.out) / (in.stem().string() + ".report");
  write_text(dest, dump_canonical(report));
  return ok ? kPass : kFail;
}

// ---- classify -------------------------------------------------------------

struct HopfJob {
  MatchedPairHopf mp;
  PointedCertificate cert_H;
  PointedCertificate cert_A;
};

HopfJob hopf_example(const Options& o) {
  if (o.example == "cn-h4n") {
    Field f = field_or(o, Field::cyclotomic(o.n));
    FamilyParams p = family_params(o, f, 0, 0);
    return {cn_h4n_matched_pair(p), h4n(p).cert, cn_certificate(p.n)};
  }
  if (o.example == "smash-h4") {
    Field f = field_or(o, Field::cyclotomic(o.n));
    FamilyParams p = family_params(o, f, 1, 0);
    return {h4n_matched_pair(p), cyclic_group_algebra(p.n, f).cert, sweedler_h4(f).cert};
  }
  if (o.example == "s4-s3") {
    SymmetricGroupCase sg = symmetric_group_case(field_or(o, Field()));
    return {canonical_matched_pair(sg.s4.hopf, sg.s3.hopf, sg.c4.hopf, sg.embed_s3,
                                   sg.embed_c4),
            sg.c4.cert, sg.s3.cert};
  }
  throw Usage("unknown example '" + o.example +
              "' (expected cn-h4n, smash-h4, s4-s3, sl2-borel or lie-direct-sum)");
}

MatchedPairLie lie_direct_sum(Field f) {
  return zero_matched_pair_lie(nonabelian2(f), abelian_lie(2, f, "x"));
}

int cmd_classify(const Options& o, const std::vector<std::string>& argv) {
  auto start = Clock::now();
  if (o.example.empty() == o.path.empty())
    throw Usage("classify needs either a matched pair document or --example");
  std::vector<LinearMap> supplied;
  if (!o.maps.empty()) supplied = maps_from_document(read_document(o.maps));

  Json report = job_report(argv);
  std::string name = o.example.empty() ? fs::path(o.path).stem().string() : o.example;
  std::size_t index = 0;
  bool exhaustive = true, consistent = true;
  std::size_t nmaps = 0;
  std::vector<std::string> class_lines;

  auto run_lie = [&](const MatchedPairLie& mp, LieStrategy strategy) {
    LieClassificationResult res = classify_complements_lie(mp, supplied, strategy);
    report["classification"] = classification_json(res, mp.h.field);
    index = res.factorization_index;
    exhaustive = res.exhaustive;
    consistent = res.bijection_consistent;
    nmaps = res.maps.size();
    for (const auto& c : res.classes)
      class_lines.push_back(std::to_string(c.members.size()) + " map(s), deformed dim " +
                            std::to_string(c.deformed.dim));
  };
  auto run_hopf = [&](const HopfJob& job) {
    ClassificationResult res = classify_complements(job.mp, job.cert_H, job.cert_A, supplied);
    report["classification"] = classification_json(res, job.mp.H.field);
    index = res.factorization_index;
    exhaustive = res.exhaustive;
    consistent = res.bijection_consistent;
    nmaps = res.maps.size();
    for (const auto& c : res.classes) {
      std::ostringstream line;
      line << c.members.size() << " map(s), grouplikes "
           << c.deformed.cert.grouplikes.size();
      class_lines.push_back(line.str());
    }
  };

  if (o.example == "sl2-borel") {
    run_lie(sl2_borel_pair(field_or(o, Field())), LieStrategy::exhaustive_1dim);
  } else if (o.example == "lie-direct-sum") {
    run_lie(lie_direct_sum(field_or(o, Field())), LieStrategy::exhaustive_1dim);
  } else if (!o.example.empty()) {
    run_hopf(hopf_example(o));
  } else {
    AlgebraDocument doc = read_document(o.path);
    if (doc.kind == DocKind::matched_pair_hopf) {
      run_hopf({doc.pair_hopf, doc.cert_H.value_or(PointedCertificate{}),
                doc.cert_A.value_or(PointedCertificate{})});
    } else if (doc.kind == DocKind::matched_pair_lie) {
      run_lie(doc.pair_lie, LieStrategy::exhaustive_1dim);
    } else {
      throw Usage("classify expects a matched_pair_hopf or matched_pair_lie document");
    }
  }

  report["timings"]["seconds"] = since(start);
  write_text(out_dir(o) / (name + ".report"), dump_canonical(report));

  std::cout << "deformation maps: " << nmaps << (exhaustive ? "" : " (partial)") << "\n";
  for (std::size_t k = 0; k < class_lines.size(); ++k)
    std::cout << "class " << k << ": " << class_lines[k] << "\n";
  std::cout << "factorization index: " << (exhaustive ? "" : ">= ") << index << "\n";
  if (!consistent) {
    std::cout << "FAIL classes and isomorphism types disagree\n";
    return kFail;
  }
  if (!exhaustive) {
    std::cout << "warning: enumeration not exhaustive, index is a lower bound\n";
    return kNonExhaustive;
  }
  return kPass;
}

// ---- examples -------------------------------------------------------------

int cmd_examples(const Options& o) {
  const fs::path dir = out_dir(o);
  std::vector<std::pair<std::string, AlgebraDocument>> files;
  const std::string& fam = o.family;

  if (fam == "h4") {
    files.emplace_back("h4", make_document(sweedler_h4(field_or(o, Field()))));
  } else if (fam == "cyclic") {
    files.emplace_back("c" + std::to_string(o.n),
                       make_document(cyclic_group_algebra(o.n, field_or(o, Field()))));
  } else if (fam == "h4n") {
    FamilyParams p = family_params(o, field_or(o, Field::cyclotomic(o.n)), 0, 0);
    std::string stem = "h4n-n" + std::to_string(p.n) + "-t" + std::to_string(p.t);
    files.emplace_back(stem, make_document(h4n(p)));
    files.emplace_back(stem + "-pair",
                       make_document(h4n_matched_pair(p), sweedler_h4(p.field).cert,
                                     cyclic_group_algebra(p.n, p.field).cert));
  } else if (fam == "cn-h4n") {
    FamilyParams p = family_params(o, field_or(o, Field::cyclotomic(o.n)), 0, 0);
    std::string stem = "cn-h4n-n" + std::to_string(p.n) + "-t" + std::to_string(p.t) +
                       "-l" + std::to_string(p.l);
    files.emplace_back(stem, make_document(cn_h4n_matched_pair(p), cn_certificate(p.n),
                                           h4n(p).cert));
    std::vector<AlgebraDocument> maps;
    for (unsigned q = 0; q < p.n; ++q) {
      FamilyParams pq = p;
      pq.p = static_cast<int>(q);
      maps.push_back(make_map_document(rp_map(pq), p.field));
    }
    files.emplace_back(stem + "-maps", make_collection(std::move(maps), p.field));
  } else if (fam == "s4-s3") {
    SymmetricGroupCase sg = symmetric_group_case(field_or(o, Field()));
    AlgebraDocument s4 = make_document(sg.s4);
    s4.embeddings["s3"] = sg.embed_s3;
    s4.embeddings["c4"] = sg.embed_c4;
    files.emplace_back("s4", std::move(s4));
    files.emplace_back("s3", make_document(sg.s3));
    files.emplace_back("c4", make_document(sg.c4));
    files.emplace_back("s4-s3-pair",
                       make_document(canonical_matched_pair(sg.s4.hopf, sg.s3.hopf,
                                                            sg.c4.hopf, sg.embed_s3,
                                                            sg.embed_c4),
                                     sg.s3.cert, sg.c4.cert));
  } else if (fam == "drinfeld-double") {
    HopfStructure h;
    std::string stem;
    if (o.of.empty()) {
      h = sweedler_h4(field_or(o, Field())).hopf;
      stem = "h4";
    } else {
      AlgebraDocument src = read_document(o.of);
      if (src.kind != DocKind::hopf) throw Usage("--of must name a hopf document");
      h = src.hopf;
      stem = fs::path(o.of).stem().string();
    }
    BicrossedProduct d = drinfeld_double(h);
    AlgebraDocument doc = make_document(d.product);
    doc.embeddings["dual"] = d.embed_A;
    doc.embeddings["base"] = d.embed_H;
    files.emplace_back(stem + "-double", std::move(doc));
  } else if (fam == "sl2-borel") {
    MatchedPairLie mp = sl2_borel_pair(field_or(o, Field()));
    files.emplace_back("sl2", make_document(sl2(mp.g.field)));
    files.emplace_back("sl2-g", make_document(mp.g));
    files.emplace_back("sl2-h", make_document(mp.h));
    files.emplace_back("sl2-borel-pair", make_document(mp));
  } else if (fam == "lie-direct-sum") {
    MatchedPairLie mp = lie_direct_sum(field_or(o, Field()));
    BicrossedLie sum = bicrossed_lie(mp);
    AlgebraDocument xi = make_document(sum.product);
    xi.embeddings["g"] = sum.embed_g;
    xi.embeddings["h"] = sum.embed_h;
    files.emplace_back("lie-direct-sum", std::move(xi));
    files.emplace_back("lie-direct-sum-pair", make_document(mp));
  } else {
    throw Usage("unknown family '" + fam +
                "' (expected h4, cyclic, h4n, cn-h4n, s4-s3, drinfeld-double, "
                "sl2-borel or lie-direct-sum)");
  }

  for (const auto& [stem, doc] : files) {
    fs::path path = dir / (stem + ".alg");
    save_document(doc, path);
    std::cout << path.string() << "\n";
  }
  return kPass;
}

// ---- build ----------------------------------------------------------------

int cmd_build(const Options& o) {
  AlgebraDocument doc = read_document(o.path);
  const std::string stem = fs::path(o.path).stem().string();
  fs::path dest;
  AlgebraDocument result;

  if (doc.kind == DocKind::matched_pair_hopf) {
    BicrossedProduct bp = bicrossed_product(doc.pair_hopf);
    result = make_document(bp.product);
    result.embeddings["A"] = bp.embed_A;
    result.embeddings["H"] = bp.embed_H;
    dest = out_dir(o) / (stem + "-product.alg");
  } else if (doc.kind == DocKind::matched_pair_lie) {
    BicrossedLie bl = bicrossed_lie(doc.pair_lie);
    result = make_document(bl.product);
    result.embeddings["g"] = bl.embed_g;
    result.embeddings["h"] = bl.embed_h;
    dest = out_dir(o) / (stem + "-product.alg");
  } else if (doc.kind == DocKind::hopf && o.double_) {
    BicrossedProduct d = drinfeld_double(doc.hopf);
    result = make_document(d.product);
    result.embeddings["dual"] = d.embed_A;
    result.embeddings["base"] = d.embed_H;
    dest = out_dir(o) / (stem + "-double.alg");
  } else if (doc.kind == DocKind::hopf && !o.factors.empty()) {
    // E with embeddings of two factors, each given by name and by document.
    if (o.factors.size() != 2) throw Usage("--factors takes A.alg,H.alg");
    AlgebraDocument A = read_document(o.factors[0]);
    AlgebraDocument H = read_document(o.factors[1]);
    const std::string a = fs::path(o.factors[0]).stem().string();
    const std::string h = fs::path(o.factors[1]).stem().string();
    if (!doc.embeddings.count(a) || !doc.embeddings.count(h))
      throw Usage("the document has no embeddings named '" + a + "' and '" + h + "'");
    result = make_document(canonical_matched_pair(doc.hopf, A.hopf, H.hopf,
                                                  doc.embeddings.at(a),
                                                  doc.embeddings.at(h)),
                           A.cert, H.cert);
    dest = out_dir(o) / (stem + "-pair.alg");
  } else if (doc.kind == DocKind::lie && !o.g_indices.empty()) {
    result = make_document(canonical_matched_pair_lie(doc.lie, o.g_indices, o.h_indices));
    dest = out_dir(o) / (stem + "-pair.alg");
  } else {
    throw Usage("build takes a matched pair, a hopf document with --double or "
                "--factors, or a lie document with --g-indices/--h-indices");
  }
  save_document(result, dest);
  std::cout << dest.string() << "\n";
  return kPass;
}

// ---- deform ---------------------------------------------------------------

int cmd_deform(const Options& o, const std::vector<std::string>& argv) {
  auto start = Clock::now();
  if (o.maps.empty()) throw Usage("deform needs --maps");
  AlgebraDocument doc = read_document(o.path);
  std::vector<LinearMap> maps = maps_from_document(read_document(o.maps));
  const std::string stem = fs::path(o.path).stem().string();
  const fs::path dir = out_dir(o);
  Json report = job_report(argv);
  bool ok = true;

  for (std::size_t k = 0; k < maps.size(); ++k) {
    const LinearMap& r = maps[k];
    const std::string tag = stem + "-r" + std::to_string(k);
    if (doc.kind == DocKind::matched_pair_hopf) {
      const MatchedPairHopf& mp = doc.pair_hopf;
      if (r.rows != mp.A.dim || r.cols != mp.H.dim)
        throw Usage("map " + std::to_string(k) + " has the wrong shape");
      VerificationReport rep = is_deformation_map(mp, r);
      print_report(tag + " deformation map", rep);
      report["reports"][tag] = report_json(rep);
      if (!rep.passed()) {
        ok = false;
        continue;
      }
      PointedHopf hr = deform_hopf(mp, r, doc.cert_H.value_or(PointedCertificate{}));
      DeformedPair dp = deform_matched_pair(mp, r);
      save_document(make_document(hr.hopf, doc.cert_H), dir / (tag + ".alg"));
      save_document(make_document(dp.pair, doc.cert_A, doc.cert_H), dir / (tag + "-pair.alg"));
      save_document(make_map_document(dp.psi, mp.H.field), dir / (tag + "-psi.alg"));
      report["reports"][tag + "-pair"] = report_json(dp.pair_report);
      report["psi"][tag] = Json{{"bijective", dp.psi_bijective},
                                {"algebra_map", dp.psi_checks.algebra_map},
                                {"coalgebra_map", dp.psi_checks.coalgebra_map},
                                {"unitary", dp.psi_checks.unitary},
                                {"left_linear", dp.psi_checks.left_linear}};
      std::cout << (dp.passed() ? "PASS " : "FAIL ") << tag << " deformed pair and psi\n";
      ok = ok && dp.passed();
    } else if (doc.kind == DocKind::matched_pair_lie) {
      const MatchedPairLie& mp = doc.pair_lie;
      if (r.rows != mp.g.dim || r.cols != mp.h.dim)
        throw Usage("map " + std::to_string(k) + " has the wrong shape");
      VerificationReport rep = is_deformation_map_lie(mp, r);
      print_report(tag + " deformation map", rep);
      report["reports"][tag] = report_json(rep);
      if (!rep.passed()) {
        ok = false;
        continue;
      }
      LieAlgebra hr = deform_lie(mp, r);
      DeformedPairLie dp = deform_matched_pair_lie(mp, r);
      save_document(make_document(hr), dir / (tag + ".alg"));
      save_document(make_document(dp.pair), dir / (tag + "-pair.alg"));
      save_document(make_map_document(dp.phi, mp.h.field), dir / (tag + "-phi.alg"));
      report["reports"][tag + "-pair"] = report_json(dp.pair_report);
      report["phi"][tag] = Json{{"bijective", dp.phi_bijective},
                                {"bracket", dp.phi_bracket},
                                {"graph_closed", dp.graph_closed}};
      std::cout << (dp.passed() ? "PASS " : "FAIL ") << tag << " deformed pair and phi\n";
      ok = ok && dp.passed();
    } else {
      throw Usage("deform expects a matched pair document");
    }
  }
  report["passed"] = ok;
  report["timings"]["seconds"] = since(start);
  write_text(dir / (stem + "-deform.report"), dump_canonical(report));
  return ok ? kPass : kFail;
}

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.field, "rationals or cyclotomic:<n>");
  cmd->add_option("--n", o.n, "family size n")->check(CLI::Range(1u, 4096u));
  cmd->add_option("--t", o.t, "exponent t of omega = xi^t");
  cmd->add_option("--l", o.l, "exponent l of the right action");
  cmd->add_option("--p", o.p, "index p of r_p");
  cmd->add_option("--xi-power", o.xi_power, "use xi^k as the generator");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  args.front() = "bicrossed";
  Options o;
  CLI::App app{"Matched pairs, bicrossed products and classifying complements"};
  app.require_subcommand(1);
  app.add_option("--jobs", o.jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check the axioms of a document");
  verify->add_option("path", o.path, "document (.alg)")->required()->check(CLI::ExistingFile);
  verify->add_option("--level", o.level,
                     "coalgebra|algebra|bialgebra|hopf|matched-pair|lie");
  verify->add_option("--out", o.out, "directory for the report");

  auto* classify = app.add_subcommand("classify", "classify complements of a matched pair");
  classify->add_option("path", o.path, "matched pair document")->check(CLI::ExistingFile);
  classify->add_option("--example", o.example,
                       "cn-h4n|smash-h4|s4-s3|sl2-borel|lie-direct-sum");
  classify->add_option("--maps", o.maps, "candidate maps (linear_map or collection)")
      ->check(CLI::ExistingFile);
  classify->add_option("--out", o.out, "directory for the report");
  add_family_flags(classify, o);

  auto* examples = app.add_subcommand("examples", "write example documents");
  examples->add_option("family", o.family,
                       "h4|cyclic|h4n|cn-h4n|s4-s3|drinfeld-double|sl2-borel|lie-direct-sum")
      ->required();
  examples->add_option("--of", o.of, "source hopf document for drinfeld-double")
      ->check(CLI::ExistingFile);
  examples->add_option("--out", o.out, "output directory");
  add_family_flags(examples, o);

  auto* build = app.add_subcommand("build", "build a product or a matched pair");
  build->add_option("path", o.path, "input document")->required()->check(CLI::ExistingFile);
  build->add_flag("--double", o.double_, "Drinfeld double of a hopf document");
  build->add_option("--factors", o.factors, "A.alg,H.alg named like the embeddings")
      ->delimiter(',');
  build->add_option("--g-indices", o.g_indices, "basis indices of the first lie subalgebra")
      ->delimiter(',');
  build->add_option("--h-indices", o.h_indices, "basis indices of the second lie subalgebra")
      ->delimiter(',');
  build->add_option("--out", o.out, "output directory");

  auto* deform = app.add_subcommand("deform", "deform a matched pair by given maps");
  deform->add_option("path", o.path, "matched pair document")->required()
      ->check(CLI::ExistingFile);
  deform->add_option("--maps", o.maps, "deformation maps")->check(CLI::ExistingFile);
  deform->add_option("--out", o.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  set_max_jobs(o.jobs);
  try {
    if (*verify) return cmd_verify(o, args);
    if (*classify) return cmd_classify(o, args);
    if (*examples) return cmd_examples(o);
    if (*build) return cmd_build(o);
    if (*deform) return cmd_deform(o, args);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_input ? kUsage
                                                                                : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
