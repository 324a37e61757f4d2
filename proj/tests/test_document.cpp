#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bicrossed/document.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;
namespace fs = std::filesystem;

namespace {

FamilyParams params(unsigned n, int t, int l, int p = 0) {
  FamilyParams f;
  f.n = n;
  f.t = t;
  f.l = l;
  f.p = p;
  f.field = Field::cyclotomic(n);
  return f;
}

void check_round_trip(const AlgebraDocument& doc) {
  const std::string a = write_document(doc);
  const std::string b = write_document(parse_document(a));
  CHECK(a == b);
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::invalid_input;
}

const char* kMap =
    R"({"format_version": 1, "kind": "linear_map", "field": "cyclotomic:3",
        "rows": 2, "cols": 2, "entries": [[0, 1, "z"], [1, 0, "1/2"]]})";

}  // namespace

TEST_CASE("round trips are byte-identical") {
  FamilyParams f = params(5, 4, 1, 2);
  check_round_trip(make_document(sweedler_h4()));
  check_round_trip(make_document(h4n(f)));
  check_round_trip(make_document(cn_h4n_matched_pair(f), cn_certificate(5), h4n(f).cert));
  check_round_trip(make_document(sl2()));
  check_round_trip(make_document(sl2_borel_pair()));
  check_round_trip(make_map_document(rp_map(f), f.field));
  check_round_trip(make_collection(
      {make_map_document(rp_map(f), f.field), make_map_document(rp_map(params(5, 4, 1, 0)), f.field)},
      f.field));
  AlgebraDocument withemb = make_document(symmetric_group_case().s4);
  withemb.embeddings["c4"] = symmetric_group_case().embed_c4;
  check_round_trip(withemb);
}

TEST_CASE("structures survive a round trip") {
  FamilyParams f = params(4, 3, 1);
  PointedHopf h = h4n(f);
  AlgebraDocument back = parse_document(write_document(make_document(h)));
  CHECK(back.kind == DocKind::hopf);
  CHECK(back.field == f.field);
  CHECK(same_structure_constants(back.hopf, h.hopf));
  REQUIRE(back.cert);
  CHECK(back.cert->grouplikes == h.cert.grouplikes);

  MatchedPairHopf mp = cn_h4n_matched_pair(f);
  AlgebraDocument pd = parse_document(write_document(make_document(mp, cn_certificate(4), h.cert)));
  CHECK(pd.pair_hopf.left == mp.left);
  CHECK(pd.pair_hopf.right == mp.right);
  CHECK(same_structure_constants(pd.pair_hopf.H, mp.H));
  CHECK(pd.cert_H.has_value());

  MatchedPairLie lp = sl2_borel_pair();
  AlgebraDocument ld = parse_document(write_document(make_document(lp)));
  CHECK(ld.pair_lie.g.bracket == lp.g.bracket);
  CHECK(ld.pair_lie.left == lp.left);
  CHECK(ld.pair_lie.right == lp.right);
}

TEST_CASE("hand-written documents parse") {
  AlgebraDocument d = parse_document(kMap);
  CHECK(d.kind == DocKind::linear_map);
  Field f = Field::cyclotomic(3);
  // Records are [input, output, scalar]: f(e_0) = z e_1, f(e_1) = e_0 / 2.
  CHECK(d.map.columns[0] == Vec::basis(1, f.generator()));
  CHECK(d.map.columns[1] == Vec::basis(0, f.from_rational(Rational(1, 2))));
  // Records in any order, zeros dropped.
  AlgebraDocument e = parse_document(
      R"({"format_version":1,"kind":"lie","field":"rationals","dim":2,
          "bracket":[[1,0,1,"-1"],[0,1,1,"1"],[0,0,0,"0"]]})");
  CHECK(e.lie.bracket == nonabelian2().bracket);
  CHECK(maps_from_document(d).size() == 1);
}

TEST_CASE("invalid documents are parse errors") {
  CHECK(parse_kind("{") == ErrorKind::parse);
  CHECK(parse_kind(R"({"kind":"linear_map"})") == ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":2,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[]})") ==
        ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":1,"kind":"group","field":"rationals"})") == ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"reals","rows":1,"cols":1,"entries":[]})") ==
        ErrorKind::parse);
  // Index out of range.
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[0,1,"1"]]})") ==
        ErrorKind::parse);
  // z does not exist over the rationals.
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[0,0,"z"]]})") ==
        ErrorKind::parse);
  // Bad scalar, wrong record width, duplicate record.
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[0,0,"1/0"]]})") ==
        ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[0,"1"]]})") ==
        ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[0,0,"1"],[0,0,"2"]]})") ==
        ErrorKind::parse);
  CHECK(parse_kind(R"({"format_version":1,"kind":"linear_map","field":"rationals","rows":1,"cols":1,"entries":[[-1,0,"1"]]})") ==
        ErrorKind::parse);
  CHECK_THROWS_AS(maps_from_document(make_document(sl2())), Error);
}

TEST_CASE("nested documents resolve relative paths") {
  fs::path dir = fs::temp_directory_path() / "bicrossed_doc_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "parts");
  MatchedPairLie mp = sl2_borel_pair();
  save_document(make_document(mp.g), dir / "parts" / "g.alg");
  save_document(make_document(mp.h), dir / "parts" / "h.alg");
  Json j = to_json(make_document(mp));
  j["g"] = "parts/g.alg";
  j["h"] = "parts/h.alg";
  {
    std::ofstream out(dir / "pair.alg");
    out << j.dump();
  }
  AlgebraDocument back = read_document(dir / "pair.alg");
  CHECK(back.pair_lie.left == mp.left);
  CHECK(back.pair_lie.g.bracket == mp.g.bracket);
  j["h"] = "parts/missing.alg";
  {
    std::ofstream out(dir / "broken.alg");
    out << j.dump();
  }
  CHECK_THROWS_AS(read_document(dir / "broken.alg"), Error);
  fs::remove_all(dir);
}

TEST_CASE("reports serialize deterministically") {
  FamilyParams f = params(3, 2, 1);
  ClassificationResult res =
      classify_complements(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(3));
  ClassificationResult again =
      classify_complements(cn_h4n_matched_pair(f), h4n(f).cert, cn_certificate(3));
  CHECK(dump_canonical(classification_json(res, f.field)) ==
        dump_canonical(classification_json(again, f.field)));
  Json j = classification_json(res, f.field);
  CHECK(j["factorization_index"] == 2);
  // Each class carries the deformed structure as a hopf document.
  AlgebraDocument rep = from_json(j["classes"][0]["deformed"]);
  CHECK(rep.kind == DocKind::hopf);
  CHECK(same_structure_constants(rep.hopf, res.classes[0].deformed.hopf));
}
