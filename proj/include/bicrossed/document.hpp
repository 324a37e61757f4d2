#pragma once

// The on-disk document format: one JSON tree per file with
// "format_version": 1, a field spec, a kind tag and sparse tensor records
// [i, j, ..., "scalar"] whose scalars are polynomial strings in z.
//
// Writing is canonical (sorted keys, sorted records, zero entries dropped),
// so reading a written document and writing it again is byte-identical.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicrossed/deformation.hpp"
#include "bicrossed/hopf.hpp"
#include "bicrossed/lie.hpp"
#include "bicrossed/matched_pair.hpp"

namespace bicrossed {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "bicrossed 1.0.0";

enum class DocKind {
  hopf,
  lie,
  matched_pair_hopf,
  matched_pair_lie,
  linear_map,
  collection,
};

std::string to_string(DocKind kind);
DocKind parse_doc_kind(const std::string& s);

struct AlgebraDocument {
  DocKind kind = DocKind::hopf;
  Field field;

  // kind == hopf
  HopfStructure hopf;
  std::optional<PointedCertificate> cert;
  // kind == lie
  LieAlgebra lie;
  // kind == matched_pair_hopf; certificates ride on the nested documents
  MatchedPairHopf pair_hopf;
  std::optional<PointedCertificate> cert_A;
  std::optional<PointedCertificate> cert_H;
  // kind == matched_pair_lie
  MatchedPairLie pair_lie;
  // kind == linear_map
  LinearMap map;
  // kind == collection
  std::vector<AlgebraDocument> items;

  /// Named maps into this algebra, e.g. the embeddings of two factors.
  std::map<std::string, LinearMap> embeddings;
};

AlgebraDocument make_document(const HopfStructure& h,
                              const std::optional<PointedCertificate>& cert = {});
AlgebraDocument make_document(const PointedHopf& h);
AlgebraDocument make_document(const LieAlgebra& g);
AlgebraDocument make_document(const MatchedPairHopf& mp,
                              const std::optional<PointedCertificate>& cert_A = {},
                              const std::optional<PointedCertificate>& cert_H = {});
AlgebraDocument make_document(const MatchedPairLie& mp);
AlgebraDocument make_map_document(const LinearMap& f, Field field);
AlgebraDocument make_collection(std::vector<AlgebraDocument> items, Field field);

Json to_json(const AlgebraDocument& doc);
/// Validates indices, scalar strings against the declared field and the
/// version tag. Nested documents given as strings are file paths relative to
/// base_dir. Throws Error{parse} on any problem.
AlgebraDocument from_json(const Json& j,
                          const std::filesystem::path& base_dir = {});

/// Objects one key per line; arrays holding only scalars stay on one line.
std::string dump_canonical(const Json& j);

std::string write_document(const AlgebraDocument& doc);
AlgebraDocument parse_document(const std::string& text,
                               const std::filesystem::path& base_dir = {});
AlgebraDocument read_document(const std::filesystem::path& path);
void save_document(const AlgebraDocument& doc,
                   const std::filesystem::path& path);

/// Loads maps from a linear_map or a collection of linear maps.
std::vector<LinearMap> maps_from_document(const AlgebraDocument& doc);

Json report_json(const VerificationReport& rep);
Json classification_json(const ClassificationResult& res, Field field);
Json classification_json(const LieClassificationResult& res, Field field);

}  // namespace bicrossed
