#include "bicrossed/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bicrossed {

namespace {

Error parse_error(const std::string& what) {
  return Error(ErrorKind::parse, what);
}

// ---- writing --------------------------------------------------------------

// Records [prefix..., k, "c"] for every term of every vector, with the
// vector's flat index split into `shape` coordinates. A nonzero out_split
// writes the output index k of a tensor square as the pair (k / n, k % n).
Json tensor_records(const std::vector<Vec>& vecs,
                    const std::vector<std::size_t>& shape,
                    std::size_t out_split = 0) {
  Json out = Json::array();
  for (std::size_t flat = 0; flat < vecs.size(); ++flat) {
    std::vector<std::size_t> idx(shape.size());
    std::size_t rest = flat;
    for (std::size_t k = shape.size(); k-- > 0;) {
      idx[k] = rest % shape[k];
      rest /= shape[k];
    }
    for (const auto& t : vecs[flat].terms()) {
      Json rec = Json::array();
      for (std::size_t i : idx) rec.push_back(i);
      if (out_split) {
        rec.push_back(t.index / out_split);
        rec.push_back(t.index % out_split);
      } else {
        rec.push_back(t.index);
      }
      rec.push_back(t.coeff.to_string());
      out.push_back(std::move(rec));
    }
  }
  return out;
}

Json vec_records(const Vec& v) { return tensor_records({v}, {}); }

Json names_json(std::size_t dim, const std::function<std::string(std::size_t)>& name) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dim; ++i) out.push_back(name(i));
  return out;
}

Json cert_json(const PointedCertificate& c) {
  Json skews = Json::array();
  for (const auto& s : c.skew_primitives)
    skews.push_back(Json::array({s.x, s.left, s.right}));
  return Json{{"grouplikes", c.grouplikes}, {"skew_primitives", skews}};
}

Json map_json(const LinearMap& f, Field field) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "linear_map"},
              {"field", field.to_string()},
              {"rows", f.rows},
              {"cols", f.cols},
              {"entries", tensor_records(f.columns, {f.cols})}};
}

Json header(DocKind kind, Field field) {
  return Json{{"format_version", kFormatVersion},
              {"kind", to_string(kind)},
              {"field", field.to_string()}};
}

Json hopf_json(const HopfStructure& h, const std::optional<PointedCertificate>& cert) {
  Json j = header(DocKind::hopf, h.field);
  const std::size_t d = h.dim;
  j["dim"] = d;
  j["basis"] = names_json(d, [&](std::size_t i) { return h.name(i); });
  j["level"] = to_string(h.level);
  j["mult"] = tensor_records(h.mult, {d, d});
  j["unit"] = vec_records(h.unit);
  j["comult"] = tensor_records(h.comult, {d}, d);
  Json counit = Json::array();
  for (std::size_t i = 0; i < h.counit.size(); ++i)
    if (!h.counit[i].is_zero())
      counit.push_back(Json::array({i, h.counit[i].to_string()}));
  j["counit"] = counit;
  if (h.antipode) j["antipode"] = tensor_records(h.antipode->columns, {d});
  if (cert) j["certificate"] = cert_json(*cert);
  return j;
}

Json lie_json(const LieAlgebra& g) {
  Json j = header(DocKind::lie, g.field);
  j["dim"] = g.dim;
  j["basis"] = names_json(g.dim, [&](std::size_t i) { return g.name(i); });
  j["bracket"] = tensor_records(g.bracket, {g.dim, g.dim});
  return j;
}

// ---- reading --------------------------------------------------------------

struct Reader {
  std::filesystem::path base_dir;

  static std::size_t index(const Json& v, std::size_t bound, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw parse_error(where + ": index must be a non-negative integer");
    auto i = v.get<std::size_t>();
    if (i >= bound)
      throw parse_error(where + ": index " + std::to_string(i) +
                        " out of range (bound " + std::to_string(bound) + ")");
    return i;
  }

  static Scalar scalar(const Json& v, Field field, const std::string& where) {
    if (!v.is_string()) throw parse_error(where + ": scalar must be a string");
    try {
      return field.parse_scalar(v.get<std::string>());
    } catch (const std::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
  }

  static const Json& need(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(where + ": missing key '" + key + "'");
    return *it;
  }

  static std::size_t size_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw parse_error(where + ": '" + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
  }

  // Inverse of tensor_records: `shape` bounds the leading indices, `out`
  // bounds the output index.
  static std::vector<Vec> tensor(const Json& recs, const std::vector<std::size_t>& shape,
                                 std::size_t out, Field field, const std::string& where,
                                 std::size_t out_split = 0) {
    const std::size_t width = shape.size() + (out_split ? 3 : 2);
    if (!recs.is_array()) throw parse_error(where + ": expected an array of records");
    std::size_t total = 1;
    for (std::size_t s : shape) total *= s;
    std::vector<std::vector<Term>> terms(total);
    std::vector<std::vector<std::size_t>> seen(total);
    for (const Json& r : recs) {
      if (!r.is_array() || r.size() != width)
        throw parse_error(where + ": record " + r.dump() + " should have " +
                          std::to_string(width) + " entries");
      std::size_t flat = 0;
      for (std::size_t k = 0; k < shape.size(); ++k)
        flat = flat * shape[k] + index(r[k], shape[k], where);
      std::size_t o = out_split ? index(r[shape.size()], out_split, where) * out_split +
                                      index(r[shape.size() + 1], out_split, where)
                                : index(r[shape.size()], out, where);
      if (std::find(seen[flat].begin(), seen[flat].end(), o) != seen[flat].end())
        throw parse_error(where + ": duplicate record " + r.dump());
      seen[flat].push_back(o);
      Scalar c = scalar(r.back(), field, where);
      if (!c.is_zero()) terms[flat].push_back({o, std::move(c)});
    }
    std::vector<Vec> vecs(total);
    for (std::size_t f = 0; f < total; ++f) vecs[f] = Vec::from_terms(std::move(terms[f]));
    return vecs;
  }

  static std::vector<std::string> names(const Json& j, std::size_t dim, const std::string& where) {
    auto it = j.find("basis");
    if (it == j.end()) return {};
    if (!it->is_array() || it->size() != dim)
      throw parse_error(where + ": 'basis' must list " + std::to_string(dim) + " names");
    std::vector<std::string> out;
    for (const Json& n : *it) {
      if (!n.is_string()) throw parse_error(where + ": basis names must be strings");
      out.push_back(n.get<std::string>());
    }
    return out;
  }

  static PointedCertificate certificate(const Json& j, std::size_t dim, const std::string& where) {
    PointedCertificate c;
    for (const Json& g : need(j, "grouplikes", where)) c.grouplikes.push_back(index(g, dim, where));
    for (const Json& s : need(j, "skew_primitives", where)) {
      if (!s.is_array() || s.size() != 3)
        throw parse_error(where + ": skew-primitive records are [x, left, right]");
      c.skew_primitives.push_back(
          {index(s[0], dim, where), index(s[1], dim, where), index(s[2], dim, where)});
    }
    return c;
  }

  // A nested document, either inline or a path relative to base_dir.
  AlgebraDocument nested(const Json& v, DocKind want, const std::string& where) const {
    AlgebraDocument doc;
    if (v.is_string()) {
      std::filesystem::path p = base_dir / v.get<std::string>();
      doc = read_document(p);
    } else {
      doc = read(v, where);
    }
    if (doc.kind != want)
      throw parse_error(where + ": expected a " + to_string(want) + " document");
    return doc;
  }

  AlgebraDocument read(const Json& j, const std::string& where) const {
    if (!j.is_object()) throw parse_error(where + ": document must be an object");
    const Json& ver = need(j, "format_version", where);
    if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion)
      throw parse_error(where + ": unsupported format_version " + ver.dump());
    AlgebraDocument doc;
    const Json& kind = need(j, "kind", where);
    if (!kind.is_string()) throw parse_error(where + ": 'kind' must be a string");
    doc.kind = parse_doc_kind(kind.get<std::string>());
    const Json& fs = need(j, "field", where);
    if (!fs.is_string()) throw parse_error(where + ": 'field' must be a string");
    try {
      doc.field = Field::parse(fs.get<std::string>());
    } catch (const std::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
    const Field F = doc.field;

    switch (doc.kind) {
      case DocKind::hopf: {
        HopfStructure& h = doc.hopf;
        h.field = F;
        h.dim = size_field(j, "dim", where);
        const std::size_t d = h.dim;
        h.basis_names = names(j, d, where);
        if (auto it = j.find("level"); it != j.end()) {
          try {
            h.level = parse_level(it->get<std::string>());
          } catch (const std::exception& e) {
            throw parse_error(where + ": " + e.what());
          }
        }
        h.mult = tensor(need(j, "mult", where), {d, d}, d, F, where + ".mult");
        h.unit = tensor(need(j, "unit", where), {}, d, F, where + ".unit").front();
        h.comult = tensor(need(j, "comult", where), {d}, d * d, F, where + ".comult", d);
        Vec eps = tensor(need(j, "counit", where), {}, d, F, where + ".counit").front();
        h.counit.assign(d, F.zero());
        for (const auto& t : eps.terms()) h.counit[t.index] = t.coeff;
        if (auto it = j.find("antipode"); it != j.end()) {
          Matrix s{d, d, tensor(*it, {d}, d, F, where + ".antipode")};
          h.antipode = std::move(s);
        }
        if (auto it = j.find("certificate"); it != j.end())
          doc.cert = certificate(*it, d, where + ".certificate");
        break;
      }
      case DocKind::lie: {
        LieAlgebra& g = doc.lie;
        g.field = F;
        g.dim = size_field(j, "dim", where);
        g.basis_names = names(j, g.dim, where);
        g.bracket = tensor(need(j, "bracket", where), {g.dim, g.dim}, g.dim, F,
                           where + ".bracket");
        break;
      }
      case DocKind::matched_pair_hopf: {
        AlgebraDocument A = nested(need(j, "A", where), DocKind::hopf, where + ".A");
        AlgebraDocument H = nested(need(j, "H", where), DocKind::hopf, where + ".H");
        MatchedPairHopf& mp = doc.pair_hopf;
        mp.A = std::move(A.hopf);
        mp.H = std::move(H.hopf);
        doc.cert_A = A.cert;
        doc.cert_H = H.cert;
        mp.left = tensor(need(j, "left_action", where), {mp.H.dim, mp.A.dim},
                         mp.A.dim, F, where + ".left_action");
        mp.right = tensor(need(j, "right_action", where), {mp.H.dim, mp.A.dim},
                          mp.H.dim, F, where + ".right_action");
        break;
      }
      case DocKind::matched_pair_lie: {
        AlgebraDocument g = nested(need(j, "g", where), DocKind::lie, where + ".g");
        AlgebraDocument h = nested(need(j, "h", where), DocKind::lie, where + ".h");
        MatchedPairLie& mp = doc.pair_lie;
        mp.g = std::move(g.lie);
        mp.h = std::move(h.lie);
        mp.left = tensor(need(j, "left_action", where), {mp.h.dim, mp.g.dim},
                         mp.g.dim, F, where + ".left_action");
        mp.right = tensor(need(j, "right_action", where), {mp.h.dim, mp.g.dim},
                          mp.h.dim, F, where + ".right_action");
        break;
      }
      case DocKind::linear_map: {
        LinearMap& f = doc.map;
        f.rows = size_field(j, "rows", where);
        f.cols = size_field(j, "cols", where);
        f.columns = tensor(need(j, "entries", where), {f.cols}, f.rows, F,
                           where + ".entries");
        break;
      }
      case DocKind::collection: {
        const Json& items = need(j, "items", where);
        if (!items.is_array()) throw parse_error(where + ": 'items' must be an array");
        for (std::size_t k = 0; k < items.size(); ++k)
          doc.items.push_back(read(items[k], where + ".items[" + std::to_string(k) + "]"));
        break;
      }
    }

    if (auto it = j.find("embeddings"); it != j.end()) {
      if (!it->is_object()) throw parse_error(where + ": 'embeddings' must be an object");
      for (const auto& [name, v] : it->items()) {
        AlgebraDocument m = nested(v, DocKind::linear_map, where + ".embeddings." + name);
        doc.embeddings.emplace(name, std::move(m.map));
      }
    }
    return doc;
  }
};

void dump_into(const Json& j, std::string& out, int indent) {
  auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      pad(indent + 2);
      out += Json(key).dump();
      out += ": ";
      dump_into(v, out, indent + 2);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "}";
    return;
  }
  if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) {
      return v.is_structured();
    });
    if (flat || j.empty()) {
      out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      pad(indent + 2);
      dump_into(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string to_string(DocKind kind) {
  switch (kind) {
    case DocKind::hopf: return "hopf";
    case DocKind::lie: return "lie";
    case DocKind::matched_pair_hopf: return "matched_pair_hopf";
    case DocKind::matched_pair_lie: return "matched_pair_lie";
    case DocKind::linear_map: return "linear_map";
    case DocKind::collection: return "collection";
  }
  return "?";
}

DocKind parse_doc_kind(const std::string& s) {
  for (DocKind k : {DocKind::hopf, DocKind::lie, DocKind::matched_pair_hopf,
                    DocKind::matched_pair_lie, DocKind::linear_map,
                    DocKind::collection})
    if (to_string(k) == s) return k;
  throw parse_error("unknown document kind '" + s + "'");
}

AlgebraDocument make_document(const HopfStructure& h,
                              const std::optional<PointedCertificate>& cert) {
  AlgebraDocument doc;
  doc.kind = DocKind::hopf;
  doc.field = h.field;
  doc.hopf = h;
  doc.cert = cert;
  return doc;
}

AlgebraDocument make_document(const PointedHopf& h) {
  return make_document(h.hopf, h.cert);
}

AlgebraDocument make_document(const LieAlgebra& g) {
  AlgebraDocument doc;
  doc.kind = DocKind::lie;
  doc.field = g.field;
  doc.lie = g;
  return doc;
}

AlgebraDocument make_document(const MatchedPairHopf& mp,
                              const std::optional<PointedCertificate>& cert_A,
                              const std::optional<PointedCertificate>& cert_H) {
  AlgebraDocument doc;
  doc.kind = DocKind::matched_pair_hopf;
  doc.field = mp.H.field;
  doc.pair_hopf = mp;
  doc.cert_A = cert_A;
  doc.cert_H = cert_H;
  return doc;
}

AlgebraDocument make_document(const MatchedPairLie& mp) {
  AlgebraDocument doc;
  doc.kind = DocKind::matched_pair_lie;
  doc.field = mp.h.field;
  doc.pair_lie = mp;
  return doc;
}

AlgebraDocument make_map_document(const LinearMap& f, Field field) {
  AlgebraDocument doc;
  doc.kind = DocKind::linear_map;
  doc.field = field;
  doc.map = f;
  return doc;
}

AlgebraDocument make_collection(std::vector<AlgebraDocument> items, Field field) {
  AlgebraDocument doc;
  doc.kind = DocKind::collection;
  doc.field = field;
  doc.items = std::move(items);
  return doc;
}

Json to_json(const AlgebraDocument& doc) {
  Json j;
  switch (doc.kind) {
    case DocKind::hopf:
      j = hopf_json(doc.hopf, doc.cert);
      break;
    case DocKind::lie:
      j = lie_json(doc.lie);
      break;
    case DocKind::matched_pair_hopf: {
      const MatchedPairHopf& mp = doc.pair_hopf;
      j = header(doc.kind, doc.field);
      j["A"] = hopf_json(mp.A, doc.cert_A);
      j["H"] = hopf_json(mp.H, doc.cert_H);
      j["left_action"] = tensor_records(mp.left, {mp.H.dim, mp.A.dim});
      j["right_action"] = tensor_records(mp.right, {mp.H.dim, mp.A.dim});
      break;
    }
    case DocKind::matched_pair_lie: {
      const MatchedPairLie& mp = doc.pair_lie;
      j = header(doc.kind, doc.field);
      j["g"] = lie_json(mp.g);
      j["h"] = lie_json(mp.h);
      j["left_action"] = tensor_records(mp.left, {mp.h.dim, mp.g.dim});
      j["right_action"] = tensor_records(mp.right, {mp.h.dim, mp.g.dim});
      break;
    }
    case DocKind::linear_map:
      j = map_json(doc.map, doc.field);
      break;
    case DocKind::collection: {
      j = header(doc.kind, doc.field);
      Json items = Json::array();
      for (const auto& it : doc.items) items.push_back(to_json(it));
      j["items"] = std::move(items);
      break;
    }
  }
  if (!doc.embeddings.empty()) {
    Json e = Json::object();
    for (const auto& [name, f] : doc.embeddings) e[name] = map_json(f, doc.field);
    j["embeddings"] = std::move(e);
  }
  return j;
}

AlgebraDocument from_json(const Json& j, const std::filesystem::path& base_dir) {
  return Reader{base_dir}.read(j, "document");
}

std::string dump_canonical(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += '\n';
  return out;
}

std::string write_document(const AlgebraDocument& doc) {
  return dump_canonical(to_json(doc));
}

AlgebraDocument parse_document(const std::string& text,
                               const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j, base_dir);
}

AlgebraDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path.parent_path());
}

void save_document(const AlgebraDocument& doc, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path.string());
  out << write_document(doc);
}

std::vector<LinearMap> maps_from_document(const AlgebraDocument& doc) {
  if (doc.kind == DocKind::linear_map) return {doc.map};
  if (doc.kind != DocKind::collection)
    throw parse_error("expected a linear_map or a collection of maps");
  std::vector<LinearMap> out;
  for (const auto& it : doc.items) {
    if (it.kind != DocKind::linear_map)
      throw parse_error("collection item is not a linear_map");
    out.push_back(it.map);
  }
  return out;
}

Json report_json(const VerificationReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations)
    v.push_back(Json{{"axiom", x.axiom}, {"witness", x.witness},
                     {"lhs", x.lhs}, {"rhs", x.rhs}});
  Json inst = Json::object();
  for (const auto& [k, n] : rep.instances) inst[k] = n;
  return Json{{"passed", rep.passed()}, {"instances", inst}, {"violations", v}};
}

Json classification_json(const ClassificationResult& res, Field field) {
  Json maps = Json::array();
  for (const auto& r : res.maps) maps.push_back(map_json(r, field));
  Json classes = Json::array();
  for (const auto& c : res.classes)
    classes.push_back(Json{{"representative", map_json(c.r, field)},
                           {"members", c.members},
                           {"deformed", hopf_json(c.deformed.hopf, c.deformed.cert)}});
  return Json{{"factorization_index", res.factorization_index},
              {"exhaustive", res.exhaustive},
              {"bijection_consistent", res.bijection_consistent},
              {"iso_types", res.iso_types},
              {"maps", maps},
              {"classes", classes}};
}

Json classification_json(const LieClassificationResult& res, Field field) {
  Json maps = Json::array();
  for (const auto& r : res.maps) maps.push_back(map_json(r, field));
  Json classes = Json::array();
  for (const auto& c : res.classes)
    classes.push_back(Json{{"representative", map_json(c.r, field)},
                           {"members", c.members},
                           {"deformed", lie_json(c.deformed)}});
  return Json{{"factorization_index", res.factorization_index},
              {"exhaustive", res.exhaustive},
              {"bijection_consistent", res.bijection_consistent},
              {"iso_types", res.iso_types},
              {"maps", maps},
              {"classes", classes}};
}

}  // namespace bicrossed
