#include "mfd/document.hpp"

#include <json.hpp>

#include <sstream>

namespace mfd {

namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw DocParseError(std::string("JSON error: ") + e.what(), line, col);
  }
}

[[noreturn]] void fail(const std::string& msg) { throw DocParseError(msg, 0, 0); }

std::vector<std::vector<std::vector<std::string>>> read_matrix_list(const Json& j,
                                                                    const char* key) {
  std::vector<std::vector<std::vector<std::string>>> out;
  if (!j.contains(key) || !j[key].is_array()) fail(std::string("missing array '") + key + "'");
  for (const auto& mat : j[key]) {
    std::vector<std::vector<std::string>> rows;
    if (!mat.is_array()) fail("matrix must be an array of rows");
    for (const auto& row : mat) {
      std::vector<std::string> r;
      if (!row.is_array()) fail("matrix row must be an array of strings");
      for (const auto& entry : row) {
        if (!entry.is_string()) fail("matrix entry must be a polynomial string");
        r.push_back(entry.get<std::string>());
      }
      rows.push_back(std::move(r));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

Json matrix_list_json(const std::vector<std::vector<std::vector<std::string>>>& mats) {
  Json out = Json::array();
  for (const auto& mat : mats) {
    Json jm = Json::array();
    for (const auto& row : mat) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(e);
      jm.push_back(std::move(jr));
    }
    out.push_back(std::move(jm));
  }
  return out;
}

MFDocument document_from_json(const Json& j) {
  MFDocument doc;
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (!j.contains("field") || !j["field"].is_object()) fail("missing 'field' descriptor");
  const std::string kind = j["field"].value("kind", "");
  if (kind == "rational") {
    doc.field_kind = FieldKind::rational_exact;
  } else if (kind == "prime") {
    doc.field_kind = FieldKind::prime_field;
    if (!j["field"].contains("p")) fail("prime field needs 'p'");
    doc.p = j["field"]["p"].get<std::int64_t>();
  } else {
    fail("field kind must be 'rational' or 'prime'");
  }
  if (!j.contains("vars") || !j["vars"].is_array()) fail("missing 'vars'");
  for (const auto& v : j["vars"]) doc.vars.push_back(v.get<std::string>());
  if (!j.contains("f")) fail("missing 'f'");
  doc.f_text = j["f"].get<std::string>();
  if (!j.contains("d")) fail("missing 'd'");
  doc.d = j["d"].get<int>();
  if (!j.contains("n")) fail("missing 'n'");
  doc.n = j["n"].get<std::size_t>();
  doc.factors = read_matrix_list(j, "factors");
  if (j.contains("metadata")) doc.metadata_json = j["metadata"].dump(2);
  if (static_cast<int>(doc.factors.size()) != doc.d) {
    fail("expected " + std::to_string(doc.d) + " factors");
  }
  for (const auto& mat : doc.factors) {
    if (mat.size() != doc.n) fail("factor has wrong row count");
    for (const auto& row : mat) {
      if (row.size() != doc.n) fail("factor has wrong column count");
    }
  }
  return doc;
}

Json document_to_json(const MFDocument& doc) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (doc.field_kind == FieldKind::rational_exact) {
    j["field"] = Json{{"kind", "rational"}};
  } else {
    j["field"] = Json{{"kind", "prime"}, {"p", doc.p}};
  }
  j["vars"] = doc.vars;
  j["f"] = doc.f_text;
  j["d"] = doc.d;
  j["n"] = doc.n;
  j["factors"] = matrix_list_json(doc.factors);
  if (!doc.metadata_json.empty()) j["metadata"] = Json::parse(doc.metadata_json);
  return j;
}

PolyMatrix matrix_from_strings(const RingPtr& ring,
                               const std::vector<std::vector<std::string>>& rows,
                               const std::string& where) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows[0].size();
  PolyMatrix m(ring, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) fail(where + ": ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) {
      try {
        m.at(i, j) = Poly::parse(ring, rows[i][j]);
      } catch (const PolyParseError& e) {
        throw DocParseError(where + " entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "): " + e.what(),
                            0, e.column);
      }
    }
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_to_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).str();
  return rows;
}

}  // namespace

MFDocument MFDocument::parse(const std::string& text) {
  return document_from_json(parse_json(text));
}

MFDocument MFDocument::from_mf(const MatrixFactorization& x, std::string name) {
  MFDocument doc;
  doc.name = std::move(name);
  const Field& F = x.ring()->field;
  doc.field_kind = F.kind();
  doc.p = F.is_prime_field() ? F.modulus() : 0;
  doc.vars = x.ring()->vars;
  doc.f_text = x.f().str();
  doc.d = x.factor_count();
  doc.n = x.size();
  for (int k = 1; k <= doc.d; ++k) doc.factors.push_back(matrix_to_strings(x.factor(k)));
  return doc;
}

std::string MFDocument::print() const { return document_to_json(*this).dump(2) + "\n"; }

Field MFDocument::field() const {
  return field_kind == FieldKind::rational_exact ? Field::rationals() : Field::prime(p);
}

RingPtr MFDocument::ring() const { return make_ring(field(), vars); }

MatrixFactorization MFDocument::to_mf() const {
  RingPtr r = ring();
  Poly f(r);
  try {
    f = Poly::parse(r, f_text);
  } catch (const PolyParseError& e) {
    throw DocParseError(std::string("f: ") + e.what(), 0, e.column);
  }
  std::vector<PolyMatrix> mats;
  for (int k = 0; k < d; ++k) {
    mats.push_back(matrix_from_strings(r, factors[k], "factor " + std::to_string(k + 1)));
  }
  return MatrixFactorization(std::move(f), std::move(mats));
}

MorphismDocument MorphismDocument::parse(const std::string& text) {
  Json j = parse_json(text);
  MorphismDocument doc;
  if (!j.contains("source") || !j.contains("target")) fail("morphism needs source and target");
  doc.source = document_from_json(j["source"]);
  doc.target = document_from_json(j["target"]);
  doc.components = read_matrix_list(j, "components");
  return doc;
}

MorphismDocument MorphismDocument::from_morphism(const Morphism& alpha) {
  MorphismDocument doc;
  doc.source = MFDocument::from_mf(alpha.source(), "");
  doc.target = MFDocument::from_mf(alpha.target(), "");
  for (int k = 1; k <= alpha.source().factor_count(); ++k) {
    doc.components.push_back(matrix_to_strings(alpha.component(k)));
  }
  return doc;
}

std::string MorphismDocument::print() const {
  Json j;
  j["source"] = document_to_json(source);
  j["target"] = document_to_json(target);
  j["components"] = matrix_list_json(components);
  return j.dump(2) + "\n";
}

Morphism MorphismDocument::to_morphism() const {
  MatrixFactorization src = source.to_mf();
  MatrixFactorization tgt = target.to_mf();
  std::vector<PolyMatrix> comp;
  for (std::size_t k = 0; k < components.size(); ++k) {
    comp.push_back(
        matrix_from_strings(src.ring(), components[k], "component " + std::to_string(k + 1)));
  }
  return Morphism(std::move(src), std::move(tgt), std::move(comp));
}

HomotopyDocument HomotopyDocument::parse(const std::string& text) {
  Json j = parse_json(text);
  HomotopyDocument doc;
  if (!j.contains("morphism")) fail("homotopy document needs a 'morphism'");
  doc.morphism.source = document_from_json(j["morphism"]["source"]);
  doc.morphism.target = document_from_json(j["morphism"]["target"]);
  doc.morphism.components = read_matrix_list(j["morphism"], "components");
  doc.maps = read_matrix_list(j, "homotopy");
  return doc;
}

std::string HomotopyDocument::print() const {
  Json j;
  j["morphism"] = parse_json(morphism.print());
  j["homotopy"] = matrix_list_json(maps);
  return j.dump(2) + "\n";
}

Homotopy HomotopyDocument::to_homotopy() const {
  RingPtr r = morphism.source.ring();
  Homotopy h;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    h.s.push_back(matrix_from_strings(r, maps[j], "homotopy map " + std::to_string(j + 1)));
  }
  return h;
}

std::string content_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

struct Certificate::Impl {
  Json j;
};

Certificate::Certificate(std::string command, std::uint64_t seed, unsigned trials,
                         std::string mode)
    : impl_(std::make_unique<Impl>()) {
  impl_->j["command"] = std::move(command);
  impl_->j["seed"] = seed;
  impl_->j["trials"] = trials;
  impl_->j["mode"] = std::move(mode);
  impl_->j["inputs"] = Json::array();
  impl_->j["verdicts"] = Json::object();
  impl_->j["evidence"] = Json::object();
}

Certificate::Certificate(const Certificate& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}

Certificate& Certificate::operator=(const Certificate& other) {
  impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}

Certificate::~Certificate() = default;

void Certificate::input(const std::string& name, const std::string& canonical_text) {
  impl_->j["inputs"].push_back(Json{{"name", name}, {"digest", content_digest(canonical_text)}});
}

void Certificate::roots(std::int64_t p, std::int64_t omega, std::int64_t mu) {
  impl_->j["roots"] = Json{{"p", p}, {"omega", omega}, {"mu", mu}};
}

void Certificate::verdict(const std::string& key, bool value) {
  impl_->j["verdicts"][key] = value;
}

void Certificate::verdicts(const std::string& key, const std::vector<bool>& values) {
  Json arr = Json::array();
  for (bool v : values) arr.push_back(v);
  impl_->j["verdicts"][key] = std::move(arr);
}

void Certificate::evidence_int(const std::string& key, long long value) {
  impl_->j["evidence"][key] = value;
}

void Certificate::evidence_ints(const std::string& key, const std::vector<long long>& values) {
  impl_->j["evidence"][key] = values;
}

void Certificate::evidence_str(const std::string& key, const std::string& value) {
  impl_->j["evidence"][key] = value;
}

void Certificate::evidence_json(const std::string& key, const std::string& raw_json) {
  impl_->j["evidence"][key] = Json::parse(raw_json);
}

void Certificate::result_document(const std::string& raw_json) {
  impl_->j["result"] = Json::parse(raw_json);
}

bool Certificate::all_verdicts_hold() const {
  for (const auto& [key, value] : impl_->j["verdicts"].items()) {
    if (value.is_boolean() && !value.get<bool>()) return false;
    if (value.is_array()) {
      for (const auto& v : value) {
        if (v.is_boolean() && !v.get<bool>()) return false;
      }
    }
  }
  return true;
}

std::string Certificate::str() const { return impl_->j.dump(2) + "\n"; }

}  // namespace mfd
