#include "homtwist/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "homtwist/errors.hpp"

namespace homtwist {
namespace io {

using nlohmann::json;

bool operator==(const ComoduleRecord& a, const ComoduleRecord& b) {
  return a.comodule == b.comodule && a.host == b.host;
}

bool structures_equal(const Structure& a, const Structure& b) { return a == b; }

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& require_object(const json& node, const std::string& path) {
  if (!node.is_object()) schema_error(path, "expected an object");
  return node;
}

const json& get_field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) schema_error(path, "unknown field '" + it.key() + "'");
  }
}

int get_positive_int(const json& obj, const char* key, const std::string& path) {
  const json& node = get_field(obj, key, path);
  if (!node.is_number_integer() || node.get<long long>() <= 0 ||
      node.get<long long>() > 1'000'000)
    schema_error(path + "." + key, "expected a small positive integer");
  return node.get<int>();
}

Rational get_rational(const json& node, const std::string& path) {
  if (!node.is_string()) schema_error(path, "expected a rational encoded as a string");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const BadRational& e) {
    throw BadRational(path + ": " + e.what());
  }
}

LinearMap get_matrix(const json& obj, const char* key, int cod, int dom,
                     const std::string& path) {
  const std::string mpath = path + "." + key;
  const json& node = get_field(obj, key, path);
  if (!node.is_array()) schema_error(mpath, "expected an array of rows");
  if (static_cast<int>(node.size()) != cod)
    schema_error(mpath, "expected " + std::to_string(cod) + " rows, got " +
                            std::to_string(node.size()));
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(cod) * dom);
  for (int r = 0; r < cod; ++r) {
    const json& row = node[static_cast<size_t>(r)];
    const std::string rpath = mpath + "[" + std::to_string(r) + "]";
    if (!row.is_array()) schema_error(rpath, "expected an array");
    if (static_cast<int>(row.size()) != dom)
      schema_error(rpath, "expected " + std::to_string(dom) + " entries, got " +
                              std::to_string(row.size()));
    for (int c = 0; c < dom; ++c)
      entries.push_back(get_rational(row[static_cast<size_t>(c)],
                                     rpath + "[" + std::to_string(c) + "]"));
  }
  return LinearMap(cod, dom, std::move(entries));
}

std::vector<Rational> get_vector(const json& node, int len, const std::string& path) {
  if (!node.is_array()) schema_error(path, "expected an array");
  if (static_cast<int>(node.size()) != len)
    schema_error(path, "expected " + std::to_string(len) + " entries, got " +
                           std::to_string(node.size()));
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    out.push_back(get_rational(node[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string get_kind(const json& obj, const std::string& path) {
  const json& node = get_field(obj, "kind", path);
  if (!node.is_string()) schema_error(path + ".kind", "expected a string");
  return node.get<std::string>();
}

HomCoalgebra parse_coalgebra(const json& obj, const std::string& path) {
  reject_unknown_fields(obj, {"kind", "dim", "delta", "alpha"}, path);
  const int dim = get_positive_int(obj, "dim", path);
  return HomCoalgebra(dim, get_matrix(obj, "delta", dim * dim, dim, path),
                      get_matrix(obj, "alpha", dim, dim, path));
}

HomAlgebra parse_algebra(const json& obj, const std::string& path) {
  reject_unknown_fields(obj, {"kind", "dim", "mu", "alpha"}, path);
  const int dim = get_positive_int(obj, "dim", path);
  return HomAlgebra(dim, get_matrix(obj, "mu", dim, dim * dim, path),
                    get_matrix(obj, "alpha", dim, dim, path));
}

HomBialgebra parse_bialgebra(const json& obj, const std::string& path) {
  reject_unknown_fields(obj, {"kind", "dim", "mu", "delta", "alpha", "unit"}, path);
  const int dim = get_positive_int(obj, "dim", path);
  std::optional<std::vector<Rational>> unit;
  if (obj.contains("unit")) unit = get_vector(obj["unit"], dim, path + ".unit");
  return HomBialgebra(dim, get_matrix(obj, "mu", dim, dim * dim, path),
                      get_matrix(obj, "delta", dim * dim, dim, path),
                      get_matrix(obj, "alpha", dim, dim, path), std::move(unit));
}

ComoduleRecord parse_comodule(const json& obj, const std::string& path, bool allow_host_ref) {
  if (allow_host_ref)
    reject_unknown_fields(obj, {"kind", "host_dim", "m_dim", "delta", "alpha_m", "host"}, path);
  else
    reject_unknown_fields(obj, {"kind", "host_dim", "m_dim", "delta", "alpha_m"}, path);
  const int host_dim = get_positive_int(obj, "host_dim", path);
  const int m_dim = get_positive_int(obj, "m_dim", path);
  std::optional<std::string> host;
  if (allow_host_ref && obj.contains("host")) {
    if (!obj["host"].is_string()) schema_error(path + ".host", "expected a structure name");
    host = obj["host"].get<std::string>();
  }
  Comodule m(host_dim, m_dim, get_matrix(obj, "alpha_m", m_dim, m_dim, path),
             get_matrix(obj, "delta", host_dim * m_dim, m_dim, path));
  return ComoduleRecord{std::move(m), std::move(host)};
}

Bundle parse_bundle(const json& obj, const std::string& path) {
  reject_unknown_fields(obj, {"kind", "host", "coalg", "coaction"}, path);
  const json& host_node = require_object(get_field(obj, "host", path), path + ".host");
  const json& coalg_node = require_object(get_field(obj, "coalg", path), path + ".coalg");
  const json& coaction_node =
      require_object(get_field(obj, "coaction", path), path + ".coaction");
  if (get_kind(host_node, path + ".host") != "bialgebra")
    schema_error(path + ".host.kind", "expected 'bialgebra'");
  if (get_kind(coalg_node, path + ".coalg") != "coalgebra")
    schema_error(path + ".coalg.kind", "expected 'coalgebra'");
  if (get_kind(coaction_node, path + ".coaction") != "comodule")
    schema_error(path + ".coaction.kind", "expected 'comodule'");
  HomBialgebra host = parse_bialgebra(host_node, path + ".host");
  HomCoalgebra coalg = parse_coalgebra(coalg_node, path + ".coalg");
  ComoduleRecord coaction = parse_comodule(coaction_node, path + ".coaction", false);
  try {
    return Bundle(std::move(host), std::move(coalg), std::move(coaction.comodule));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

LinearMap parse_endomorphism(const json& obj, const std::string& path) {
  reject_unknown_fields(obj, {"kind", "dim", "matrix"}, path);
  const int dim = get_positive_int(obj, "dim", path);
  return get_matrix(obj, "matrix", dim, dim, path);
}

Structure parse_structure(const json& obj, const std::string& path) {
  require_object(obj, path);
  const std::string kind = get_kind(obj, path);
  if (kind == "coalgebra") return parse_coalgebra(obj, path);
  if (kind == "algebra") return parse_algebra(obj, path);
  if (kind == "bialgebra") return parse_bialgebra(obj, path);
  if (kind == "comodule") return parse_comodule(obj, path, true);
  if (kind == "bundle") return parse_bundle(obj, path);
  if (kind == "endomorphism") return parse_endomorphism(obj, path);
  schema_error(path + ".kind", "unknown kind '" + kind + "'");
}

json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (int r = 0; r < m.codomain_dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.domain_dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json coalgebra_to_json(const HomCoalgebra& c) {
  json obj;
  obj["kind"] = "coalgebra";
  obj["dim"] = c.dim;
  obj["delta"] = matrix_to_json(c.delta);
  obj["alpha"] = matrix_to_json(c.alpha);
  return obj;
}

json algebra_to_json(const HomAlgebra& a) {
  json obj;
  obj["kind"] = "algebra";
  obj["dim"] = a.dim;
  obj["mu"] = matrix_to_json(a.mu);
  obj["alpha"] = matrix_to_json(a.alpha);
  return obj;
}

json bialgebra_to_json(const HomBialgebra& h) {
  json obj;
  obj["kind"] = "bialgebra";
  obj["dim"] = h.dim;
  obj["mu"] = matrix_to_json(h.mu);
  obj["delta"] = matrix_to_json(h.delta);
  obj["alpha"] = matrix_to_json(h.alpha);
  if (h.unit_vector) {
    json unit = json::array();
    for (const Rational& x : *h.unit_vector) unit.push_back(x.str());
    obj["unit"] = std::move(unit);
  }
  return obj;
}

json comodule_to_json(const ComoduleRecord& record) {
  json obj;
  obj["kind"] = "comodule";
  obj["host_dim"] = record.comodule.host_dim;
  obj["m_dim"] = record.comodule.m_dim;
  obj["delta"] = matrix_to_json(record.comodule.delta);
  obj["alpha_m"] = matrix_to_json(record.comodule.alpha_m);
  if (record.host) obj["host"] = *record.host;
  return obj;
}

json bundle_to_json(const Bundle& b) {
  json obj;
  obj["kind"] = "bundle";
  obj["host"] = bialgebra_to_json(b.host);
  obj["coalg"] = coalgebra_to_json(b.coalg);
  obj["coaction"] = comodule_to_json(ComoduleRecord{b.coaction, std::nullopt});
  return obj;
}

json endomorphism_to_json(const LinearMap& m) {
  json obj;
  obj["kind"] = "endomorphism";
  obj["dim"] = m.domain_dim();
  obj["matrix"] = matrix_to_json(m);
  return obj;
}

json structure_to_json(const Structure& s) {
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, HomCoalgebra>) return coalgebra_to_json(value);
        else if constexpr (std::is_same_v<T, HomAlgebra>) return algebra_to_json(value);
        else if constexpr (std::is_same_v<T, HomBialgebra>) return bialgebra_to_json(value);
        else if constexpr (std::is_same_v<T, ComoduleRecord>) return comodule_to_json(value);
        else if constexpr (std::is_same_v<T, Bundle>) return bundle_to_json(value);
        else return endomorphism_to_json(value);
      },
      s);
}

}  // namespace

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  require_object(root, "$");
  reject_unknown_fields(root, {"format_version", "scalars", "structures"}, "$");
  const json& version = get_field(root, "format_version", "$");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion)
    schema_error("$.format_version", std::string("expected \"") + kFormatVersion + "\"");
  const json& scalars = get_field(root, "scalars", "$");
  if (!scalars.is_string() || scalars.get<std::string>() != kScalarTag)
    schema_error("$.scalars", std::string("expected \"") + kScalarTag + "\"");
  const json& structures = get_field(root, "structures", "$");
  require_object(structures, "$.structures");

  Document doc;
  for (auto it = structures.begin(); it != structures.end(); ++it) {
    if (it.key().empty()) schema_error("$.structures", "structure names must be nonempty");
    doc.structures.emplace(it.key(),
                           parse_structure(it.value(), "$.structures." + it.key()));
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json structures = json::object();
  for (const auto& [name, s] : doc.structures) structures[name] = structure_to_json(s);
  json root;
  root["format_version"] = kFormatVersion;
  root["scalars"] = kScalarTag;
  root["structures"] = std::move(structures);
  return root.dump(2) + "\n";
}

Document read_document_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_document_atomic(const std::filesystem::path& path, const Document& doc) {
  const std::string payload = serialize_document(doc);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open '" + tmp.string() + "' for writing");
    out << payload;
    out.flush();
    if (!out) throw ParseError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

ReportDocument make_report_document(std::vector<ReportEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    return std::tie(a.structure, a.axiom_name) < std::tie(b.structure, b.axiom_name);
  });
  bool overall = true;
  for (const ReportEntry& e : entries) overall = overall && e.holds;
  return ReportDocument{std::move(entries), overall};
}

std::string serialize_report(const ReportDocument& report) {
  json entries = json::array();
  for (const ReportEntry& e : report.entries) {
    json item;
    item["structure"] = e.structure;
    item["axiom_name"] = e.axiom_name;
    item["holds"] = e.holds;
    json triples = json::array();
    for (const auto& [row, col, value] : e.residual_nonzero)
      triples.push_back(json::array({row, col, value.str()}));
    item["residual_nonzero_entries"] = std::move(triples);
    if (e.oracle_agrees) item["oracle_agrees"] = *e.oracle_agrees;
    entries.push_back(std::move(item));
  }
  json root;
  root["overall"] = report.overall;
  root["reports"] = std::move(entries);
  return root.dump(2) + "\n";
}

std::vector<std::tuple<int, int, Rational>> nonzero_entries(const LinearMap& residual) {
  std::vector<std::tuple<int, int, Rational>> out;
  for (int r = 0; r < residual.codomain_dim(); ++r)
    for (int c = 0; c < residual.domain_dim(); ++c)
      if (!residual.at(r, c).is_zero()) out.emplace_back(r, c, residual.at(r, c));
  return out;
}

}  // namespace io
}  // namespace homtwist
