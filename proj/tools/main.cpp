// homtwist command-line tool: validate structure files, deform bundles along
// endomorphism pairs, derive induced comodules, and emit catalog examples.
//
// Exit codes: 0 success / all checks hold; 1 axiom or precheck failure;
// 2 parse, schema, or usage error; 3 matrix-vs-oracle divergence (a bug
// signal, as is a characterize disagreement).

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homtwist/catalog.hpp"
#include "homtwist/checks.hpp"
#include "homtwist/constructions.hpp"
#include "homtwist/document.hpp"
#include "homtwist/errors.hpp"
#include "homtwist/examples.hpp"
#include "homtwist/oracle.hpp"

namespace {

using namespace homtwist;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDivergence = 3;

const std::set<std::string>& known_axioms() {
  static const std::set<std::string> axioms = {
      "comultiplicativity", "hom_coassociativity", "multiplicativity", "hom_associativity",
      "bialgebra_compat",   "comodule_morphism",   "comodule_axiom",   "bundle_axiom"};
  return axioms;
}

std::vector<std::string> bundle_axiom_labels() {
  return {"host.multiplicativity",      "host.hom_associativity",
          "host.comultiplicativity",    "host.hom_coassociativity",
          "host.bialgebra_compat",      "coalg.comultiplicativity",
          "coalg.hom_coassociativity",  "coaction.comodule_morphism",
          "coaction.comodule_axiom",    "bundle_axiom"};
}

std::string base_axiom_name(const std::string& qualified) {
  const auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

std::set<std::string> parse_axiom_selection(const std::string& arg) {
  if (arg == "all") return known_axioms();
  std::set<std::string> selection;
  std::stringstream stream(arg);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    if (!known_axioms().count(item))
      throw UnknownAxiom("'" + item + "' is not a known axiom name");
    selection.insert(item);
  }
  if (selection.empty()) throw UnknownAxiom("empty axiom selection");
  return selection;
}

struct CheckedAxiom {
  std::string qualified;
  CheckReport matrix;
  std::optional<CheckReport> oracle;
};

/// Resolves the host a comodule record refers to, as a coalgebra.
HomCoalgebra resolve_comodule_host(const io::Document& doc, const std::string& comodule_name,
                                   const io::ComoduleRecord& record) {
  if (!record.host)
    throw SchemaError("comodule '" + comodule_name +
                      "' carries no host reference and cannot be checked");
  auto it = doc.structures.find(*record.host);
  if (it == doc.structures.end())
    throw SchemaError("comodule '" + comodule_name + "' names missing host '" + *record.host +
                      "'");
  if (const auto* h = std::get_if<HomBialgebra>(&it->second)) return h->coalgebra_part();
  if (const auto* c = std::get_if<HomCoalgebra>(&it->second)) return *c;
  throw SchemaError("host '" + *record.host + "' of comodule '" + comodule_name +
                    "' must be a bialgebra or coalgebra");
}

std::vector<CheckedAxiom> check_structure(const io::Document& doc, const std::string& name,
                                          const io::Structure& structure, bool oracle_mode,
                                          bool explicitly_selected) {
  std::vector<CheckReport> matrix;
  std::vector<CheckReport> oracle;
  std::vector<std::string> labels;

  if (const auto* c = std::get_if<HomCoalgebra>(&structure)) {
    matrix = validate_coalgebra(*c);
    if (oracle_mode) oracle = oracle_validate_coalgebra(*c);
  } else if (const auto* a = std::get_if<HomAlgebra>(&structure)) {
    matrix = validate_algebra(*a);
    if (oracle_mode) oracle = oracle_validate_algebra(*a);
  } else if (const auto* h = std::get_if<HomBialgebra>(&structure)) {
    matrix = validate_bialgebra(*h);
    if (oracle_mode) oracle = oracle_validate_bialgebra(*h);
  } else if (const auto* record = std::get_if<io::ComoduleRecord>(&structure)) {
    if (!record->host && !explicitly_selected) return {};
    const HomCoalgebra host = resolve_comodule_host(doc, name, *record);
    if (host.dim != record->comodule.host_dim)
      throw SchemaError("comodule '" + name + "' expects host dimension " +
                        std::to_string(record->comodule.host_dim) + " but '" + *record->host +
                        "' has dimension " + std::to_string(host.dim));
    matrix = validate_comodule(record->comodule, host);
    if (oracle_mode) oracle = oracle_validate_comodule(record->comodule, host);
  } else if (const auto* b = std::get_if<Bundle>(&structure)) {
    matrix = validate_bundle(*b);
    if (oracle_mode) oracle = oracle_validate_bundle(*b);
    labels = bundle_axiom_labels();
  } else {
    if (explicitly_selected)
      throw SchemaError("structure '" + name + "' has no checkable axioms");
    return {};
  }

  if (labels.empty())
    for (const CheckReport& r : matrix) labels.push_back(r.axiom_name);

  std::vector<CheckedAxiom> out;
  for (size_t i = 0; i < matrix.size(); ++i) {
    CheckedAxiom item{labels[i], std::move(matrix[i]), std::nullopt};
    if (oracle_mode) item.oracle = std::move(oracle[i]);
    out.push_back(std::move(item));
  }
  return out;
}

int run_check(const std::string& file, const std::vector<std::string>& structure_names,
              const std::string& axioms_arg, bool oracle_mode) {
  const io::Document doc = io::read_document_file(file);
  const std::set<std::string> axiom_selection = parse_axiom_selection(axioms_arg);

  std::vector<std::pair<std::string, bool>> targets;  // name, explicitly selected
  if (structure_names.empty()) {
    for (const auto& [name, value] : doc.structures) targets.emplace_back(name, false);
  } else {
    for (const std::string& name : structure_names) {
      if (!doc.structures.count(name))
        throw SchemaError("no structure named '" + name + "' in '" + file + "'");
      targets.emplace_back(name, true);
    }
  }

  std::vector<io::ReportEntry> entries;
  bool any_failed = false;
  bool any_divergence = false;
  for (const auto& [name, explicit_selection] : targets) {
    for (CheckedAxiom& item :
         check_structure(doc, name, doc.structures.at(name), oracle_mode, explicit_selection)) {
      if (!axiom_selection.count(base_axiom_name(item.qualified))) continue;
      io::ReportEntry entry;
      entry.structure = name;
      entry.axiom_name = item.qualified;
      entry.holds = item.matrix.holds;
      entry.residual_nonzero = io::nonzero_entries(item.matrix.residual);
      if (item.oracle) {
        const bool agrees = *item.oracle == item.matrix;
        entry.oracle_agrees = agrees;
        if (!agrees) any_divergence = true;
      }
      any_failed = any_failed || !entry.holds;
      entries.push_back(std::move(entry));
    }
  }

  std::cout << io::serialize_report(io::make_report_document(std::move(entries)));
  if (any_divergence) return kExitDivergence;
  return any_failed ? kExitFailure : kExitOk;
}

const Bundle& find_bundle(const io::Document& doc, const std::string& name,
                          const std::string& file) {
  auto it = doc.structures.find(name);
  if (it == doc.structures.end())
    throw SchemaError("no structure named '" + name + "' in '" + file + "'");
  const Bundle* b = std::get_if<Bundle>(&it->second);
  if (!b) throw SchemaError("structure '" + name + "' is not a bundle");
  return *b;
}

const LinearMap& find_endomorphism(const io::Document& doc, const std::string& name,
                                   const std::string& file) {
  auto it = doc.structures.find(name);
  if (it == doc.structures.end())
    throw SchemaError("no structure named '" + name + "' in '" + file + "'");
  const LinearMap* m = std::get_if<LinearMap>(&it->second);
  if (!m) throw SchemaError("structure '" + name + "' is not an endomorphism");
  return *m;
}

int run_deform(const std::string& file, const std::string& bundle_name,
               const std::string& alpha_h_name, const std::string& alpha_c_name,
               const std::string& out_path) {
  const io::Document doc = io::read_document_file(file);
  DeformationInput input{find_bundle(doc, bundle_name, file),
                         find_endomorphism(doc, alpha_h_name, file),
                         find_endomorphism(doc, alpha_c_name, file)};
  Bundle deformed = deform_bundle(input);
  io::Document out;
  out.structures.emplace(bundle_name, std::move(deformed));
  io::write_document_atomic(out_path, out);
  return kExitOk;
}

int run_induce(const std::string& file, const std::string& op, const std::string& bundle_name,
               const std::string& out_path) {
  const io::Document doc = io::read_document_file(file);
  const Bundle& b = find_bundle(doc, bundle_name, file);

  if (op == "characterize") {
    const Characterization result = characterize(b);
    nlohmann::json report;
    report["axiom_holds"] = result.axiom_holds;
    report["morphism_holds"] = result.morphism_holds;
    std::cout << report.dump(2) << "\n";
    return result.axiom_holds == result.morphism_holds ? kExitOk : kExitDivergence;
  }

  if (op != "tilde" && op != "tensor") throw SchemaError("unknown induce op '" + op + "'");
  if (out_path.empty()) throw SchemaError("--out is required for induce --op " + op);

  io::Document out;
  const std::string host_name = bundle_name + "_host";
  out.structures.emplace(host_name, b.host);
  if (op == "tilde") {
    Comodule tilde = tilde_comodule(b.coaction, b.host.coalgebra_part());
    out.structures.emplace(bundle_name + "_tilde",
                           io::ComoduleRecord{std::move(tilde), host_name});
  } else {
    Comodule square = tensor_comodule(b.coaction, b.coaction, b.host);
    out.structures.emplace(bundle_name + "_tensor_square",
                           io::ComoduleRecord{std::move(square), host_name});
  }
  io::write_document_atomic(out_path, out);
  return kExitOk;
}

int run_example(const std::string& name, const std::string& out_path, bool list) {
  if (list) {
    for (const std::string& n : io::example_names()) std::cout << n << "\n";
    return kExitOk;
  }
  if (name.empty()) throw SchemaError("an example name is required (or pass --list)");
  const io::Document doc = io::example_document(name);
  if (out_path.empty())
    std::cout << io::serialize_document(doc);
  else
    io::write_document_atomic(out_path, doc);
  return kExitOk;
}

int classify_error(const Error& e) {
  const std::string& kind = e.kind();
  if (kind == "ParseError" || kind == "SchemaError" || kind == "BadRational" ||
      kind == "UnknownAxiom" || kind == "DimensionMismatch")
    return kExitBadInput;
  return kExitFailure;  // axiom/precheck failures: NotAnEndomorphism, CompatibilityFailure, ...
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker and deformer for Hom-coalgebra structure files"};
  app.require_subcommand(1);

  std::string check_file, check_axioms = "all";
  std::vector<std::string> check_structures;
  bool check_oracle = false;
  CLI::App* check = app.add_subcommand("check", "run axiom checks on structures in a file");
  check->add_option("file", check_file, "structure document (JSON)")->required();
  check->add_option("--structure", check_structures, "structure name(s) to check (default: all)");
  check->add_option("--axioms", check_axioms, "comma-separated axiom names or 'all'");
  check->add_flag("--oracle", check_oracle,
                  "also run the summation oracle and verify it agrees with the matrix path");

  std::string deform_file, deform_bundle_name, deform_alpha_h, deform_alpha_c, deform_out;
  CLI::App* deform = app.add_subcommand("deform", "twist a classical bundle along endomorphisms");
  deform->add_option("file", deform_file, "structure document (JSON)")->required();
  deform->add_option("--bundle", deform_bundle_name, "classical bundle to deform")->required();
  deform->add_option("--alpha-h", deform_alpha_h, "host endomorphism name")->required();
  deform->add_option("--alpha-c", deform_alpha_c, "coalgebra endomorphism name")->required();
  deform->add_option("--out", deform_out, "output document path")->required();

  std::string induce_file, induce_op, induce_bundle, induce_out;
  CLI::App* induce = app.add_subcommand("induce", "derive induced comodule structures");
  induce->add_option("file", induce_file, "structure document (JSON)")->required();
  induce->add_option("--op", induce_op, "tilde | tensor | characterize")->required();
  induce->add_option("--bundle", induce_bundle, "bundle to operate on")->required();
  induce->add_option("--out", induce_out, "output document path (tilde/tensor)");

  std::string example_name, example_out;
  bool example_list = false;
  CLI::App* example = app.add_subcommand("example", "emit a catalog example document");
  example->add_option("name", example_name, "example name (see --list)");
  example->add_option("--out", example_out, "output document path (default: stdout)");
  example->add_flag("--list", example_list, "list available example names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (check->parsed()) return run_check(check_file, check_structures, check_axioms, check_oracle);
    if (deform->parsed())
      return run_deform(deform_file, deform_bundle_name, deform_alpha_h, deform_alpha_c,
                        deform_out);
    if (induce->parsed()) return run_induce(induce_file, induce_op, induce_bundle, induce_out);
    if (example->parsed()) return run_example(example_name, example_out, example_list);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return classify_error(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
