#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "homtwist/structures.hpp"

namespace homtwist {
namespace io {

inline constexpr const char* kFormatVersion = "homtwist/1";
inline constexpr const char* kScalarTag = "rational-string";

/// A comodule as stored in a document: the structure plus an optional name of
/// a sibling structure to check it against.
struct ComoduleRecord {
  Comodule comodule;
  std::optional<std::string> host;

  friend bool operator==(const ComoduleRecord&, const ComoduleRecord&);
};

using Structure = std::variant<HomCoalgebra, HomAlgebra, HomBialgebra, ComoduleRecord, Bundle,
                               LinearMap /* endomorphism */>;

bool structures_equal(const Structure& a, const Structure& b);

/// A named collection of structures, the unit of (de)serialization. Iteration
/// order is name order, which is also the canonical serialization order.
struct Document {
  std::map<std::string, Structure> structures;
};

/// Parses and validates UTF-8 JSON. Errors carry the JSON path of the
/// offending field. Throws ParseError, SchemaError, BadRational.
Document parse_document(const std::string& text);

/// Canonical bytes: sorted keys, lowest-terms scalars, two-space indent,
/// trailing newline. Equal documents serialize identically.
std::string serialize_document(const Document& doc);

Document read_document_file(const std::filesystem::path& path);

/// Write-temp-then-rename; the destination never holds a partial document.
void write_document_atomic(const std::filesystem::path& path, const Document& doc);

/// One line of a check report as emitted by the CLI.
struct ReportEntry {
  std::string structure;
  std::string axiom_name;  // part-qualified for bundles, e.g. "host.multiplicativity"
  bool holds;
  std::vector<std::tuple<int, int, Rational>> residual_nonzero;
  std::optional<bool> oracle_agrees;  // set only when the oracle path was run
};

struct ReportDocument {
  std::vector<ReportEntry> entries;  // sorted by (structure, axiom_name)
  bool overall;                      // conjunction of entry verdicts
};

ReportDocument make_report_document(std::vector<ReportEntry> entries);

std::string serialize_report(const ReportDocument& report);

/// Residual triples of a report, sparse form.
std::vector<std::tuple<int, int, Rational>> nonzero_entries(const LinearMap& residual);

}  // namespace io
}  // namespace homtwist
