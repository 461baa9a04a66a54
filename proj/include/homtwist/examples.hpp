#pragma once

#include <string>
#include <vector>

#include "homtwist/document.hpp"

namespace homtwist {
namespace io {

/// Names accepted by the CLI's `example` command.
std::vector<std::string> example_names();

/// Builds the named catalog document. Throws SchemaError for unknown names.
Document example_document(const std::string& name);

}  // namespace io
}  // namespace homtwist
