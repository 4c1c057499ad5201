#pragma once

#include <string>
#include <string_view>

#include "relxl/defining_graph.hpp"

namespace relxl {

/// Reads {"vertices": [...], "edges": [{"u","v","m"}], "family": [[...]]}.
/// Unknown keys, bad labels and bad families throw InputError.
Instance parse_instance(std::string_view json_text);

std::string serialize_instance(const Instance& instance);

Instance load_instance(const std::string& path);

}  // namespace relxl
