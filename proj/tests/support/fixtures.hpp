#pragma once

#include <string>

#include "relxl/io.hpp"

#ifndef RELXL_FIXTURE_DIR
#error "RELXL_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace relxl::testing {

inline std::string fixture_path(const std::string& name) { return std::string(RELXL_FIXTURE_DIR) + "/" + name; }

inline Instance fixture(const std::string& name) { return load_instance(fixture_path(name)); }

}  // namespace relxl::testing
