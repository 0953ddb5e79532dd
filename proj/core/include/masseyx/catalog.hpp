#pragma once

// Named codes shipped as matrix files under a data directory.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "masseyx/code.hpp"

namespace masseyx {

struct AssertedProps {
  bool self_dual = false;
  bool self_orthogonal = false;
  // Not checked; recorded as an assertion only.
  bool two_transitive = false;
};

struct CatalogEntry {
  std::string name;
  LinearCode code;
  AssertedProps asserted;
  std::string provenance;
};

std::vector<std::string> catalog_names();
bool is_catalog_name(std::string_view name);

// $MASSEYX_DATA_DIR if set, otherwise the directory configured at build time.
std::filesystem::path data_directory();

// Throws std::invalid_argument for an unknown name and std::runtime_error
// when the file disagrees with the asserted properties.
CatalogEntry load(std::string_view name);
CatalogEntry load(std::string_view name, const std::filesystem::path& dir);

}  // namespace masseyx
