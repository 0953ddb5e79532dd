#include "masseyx/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "masseyx/matrix_io.hpp"

#ifndef MASSEYX_DATA_DIR_DEFAULT
#define MASSEYX_DATA_DIR_DEFAULT "data"
#endif

namespace masseyx {

namespace {

struct Entry {
  std::string_view name;
  AssertedProps props;
  std::optional<std::size_t> distance;
  std::string_view provenance;
};

constexpr std::array<Entry, 4> kEntries{{
    {"c1_ternary", {false, false, false}, std::nullopt,
     "[8,3] ternary code; its dual with l = 2 has access groups 4 x size 5 and 1 x size 6"},
    {"hamming8", {true, true, true}, 4,
     "[8,4,4] extended binary Hamming code: [7,4] Hamming code plus an overall parity bit"},
    {"golay24", {true, true, true}, 8,
     "[24,12,8] extended binary Golay code in [I | B] form, B bordered around the circulant of the "
     "quadratic residues mod 11"},
    {"toy6", {false, false, false}, std::nullopt, "[6,2] binary code with rows 101010 and 010101"},
}};

const Entry& find(std::string_view name) {
  for (const auto& s : kEntries)
    if (s.name == name) return s;
  throw std::invalid_argument("unknown catalog code '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& s : kEntries) out.emplace_back(s.name);
  return out;
}

bool is_catalog_name(std::string_view name) {
  return std::any_of(kEntries.begin(), kEntries.end(), [&](const Entry& s) { return s.name == name; });
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("MASSEYX_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return MASSEYX_DATA_DIR_DEFAULT;
}

CatalogEntry load(std::string_view name) { return load(name, data_directory()); }

CatalogEntry load(std::string_view name, const std::filesystem::path& dir) {
  const Entry& spec = find(name);
  LinearCode code = load_code_file(dir / (std::string(spec.name) + ".code"));
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("catalog code '" + std::string(spec.name) + "' " + what);
  };
  if (spec.props.self_orthogonal && !is_self_orthogonal(code)) fail("is not self-orthogonal");
  if (spec.props.self_dual && !is_self_dual(code)) fail("is not self-dual");
  if (spec.distance && min_distance(code) != *spec.distance)
    fail("has minimum distance " + std::to_string(min_distance(code)) + ", expected " +
         std::to_string(*spec.distance));
  return {std::string(spec.name), std::move(code), spec.props, std::string(spec.provenance)};
}

}  // namespace masseyx
