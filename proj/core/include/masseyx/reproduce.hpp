#pragma once

// Pinned reference checks. The CLI `reproduce` command and the test suite
// both call run_reproduction.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace masseyx {

namespace reference {
// Reference values, written as polynomials in the pattern variables.
extern const std::string_view kHammingBiweight;
extern const std::string_view kHammingZ;
extern const std::string_view kGolayZ;
}  // namespace reference

struct ReproductionResult {
  std::string target;
  bool pass = false;
  nlohmann::json details;  // computed values next to the expected ones
};

std::vector<std::string> reproduction_targets();

// Throws std::invalid_argument for an unknown target.
ReproductionResult run_reproduction(std::string_view target, unsigned threads = 1);

}  // namespace masseyx
