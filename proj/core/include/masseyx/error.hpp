#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace masseyx {

// Thrown when an enumeration would visit more items than the caller allowed.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what_is_counted, std::uint64_t required, std::uint64_t cap)
      : std::length_error(what_is_counted + " requires " +
                          (required == UINT64_MAX ? std::string("more than 2^64")
                                                  : std::to_string(required)) +
                          " items, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

// Shares handed to the reconstructor are not the restriction of any codeword.
class InconsistentShares : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file in one of the text formats could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 26;

// Saturating base^exp; returns UINT64_MAX on overflow.
constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace masseyx
