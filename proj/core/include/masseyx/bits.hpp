#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace masseyx {

inline constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + 63) / 64; }

inline void set_bit(std::span<std::uint64_t> w, std::size_t i) noexcept { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool test_bit(std::span<const std::uint64_t> w, std::size_t i) noexcept {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline std::size_t popcount(std::span<const std::uint64_t> w) noexcept {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

// Flat table of equal-width bit sets; row i marks the support of one vector.
class SupportTable {
 public:
  explicit SupportTable(std::size_t length) : length_(length), words_(words_for(length)) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_ == 0 ? 0 : data_.size() / words_; }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const std::uint64_t> operator[](std::size_t i) const noexcept { return {data_.data() + i * words_, words_}; }
  std::span<std::uint64_t> operator[](std::size_t i) noexcept { return {data_.data() + i * words_, words_}; }

  void reserve(std::size_t rows) { data_.reserve(rows * words_); }
  void push_back(std::span<const std::uint64_t> row) { data_.insert(data_.end(), row.begin(), row.end()); }

 private:
  std::size_t length_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace masseyx
