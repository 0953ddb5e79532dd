#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "masseyx/scheme.hpp"

namespace masseyx {

enum class AccessKind { None, Partial, Full };

std::string_view to_string(AccessKind k) noexcept;

struct GroupClassification {
  AccessKind kind = AccessKind::None;
  std::size_t leaked_dim = 0;  // dim(span(secret columns) & span(group columns))
};

struct BoundsRecord {
  std::size_t dual_distance = 0;               // d of the dual code
  std::optional<std::size_t> dual_ghw;         // d_l of the dual code
  std::optional<std::int64_t> ghw_bound;       // d_l - l - 1
  std::optional<std::int64_t> simple_bound;    // ceil(3 (d_dual - l) / 2) - 1, only for l >= 2
  std::int64_t noinfo_bound = 0;               // d_dual - l - 1
  std::int64_t recover_threshold = 0;          // n + l - d + 1

  // Largest group size guaranteed to be outside the access structure.
  std::int64_t max_excluded_size() const;
};

struct AccessReport {
  // Sorted by size, then lexicographically; 1-based participants.
  std::vector<std::vector<std::size_t>> minimal_groups;
  // Distinct access groups that are exactly the union of the supports of some
  // tuple of recovery vectors, counted by size.
  std::map<std::size_t, std::uint64_t> histogram;
  // Tuples of recovery vectors, counted by the size of their union.
  std::map<std::size_t, std::uint64_t> tuple_histogram;
  BoundsRecord bounds;
};

enum class AccessBackend { Automatic, DualTuples, SubsetLattice };

struct AccessOptions {
  std::uint64_t cap = kDefaultCap;
  unsigned threads = 1;
  AccessBackend backend = AccessBackend::Automatic;
  bool with_ghw = true;  // GHW bound is left unavailable if it exceeds the cap
};

// The affine sets A_j = { v in dual : prefix(v) = e_j }, j = 1..l, written as
// offsets[j] + span(directions). Empty when some e_j is not a dual prefix.
struct RecoverySpace {
  std::vector<std::vector<Elem>> offsets;
  Matrix directions;

  bool empty() const noexcept { return offsets.empty(); }
};

RecoverySpace recovery_space(const FieldSpec& f, const Matrix& dual_generator, std::size_t l);

// Rank test on generator columns.
GroupClassification classify_span(const SchemeInstance& s, std::span<const std::size_t> group);
// True iff every e_j is the prefix of a dual codeword supported on the
// prefix and the group's columns.
bool classify_dual(const SchemeInstance& s, std::span<const std::size_t> group);

// Size of the product of the affine sets {v in dual : prefix(v) = e_j}.
std::uint64_t tuple_space_size(const SchemeInstance& s);

AccessReport enumerate_access_structure(const SchemeInstance& s, const AccessOptions& opts = {});

BoundsRecord bounds(const SchemeInstance& s, std::uint64_t cap = kDefaultCap, bool with_ghw = true);

// Binary self-dual scheme codes with l = 2 only; throws otherwise.
// Checks minimal groups of size <= max_size (all when unset).
bool check_even_minimal_groups(const SchemeInstance& s, std::optional<std::size_t> max_size = std::nullopt,
                               std::uint64_t cap = kDefaultCap);

}  // namespace masseyx
