#pragma once

// Secret sharing through a linear code of length l + n: the secret is the
// first l coordinates of a codeword, participant i holds coordinate l + i.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "masseyx/code.hpp"

namespace masseyx {

using Secret = std::vector<Elem>;
// Participant index (1-based) to share value.
using ShareMap = std::map<std::size_t, Elem>;

class SchemeInstance {
 public:
  // Requires 1 <= l < N, d > l and independent first l columns.
  SchemeInstance(LinearCode code, std::size_t l, std::uint64_t cap = kDefaultCap);

  const LinearCode& code() const noexcept { return code_; }
  const FieldSpec& gf() const noexcept { return code_.gf(); }
  std::size_t secret_length() const noexcept { return l_; }
  std::size_t participants() const noexcept { return code_.length() - l_; }
  std::size_t min_distance() const noexcept { return d_; }
  // Generator of the dual code; dealing constraints live there.
  const Matrix& dual_generator() const noexcept { return dual_; }

  // Column of the generator carrying participant i's share.
  std::size_t column_of(std::size_t participant) const noexcept { return l_ + participant - 1; }

 private:
  LinearCode code_;
  std::size_t l_;
  std::size_t d_;
  Matrix dual_;
};

inline SchemeInstance make_scheme(LinearCode code, std::size_t l, std::uint64_t cap = kDefaultCap) {
  return SchemeInstance(std::move(code), l, cap);
}

struct ShareVector {
  std::vector<Elem> shares;    // shares[i-1] belongs to participant i
  std::vector<Elem> codeword;  // full codeword, prefix equals the secret
};

// The message u is uniform over all solutions of u G_j = s_j (j <= l),
// drawn from a std::mt19937_64 seeded with `seed`.
ShareVector deal(const SchemeInstance& s, std::span<const Elem> secret, std::uint64_t seed);

// Dual codewords v_1..v_l with prefix e_j and support inside the prefix and
// the group's columns; nullopt when the group cannot recover the secret.
std::optional<std::vector<std::vector<Elem>>> recovery_vectors(const SchemeInstance& s,
                                                               std::span<const std::size_t> group);

// Everything needed to turn a group's shares into the secret; build once and
// apply to many share vectors.
class ReconstructionPlan {
 public:
  ReconstructionPlan(const SchemeInstance& s, std::span<const std::size_t> group);

  const std::vector<std::size_t>& group() const noexcept { return group_; }
  bool authorized() const noexcept { return recovery_.has_value(); }

  // Shares in the order of group(). Throws InconsistentShares when they do
  // not extend to a codeword; nullopt when the group is not authorized.
  std::optional<Secret> recover(std::span<const Elem> shares) const;

 private:
  Field field_;
  std::size_t l_;
  std::vector<std::size_t> group_;
  Matrix checks_;  // rows orthogonal to every codeword restricted to the group
  std::optional<std::vector<std::vector<Elem>>> recovery_;
};

// `shares` must assign exactly the members of `group`.
std::optional<Secret> reconstruct(const SchemeInstance& s, std::span<const std::size_t> group, const ShareMap& shares);

inline std::size_t cheater_capacity(const SchemeInstance& s) {
  return (s.min_distance() - s.secret_length()) / 2;
}

inline std::size_t information_rate(const SchemeInstance& s) { return s.secret_length(); }

}  // namespace masseyx
