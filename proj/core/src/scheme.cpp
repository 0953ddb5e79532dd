#include "masseyx/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace masseyx {

namespace {

std::vector<std::size_t> checked_group(const SchemeInstance& s, std::span<const std::size_t> group) {
  std::vector<std::size_t> g(group.begin(), group.end());
  std::sort(g.begin(), g.end());
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw std::invalid_argument("duplicate participant in group");
  for (auto p : g)
    if (p < 1 || p > s.participants())
      throw std::out_of_range("participant " + std::to_string(p) + " outside [1, " +
                              std::to_string(s.participants()) + "]");
  return g;
}

Elem uniform_element(std::mt19937_64& rng, std::uint32_t q) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % q;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<Elem>(x % q);
}

}  // namespace

SchemeInstance::SchemeInstance(LinearCode code, std::size_t l, std::uint64_t cap)
    : code_(std::move(code)), l_(l), d_(0) {
  if (l_ < 1 || l_ >= code_.length()) throw std::out_of_range("secret length must satisfy 1 <= l < N");
  std::vector<std::size_t> prefix(l_);
  std::iota(prefix.begin(), prefix.end(), 0);
  if (rank(gf(), code_.generator().columns(prefix)) != l_)
    throw std::invalid_argument("first l generator columns are linearly dependent");
  d_ = masseyx::min_distance(code_, cap);
  if (d_ <= l_)
    throw std::invalid_argument("minimum distance " + std::to_string(d_) + " must exceed secret length " +
                                std::to_string(l_));
  dual_ = masseyx::dual_generator(code_);
}

ShareVector deal(const SchemeInstance& s, std::span<const Elem> secret, std::uint64_t seed) {
  const auto& f = s.gf();
  const std::size_t l = s.secret_length();
  if (secret.size() != l) throw std::invalid_argument("secret must have length l");
  for (Elem x : secret)
    if (!f.contains(x)) throw std::invalid_argument("secret entry outside field");
  std::vector<std::size_t> prefix(l);
  std::iota(prefix.begin(), prefix.end(), 0);
  const Matrix gs = s.code().generator().columns(prefix);
  auto u = solve_left(f, gs, secret);
  if (!u) throw std::logic_error("prefix columns do not reach the secret");
  const Matrix kernel = left_kernel(f, gs);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    const Elem r = uniform_element(rng, f.q());
    if (r == 0) continue;
    const auto row = kernel.row(i);
    for (std::size_t j = 0; j < u->size(); ++j) (*u)[j] = f.add((*u)[j], f.mul(r, row[j]));
  }
  ShareVector out;
  out.codeword = s.code().encode(*u);
  out.shares.assign(out.codeword.begin() + static_cast<std::ptrdiff_t>(l), out.codeword.end());
  return out;
}

std::optional<std::vector<std::vector<Elem>>> recovery_vectors(const SchemeInstance& s,
                                                               std::span<const std::size_t> group) {
  const auto g = checked_group(s, group);
  const auto& f = s.gf();
  const std::size_t l = s.secret_length();
  const std::size_t n_len = s.code().length();
  std::vector<bool> allowed(n_len, false);
  for (std::size_t j = 0; j < l; ++j) allowed[j] = true;
  for (auto p : g) allowed[s.column_of(p)] = true;
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < n_len; ++c)
    if (!allowed[c]) outside.push_back(c);

  // Dual codewords vanishing outside the allowed columns.
  const Matrix& h = s.dual_generator();
  const Matrix combos = left_kernel(f, h.columns(outside));
  Matrix words(0, n_len);
  for (std::size_t i = 0; i < combos.rows(); ++i) words.append_row(row_times(f, combos.row(i), h));

  std::vector<std::size_t> prefix(l);
  std::iota(prefix.begin(), prefix.end(), 0);
  const Matrix heads = words.columns(prefix);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> unit(l, 0);
  for (std::size_t j = 0; j < l; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    auto a = solve_left(f, heads, unit);
    if (!a) return std::nullopt;
    out.push_back(row_times(f, *a, words));
  }
  return out;
}

ReconstructionPlan::ReconstructionPlan(const SchemeInstance& s, std::span<const std::size_t> group)
    : field_(s.code().field()), l_(s.secret_length()), group_(checked_group(s, group)) {
  std::vector<std::size_t> cols;
  for (auto p : group_) cols.push_back(s.column_of(p));
  checks_ = right_kernel(*field_, s.code().generator().columns(cols));
  recovery_ = recovery_vectors(s, group_);
  if (recovery_) {
    // Keep only the group's coordinates of each v_j.
    for (auto& v : *recovery_) {
      std::vector<Elem> coeff;
      for (auto c : cols) coeff.push_back(v[c]);
      v = std::move(coeff);
    }
  }
}

std::optional<Secret> ReconstructionPlan::recover(std::span<const Elem> shares) const {
  const auto& f = *field_;
  if (shares.size() != group_.size()) throw std::invalid_argument("one share per group member required");
  for (Elem x : shares)
    if (!f.contains(x)) throw std::invalid_argument("share value outside field");
  for (std::size_t i = 0; i < checks_.rows(); ++i) {
    Elem acc = 0;
    const auto row = checks_.row(i);
    for (std::size_t j = 0; j < shares.size(); ++j) acc = f.add(acc, f.mul(row[j], shares[j]));
    if (acc != 0) throw InconsistentShares("shares are not the restriction of any codeword");
  }
  if (!recovery_) return std::nullopt;
  // c . v_j = 0 with v_j = e_j on the prefix gives s_j = -sum v_j[i] c_i.
  Secret secret(l_, 0);
  for (std::size_t j = 0; j < l_; ++j) {
    Elem acc = 0;
    const auto& v = (*recovery_)[j];
    for (std::size_t i = 0; i < shares.size(); ++i) acc = f.add(acc, f.mul(v[i], shares[i]));
    secret[j] = f.neg(acc);
  }
  return secret;
}

std::optional<Secret> reconstruct(const SchemeInstance& s, std::span<const std::size_t> group, const ShareMap& shares) {
  const ReconstructionPlan plan(s, group);
  std::vector<Elem> ordered;
  for (auto p : plan.group()) {
    auto it = shares.find(p);
    if (it == shares.end()) throw std::invalid_argument("missing share for participant " + std::to_string(p));
    ordered.push_back(it->second);
  }
  for (const auto& [p, value] : shares) {
    (void)value;
    if (!std::binary_search(plan.group().begin(), plan.group().end(), p))
      throw std::invalid_argument("share for participant " + std::to_string(p) + " outside the group");
  }
  return plan.recover(ordered);
}

}  // namespace masseyx
