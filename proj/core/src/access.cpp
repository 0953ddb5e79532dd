#include "masseyx/access.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "masseyx/parallel.hpp"

namespace masseyx {

namespace {

constexpr std::size_t kLatticeMaxParticipants = 24;

// Rank of generator columns: the secret prefix plus a set of participants.
class ColumnRanker {
 public:
  explicit ColumnRanker(const SchemeInstance& s) : s_(s), binary_(s.gf().is_binary() && s.code().dimension() <= 64) {
    if (!binary_) return;
    const auto& g = s.code().generator();
    columns_.assign(g.cols(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c)
        if (g(r, c)) columns_[c] |= std::uint64_t{1} << r;
  }

  // Returns {rank of group columns, rank of group plus prefix columns}.
  std::pair<std::size_t, std::size_t> ranks(std::span<const std::uint64_t> mask) const {
    const std::size_t l = s_.secret_length();
    const std::size_t n = s_.participants();
    if (binary_) {
      std::array<std::uint64_t, 64> basis{};
      std::size_t r = 0;
      auto insert = [&](std::uint64_t x) {
        while (x) {
          const int top = 63 - std::countl_zero(x);
          if (!basis[top]) {
            basis[top] = x;
            return true;
          }
          x ^= basis[top];
        }
        return false;
      };
      for (std::size_t i = 0; i < n; ++i)
        if (test_bit(mask, i) && insert(columns_[l + i])) ++r;
      std::size_t ru = r;
      for (std::size_t j = 0; j < l; ++j)
        if (insert(columns_[j])) ++ru;
      return {r, ru};
    }
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(mask, i)) cols.push_back(l + i);
    const auto& f = s_.gf();
    const std::size_t r = rank(f, s_.code().generator().columns(cols));
    for (std::size_t j = 0; j < l; ++j) cols.push_back(j);
    return {r, rank(f, s_.code().generator().columns(cols))};
  }

  bool full(std::span<const std::uint64_t> mask) const {
    const auto [rb, ru] = ranks(mask);
    return rb == ru;
  }

 private:
  const SchemeInstance& s_;
  bool binary_;
  std::vector<std::uint64_t> columns_;
};

std::vector<std::uint64_t> group_mask(const SchemeInstance& s, std::span<const std::size_t> group) {
  std::vector<std::uint64_t> mask(words_for(s.participants()), 0);
  for (auto p : group) {
    if (p < 1 || p > s.participants())
      throw std::out_of_range("participant " + std::to_string(p) + " outside [1, " +
                              std::to_string(s.participants()) + "]");
    set_bit(mask, p - 1);
  }
  return mask;
}

std::vector<std::size_t> members(std::span<const std::uint64_t> mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (test_bit(mask, i)) out.push_back(i + 1);
  return out;
}

// Distinct participant supports of A_j with the number of words behind each.
struct SupportList {
  SupportTable masks;
  std::vector<std::uint64_t> multiplicity;
};

// Sorted distinct rows of a flat table of W-word masks.
std::vector<std::size_t> sorted_distinct(const std::vector<std::uint64_t>& flat, std::size_t w) {
  const std::size_t count = w == 0 ? 0 : flat.size() / w;
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w, flat.begin() + b * w,
                                        flat.begin() + (b + 1) * w);
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(flat.begin() + a * w, flat.begin() + (a + 1) * w, flat.begin() + b * w);
  };
  std::sort(idx.begin(), idx.end(), less);
  idx.erase(std::unique(idx.begin(), idx.end(), equal), idx.end());
  return idx;
}

SupportList participant_supports(const SchemeInstance& s, const RecoverySpace& space, std::size_t j,
                                 std::uint64_t cap) {
  const std::size_t l = s.secret_length();
  const std::size_t n = s.participants();
  const SupportTable words = affine_span_supports(s.gf(), space.directions, space.offsets[j], cap);
  const std::size_t w = words_for(n);
  std::vector<std::uint64_t> flat(words.size() * w, 0);
  for (std::size_t r = 0; r < words.size(); ++r) {
    std::span<std::uint64_t> dst(flat.data() + r * w, w);
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(words[r], l + i)) set_bit(dst, i);
  }
  // Count multiplicities before collapsing duplicates.
  const auto order = [&] {
    std::vector<std::size_t> idx(words.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w, flat.begin() + b * w,
                                          flat.begin() + (b + 1) * w);
    });
    return idx;
  }();
  SupportList out{SupportTable(n), {}};
  for (std::size_t t = 0; t < order.size(); ++t) {
    std::span<const std::uint64_t> cur(flat.data() + order[t] * w, w);
    if (t > 0 && std::equal(cur.begin(), cur.end(), flat.begin() + order[t - 1] * w)) {
      ++out.multiplicity.back();
      continue;
    }
    out.masks.push_back(cur);
    out.multiplicity.push_back(1);
  }
  return out;
}

std::vector<std::vector<std::size_t>> sort_groups(std::vector<std::vector<std::size_t>> groups) {
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return groups;
}

struct TupleUnions {
  std::vector<std::uint64_t> flat;  // distinct union masks, W words each
  std::map<std::size_t, std::uint64_t> tuple_histogram;
};

AccessReport tuples_backend(const SchemeInstance& s, const AccessOptions& opts) {
  const std::size_t l = s.secret_length();
  const std::size_t n = s.participants();
  const std::size_t w = words_for(n);
  const RecoverySpace space = recovery_space(s.gf(), s.dual_generator(), l);
  AccessReport report;
  if (space.empty()) return report;

  std::vector<SupportList> lists;
  for (std::size_t j = 0; j < l; ++j) lists.push_back(participant_supports(s, space, j, opts.cap));

  auto make = [] { return TupleUnions{}; };
  auto body = [&](std::uint64_t begin, std::uint64_t end, TupleUnions& acc) {
    std::vector<std::vector<std::uint64_t>> partial(l, std::vector<std::uint64_t>(w, 0));
    std::vector<std::uint64_t> weight(l, 1);
    auto descend = [&](auto& self, std::size_t depth) -> void {
      if (depth == l) {
        const auto& u = partial[l - 1];
        acc.flat.insert(acc.flat.end(), u.begin(), u.end());
        acc.tuple_histogram[popcount(u)] += weight[l - 1];
        return;
      }
      const auto& list = lists[depth];
      for (std::size_t i = 0; i < list.masks.size(); ++i) {
        const auto m = list.masks[i];
        for (std::size_t x = 0; x < w; ++x) partial[depth][x] = partial[depth - 1][x] | m[x];
        weight[depth] = weight[depth - 1] * list.multiplicity[i];
        self(self, depth + 1);
      }
    };
    for (std::uint64_t first = begin; first < end; ++first) {
      const auto m = lists[0].masks[first];
      std::copy(m.begin(), m.end(), partial[0].begin());
      weight[0] = lists[0].multiplicity[first];
      descend(descend, 1);
      if (acc.flat.size() > (std::size_t{1} << 22) * w) {
        const auto keep = sorted_distinct(acc.flat, w);
        std::vector<std::uint64_t> compact;
        compact.reserve(keep.size() * w);
        for (auto i : keep) compact.insert(compact.end(), acc.flat.begin() + i * w, acc.flat.begin() + (i + 1) * w);
        acc.flat.swap(compact);
      }
    }
  };
  auto merge = [](TupleUnions& into, TupleUnions& from) {
    into.flat.insert(into.flat.end(), from.flat.begin(), from.flat.end());
    for (const auto& [k, v] : from.tuple_histogram) into.tuple_histogram[k] += v;
  };
  TupleUnions unions = parallel_reduce(lists[0].masks.size(), opts.threads, make, body, merge);
  report.tuple_histogram = std::move(unions.tuple_histogram);

  const ColumnRanker ranker(s);
  std::vector<std::uint64_t> probe(w);
  for (auto i : sorted_distinct(unions.flat, w)) {
    std::span<const std::uint64_t> u(unions.flat.data() + i * w, w);
    const std::size_t size = popcount(u);
    ++report.histogram[size];
    // Access structures are monotone, so minimality only needs single deletions.
    bool minimal = true;
    std::copy(u.begin(), u.end(), probe.begin());
    for (std::size_t b = 0; b < n && minimal; ++b) {
      if (!test_bit(u, b)) continue;
      probe[b >> 6] ^= std::uint64_t{1} << (b & 63);
      if (ranker.full(probe)) minimal = false;
      probe[b >> 6] ^= std::uint64_t{1} << (b & 63);
    }
    if (minimal) report.minimal_groups.push_back(members(u, n));
  }
  report.minimal_groups = sort_groups(std::move(report.minimal_groups));
  return report;
}

template <class Int>
void exact_union_counts(const SchemeInstance& s, const std::vector<std::uint8_t>& full,
                        const std::vector<std::uint16_t>& free_dim, AccessReport& report) {
  const std::size_t n = s.participants();
  const std::size_t l = s.secret_length();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Int> g(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!full[m]) continue;
    Int v = 1;
    for (std::size_t t = 0; t < l * free_dim[m]; ++t) v *= s.gf().q();
    g[m] = v;
  }
  // Moebius transform over the subset lattice: g[U] = #tuples with union exactly U.
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < total; ++m)
      if (m & bit) g[m] -= g[m ^ bit];
  }
  for (std::uint64_t m = 0; m < total; ++m) {
    if (g[m] > 0) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      ++report.histogram[size];
      report.tuple_histogram[size] += static_cast<std::uint64_t>(g[m]);
    }
  }
}

AccessReport lattice_backend(const SchemeInstance& s, const AccessOptions& opts) {
  const std::size_t n = s.participants();
  if (n > kLatticeMaxParticipants)
    throw std::invalid_argument("subset lattice backend supports at most 24 participants");
  const std::uint64_t total = std::uint64_t{1} << n;
  if (total > opts.cap) throw CapExceeded("subset lattice enumeration", total, opts.cap);

  const ColumnRanker ranker(s);
  std::vector<std::uint8_t> full(total, 0);
  // Dimension of the words of A_j living on prefix + U, as a power of q.
  std::vector<std::uint16_t> free_dim(total, 0);
  AccessReport report;
  for (std::uint64_t m = 0; m < total; ++m) {
    const std::uint64_t mask[1] = {m};
    const auto [rb, ru] = ranker.ranks(mask);
    full[m] = rb == ru;
    if (!full[m]) continue;
    free_dim[m] = static_cast<std::uint16_t>(static_cast<std::size_t>(std::popcount(m)) - ru);
    bool minimal = true;
    for (std::size_t b = 0; b < n && minimal; ++b)
      if ((m >> b & 1) && full[m ^ (std::uint64_t{1} << b)]) minimal = false;
    if (minimal) report.minimal_groups.push_back(members(std::span<const std::uint64_t>(mask, 1), n));
  }
  report.minimal_groups = sort_groups(std::move(report.minimal_groups));

  // |A_j restricted to prefix + U| = q^(|U| + l - r_U - l) for each j.
  const std::uint64_t tuples = tuple_space_size(s);
  const bool fits = tuples < (std::uint64_t{1} << 62) >> n;
  if (fits)
    exact_union_counts<std::int64_t>(s, full, free_dim, report);
  else
    exact_union_counts<boost::multiprecision::cpp_int>(s, full, free_dim, report);
  return report;
}

}  // namespace

std::string_view to_string(AccessKind k) noexcept {
  switch (k) {
    case AccessKind::None:
      return "None";
    case AccessKind::Partial:
      return "Partial";
    case AccessKind::Full:
      return "Full";
  }
  return "?";
}

std::int64_t BoundsRecord::max_excluded_size() const {
  std::int64_t m = noinfo_bound;
  if (ghw_bound) m = std::max(m, *ghw_bound);
  if (simple_bound) m = std::max(m, *simple_bound);
  return m;
}

RecoverySpace recovery_space(const FieldSpec& f, const Matrix& dual_generator, std::size_t l) {
  RecoverySpace space;
  if (dual_generator.rows() == 0) return space;
  std::vector<std::size_t> prefix(l);
  std::iota(prefix.begin(), prefix.end(), 0);
  const Matrix heads = dual_generator.columns(prefix);
  std::vector<Elem> unit(l, 0);
  for (std::size_t j = 0; j < l; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    auto a = solve_left(f, heads, unit);
    if (!a) return {};
    space.offsets.push_back(row_times(f, *a, dual_generator));
  }
  const Matrix kernel = left_kernel(f, heads);
  space.directions = Matrix(0, dual_generator.cols());
  for (std::size_t i = 0; i < kernel.rows(); ++i) space.directions.append_row(row_times(f, kernel.row(i), dual_generator));
  return space;
}

GroupClassification classify_span(const SchemeInstance& s, std::span<const std::size_t> group) {
  const auto mask = group_mask(s, group);
  const auto [rb, ru] = ColumnRanker(s).ranks(mask);
  const std::size_t leaked = rb + s.secret_length() - ru;
  AccessKind kind = AccessKind::Partial;
  if (leaked == s.secret_length())
    kind = AccessKind::Full;
  else if (leaked == 0)
    kind = AccessKind::None;
  return {kind, leaked};
}

bool classify_dual(const SchemeInstance& s, std::span<const std::size_t> group) {
  return recovery_vectors(s, group).has_value();
}

std::uint64_t tuple_space_size(const SchemeInstance& s) {
  const std::size_t r = s.dual_generator().rows();
  const std::size_t l = s.secret_length();
  if (r < l) return 0;
  return saturating_pow(s.gf().q(), static_cast<std::uint64_t>(l) * (r - l));
}

AccessReport enumerate_access_structure(const SchemeInstance& s, const AccessOptions& opts) {
  AccessBackend backend = opts.backend;
  const std::uint64_t tuples = tuple_space_size(s);
  const std::uint64_t lattice =
      s.participants() <= kLatticeMaxParticipants ? std::uint64_t{1} << s.participants() : UINT64_MAX;
  if (backend == AccessBackend::Automatic)
    backend = lattice < tuples ? AccessBackend::SubsetLattice : AccessBackend::DualTuples;
  AccessReport report;
  if (backend == AccessBackend::DualTuples) {
    if (tuples > opts.cap) throw CapExceeded("recovery tuple enumeration", tuples, opts.cap);
    report = tuples_backend(s, opts);
  } else {
    report = lattice_backend(s, opts);
  }
  try {
    report.bounds = bounds(s, opts.cap, opts.with_ghw);
  } catch (const CapExceeded&) {
    report.bounds = bounds(s, opts.cap, false);
  }
  return report;
}

BoundsRecord bounds(const SchemeInstance& s, std::uint64_t cap, bool with_ghw) {
  const LinearCode dual_code(s.code().field(), s.dual_generator());
  const auto l = static_cast<std::int64_t>(s.secret_length());
  const auto n = static_cast<std::int64_t>(s.participants());
  BoundsRecord b;
  b.dual_distance = min_distance(dual_code, cap);
  const auto dd = static_cast<std::int64_t>(b.dual_distance);
  if (with_ghw && s.secret_length() <= dual_code.dimension()) {
    b.dual_ghw = generalized_hamming_weight(dual_code, s.secret_length(), cap);
    b.ghw_bound = static_cast<std::int64_t>(*b.dual_ghw) - l - 1;
  }
  if (l >= 2) {
    const std::int64_t x = 3 * (dd - l);
    const std::int64_t ceil_half = x >= 0 ? (x + 1) / 2 : -((-x) / 2);
    b.simple_bound = ceil_half - 1;
  }
  b.noinfo_bound = dd - l - 1;
  b.recover_threshold = n + l - static_cast<std::int64_t>(s.min_distance()) + 1;
  return b;
}

bool check_even_minimal_groups(const SchemeInstance& s, std::optional<std::size_t> max_size, std::uint64_t cap) {
  if (!s.gf().is_binary()) throw std::invalid_argument("parity check needs a binary code");
  if (s.secret_length() != 2) throw std::invalid_argument("parity check needs l = 2");
  if (!is_self_dual(s.code())) throw std::invalid_argument("parity check needs a self-dual code");
  AccessOptions opts;
  opts.cap = cap;
  opts.with_ghw = false;
  const AccessReport report = enumerate_access_structure(s, opts);
  for (const auto& g : report.minimal_groups) {
    if (max_size && g.size() > *max_size) continue;
    if (g.size() % 2 != 0) return false;
  }
  return true;
}

}  // namespace masseyx
