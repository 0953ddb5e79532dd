#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "masseyx/access.hpp"
#include "support.hpp"

namespace masseyx {
namespace {

using testing::brute_leaked_dim;
using testing::members;

std::vector<testing::NamedScheme> small_schemes() {
  auto all = testing::catalog_schemes();
  std::erase_if(all, [](const auto& s) { return s.scheme.participants() > 8; });
  return all;
}

TEST(Classify, SpanMatchesCodewordOracle) {
  for (const auto& [label, s] : small_schemes()) {
    const std::size_t n = s.participants();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto g = members(mask, n);
      const GroupClassification c = classify_span(s, g);
      const std::size_t leaked = brute_leaked_dim(s, g);
      EXPECT_EQ(c.leaked_dim, leaked) << label << " mask " << mask;
      const AccessKind want = leaked == 0                   ? AccessKind::None
                              : leaked == s.secret_length() ? AccessKind::Full
                                                            : AccessKind::Partial;
      EXPECT_EQ(c.kind, want) << label << " mask " << mask;
      EXPECT_EQ(classify_dual(s, g), want == AccessKind::Full) << label << " mask " << mask;
    }
  }
}

TEST(Classify, ToyPartialGroup) {
  const SchemeInstance s(load("toy6").code, 2);
  const std::vector<std::size_t> g{1};
  const auto c = classify_span(s, g);
  EXPECT_EQ(c.kind, AccessKind::Partial);
  EXPECT_EQ(c.leaked_dim, 1u);
  EXPECT_EQ(to_string(c.kind), "Partial");
  const std::vector<std::size_t> bad{0};
  EXPECT_THROW(classify_span(s, bad), std::out_of_range);
}

struct AccessOracle {
  std::map<std::size_t, std::uint64_t> histogram;
  std::map<std::size_t, std::uint64_t> tuple_histogram;
  std::vector<std::vector<std::size_t>> minimal;
};

// Recovery tuples straight from the dual codeword list; minimal groups by
// checking every proper subset.
AccessOracle oracle(const SchemeInstance& s) {
  const std::size_t l = s.secret_length();
  const std::size_t n = s.participants();
  std::vector<std::vector<std::uint64_t>> lists(l);
  for (const auto& w : enumerate_codewords(dual(s.code()))) {
    for (std::size_t j = 0; j < l; ++j) {
      bool match = true;
      for (std::size_t i = 0; i < l; ++i) match = match && w.coords[i] == (i == j ? 1u : 0u);
      if (!match) continue;
      std::uint64_t m = 0;
      for (std::size_t p = 0; p < n; ++p)
        if (w.coords[l + p] != 0) m |= std::uint64_t{1} << p;
      lists[j].push_back(m);
    }
  }
  AccessOracle out;
  std::set<std::uint64_t> unions;
  std::vector<std::size_t> pick(l, 0);
  auto rec = [&](auto& self, std::size_t depth, std::uint64_t acc) -> void {
    if (depth == l) {
      unions.insert(acc);
      ++out.tuple_histogram[static_cast<std::size_t>(std::popcount(acc))];
      return;
    }
    for (auto m : lists[depth]) self(self, depth + 1, acc | m);
  };
  rec(rec, 0, 0);
  for (auto u : unions) ++out.histogram[static_cast<std::size_t>(std::popcount(u))];

  std::vector<bool> full(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < full.size(); ++mask) full[mask] = brute_leaked_dim(s, members(mask, n)) == l;
  for (std::uint64_t mask = 0; mask < full.size(); ++mask) {
    if (!full[mask]) continue;
    bool minimal = true;
    for (std::uint64_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      minimal = minimal && !full[sub];
      if (sub == 0) break;
    }
    if (minimal) out.minimal.push_back(members(mask, n));
  }
  std::sort(out.minimal.begin(), out.minimal.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

TEST(AccessStructure, BothBackendsMatchOracle) {
  for (const auto& [label, s] : small_schemes()) {
    const AccessOracle want = oracle(s);
    for (auto backend : {AccessBackend::DualTuples, AccessBackend::SubsetLattice, AccessBackend::Automatic}) {
      AccessOptions opts;
      opts.backend = backend;
      const AccessReport r = enumerate_access_structure(s, opts);
      EXPECT_EQ(r.histogram, want.histogram) << label;
      EXPECT_EQ(r.tuple_histogram, want.tuple_histogram) << label;
      EXPECT_EQ(r.minimal_groups, want.minimal) << label;
    }
  }
}

TEST(AccessStructure, PinnedHistograms) {
  const AccessReport e1 = enumerate_access_structure(testing::ternary_dual_scheme());
  EXPECT_EQ(e1.histogram, (std::map<std::size_t, std::uint64_t>{{5, 4}, {6, 1}}));
  EXPECT_EQ(e1.minimal_groups.size(), 4u);
  const AccessReport e2 = enumerate_access_structure(SchemeInstance(load("hamming8").code, 3));
  EXPECT_EQ(e2.histogram, (std::map<std::size_t, std::uint64_t>{{4, 4}, {5, 1}}));
  const AccessReport h2 = enumerate_access_structure(SchemeInstance(load("hamming8").code, 2));
  EXPECT_EQ(h2.histogram, (std::map<std::size_t, std::uint64_t>{{4, 12}, {6, 1}}));
  EXPECT_EQ(h2.minimal_groups.size(), 12u);
}

TEST(Classify, SmallGroupsOfExampleSchemes) {
  const std::vector<std::size_t> everyone{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(classify_span(testing::ternary_dual_scheme(), everyone).kind, AccessKind::Full);
  const SchemeInstance h(load("hamming8").code, 3);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto g = members(mask, 5);
    if (g.size() <= 3) EXPECT_NE(classify_span(h, g).kind, AccessKind::Full) << mask;
  }
}

TEST(AccessStructure, ToyMinimalGroups) {
  const AccessReport r = enumerate_access_structure(SchemeInstance(load("toy6").code, 2));
  EXPECT_EQ(r.minimal_groups, (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::uint64_t>{{2, 4}, {3, 4}, {4, 1}}));
}

TEST(AccessStructure, Monotonicity) {
  for (const auto& [label, s] : small_schemes()) {
    const std::size_t n = s.participants();
    std::vector<GroupClassification> all;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) all.push_back(classify_span(s, members(mask, n)));
    for (std::uint64_t mask = 0; mask < all.size(); ++mask)
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bigger = mask | (std::uint64_t{1} << i);
        EXPECT_LE(all[mask].leaked_dim, all[bigger].leaked_dim) << label;
        if (all[mask].kind == AccessKind::Full) EXPECT_EQ(all[bigger].kind, AccessKind::Full) << label;
        if (all[bigger].kind == AccessKind::None) EXPECT_EQ(all[mask].kind, AccessKind::None) << label;
      }
  }
}

// With l = 1 the minimal access groups are the supports, minus the first
// coordinate, of the minimal dual codewords whose first entry is 1.
std::vector<std::vector<std::size_t>> minimal_codeword_groups(const LinearCode& dual_code) {
  const auto words = enumerate_codewords(dual_code);
  auto support = [](const Codeword& w) { return w.support(); };
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : words) {
    if (w.coords[0] != 1) continue;
    const auto sw = support(w);
    bool minimal = true;
    for (const auto& v : words) {
      const auto sv = support(v);
      if (v.weight() == 0 || sv.size() >= sw.size()) continue;
      if (std::includes(sw.begin(), sw.end(), sv.begin(), sv.end())) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::size_t> g;
    for (auto x : sw)
      if (x > 1) g.push_back(x - 1);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

TEST(AccessStructure, SingleSecretMatchesMinimalCodewords) {
  const LinearCode repetition(make_field(2), Matrix::from_rows({{1, 1, 1, 1}}, 4));
  const LinearCode c1 = load("c1_ternary").code;
  for (const auto& code : {repetition, dual(c1)}) {
    const SchemeInstance s(code, 1);
    EXPECT_EQ(enumerate_access_structure(s).minimal_groups, minimal_codeword_groups(dual(code)));
  }
}

TEST(AccessStructure, GolayBackendsAndThreadsAgree) {
  const SchemeInstance s(load("golay24").code, 2);
  EXPECT_EQ(tuple_space_size(s), std::uint64_t{1} << 20);
  AccessOptions opts;
  opts.backend = AccessBackend::DualTuples;
  opts.with_ghw = false;
  const AccessReport a = enumerate_access_structure(s, opts);
  opts.backend = AccessBackend::SubsetLattice;
  const AccessReport b = enumerate_access_structure(s, opts);
  opts.backend = AccessBackend::DualTuples;
  opts.threads = 3;
  const AccessReport c = enumerate_access_structure(s, opts);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.tuple_histogram, b.tuple_histogram);
  EXPECT_EQ(a.minimal_groups, b.minimal_groups);
  EXPECT_EQ(a.histogram, c.histogram);
  EXPECT_EQ(a.tuple_histogram, c.tuple_histogram);
  EXPECT_EQ(a.minimal_groups, c.minimal_groups);
  EXPECT_EQ(a.histogram.at(10), 6160u);
  EXPECT_EQ(a.histogram.at(12), 36960u);
}

TEST(AccessStructure, CapIsEnforced) {
  const SchemeInstance s(load("golay24").code, 2);
  AccessOptions opts;
  opts.cap = 1000;
  opts.backend = AccessBackend::DualTuples;
  EXPECT_THROW(enumerate_access_structure(s, opts), CapExceeded);
  opts.backend = AccessBackend::SubsetLattice;
  EXPECT_THROW(enumerate_access_structure(s, opts), CapExceeded);
}

TEST(Bounds, KnownValues) {
  const BoundsRecord h = bounds(SchemeInstance(load("hamming8").code, 2));
  EXPECT_EQ(h.dual_distance, 4u);
  EXPECT_EQ(h.dual_ghw, 6u);
  EXPECT_EQ(h.ghw_bound, 3);
  EXPECT_EQ(h.simple_bound, 2);
  EXPECT_EQ(h.noinfo_bound, 1);
  EXPECT_EQ(h.recover_threshold, 5);
  EXPECT_EQ(h.max_excluded_size(), 3);

  const BoundsRecord g = bounds(SchemeInstance(load("golay24").code, 2));
  EXPECT_EQ(g.dual_ghw, 12u);
  EXPECT_EQ(g.ghw_bound, 9);
  EXPECT_EQ(g.simple_bound, 8);
  EXPECT_EQ(g.noinfo_bound, 5);
  EXPECT_EQ(g.recover_threshold, 17);

  const BoundsRecord no_ghw = bounds(SchemeInstance(load("golay24").code, 2), kDefaultCap, false);
  EXPECT_FALSE(no_ghw.dual_ghw);
  EXPECT_EQ(no_ghw.max_excluded_size(), 8);

  const BoundsRecord t = bounds(SchemeInstance(load("hamming8").code, 1));
  EXPECT_FALSE(t.simple_bound);
}

TEST(Bounds, RecoveryTableMatchesReport) {
  for (const auto& [label, s] : small_schemes()) {
    const AccessReport r = enumerate_access_structure(s);
    const std::size_t smallest = r.minimal_groups.front().size();
    EXPECT_GT(static_cast<std::int64_t>(smallest), r.bounds.max_excluded_size()) << label;
    EXPECT_LE(static_cast<std::int64_t>(r.minimal_groups.back().size()), r.bounds.recover_threshold) << label;
  }
}

TEST(Parity, EvenMinimalGroups) {
  EXPECT_TRUE(check_even_minimal_groups(SchemeInstance(load("hamming8").code, 2)));
  EXPECT_TRUE(check_even_minimal_groups(SchemeInstance(load("golay24").code, 2), 12));
  EXPECT_THROW(check_even_minimal_groups(SchemeInstance(load("toy6").code, 2)), std::invalid_argument);
  EXPECT_THROW(check_even_minimal_groups(SchemeInstance(load("hamming8").code, 3)), std::invalid_argument);
  EXPECT_THROW(check_even_minimal_groups(testing::ternary_dual_scheme()), std::invalid_argument);
}

}  // namespace
}  // namespace masseyx
