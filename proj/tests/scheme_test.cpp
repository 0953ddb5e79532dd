#include <gtest/gtest.h>

#include <random>

#include "masseyx/scheme.hpp"
#include "support.hpp"

namespace masseyx {
namespace {

using testing::ternary_dual_scheme;

TEST(Scheme, ValidatesParameters) {
  const LinearCode toy = load("toy6").code;
  EXPECT_THROW(SchemeInstance(toy, 0), std::out_of_range);
  EXPECT_THROW(SchemeInstance(toy, 6), std::out_of_range);
  EXPECT_THROW(SchemeInstance(toy, 3), std::invalid_argument);  // d = 3 is not > 3
  // A zero first column cannot carry a secret.
  const Field f = make_field(2);
  const LinearCode zero_first(f, Matrix::from_rows({{0, 1, 1, 1}, {0, 0, 1, 1}}, 4));
  EXPECT_THROW(SchemeInstance(zero_first, 1), std::invalid_argument);
}

TEST(Scheme, Accessors) {
  const SchemeInstance s = ternary_dual_scheme();
  EXPECT_EQ(s.secret_length(), 2u);
  EXPECT_EQ(s.participants(), 6u);
  EXPECT_EQ(s.column_of(1), 2u);
  EXPECT_EQ(information_rate(s), 2u);
  EXPECT_EQ(cheater_capacity(s), (s.min_distance() - 2) / 2);
  EXPECT_EQ(cheater_capacity(SchemeInstance(load("golay24").code, 2)), 3u);
}

TEST(Scheme, DealPlacesSecretInPrefix) {
  for (const auto& [label, s] : testing::catalog_schemes()) {
    const std::size_t l = s.secret_length();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Elem> pick(0, s.gf().q() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      Secret secret(l);
      for (auto& x : secret) x = pick(rng);
      const ShareVector v = deal(s, secret, 100 + trial);
      EXPECT_TRUE(s.code().contains(v.codeword)) << label;
      EXPECT_TRUE(std::equal(secret.begin(), secret.end(), v.codeword.begin())) << label;
      EXPECT_EQ(v.shares.size(), s.participants());
      for (std::size_t i = 1; i <= s.participants(); ++i) EXPECT_EQ(v.shares[i - 1], v.codeword[s.column_of(i)]);
      EXPECT_EQ(deal(s, secret, 100 + trial).shares, v.shares);
    }
  }
}

TEST(Scheme, DealRejectsBadSecrets) {
  const SchemeInstance s = ternary_dual_scheme();
  EXPECT_THROW(deal(s, std::vector<Elem>{1}, 0), std::invalid_argument);
  EXPECT_THROW(deal(s, std::vector<Elem>{1, 3}, 0), std::invalid_argument);
}

TEST(Scheme, SeedsChangeShares) {
  const SchemeInstance s(load("golay24").code, 2);
  const Secret secret{1, 0};
  std::set<std::vector<Elem>> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) seen.insert(deal(s, secret, seed).shares);
  EXPECT_GT(seen.size(), 15u);
}

TEST(Scheme, ReconstructAllParticipants) {
  for (const auto& [label, s] : testing::catalog_schemes()) {
    const Secret secret(s.secret_length(), 1);
    const ShareVector v = deal(s, secret, 3);
    ShareMap shares;
    std::vector<std::size_t> group;
    for (std::size_t i = 1; i <= s.participants(); ++i) {
      shares[i] = v.shares[i - 1];
      group.push_back(i);
    }
    const auto got = reconstruct(s, group, shares);
    ASSERT_TRUE(got) << label;
    EXPECT_EQ(*got, secret) << label;
  }
}

TEST(Scheme, UnauthorizedGroupGetsNothing) {
  const SchemeInstance s(load("toy6").code, 2);
  const ShareVector v = deal(s, Secret{1, 1}, 0);
  const std::vector<std::size_t> group{1};
  EXPECT_FALSE(reconstruct(s, group, ShareMap{{1, v.shares[0]}}));
  EXPECT_FALSE(recovery_vectors(s, group));
}

TEST(Scheme, RecoveryVectorsLiveInDual) {
  const SchemeInstance s(load("hamming8").code, 2);
  const std::vector<std::size_t> all{1, 2, 3, 4, 5, 6};
  const auto v = recovery_vectors(s, all);
  ASSERT_TRUE(v);
  const LinearCode d = dual(s.code());
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_TRUE(d.contains((*v)[j]));
    EXPECT_EQ((*v)[j][j], 1u);
    EXPECT_EQ((*v)[j][1 - j], 0u);
  }
}

TEST(Scheme, DetectsInconsistentShares) {
  const SchemeInstance s(load("golay24").code, 2);
  std::vector<std::size_t> group;
  for (std::size_t i = 1; i <= 22; ++i) group.push_back(i);
  const ReconstructionPlan plan(s, group);
  ASSERT_TRUE(plan.authorized());
  ShareVector v = deal(s, Secret{1, 0}, 9);
  EXPECT_EQ(*plan.recover(v.shares), (Secret{1, 0}));
  // Up to cheater_capacity corrupted shares are always detected.
  for (std::size_t i = 0; i < cheater_capacity(s); ++i) {
    v.shares[3 * i] ^= 1;
    EXPECT_THROW(plan.recover(v.shares), InconsistentShares);
  }
}

TEST(Scheme, ReconstructValidatesShareKeys) {
  const SchemeInstance s(load("toy6").code, 2);
  const std::vector<std::size_t> group{1, 2};
  EXPECT_ANY_THROW(reconstruct(s, group, ShareMap{{1, 0}}));
  EXPECT_ANY_THROW(reconstruct(s, group, ShareMap{{1, 0}, {2, 0}, {3, 0}}));
  const std::vector<std::size_t> bad{7};
  EXPECT_ANY_THROW(reconstruct(s, bad, ShareMap{{7, 0}}));
}

}  // namespace
}  // namespace masseyx
