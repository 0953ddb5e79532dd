#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "masseyx/parallel.hpp"

namespace masseyx {
namespace {

TEST(ParallelReduce, ChunksMergeInOrder) {
  for (unsigned threads : {1u, 2u, 3u, 7u}) {
    auto make = [] { return std::vector<std::uint64_t>{}; };
    auto body = [](std::uint64_t b, std::uint64_t e, std::vector<std::uint64_t>& acc) {
      for (auto i = b; i < e; ++i) acc.push_back(i);
    };
    auto merge = [](std::vector<std::uint64_t>& into, std::vector<std::uint64_t>& from) {
      into.insert(into.end(), from.begin(), from.end());
    };
    const auto got = parallel_reduce(1000, threads, make, body, merge);
    std::vector<std::uint64_t> want(1000);
    std::iota(want.begin(), want.end(), 0);
    EXPECT_EQ(got, want) << threads;
  }
}

TEST(ParallelReduce, EmptyAndTinyRanges) {
  auto make = [] { return std::uint64_t{0}; };
  auto body = [](std::uint64_t b, std::uint64_t e, std::uint64_t& acc) { acc += e - b; };
  auto merge = [](std::uint64_t& into, std::uint64_t& from) { into += from; };
  EXPECT_EQ(parallel_reduce(0, 4, make, body, merge), 0u);
  EXPECT_EQ(parallel_reduce(3, 4, make, body, merge), 3u);
  EXPECT_EQ(parallel_reduce(3, 0, make, body, merge), 3u);
}

TEST(ParallelReduce, PropagatesExceptions) {
  auto make = [] { return 0; };
  auto body = [](std::uint64_t b, std::uint64_t, int&) {
    if (b > 0) throw std::runtime_error("worker failed");
  };
  auto merge = [](int&, int&) {};
  EXPECT_THROW(parallel_reduce(100, 4, make, body, merge), std::runtime_error);
}

}  // namespace
}  // namespace masseyx
