#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace masseyx {

// Splits [0, total) into `threads` contiguous chunks. Each chunk gets its own
// accumulator from make(); body(begin, end, acc) fills it; accumulators are
// folded with merge(into, from) in chunk order. With an associative merge the
// result does not depend on the thread count.
template <class MakeAcc, class Body, class Merge>
auto parallel_reduce(std::uint64_t total, unsigned threads, MakeAcc make, Body body, Merge merge) {
  using Acc = decltype(make());
  threads = std::max(1u, threads);
  if (threads == 1 || total < 2 * static_cast<std::uint64_t>(threads)) {
    Acc acc = make();
    body(std::uint64_t{0}, total, acc);
    return acc;
  }
  std::vector<Acc> partial;
  partial.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) partial.push_back(make());
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] {
        try {
          body(begin, end, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = std::move(partial.front());
  for (unsigned t = 1; t < threads; ++t) merge(acc, partial[t]);
  return acc;
}

}  // namespace masseyx
