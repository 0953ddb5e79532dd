#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// work from the full codeword list and never call the routine under test.

#include <cstdint>
#include <ostream>
#include <map>
#include <string>
#include <vector>

#include "masseyx/access.hpp"
#include "masseyx/catalog.hpp"
#include "masseyx/code.hpp"
#include "masseyx/polynomial.hpp"
#include "masseyx/scheme.hpp"

namespace masseyx {

// Readable gtest failure messages.
inline std::ostream& operator<<(std::ostream& os, const SparseEnumerator& p) { return os << pretty(p); }

}  // namespace masseyx

namespace masseyx::testing {

struct NamedScheme {
  std::string label;
  SchemeInstance scheme;
};

inline SchemeInstance ternary_dual_scheme() { return SchemeInstance(dual(load("c1_ternary").code), 2); }

// Every scheme built from catalog codes that the property suites run on.
inline std::vector<NamedScheme> catalog_schemes() {
  std::vector<NamedScheme> out;
  out.push_back({"c1_dual_l2", ternary_dual_scheme()});
  out.push_back({"hamming8_l2", SchemeInstance(load("hamming8").code, 2)});
  out.push_back({"hamming8_l3", SchemeInstance(load("hamming8").code, 3)});
  out.push_back({"toy6_l2", SchemeInstance(load("toy6").code, 2)});
  out.push_back({"golay24_l2", SchemeInstance(load("golay24").code, 2)});
  return out;
}

// 1-based members of a bitmask over n participants.
inline std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> g;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) g.push_back(i + 1);
  return g;
}

// Leaked dimension from the codeword list: l minus the dimension of the
// prefixes of codewords that vanish on the group, computed by counting.
inline std::size_t brute_leaked_dim(const SchemeInstance& s, const std::vector<std::size_t>& group) {
  const std::size_t l = s.secret_length();
  std::map<std::vector<Elem>, int> prefixes;
  for (const auto& c : enumerate_codewords(s.code())) {
    bool zero = true;
    for (auto p : group) zero = zero && c.coords[s.column_of(p)] == 0;
    if (zero) prefixes[std::vector<Elem>(c.coords.begin(), c.coords.begin() + static_cast<std::ptrdiff_t>(l))] = 1;
  }
  std::size_t dim = 0;
  for (std::size_t size = prefixes.size(); size > 1; size /= s.gf().q()) ++dim;
  return l - dim;
}

// Pattern-count polynomial of every g-tuple of the given vectors, by direct
// iteration over coordinates.
inline SparseEnumerator brute_jwe(const std::vector<std::vector<std::vector<Elem>>>& lists) {
  const unsigned g = static_cast<unsigned>(lists.size());
  SparseEnumerator p(g);
  std::vector<std::size_t> pick(g, 0);
  const std::size_t n = lists[0][0].size();
  while (true) {
    Exponents e(std::size_t{1} << g, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = 0;
      for (unsigned t = 0; t < g; ++t) a = (a << 1) | (lists[t][pick[t]][i] != 0 ? 1u : 0u);
      ++e[a];
    }
    p.add(e, 1);
    std::size_t t = g;
    while (t > 0) {
      --t;
      if (++pick[t] < lists[t].size()) break;
      pick[t] = 0;
      if (t == 0) return p;
    }
  }
}

inline std::vector<std::vector<Elem>> words_of(const LinearCode& c) {
  std::vector<std::vector<Elem>> out;
  for (const auto& w : enumerate_codewords(c)) out.push_back(w.coords);
  return out;
}

}  // namespace masseyx::testing
