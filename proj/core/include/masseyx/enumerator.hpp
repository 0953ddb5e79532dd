#pragma once

// Joint weight enumerators and the quantities derived from them for
// counting access groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "masseyx/code.hpp"
#include "masseyx/polynomial.hpp"
#include "masseyx/scheme.hpp"

namespace masseyx {

// One argument of a joint weight enumerator: a whole code, or a single
// fixed vector (such as the indicator of a coordinate set).
class JweArgument {
 public:
  static JweArgument code(LinearCode c);
  static JweArgument fixed(std::vector<Elem> coords);
  // 0/1 vector of the given length with ones at the 1-based positions.
  static JweArgument indicator(std::size_t length, std::span<const std::size_t> positions);

  std::size_t length() const noexcept;
  // Number of vectors the argument ranges over (saturating).
  std::uint64_t count() const noexcept;
  SupportTable supports(std::uint64_t cap) const;

 private:
  explicit JweArgument(std::variant<LinearCode, std::vector<Elem>> v) : value_(std::move(v)) {}
  std::variant<LinearCode, std::vector<Elem>> value_;
};

SparseEnumerator joint_weight_enumerator(std::span<const JweArgument> args, std::uint64_t cap = kDefaultCap,
                                         unsigned threads = 1);

// Coefficient of prod_j x_{(e_j, e_j)} in the 2l-fold enumerator of
// (1_{T_1}, ..., 1_{T_l}, dual, ..., dual), read as a polynomial in the l-fold
// pattern variables of the participant coordinates. Counts tuples of dual
// words whose prefix is exactly e_j. Over GF(q) the raw coefficient also
// admits prefixes a e_j with a != 0 and is (q-1)^l times this polynomial;
// the normalized count is the one the group-count bound is exact for.
SparseEnumerator secret_coefficient(const SchemeInstance& s, std::uint64_t cap = kDefaultCap, unsigned threads = 1);
SparseEnumerator secret_coefficient(const FieldSpec& f, const Matrix& dual_generator, std::size_t l,
                                    std::uint64_t cap = kDefaultCap, unsigned threads = 1);

struct CountBound {
  BigInt bound;
  bool exact = false;
};

// Sum of the coefficients whose non-x_0 exponents add up to m; exact when
// m < 3 d_perp / 2 - 1.
CountBound count_bound(const SparseEnumerator& secret_coeff, std::size_t m, std::size_t d_perp);

struct ExtensionEnumerator {
  // degree -> number of coset representatives; one entry for the zero coset.
  std::map<std::size_t, std::uint64_t> terms;
  std::size_t zero_coset_degree = 0;  // d(D)
  // Largest degree contributed by a nonzero coset; 0 when D is self-dual.
  std::size_t max_nonzero_degree = 0;

  std::uint64_t total() const;
  std::size_t max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

// Sum over representatives c of D^perp / D of t^{d(<c, D>)}; D must be
// self-orthogonal.
ExtensionEnumerator extension_enumerator(const LinearCode& d, std::uint64_t cap = kDefaultCap);

struct ExactCount {
  std::uint64_t count = 0;   // distinct union supports of size m
  bool certified = false;    // every nonzero coset degree < d_perp for every tuple
  std::uint64_t tuples = 0;  // tuples whose union has size m
};

// Requires the dual of the scheme code to be self-orthogonal.
ExactCount verify_exact_count(const SchemeInstance& s, std::size_t m, std::uint64_t cap = kDefaultCap,
                              unsigned threads = 1);

// (1 / (n (n-1))) d^2 J / (dx_1 dx_2) of a biweight enumerator; throws
// std::domain_error when a coefficient is not divisible.
SparseEnumerator derivative_z(const SparseEnumerator& biweight, std::size_t n_len);

// Substitutes x_a -> x_{merge[a]} and collects terms.
SparseEnumerator specialize(const SparseEnumerator& p, std::span<const std::size_t> merge);

}  // namespace masseyx
