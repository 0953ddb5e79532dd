#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "masseyx/bits.hpp"
#include "masseyx/error.hpp"
#include "masseyx/gf.hpp"
#include "masseyx/matrix.hpp"

namespace masseyx {

struct Codeword {
  std::vector<Elem> coords;

  std::size_t weight() const noexcept;
  // 1-based, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// A k-dimensional subspace of GF(q)^N given by a full-rank k x N generator.
// The generator is kept exactly as supplied so that files round-trip.
class LinearCode {
 public:
  LinearCode(Field field, Matrix generator);

  const Field& field() const noexcept { return field_; }
  const FieldSpec& gf() const noexcept { return *field_; }
  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const Matrix& generator() const noexcept { return gen_; }

  // q^k, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept;

  // Reduced row-echelon generator; equal for codes with equal row spaces.
  Matrix canonical_generator() const;
  bool same_rowspace(const LinearCode& other) const;
  bool contains(std::span<const Elem> word) const;
  std::vector<Elem> encode(std::span<const Elem> message) const;

 private:
  Field field_;
  Matrix gen_;
};

// Walks offset + span(basis) in lexicographic order of the coefficient
// vector (last coefficient fastest). Each step adds exactly one basis row.
class SpanWalker {
 public:
  SpanWalker(const FieldSpec& f, const Matrix& basis, std::span<const Elem> offset = {},
             std::uint64_t start_index = 0);

  const std::vector<Elem>& current() const noexcept { return vec_; }
  // Moves to the next vector; returns false after the last one.
  bool advance();

 private:
  const FieldSpec& f_;
  const Matrix& basis_;
  std::vector<Elem> digits_;
  std::vector<Elem> vec_;
};

// Binary counterpart of SpanWalker operating on packed bit vectors.
class BinarySpanWalker {
 public:
  BinarySpanWalker(const SupportTable& basis, std::span<const std::uint64_t> offset = {},
                   std::uint64_t start_index = 0);

  std::span<const std::uint64_t> current() const noexcept { return vec_; }
  bool advance();

 private:
  const SupportTable& basis_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint64_t> vec_;
};

// Packs the nonzero pattern of each row.
SupportTable row_supports(const Matrix& m);

// Supports of every vector of offset + span(basis), in walk order.
// Requires q^rows <= cap.
SupportTable affine_span_supports(const FieldSpec& f, const Matrix& basis, std::span<const Elem> offset,
                                  std::uint64_t cap);

LinearCode dual(const LinearCode& c);
// Generator of the dual; has zero rows when c is the whole space.
Matrix dual_generator(const LinearCode& c);

// All q^k codewords in lexicographic message order.
std::vector<Codeword> enumerate_codewords(const LinearCode& c, std::uint64_t cap = kDefaultCap);
template <class Visitor>
void for_each_codeword(const LinearCode& c, std::uint64_t cap, Visitor&& visit);

SupportTable codeword_supports(const LinearCode& c, std::uint64_t cap = kDefaultCap);

std::size_t min_distance(const LinearCode& c, std::uint64_t cap = kDefaultCap);

// Number of r-dimensional subspaces of GF(q)^k, saturating.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t k, std::size_t r);

// d_r(C): smallest support of an r-dimensional subcode. Every subcode is
// visited once via its reduced echelon basis in message space.
std::size_t generalized_hamming_weight(const LinearCode& c, std::size_t r, std::uint64_t cap = kDefaultCap);

// Punctures c onto the 1-based coordinates in `keep` (in ascending order)
// and re-reduces the rows. Throws if the result is the zero code.
LinearCode restrict_support(const LinearCode& c, std::span<const std::size_t> keep);

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// ---------------------------------------------------------------------------

template <class Visitor>
void for_each_codeword(const LinearCode& c, std::uint64_t cap, Visitor&& visit) {
  const std::uint64_t total = c.size();
  if (total > cap) throw CapExceeded("codeword enumeration", total, cap);
  SpanWalker walk(c.gf(), c.generator());
  do {
    visit(std::span<const Elem>(walk.current()));
  } while (walk.advance());
}

}  // namespace masseyx
