#pragma once

// Finite fields GF(p^e) with q <= 2^16.
//
// Elements are encoded as integers in [0, q): the polynomial-basis
// coordinates (c_0, ..., c_{e-1}) are read as little-endian base-p digits,
// value = c_0 + c_1 p + ... + c_{e-1} p^{e-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace masseyx {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_binary() const noexcept { return q_ == 2; }
  // Monic defining polynomial, ascending coefficients; empty when e == 1.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  bool contains(Elem a) const noexcept { return a < q_; }

  // `field p e c0 ... ce`, coefficients omitted for prime fields.
  std::string header() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  friend std::shared_ptr<const FieldSpec> make_field(std::uint32_t, std::uint32_t,
                                                     std::optional<std::vector<Elem>>);
  FieldSpec(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus);

  Elem poly_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<Elem> modulus_;
  // Populated for e > 1: exp_[i] = g^i for i < 2(q-1), log_[g^i] = i.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using Field = std::shared_ptr<const FieldSpec>;

// Validates p, e and the modulus (monic, degree e, irreducible). When
// e > 1 and no modulus is given, one of the built-in defaults is used
// (GF(4), GF(8), GF(9), GF(16), GF(27)); other extension fields need an
// explicit modulus.
Field make_field(std::uint32_t p, std::uint32_t e = 1,
                 std::optional<std::vector<Elem>> modulus = std::nullopt);

std::optional<std::vector<Elem>> default_modulus(std::uint32_t p, std::uint32_t e);

bool is_prime(std::uint32_t n) noexcept;

inline bool same_field(const Field& a, const Field& b) noexcept {
  return a == b || (a && b && *a == *b);
}

// A field value bound to its field. Arithmetic across different fields
// throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  Elem value() const noexcept { return value_; }
  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field_, b.field_) && a.value_ == b.value_;
  }

 private:
  Field field_;
  Elem value_;
};

inline FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
inline FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
inline FieldElement neg(const FieldElement& x) { return -x; }
inline FieldElement inv(const FieldElement& x) { return x.inverse(); }

}  // namespace masseyx
